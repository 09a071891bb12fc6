#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "fibpascal/bigint.hpp"
#include "fibpascal/half_rational.hpp"
#include "fibpascal/pascal.hpp"
#include "fibpascal/quad.hpp"

namespace fibpascal {

// Index convention for every engine: fib(m) = F_m with F_1 = F_2 = 1.
// Each engine evaluates its own identity and never calls another engine.

enum class FibMethod { recurrence, doubling, matrix, binet, cosine, diagonal, novel };

inline constexpr std::array<FibMethod, 7> kAllFibMethods = {
    FibMethod::recurrence, FibMethod::doubling, FibMethod::matrix, FibMethod::binet,
    FibMethod::cosine,     FibMethod::diagonal, FibMethod::novel};

std::string_view method_name(FibMethod method);
std::optional<FibMethod> parse_method(std::string_view name);

struct FibResult {
    std::uint64_t index = 0;
    BigInt value;
    FibMethod method = FibMethod::recurrence;
};

// Definitional oracle: iterate F_{k+1} = F_k + F_{k-1}.
BigInt fib_recurrence(std::uint64_t m);

// Fast oracle: F_{2n} = F_n (2 F_{n+1} - F_n), F_{2n+1} = F_n^2 + F_{n+1}^2.
BigInt fib_doubling(std::uint64_t m);

// 1^T Q^{m-1} e_1 with the 4x4 path matrix Q.
BigInt fib_matrix(std::uint64_t m);

// 1^T Q^k e_2 == 1^T Q^k e_3, both sides evaluated independently: the left by
// k repeated matrix-vector products, the right by a squared matrix power.
bool check_reversal_symmetry(std::uint64_t k);

// Binet in Q(sqrt 5): (1 + sqrt5)^m = a + b sqrt5, so F_m = 2b / 2^m.
struct BinetTrace {
    QuadRational power;      // (1 + sqrt5)^m
    QuadRational conjugate;  // (1 - sqrt5)^m
    BigInt twice_b;          // sqrt5-part of power - conjugate
    BigInt scale;            // 2^m
};
BinetTrace binet_trace(std::uint64_t m);
BigInt fib_binet_exact(std::uint64_t m);

// Eigen-decomposition of Q evaluated with exact cosines of pi/5, 3pi/5 and
// squared cosines of pi/10, 3pi/10:
//   F_m = 2^{m+1}/5 * sum_{j=1,2} cos^{m-1}((2j-1)pi/5) cos^2((2j-1)pi/10).
// The exponent is m-1 because the sum at exponent k equals 1^T Q^k e_1 = F_{k+1}.
QuadRational cosine_sum(std::uint64_t m);
BigInt fib_cosine_exact(std::uint64_t m);

// Classical shallow-diagonal sum: F_m = sum_{j>=0} C(m-1-j, j).
BigInt fib_shallow_diagonal(std::uint64_t m);

// One term of the two-row identity: coefficient * C(row, col).
struct NovelTerm {
    HalfRational coefficient;
    std::uint64_t row = 0;
    std::uint64_t col = 0;
};

// Terms of the one-sided identity for F_{k+1} (rows k and k+1), in the order
// the sums are written. Every column index is validated to be an integer in
// [0, row]; a violation throws InconsistencyError.
std::vector<NovelTerm> novel_terms(std::uint64_t k);

// F_m from the two-row even/odd identity with k = m - 1.
BigInt fib_novel(std::uint64_t m, const PascalTable& table = default_pascal_table());

BigInt fib(FibMethod method, std::uint64_t m);
FibResult compute_fib(FibMethod method, std::uint64_t m);

}  // namespace fibpascal
