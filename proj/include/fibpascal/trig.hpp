#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "fibpascal/quad.hpp"
#include "fibpascal/rational.hpp"
#include "fibpascal/weight_pattern.hpp"

namespace fibpascal {

// sum_t c_t cos(t theta) with t >= 0 and no stored zero coefficients.
class CosineSeries {
public:
    using Terms = std::map<std::uint64_t, Rational>;

    CosineSeries() = default;
    explicit CosineSeries(Terms terms);

    // Adds c cos(t theta); negative multiples fold onto |t|.
    void add(std::int64_t t, const Rational& c);
    Rational coefficient(std::uint64_t t) const;
    const Terms& terms() const { return terms_; }

    // Floating-point evaluation; only for checks, never for results.
    double evaluate(double theta) const;

    friend bool operator==(const CosineSeries&, const CosineSeries&) = default;

private:
    Terms terms_;
};

// One term of the power-reduction formula for cos^m:
// scale * C(m, binomial_index) * cos(multiple * theta).
struct CosPowerTerm {
    std::uint64_t multiple = 0;
    std::uint64_t binomial_index = 0;
    Rational scale;  // 1/2^m for the central term of even m, 2/2^m otherwise
};

// Terms for cos^m with m >= 0 (m = 0 gives the single constant term 1).
std::vector<CosPowerTerm> cos_power_terms(std::uint64_t m);

// cos^m theta as a cosine series; throws DomainError for m < 1.
CosineSeries expand_cos_power(std::uint64_t m);

// Product to sum: cos a cos b = (cos(a+b) + cos(|a-b|)) / 2.
CosineSeries series_mul(const CosineSeries& a, const CosineSeries& b);

// cos(t pi/5) for every residue t mod 10, in Q(sqrt 5).
class ExactCosTable {
public:
    static const ExactCosTable& instance();
    const QuadRational& at(std::int64_t t) const;

private:
    ExactCosTable();
    QuadRational values_[10];
};

// sum_t c_t cos(angle_multiple * t * pi/5) in exact arithmetic. angle_multiple
// rescales the series variable, e.g. 3 evaluates a series in theta at 3pi/5.
QuadRational substitute_exact(const CosineSeries& s, std::uint64_t angle_multiple = 1);

// Coefficients, per binomial C(k, i), of the mechanized eigen-decomposition
// sum at exponent k (which equals F_{k+1}), before the sqrt5 parts are checked.
std::vector<QuadRational> derive_quadratic_coefficients(std::uint64_t k);

// F_m as a combination of row m-1: the direct output of the derivation.
// Throws InconsistencyError if any coefficient keeps a sqrt5 component.
RowCoefficients derive_identity_base(std::uint64_t m);

// F_m as a combination of row m, lifted from derive_identity_base through
// C(m-1, i) = C(m, i) (m - i) / m. Checks the dot product against the
// recurrence oracle and throws InconsistencyError on disagreement.
RowCoefficients derive_identity(std::uint64_t m);

struct DerivationReport {
    std::uint64_t m = 0;
    RowCoefficients coefficients;       // over row m
    RowCoefficients base_coefficients;  // over row m-1
    BigInt value;                       // dot with row m
    BigInt oracle;                      // fib_recurrence(m)
    bool sqrt5_cancelled = false;
    bool sound = false;
    // Symmetrized base vector equals the symmetrized Pascal reduction of the
    // weight pattern for k = m-1 (coefficient-wise, not just in value).
    bool coherent = false;
    bool coherent_in_value = false;
};

// Runs the derivation and all of its checks without throwing on a failed check.
DerivationReport derive_report(std::uint64_t m);

struct BinetCosineCheck {
    bool agree = true;
    std::uint64_t checked = 0;
    std::optional<std::uint64_t> first_disagreement;
    std::string detail;
};

// fib_cosine_exact(m) == fib_binet_exact(m) for first <= m <= last (empty when first > last).
BinetCosineCheck check_binet_from_cosine(std::uint64_t first, std::uint64_t last);

}  // namespace fibpascal
