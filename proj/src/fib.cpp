#include "fibpascal/fib.hpp"

#include <string>

#include "fibpascal/errors.hpp"
#include "fibpascal/mat4.hpp"

namespace fibpascal {

namespace {

void require_positive(std::uint64_t m, const char* who) {
    if (m < 1) throw DomainError(std::string(who) + ": index must be >= 1");
}

}  // namespace

std::string_view method_name(FibMethod method) {
    switch (method) {
        case FibMethod::recurrence: return "recurrence";
        case FibMethod::doubling: return "doubling";
        case FibMethod::matrix: return "matrix";
        case FibMethod::binet: return "binet";
        case FibMethod::cosine: return "cosine";
        case FibMethod::diagonal: return "diagonal";
        case FibMethod::novel: return "novel";
    }
    return "unknown";
}

std::optional<FibMethod> parse_method(std::string_view name) {
    for (FibMethod m : kAllFibMethods) {
        if (method_name(m) == name) return m;
    }
    return std::nullopt;
}

BigInt fib_recurrence(std::uint64_t m) {
    require_positive(m, "fib_recurrence");
    BigInt prev(0);
    BigInt cur(1);  // F_1
    for (std::uint64_t i = 1; i < m; ++i) {
        BigInt next = cur + prev;
        prev = std::move(cur);
        cur = std::move(next);
    }
    return cur;
}

BigInt fib_doubling(std::uint64_t m) {
    require_positive(m, "fib_doubling");
    BigInt a(0);  // F_n
    BigInt b(1);  // F_{n+1}
    for (int bit = 63; bit >= 0; --bit) {
        BigInt c = a * (b + b - a);  // F_{2n}
        BigInt d = a * a + b * b;    // F_{2n+1}
        if ((m >> bit) & 1U) {
            a = d;
            b = c + d;
        } else {
            a = std::move(c);
            b = std::move(d);
        }
    }
    return a;
}

BigInt fib_matrix(std::uint64_t m) {
    require_positive(m, "fib_matrix");
    const Mat4 power = mat4_pow(fibonacci_q(), m - 1);
    return dot(Vec4::ones(), mat4_apply(power, Vec4::unit(1)));
}

bool check_reversal_symmetry(std::uint64_t k) {
    const Mat4& q = fibonacci_q();
    Vec4 iterated = Vec4::unit(2);
    for (std::uint64_t i = 0; i < k; ++i) iterated = mat4_apply(q, iterated);
    const BigInt lhs = dot(Vec4::ones(), iterated);
    const BigInt rhs = dot(Vec4::ones(), mat4_apply(mat4_pow(q, k), Vec4::unit(3)));
    return lhs == rhs;
}

BinetTrace binet_trace(std::uint64_t m) {
    require_positive(m, "fib_binet_exact");
    BinetTrace t;
    t.power = quad_pow(QuadRational(Rational(1), Rational(1)), m);
    t.conjugate = quad_pow(QuadRational(Rational(1), Rational(-1)), m);
    const QuadRational diff = t.power - t.conjugate;
    if (!diff.rational_part().is_zero()) {
        throw InconsistencyError("binet: rational part of (1+r5)^m - (1-r5)^m does not cancel at m=" +
                                 std::to_string(m));
    }
    t.twice_b = diff.sqrt5_part().to_integer();
    t.scale = BigInt::pow2(m);
    return t;
}

BigInt fib_binet_exact(std::uint64_t m) {
    const BinetTrace t = binet_trace(m);
    if (!t.twice_b.divisible_by(t.scale)) {
        throw InconsistencyError("binet: 2b is not divisible by 2^m at m=" + std::to_string(m));
    }
    return t.twice_b.div_exact(t.scale);
}

QuadRational cosine_sum(std::uint64_t m) {
    require_positive(m, "fib_cosine_exact");
    const std::uint64_t k = m - 1;
    const QuadRational cos_pi_5(Rational(BigInt(1), BigInt(4)), Rational(BigInt(1), BigInt(4)));
    const QuadRational cos_3pi_5(Rational(BigInt(1), BigInt(4)), Rational(BigInt(-1), BigInt(4)));
    const QuadRational cos2_pi_10(Rational(BigInt(5), BigInt(8)), Rational(BigInt(1), BigInt(8)));
    const QuadRational cos2_3pi_10(Rational(BigInt(5), BigInt(8)), Rational(BigInt(-1), BigInt(8)));

    const QuadRational sum = quad_pow(cos_pi_5, k) * cos2_pi_10 + quad_pow(cos_3pi_5, k) * cos2_3pi_10;
    return sum * QuadRational(Rational(BigInt::pow2(k + 2), BigInt(5)));
}

BigInt fib_cosine_exact(std::uint64_t m) {
    const QuadRational value = cosine_sum(m);
    if (!value.is_rational()) {
        throw InconsistencyError("cosine: sqrt5 component does not cancel at m=" + std::to_string(m));
    }
    if (!value.rational_part().is_integer()) {
        throw InconsistencyError("cosine: non-integral value " + value.to_string() + " at m=" + std::to_string(m));
    }
    return value.rational_part().numerator();
}

BigInt fib_shallow_diagonal(std::uint64_t m) {
    require_positive(m, "fib_shallow_diagonal");
    const std::uint64_t n = m - 1;
    // Walk C(n - j, j) along the diagonal:
    //   C(a-1, b+1) = C(a, b) (a-b)(a-b-1) / (a (b+1)),  a = n - j, b = j.
    BigInt term(1);  // C(n, 0)
    BigInt sum(1);
    for (std::uint64_t j = 0; 2 * (j + 1) <= n; ++j) {
        const std::uint64_t a = n - j;
        term.mul_word(static_cast<unsigned long>(a - j));
        term.mul_word(static_cast<unsigned long>(a - j - 1));
        term.div_exact_word(static_cast<unsigned long>(a));
        term.div_exact_word(static_cast<unsigned long>(j + 1));
        sum += term;
    }
    return sum;
}

namespace {

// Appends coefficient * C(row, col) where col = twice_col / 2.
void push_term(std::vector<NovelTerm>& terms, HalfRational coefficient, std::uint64_t row, std::int64_t twice_col) {
    if (twice_col % 2 != 0 || twice_col < 0 || twice_col > 2 * static_cast<std::int64_t>(row)) {
        throw InconsistencyError("novel identity: column " + std::to_string(twice_col) + "/2 is not an integer in [0, " +
                                 std::to_string(row) + "]");
    }
    terms.push_back({std::move(coefficient), row, static_cast<std::uint64_t>(twice_col / 2)});
}

}  // namespace

std::vector<NovelTerm> novel_terms(std::uint64_t k) {
    const auto sk = static_cast<std::int64_t>(k);
    const HalfRational one = HalfRational::from_integer(BigInt(1));
    const HalfRational two = HalfRational::from_integer(BigInt(2));
    std::vector<NovelTerm> terms;

    if (k % 2 == 0) {
        // C(k, k/2) + 2 sum_{q=1}^{floor(k/10)} C(k, k/2 - 5q)
        //   - sum_{q odd, 1 <= q <= floor((k+1)/5)} C(k+1, (k+1)/2 - 5q/2)
        push_term(terms, one, k, sk);
        for (std::int64_t q = 1; q <= sk / 10; ++q) push_term(terms, two, k, sk - 10 * q);
        for (std::int64_t q = 1; q <= (sk + 1) / 5; q += 2) push_term(terms, -one, k + 1, sk + 1 - 5 * q);
    } else {
        // 1/2 C(k+1, (k+1)/2) - 2 sum_{q odd, 1 <= q <= floor(k/5)} C(k, k/2 - 5q/2)
        //   + sum_{q=1}^{floor((k+1)/10)} C(k+1, (k+1)/2 - 5q)
        push_term(terms, HalfRational::half(), k + 1, sk + 1);
        for (std::int64_t q = 1; q <= sk / 5; q += 2) push_term(terms, -two, k, sk - 5 * q);
        for (std::int64_t q = 1; q <= (sk + 1) / 10; ++q) push_term(terms, one, k + 1, sk + 1 - 10 * q);
    }
    return terms;
}

BigInt fib_novel(std::uint64_t m, const PascalTable& table) {
    require_positive(m, "fib_novel");
    const std::uint64_t k = m - 1;
    const auto terms = novel_terms(k);
    const auto row_k = table.row(k);
    const auto row_k1 = table.row(k + 1);

    HalfRational sum;
    for (const NovelTerm& t : terms) {
        const PascalRow& row = t.row == k ? *row_k : *row_k1;
        sum += t.coefficient * row.entries[t.col];
    }
    if (!sum.is_integer()) {
        throw InconsistencyError("novel identity: non-integral sum " + sum.to_string() + " at m=" + std::to_string(m));
    }
    return sum.to_integer();
}

BigInt fib(FibMethod method, std::uint64_t m) {
    switch (method) {
        case FibMethod::recurrence: return fib_recurrence(m);
        case FibMethod::doubling: return fib_doubling(m);
        case FibMethod::matrix: return fib_matrix(m);
        case FibMethod::binet: return fib_binet_exact(m);
        case FibMethod::cosine: return fib_cosine_exact(m);
        case FibMethod::diagonal: return fib_shallow_diagonal(m);
        case FibMethod::novel: return fib_novel(m);
    }
    throw DomainError("unknown fib method");
}

FibResult compute_fib(FibMethod method, std::uint64_t m) { return FibResult{m, fib(method, m), method}; }

}  // namespace fibpascal
