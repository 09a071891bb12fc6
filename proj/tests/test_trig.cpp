#include <doctest.h>

#include <cmath>

#include "fibpascal/errors.hpp"
#include "fibpascal/fib.hpp"
#include "fibpascal/trig.hpp"
#include "oracles.hpp"

using namespace fibpascal;

namespace {

Rational r(std::int64_t n, std::int64_t d = 1) { return Rational(BigInt(n), BigInt(d)); }
CosineSeries series(std::initializer_list<std::pair<const std::uint64_t, Rational>> terms) {
    return CosineSeries(CosineSeries::Terms(terms));
}

}  // namespace

TEST_CASE("expand_cos_power examples") {
    CHECK(expand_cos_power(1) == series({{1, r(1)}}));
    CHECK(expand_cos_power(2) == series({{0, r(1, 2)}, {2, r(1, 2)}}));
    CHECK(expand_cos_power(3) == series({{1, r(3, 4)}, {3, r(1, 4)}}));
    CHECK_THROWS_AS(expand_cos_power(0), DomainError);

    // cos^3 = 3/4 cos + 1/4 cos 3 on a grid
    for (int i = 0; i <= 100; ++i) {
        const double th = -oracle::kPi + 2 * oracle::kPi * i / 100.0;
        CHECK(std::abs(std::pow(std::cos(th), 3) - (0.75 * std::cos(th) + 0.25 * std::cos(3 * th))) < 1e-12);
    }
}

TEST_CASE("series_mul examples") {
    CHECK(series_mul(series({{1, r(1)}}), series({{1, r(1)}})) == series({{0, r(1, 2)}, {2, r(1, 2)}}));
    CHECK(series_mul(series({{0, r(1)}}), series({{3, r(1, 4)}})) == series({{3, r(1, 4)}}));
    const CosineSeries prod = series_mul(series({{1, r(1)}}), series({{2, r(1)}}));
    CHECK(prod == series({{1, r(1, 2)}, {3, r(1, 2)}}));
    for (int i = 0; i <= 64; ++i) {
        const double th = oracle::kPi * i / 64.0;
        CHECK(std::abs(prod.evaluate(th) - std::cos(th) * std::cos(2 * th)) < 1e-12);
    }
}

TEST_CASE("series_mul is commutative and pointwise") {
    const CosineSeries a = series({{0, r(1, 3)}, {2, r(-5, 7)}, {5, r(2)}});
    const CosineSeries b = series({{1, r(3, 2)}, {3, r(-1, 9)}, {4, r(1, 5)}});
    CHECK(series_mul(a, b) == series_mul(b, a));
    for (int i = 0; i < 64; ++i) {
        const double th = oracle::kPi * i / 63.0;
        CHECK(std::abs(series_mul(a, b).evaluate(th) - a.evaluate(th) * b.evaluate(th)) < 1e-12);
    }
}

TEST_CASE("CosineSeries folds negative multiples and drops zeros") {
    CosineSeries s;
    s.add(-3, r(1, 2));
    s.add(3, r(1, 2));
    CHECK(s == series({{3, r(1)}}));
    s.add(3, r(-1));
    CHECK(s.terms().empty());
}

TEST_CASE("substitute_exact examples") {
    CHECK(substitute_exact(series({{0, r(1)}})) == QuadRational(r(1)));
    CHECK(substitute_exact(series({{1, r(1)}})) == QuadRational(r(1, 4), r(1, 4)));
    CHECK(substitute_exact(series({{5, r(2)}})) == QuadRational(r(-2)));
    // cos(3 pi/5) through the multiple rescale
    CHECK(substitute_exact(series({{1, r(1)}}), 3) == QuadRational(r(1, 4), r(-1, 4)));
}

TEST_CASE("exact cosine table") {
    const ExactCosTable& table = ExactCosTable::instance();
    for (int t = -20; t <= 20; ++t) {
        const QuadRational& x = table.at(t);
        CHECK(std::abs(x.to_double() - std::cos(t * oracle::kPi / 5)) <= 1e-12);
        CHECK(x == table.at(-t));
        CHECK(table.at(5 - t) == -table.at(t));         // cos(pi - x) = -cos x
        CHECK(table.at(5 + t) == table.at(5 - t));      // cos(pi + x) = cos(pi - x)
    }
    // 4x^2 - 2x - 1 = 0 for cos(pi/5), cos(3pi/5); 4x^2 + 2x - 1 = 0 for cos(2pi/5), cos(4pi/5).
    for (int t : {1, 3}) {
        const QuadRational& x = table.at(t);
        CHECK(QuadRational(r(4)) * x * x - QuadRational(r(2)) * x - QuadRational(r(1)) == QuadRational());
    }
    for (int t : {2, 4}) {
        const QuadRational& x = table.at(t);
        CHECK(QuadRational(r(4)) * x * x + QuadRational(r(2)) * x - QuadRational(r(1)) == QuadRational());
    }
}

TEST_CASE("power-reduction formula is numerically sound for m <= 20") {
    for (std::uint64_t m = 1; m <= 20; ++m) {
        const CosineSeries s = expand_cos_power(m);
        double worst = 0.0;
        for (int i = 0; i < 64; ++i) {
            const double th = oracle::kPi * i / 63.0;
            worst = std::max(worst, std::abs(std::pow(std::cos(th), static_cast<double>(m)) - s.evaluate(th)));
        }
        CHECK(worst <= 1e-12);
    }
}

TEST_CASE("linearization closure for m <= 30") {
    const CosineSeries cos1 = series({{1, r(1)}});
    for (std::uint64_t m = 1; m <= 30; ++m) {
        CHECK(expand_cos_power(m + 1) == series_mul(expand_cos_power(m), cos1));
    }
}

TEST_CASE("derive_identity examples") {
    const RowCoefficients d1 = derive_identity(1);
    REQUIRE(d1.row == 1);
    CHECK(dot(d1, std::vector<BigInt>{1, 1}) == Rational(1));
    CHECK(dot(derive_identity(10), pascal_row(10).view()) == Rational(55));
    CHECK(dot(derive_identity(16), pascal_row(16).view()) == Rational(987));
    CHECK_THROWS_AS(derive_identity(0), DomainError);
}

TEST_CASE("derivation is sound for m <= 300") {
    const auto f = oracle::fibonacci_table(300);
    for (std::uint64_t m = 1; m <= 300; ++m) {
        for (const auto& c : derive_quadratic_coefficients(m - 1)) REQUIRE(c.is_rational());
        const RowCoefficients d = derive_identity(m);
        REQUIRE(d.row == m);
        CHECK(dot(d, pascal_row(m).view()) == Rational(f[m]));
        CHECK(dot(derive_identity_base(m), pascal_row(m - 1).view()) == Rational(f[m]));
    }
}

TEST_CASE("derivation and weight pattern coherence for m <= 50") {
    // Value equality is required. Coefficient equality of the symmetrized
    // vectors is what we observe over this range; the report records it.
    int coefficient_equal = 0;
    for (std::uint64_t m = 1; m <= 50; ++m) {
        const DerivationReport rep = derive_report(m);
        CHECK(rep.sound);
        CHECK(rep.coherent_in_value);
        coefficient_equal += rep.coherent ? 1 : 0;
    }
    MESSAGE("symmetrized coefficient equality for " << coefficient_equal << " of 50 indices");
}

TEST_CASE("check_binet_from_cosine") {
    CHECK(check_binet_from_cosine(1, 1).agree);
    const auto hundred = check_binet_from_cosine(1, 100);
    CHECK(hundred.agree);
    CHECK(hundred.checked == 100);
    const auto empty = check_binet_from_cosine(5, 4);
    CHECK(empty.agree);
    CHECK(empty.checked == 0);
}
