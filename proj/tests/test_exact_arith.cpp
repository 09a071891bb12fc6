#include <doctest.h>

#include "fibpascal/bigint.hpp"
#include "fibpascal/errors.hpp"
#include "fibpascal/half_rational.hpp"
#include "fibpascal/mat4.hpp"
#include "fibpascal/quad.hpp"
#include "fibpascal/rational.hpp"
#include "oracles.hpp"

using namespace fibpascal;

namespace {

Rational r(std::int64_t n, std::int64_t d = 1) { return Rational(BigInt(n), BigInt(d)); }
QuadRational q(std::int64_t a, std::int64_t b) { return QuadRational(r(a), r(b)); }

}  // namespace

TEST_CASE("BigInt basics") {
    const BigInt a("123456789012345678901234567890");
    CHECK((a * BigInt(10)).to_string() == "1234567890123456789012345678900");
    CHECK((a - a).is_zero());
    CHECK((-BigInt(0)).sign() == 0);
    CHECK(BigInt::pow2(70).to_string() == "1180591620717411303424");
    CHECK(BigInt(12).div_exact(BigInt(4)) == BigInt(3));
    CHECK_THROWS_AS(BigInt(13).div_exact(BigInt(4)), InconsistencyError);
    CHECK_THROWS_AS(BigInt("12x"), DomainError);
    CHECK(BigInt(-7).mod(BigInt(5)) == BigInt(3));
    CHECK(BigInt(-7).floor_div(BigInt(5)) == BigInt(-2));
    CHECK(BigInt(INT64_MIN).to_int64() == INT64_MIN);
    CHECK(BigInt(0).decimal_digits() == 1);
    CHECK(BigInt(-12345).decimal_digits() == 5);
}

TEST_CASE("Rational canonical form") {
    CHECK(r(2, 4) == r(1, 2));
    CHECK(r(3, -6).numerator() == BigInt(-1));
    CHECK(r(3, -6).denominator() == BigInt(2));
    CHECK(r(0, -5) == r(0));
    CHECK(r(0, -5).denominator() == BigInt(1));
    CHECK(r(1, 3) + r(1, 6) == r(1, 2));
    CHECK((r(2, 3) / r(4, 9)).to_string() == "3/2");
    CHECK_THROWS_AS(r(1, 0), DomainError);
    CHECK(Rational::parse("-10/4") == r(-5, 2));
    CHECK(r(7, 2).to_string() == "7/2");
    CHECK(r(8, 2).to_string() == "4");

    oracle::RationalGen gen(7);
    std::uniform_int_distribution<int> scale(-30, 30);
    for (int i = 0; i < 300; ++i) {
        const Rational x = gen.next();
        int k = scale(gen.engine());
        if (k == 0) k = 1;
        const Rational scaled(x.numerator() * BigInt(k), x.denominator() * BigInt(k));
        CHECK(scaled == x);
        CHECK(scaled.numerator() == x.numerator());
        CHECK(scaled.denominator() == x.denominator());
    }
}

TEST_CASE("HalfRational is closed to {integers, half-integers}") {
    CHECK(HalfRational::half().to_string() == "1/2");
    CHECK((-HalfRational::half()).to_string() == "-1/2");
    CHECK(HalfRational::from_integer(BigInt(-1)).to_string() == "-1");
    CHECK(HalfRational::parse("-1/2") == -HalfRational::half());
    CHECK_THROWS_AS(HalfRational::parse("1/3"), DomainError);
    CHECK((HalfRational::half() + HalfRational::half()).is_integer());
    CHECK_THROWS_AS(HalfRational::half().to_integer(), InconsistencyError);
    CHECK((HalfRational::half() * BigInt(6)).to_integer() == BigInt(3));

    for (int t = -4; t <= 4; ++t) {
        const bool expected = t != 0 && t >= -2 && t <= 2;
        CHECK(HalfRational::from_twice(BigInt(t)).in_weight_alphabet() == expected);
    }
}

TEST_CASE("quad_mul examples") {
    CHECK(quad_mul(q(0, 1), q(0, 1)) == q(5, 0));
    CHECK(quad_mul(q(1, 1), q(1, -1)) == q(-4, 0));
    CHECK(quad_mul(q(1, 1), q(1, 1)) == q(6, 2));
}

TEST_CASE("quad_pow examples against repeated multiplication") {
    CHECK(quad_pow(q(1, 1), 0) == q(1, 0));
    CHECK(quad_pow(q(1, 1), 3) == q(16, 8));
    CHECK(quad_pow(q(1, -1), 2) == q(6, -2));
    CHECK(oracle::repeated_power(q(1, 1), 3) == q(16, 8));
    for (unsigned n = 0; n <= 40; ++n) {
        CHECK(quad_pow(QuadRational(r(1, 4), r(-3, 4)), n) == oracle::repeated_power(QuadRational(r(1, 4), r(-3, 4)), n));
    }
}

TEST_CASE("Q(sqrt5) ring properties on random elements") {
    oracle::RationalGen gen(2024);
    std::uniform_int_distribution<unsigned> exp(0, 6);
    for (int i = 0; i < 200; ++i) {
        const QuadRational x = gen.next_quad();
        const QuadRational y = gen.next_quad();
        const QuadRational z = gen.next_quad();
        CHECK(quad_mul(x, y) == quad_mul(y, x));
        CHECK(quad_mul(x, y + z) == quad_mul(x, y) + quad_mul(x, z));
        CHECK(quad_mul(x, y).conjugate() == quad_mul(x.conjugate(), y.conjugate()));
        CHECK(quad_mul(x, x.conjugate()).is_rational());
        const unsigned a = exp(gen.engine());
        const unsigned b = exp(gen.engine());
        CHECK(quad_pow(x, a + b) == quad_mul(quad_pow(x, a), quad_pow(x, b)));
    }
}

TEST_CASE("Mat4 and the Q/R matrices") {
    const Mat4& Q = fibonacci_q();
    const Mat4& R = reversal_r();
    CHECK(mat4_apply(Q, Vec4::unit(1)) == Vec4::unit(2));
    CHECK(mat4_apply(mat4_pow(Q, 2), Vec4::unit(1)) == Vec4::unit(1) + Vec4::unit(3));
    CHECK(mat4_pow(Q, 0) == Mat4::identity());
    CHECK(R * R == Mat4::identity());
    CHECK(R * Q == Q * R);
    CHECK(mat4_apply(R, Vec4::unit(2)) == Vec4::unit(3));
    CHECK(R * mat4_pow(Q, 9) * R == mat4_pow(Q, 9));
    CHECK_THROWS_AS(Vec4::unit(0), DomainError);

    // Associativity and power-by-squaring against repeated products.
    Mat4 repeated = Mat4::identity();
    for (unsigned n = 0; n <= 30; ++n) {
        CHECK(mat4_pow(Q, n) == repeated);
        repeated = repeated * Q;
    }
    const Mat4 A = Mat4::from_rows({{{1, -2, 3, 0}, {4, 5, -6, 7}, {0, 1, 1, 1}, {-3, 2, 0, 9}}});
    CHECK((A * Q) * R == A * (Q * R));
}
