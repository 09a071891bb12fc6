#pragma once

#include <iosfwd>
#include <string>

#include "fibpascal/rational.hpp"

namespace fibpascal {

// a + b*sqrt(5) with rational a, b.
class QuadRational {
public:
    QuadRational() = default;
    QuadRational(Rational rational_part, Rational sqrt5_part = Rational())  // NOLINT(google-explicit-constructor)
        : a_(std::move(rational_part)), b_(std::move(sqrt5_part)) {}

    static QuadRational one() { return QuadRational(Rational(1)); }
    static QuadRational sqrt5() { return QuadRational(Rational(0), Rational(1)); }

    const Rational& rational_part() const { return a_; }
    const Rational& sqrt5_part() const { return b_; }
    bool is_rational() const { return b_.is_zero(); }

    // Galois conjugate a - b*sqrt(5).
    QuadRational conjugate() const { return QuadRational(a_, -b_); }
    // a^2 - 5 b^2.
    Rational norm() const { return a_ * a_ - Rational(5) * b_ * b_; }

    QuadRational& operator+=(const QuadRational& rhs);
    QuadRational& operator-=(const QuadRational& rhs);
    friend QuadRational operator+(QuadRational x, const QuadRational& y) { return x += y; }
    friend QuadRational operator-(QuadRational x, const QuadRational& y) { return x -= y; }
    QuadRational operator-() const { return QuadRational(-a_, -b_); }
    friend QuadRational operator*(const QuadRational& x, const QuadRational& y) { return quad_mul(x, y); }

    friend QuadRational quad_mul(const QuadRational& x, const QuadRational& y);
    friend QuadRational quad_pow(QuadRational x, unsigned long n);

    friend bool operator==(const QuadRational&, const QuadRational&) = default;

    double to_double() const;
    // "a + b*sqrt(5)" with exact rational strings.
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const QuadRational& x);

private:
    Rational a_;
    Rational b_;
};

QuadRational quad_mul(const QuadRational& x, const QuadRational& y);
// Exponentiation by squaring; x^0 is 1.
QuadRational quad_pow(QuadRational x, unsigned long n);

}  // namespace fibpascal
