#pragma once

#include <compare>
#include <iosfwd>
#include <string>

#include "fibpascal/bigint.hpp"

namespace fibpascal {

// Exact rational, always reduced with a positive denominator so equality is
// component-wise.
class Rational {
public:
    Rational() : num_(0), den_(1) {}
    Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT(google-explicit-constructor)
    Rational(std::int64_t n) : num_(n), den_(1) {}       // NOLINT(google-explicit-constructor)
    Rational(BigInt numerator, BigInt denominator);

    // Parses "p" or "p/q".
    static Rational parse(const std::string& text);

    const BigInt& numerator() const { return num_; }
    const BigInt& denominator() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_integer() const { return den_ == BigInt(1); }
    int sign() const { return num_.sign(); }
    // Throws InconsistencyError unless the value is integral.
    BigInt to_integer() const;
    double to_double() const;

    Rational& operator+=(const Rational& rhs);
    Rational& operator-=(const Rational& rhs);
    Rational& operator*=(const Rational& rhs);
    Rational& operator/=(const Rational& rhs);
    friend Rational operator+(Rational a, const Rational& b) { return a += b; }
    friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
    friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
    friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
    Rational operator-() const;

    friend bool operator==(const Rational&, const Rational&) = default;
    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
        return a.num_ * b.den_ <=> b.num_ * a.den_;
    }

    // "p" for integers, "p/q" otherwise.
    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const Rational& x);

private:
    void normalize();
    BigInt num_;
    BigInt den_;
};

}  // namespace fibpascal
