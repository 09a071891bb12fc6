#pragma once

#include <string>

#include "fibpascal/bigint.hpp"
#include "fibpascal/rational.hpp"

namespace fibpascal {

// An integer or half-integer, stored as twice its value. Weights of the
// Pascal-triangle pattern live here.
class HalfRational {
public:
    HalfRational() = default;

    static HalfRational from_twice(BigInt twice) { return HalfRational(std::move(twice)); }
    static HalfRational from_integer(const BigInt& v) { return HalfRational(v * BigInt(2)); }
    static HalfRational half() { return HalfRational(BigInt(1)); }
    // Throws DomainError if the rational is not in (1/2)Z.
    static HalfRational from_rational(const Rational& r);
    // Parses the serialized alphabet form: "-1", "-1/2", "0", "1/2", "1", ...
    static HalfRational parse(const std::string& text);

    const BigInt& twice_value() const { return twice_; }
    bool is_zero() const { return twice_.is_zero(); }
    bool is_integer() const { return twice_.is_even(); }
    // True for -1, -1/2, 1/2, 1 (the nonzero pattern weights).
    bool in_weight_alphabet() const;

    Rational to_rational() const { return Rational(twice_, BigInt(2)); }
    // Throws InconsistencyError for a true half-integer.
    BigInt to_integer() const;

    HalfRational& operator+=(const HalfRational& rhs) {
        twice_ += rhs.twice_;
        return *this;
    }
    friend HalfRational operator+(HalfRational a, const HalfRational& b) { return a += b; }
    HalfRational operator-() const { return HalfRational(-twice_); }
    // Scaling by an integer keeps the denominator in {1, 2}.
    friend HalfRational operator*(const HalfRational& w, const BigInt& n) { return HalfRational(w.twice_ * n); }

    friend bool operator==(const HalfRational&, const HalfRational&) = default;

    std::string to_string() const { return to_rational().to_string(); }

private:
    explicit HalfRational(BigInt twice) : twice_(std::move(twice)) {}
    BigInt twice_{0};
};

}  // namespace fibpascal
