#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace fibpascal {

// Arbitrary-precision signed integer. Thin value wrapper over GMP so the rest
// of the library never touches mpz_* directly.
class BigInt {
public:
    BigInt() = default;
    BigInt(std::int64_t v);  // NOLINT(google-explicit-constructor)
    explicit BigInt(std::string_view decimal);

    static BigInt pow2(unsigned long exponent);

    BigInt& operator+=(const BigInt& rhs);
    BigInt& operator-=(const BigInt& rhs);
    BigInt& operator*=(const BigInt& rhs);

    friend BigInt operator+(BigInt lhs, const BigInt& rhs) { return lhs += rhs; }
    friend BigInt operator-(BigInt lhs, const BigInt& rhs) { return lhs -= rhs; }
    friend BigInt operator*(BigInt lhs, const BigInt& rhs) { return lhs *= rhs; }
    BigInt operator-() const;

    // In-place scaling by machine words; the hot path of row construction.
    BigInt& mul_word(unsigned long w);
    // Exact division by a machine word; throws InconsistencyError if inexact.
    BigInt& div_exact_word(unsigned long w);

    // Exact quotient; throws InconsistencyError when rhs does not divide *this.
    BigInt div_exact(const BigInt& rhs) const;
    // Floor division and non-negative remainder (for positive rhs).
    BigInt floor_div(const BigInt& rhs) const;
    BigInt mod(const BigInt& rhs) const;
    bool divisible_by(const BigInt& rhs) const;

    static BigInt gcd(const BigInt& a, const BigInt& b);

    int sign() const { return sgn(value_); }
    bool is_zero() const { return sign() == 0; }
    bool is_even() const;
    bool fits_int64() const;
    std::int64_t to_int64() const;
    double to_double() const { return value_.get_d(); }

    std::string to_string() const;
    // Number of decimal digits of |x| (0 has one digit).
    std::size_t decimal_digits() const;

    friend bool operator==(const BigInt& a, const BigInt& b) { return cmp(a.value_, b.value_) == 0; }
    friend std::strong_ordering operator<=>(const BigInt& a, const BigInt& b) {
        const int c = cmp(a.value_, b.value_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const BigInt& x);

private:
    explicit BigInt(mpz_class v) : value_(std::move(v)) {}
    mpz_class value_;
};

}  // namespace fibpascal
