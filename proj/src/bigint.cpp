#include "fibpascal/bigint.hpp"

#include <climits>
#include <cstdint>
#include <ostream>

#include "fibpascal/errors.hpp"

namespace fibpascal {

BigInt::BigInt(std::int64_t v) {
    // mpz_class has no portable int64 constructor on every platform.
    if (v >= LONG_MIN && v <= LONG_MAX) {
        value_ = static_cast<long>(v);
    } else {
        value_ = mpz_class(std::to_string(v));
    }
}

BigInt::BigInt(std::string_view decimal) {
    if (decimal.empty() || value_.set_str(std::string(decimal), 10) != 0) {
        throw DomainError("not a decimal integer: '" + std::string(decimal) + "'");
    }
}

BigInt BigInt::pow2(unsigned long exponent) {
    mpz_class r;
    mpz_ui_pow_ui(r.get_mpz_t(), 2, exponent);
    return BigInt(std::move(r));
}

BigInt& BigInt::operator+=(const BigInt& rhs) {
    value_ += rhs.value_;
    return *this;
}

BigInt& BigInt::operator-=(const BigInt& rhs) {
    value_ -= rhs.value_;
    return *this;
}

BigInt& BigInt::operator*=(const BigInt& rhs) {
    value_ *= rhs.value_;
    return *this;
}

BigInt BigInt::operator-() const { return BigInt(mpz_class(-value_)); }

BigInt& BigInt::mul_word(unsigned long w) {
    mpz_mul_ui(value_.get_mpz_t(), value_.get_mpz_t(), w);
    return *this;
}

BigInt& BigInt::div_exact_word(unsigned long w) {
    if (w == 0 || mpz_divisible_ui_p(value_.get_mpz_t(), w) == 0) {
        throw InconsistencyError("inexact division: " + to_string() + " / " + std::to_string(w));
    }
    mpz_divexact_ui(value_.get_mpz_t(), value_.get_mpz_t(), w);
    return *this;
}

BigInt BigInt::div_exact(const BigInt& rhs) const {
    if (rhs.is_zero() || !divisible_by(rhs)) {
        throw InconsistencyError("inexact division: " + to_string() + " / " + rhs.to_string());
    }
    mpz_class q;
    mpz_divexact(q.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
    return BigInt(std::move(q));
}

BigInt BigInt::floor_div(const BigInt& rhs) const {
    if (rhs.is_zero()) throw DomainError("division by zero");
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
    return BigInt(std::move(q));
}

BigInt BigInt::mod(const BigInt& rhs) const {
    if (rhs.is_zero()) throw DomainError("division by zero");
    mpz_class r;
    mpz_fdiv_r(r.get_mpz_t(), value_.get_mpz_t(), rhs.value_.get_mpz_t());
    return BigInt(std::move(r));
}

bool BigInt::divisible_by(const BigInt& rhs) const {
    return mpz_divisible_p(value_.get_mpz_t(), rhs.value_.get_mpz_t()) != 0;
}

BigInt BigInt::gcd(const BigInt& a, const BigInt& b) {
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.value_.get_mpz_t(), b.value_.get_mpz_t());
    return BigInt(std::move(g));
}

bool BigInt::is_even() const { return mpz_even_p(value_.get_mpz_t()) != 0; }

bool BigInt::fits_int64() const {
    static const mpz_class lo(std::to_string(INT64_MIN));
    static const mpz_class hi(std::to_string(INT64_MAX));
    return value_ >= lo && value_ <= hi;
}

std::int64_t BigInt::to_int64() const {
    if (!fits_int64()) throw DomainError("value does not fit in 64 bits: " + to_string());
    if (value_.fits_slong_p()) return value_.get_si();
    return std::stoll(value_.get_str());
}

std::string BigInt::to_string() const { return value_.get_str(10); }

std::size_t BigInt::decimal_digits() const {
    // mpz_sizeinbase may overshoot by one; count the string instead.
    std::string s = value_.get_str(10);
    return s.size() - (s.front() == '-' ? 1 : 0);
}

std::ostream& operator<<(std::ostream& os, const BigInt& x) { return os << x.to_string(); }

}  // namespace fibpascal
