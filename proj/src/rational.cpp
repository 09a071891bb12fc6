#include "fibpascal/rational.hpp"

#include <ostream>

#include "fibpascal/errors.hpp"

namespace fibpascal {

Rational::Rational(BigInt numerator, BigInt denominator)
    : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_.is_zero()) throw DomainError("rational with zero denominator");
    normalize();
}

Rational Rational::parse(const std::string& text) {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(BigInt(text));
    return Rational(BigInt(text.substr(0, slash)), BigInt(text.substr(slash + 1)));
}

void Rational::normalize() {
    if (den_.sign() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    const BigInt g = BigInt::gcd(num_, den_);
    if (g != BigInt(1)) {
        num_ = num_.div_exact(g);
        den_ = den_.div_exact(g);
    }
}

BigInt Rational::to_integer() const {
    if (!is_integer()) throw InconsistencyError("expected an integer, got " + to_string());
    return num_;
}

double Rational::to_double() const {
    mpq_class q(mpz_class(num_.to_string()), mpz_class(den_.to_string()));
    return q.get_d();
}

Rational& Rational::operator+=(const Rational& rhs) {
    num_ = num_ * rhs.den_ + rhs.num_ * den_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator-=(const Rational& rhs) { return *this += -rhs; }

Rational& Rational::operator*=(const Rational& rhs) {
    num_ *= rhs.num_;
    den_ *= rhs.den_;
    normalize();
    return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
    if (rhs.is_zero()) throw DomainError("rational division by zero");
    num_ *= rhs.den_;
    den_ *= rhs.num_;
    normalize();
    return *this;
}

Rational Rational::operator-() const {
    Rational r = *this;
    r.num_ = -r.num_;
    return r;
}

std::string Rational::to_string() const {
    if (is_integer()) return num_.to_string();
    return num_.to_string() + "/" + den_.to_string();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

}  // namespace fibpascal
