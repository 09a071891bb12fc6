#include "fibpascal/half_rational.hpp"

#include "fibpascal/errors.hpp"

namespace fibpascal {

HalfRational HalfRational::from_rational(const Rational& r) {
    const BigInt& d = r.denominator();
    if (d != BigInt(1) && d != BigInt(2)) {
        throw DomainError("not a half-integer: " + r.to_string());
    }
    return HalfRational(r.numerator() * BigInt(2).div_exact(d));
}

HalfRational HalfRational::parse(const std::string& text) { return from_rational(Rational::parse(text)); }

bool HalfRational::in_weight_alphabet() const {
    return !twice_.is_zero() && twice_ >= BigInt(-2) && twice_ <= BigInt(2);
}

BigInt HalfRational::to_integer() const {
    if (!is_integer()) throw InconsistencyError("half-integer where an integer is required: " + to_string());
    return twice_.div_exact(BigInt(2));
}

}  // namespace fibpascal
