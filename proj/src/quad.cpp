#include "fibpascal/quad.hpp"

#include <cmath>
#include <ostream>

namespace fibpascal {

QuadRational& QuadRational::operator+=(const QuadRational& rhs) {
    a_ += rhs.a_;
    b_ += rhs.b_;
    return *this;
}

QuadRational& QuadRational::operator-=(const QuadRational& rhs) {
    a_ -= rhs.a_;
    b_ -= rhs.b_;
    return *this;
}

QuadRational quad_mul(const QuadRational& x, const QuadRational& y) {
    // (a + b r)(c + d r) = (ac + 5bd) + (ad + bc) r
    return QuadRational(x.a_ * y.a_ + Rational(5) * x.b_ * y.b_, x.a_ * y.b_ + x.b_ * y.a_);
}

QuadRational quad_pow(QuadRational x, unsigned long n) {
    QuadRational result = QuadRational::one();
    while (n > 0) {
        if (n & 1UL) result = quad_mul(result, x);
        n >>= 1;
        if (n > 0) x = quad_mul(x, x);
    }
    return result;
}

double QuadRational::to_double() const { return a_.to_double() + b_.to_double() * std::sqrt(5.0); }

std::string QuadRational::to_string() const {
    if (b_.is_zero()) return a_.to_string();
    return a_.to_string() + (b_.sign() < 0 ? " - " : " + ") + (b_.sign() < 0 ? (-b_).to_string() : b_.to_string()) +
           "*sqrt(5)";
}

std::ostream& operator<<(std::ostream& os, const QuadRational& x) { return os << x.to_string(); }

}  // namespace fibpascal
