#pragma once

// Independent reference computations used only by the tests.

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "fibpascal/bigint.hpp"
#include "fibpascal/quad.hpp"
#include "fibpascal/rational.hpp"

namespace oracle {

using fibpascal::BigInt;

// Rows 0..n of Pascal's triangle by the addition rule only.
inline std::vector<std::vector<BigInt>> additive_triangle(std::uint64_t n) {
    std::vector<std::vector<BigInt>> rows;
    rows.push_back({BigInt(1)});
    for (std::uint64_t r = 1; r <= n; ++r) {
        const auto& prev = rows.back();
        std::vector<BigInt> row(r + 1, BigInt(1));
        for (std::uint64_t j = 1; j < r; ++j) row[j] = prev[j - 1] + prev[j];
        rows.push_back(std::move(row));
    }
    return rows;
}

// F_1..F_n by plain addition; fib[m] = F_m, fib[0] = 0.
inline std::vector<BigInt> fibonacci_table(std::uint64_t n) {
    std::vector<BigInt> f(n + 2);
    f[0] = BigInt(0);
    f[1] = BigInt(1);
    for (std::uint64_t i = 2; i <= n + 1; ++i) f[i] = f[i - 1] + f[i - 2];
    f.resize(n + 1);
    return f;
}

// x^n by n repeated multiplications.
inline fibpascal::QuadRational repeated_power(const fibpascal::QuadRational& x, unsigned n) {
    fibpascal::QuadRational r = fibpascal::QuadRational::one();
    for (unsigned i = 0; i < n; ++i) r = fibpascal::quad_mul(r, x);
    return r;
}

// Small random rationals p/q with |p| <= 20, 1 <= q <= 12.
class RationalGen {
public:
    explicit RationalGen(std::uint32_t seed) : rng_(seed) {}
    fibpascal::Rational next() {
        std::uniform_int_distribution<int> num(-20, 20);
        std::uniform_int_distribution<int> den(1, 12);
        return fibpascal::Rational(BigInt(num(rng_)), BigInt(den(rng_)));
    }
    fibpascal::QuadRational next_quad() { return fibpascal::QuadRational(next(), next()); }
    std::mt19937& engine() { return rng_; }

private:
    std::mt19937 rng_;
};

inline constexpr double kPi = 3.14159265358979323846;

}  // namespace oracle
