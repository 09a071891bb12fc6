#pragma once

#include <array>
#include <cstddef>

#include "fibpascal/bigint.hpp"

namespace fibpascal {

struct Vec4 {
    std::array<BigInt, 4> v{};

    // Canonical unit vector, 1-based like the math: unit(1) = e_1.
    static Vec4 unit(std::size_t k);
    static Vec4 ones();

    const BigInt& operator[](std::size_t i) const { return v[i]; }
    BigInt& operator[](std::size_t i) { return v[i]; }

    friend Vec4 operator+(const Vec4& a, const Vec4& b);
    friend bool operator==(const Vec4&, const Vec4&) = default;
};

BigInt dot(const Vec4& a, const Vec4& b);

struct Mat4 {
    std::array<std::array<BigInt, 4>, 4> m{};

    static Mat4 identity();
    static Mat4 from_rows(const std::array<std::array<std::int64_t, 4>, 4>& rows);

    const BigInt& operator()(std::size_t r, std::size_t c) const { return m[r][c]; }
    BigInt& operator()(std::size_t r, std::size_t c) { return m[r][c]; }

    friend Mat4 operator*(const Mat4& a, const Mat4& b);
    friend bool operator==(const Mat4&, const Mat4&) = default;
};

Vec4 mat4_apply(const Mat4& m, const Vec4& v);
// Exponentiation by squaring; mat4_pow(m, 0) is the identity.
Mat4 mat4_pow(Mat4 m, unsigned long n);

// Path-graph adjacency matrix driving F_{k+1} = 1^T Q^k e_1.
const Mat4& fibonacci_q();
// Order-reversal permutation; commutes with Q and is its own inverse.
const Mat4& reversal_r();

}  // namespace fibpascal
