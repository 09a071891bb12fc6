#include "fibpascal/mat4.hpp"

#include "fibpascal/errors.hpp"

namespace fibpascal {

Vec4 Vec4::unit(std::size_t k) {
    if (k < 1 || k > 4) throw DomainError("unit vector index must be in 1..4");
    Vec4 e;
    e.v[k - 1] = BigInt(1);
    return e;
}

Vec4 Vec4::ones() { return Vec4{{BigInt(1), BigInt(1), BigInt(1), BigInt(1)}}; }

Vec4 operator+(const Vec4& a, const Vec4& b) {
    Vec4 r;
    for (std::size_t i = 0; i < 4; ++i) r.v[i] = a.v[i] + b.v[i];
    return r;
}

BigInt dot(const Vec4& a, const Vec4& b) {
    BigInt s;
    for (std::size_t i = 0; i < 4; ++i) s += a.v[i] * b.v[i];
    return s;
}

Mat4 Mat4::identity() {
    Mat4 r;
    for (std::size_t i = 0; i < 4; ++i) r.m[i][i] = BigInt(1);
    return r;
}

Mat4 Mat4::from_rows(const std::array<std::array<std::int64_t, 4>, 4>& rows) {
    Mat4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) r.m[i][j] = BigInt(rows[i][j]);
    return r;
}

Mat4 operator*(const Mat4& a, const Mat4& b) {
    Mat4 r;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
            BigInt s;
            for (std::size_t k = 0; k < 4; ++k) {
                if (!a.m[i][k].is_zero() && !b.m[k][j].is_zero()) s += a.m[i][k] * b.m[k][j];
            }
            r.m[i][j] = std::move(s);
        }
    return r;
}

Vec4 mat4_apply(const Mat4& m, const Vec4& v) {
    Vec4 r;
    for (std::size_t i = 0; i < 4; ++i) {
        BigInt s;
        for (std::size_t j = 0; j < 4; ++j) s += m.m[i][j] * v.v[j];
        r.v[i] = std::move(s);
    }
    return r;
}

Mat4 mat4_pow(Mat4 m, unsigned long n) {
    Mat4 result = Mat4::identity();
    while (n > 0) {
        if (n & 1UL) result = result * m;
        n >>= 1;
        if (n > 0) m = m * m;
    }
    return result;
}

const Mat4& fibonacci_q() {
    static const Mat4 q = Mat4::from_rows({{{0, 1, 0, 0}, {1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}}});
    return q;
}

const Mat4& reversal_r() {
    static const Mat4 r = Mat4::from_rows({{{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}});
    return r;
}

}  // namespace fibpascal
