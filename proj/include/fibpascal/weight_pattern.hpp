#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <vector>

#include "fibpascal/bigint.hpp"
#include "fibpascal/half_rational.hpp"
#include "fibpascal/pascal.hpp"
#include "fibpascal/rational.hpp"

namespace fibpascal {

struct Cell {
    std::uint64_t row = 0;
    std::uint64_t col = 0;
    friend auto operator<=>(const Cell&, const Cell&) = default;
};

// Weights over Pascal rows k and k+1 whose weighted binomial sum is F_{k+1}.
// Cells iterate in row-major order.
class WeightPattern {
public:
    using CellMap = std::map<Cell, HalfRational>;

    WeightPattern() = default;
    // Validates every invariant (rows, column range, alphabet, mirror symmetry,
    // 5 | 2c - r) and throws DomainError on violation. Zero weights are dropped.
    WeightPattern(std::uint64_t k, CellMap cells);

    std::uint64_t k() const { return k_; }
    const CellMap& cells() const { return cells_; }
    // Zero for cells not in the pattern.
    HalfRational weight(std::uint64_t row, std::uint64_t col) const;

    friend bool operator==(const WeightPattern&, const WeightPattern&) = default;

private:
    std::uint64_t k_ = 0;
    CellMap cells_;
};

// Dense coefficients over one Pascal row: value = sum_j coeffs[j] C(row, j).
struct RowCoefficients {
    std::uint64_t row = 0;
    std::vector<Rational> coeffs;  // length row + 1

    friend bool operator==(const RowCoefficients&, const RowCoefficients&) = default;
};

// weight(r, c) = (-1)^r * (1 if r == k, 1/2 if r == k + 1) when 5 | (2c - r), else 0.
// Throws DomainError if r is not k or k+1 or c > r.
HalfRational classify_weight(std::uint64_t k, std::uint64_t r, std::uint64_t c);

WeightPattern synthesize_pattern(std::uint64_t k);

// Sum of weight * C(r, c); throws InconsistencyError if half weights fail to pair up.
BigInt evaluate_pattern(const WeightPattern& p, const PascalTable& table = default_pascal_table());

// Rewrites each row-(k+1) term through C(k+1, j) = C(k, j-1) + C(k, j) and
// accumulates everything over row k.
RowCoefficients reduce_to_row(const WeightPattern& p);

// sum_j coeffs[j] * entries[j]; sizes must match.
Rational dot(const RowCoefficients& coeffs, std::span<const BigInt> entries);

// Mirror average (v[j] + v[row - j]) / 2, the normal form used to compare
// coefficient vectors that are only defined up to row symmetry.
RowCoefficients symmetrize(const RowCoefficients& v);

}  // namespace fibpascal
