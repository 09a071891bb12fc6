#include "fibpascal/weight_pattern.hpp"

#include <string>

#include "fibpascal/errors.hpp"

namespace fibpascal {

namespace {

bool on_lattice(std::uint64_t r, std::uint64_t c) {
    const auto diff = 2 * static_cast<std::int64_t>(c) - static_cast<std::int64_t>(r);
    return diff % 5 == 0;
}

std::string cell_str(const Cell& cell) {
    return "(" + std::to_string(cell.row) + "," + std::to_string(cell.col) + ")";
}

}  // namespace

WeightPattern::WeightPattern(std::uint64_t k, CellMap cells) : k_(k) {
    for (auto& [cell, w] : cells) {
        if (w.is_zero()) continue;
        if (cell.row != k && cell.row != k + 1) {
            throw DomainError("pattern cell " + cell_str(cell) + " is not on row k or k+1");
        }
        if (cell.col > cell.row) throw DomainError("pattern cell " + cell_str(cell) + " is outside the triangle");
        if (!w.in_weight_alphabet()) {
            throw DomainError("pattern weight " + w.to_string() + " at " + cell_str(cell) + " is outside {-1,-1/2,1/2,1}");
        }
        if (!on_lattice(cell.row, cell.col)) {
            throw DomainError("pattern cell " + cell_str(cell) + " has 2c - r not divisible by 5");
        }
        cells_.emplace(cell, w);
    }
    for (const auto& [cell, w] : cells_) {
        if (weight(cell.row, cell.row - cell.col) != w) {
            throw DomainError("pattern is not mirror-symmetric at " + cell_str(cell));
        }
    }
}

HalfRational WeightPattern::weight(std::uint64_t row, std::uint64_t col) const {
    const auto it = cells_.find(Cell{row, col});
    return it == cells_.end() ? HalfRational() : it->second;
}

HalfRational classify_weight(std::uint64_t k, std::uint64_t r, std::uint64_t c) {
    if (r != k && r != k + 1) {
        throw DomainError("classify_weight: row " + std::to_string(r) + " is not k or k+1 for k=" + std::to_string(k));
    }
    if (c > r) throw DomainError("classify_weight: column " + std::to_string(c) + " outside row " + std::to_string(r));
    if (!on_lattice(r, c)) return HalfRational();
    const HalfRational magnitude = r == k ? HalfRational::from_integer(BigInt(1)) : HalfRational::half();
    return r % 2 == 0 ? magnitude : -magnitude;
}

WeightPattern synthesize_pattern(std::uint64_t k) {
    WeightPattern::CellMap cells;
    for (std::uint64_t r = k; r <= k + 1; ++r) {
        // First lattice column: smallest c >= 0 with 2c == r (mod 5); 3 is 2^-1 mod 5.
        for (std::uint64_t c = (3 * (r % 5)) % 5; c <= r; c += 5) {
            cells.emplace(Cell{r, c}, classify_weight(k, r, c));
        }
    }
    return WeightPattern(k, std::move(cells));
}

BigInt evaluate_pattern(const WeightPattern& p, const PascalTable& table) {
    const auto row_k = table.row(p.k());
    const auto row_k1 = table.row(p.k() + 1);
    HalfRational sum;
    for (const auto& [cell, w] : p.cells()) {
        const PascalRow& row = cell.row == p.k() ? *row_k : *row_k1;
        sum += w * row.entries[cell.col];
    }
    if (!sum.is_integer()) {
        throw InconsistencyError("pattern for k=" + std::to_string(p.k()) + " sums to non-integer " + sum.to_string());
    }
    return sum.to_integer();
}

RowCoefficients reduce_to_row(const WeightPattern& p) {
    const std::uint64_t k = p.k();
    RowCoefficients out{k, std::vector<Rational>(k + 1)};
    for (const auto& [cell, w] : p.cells()) {
        const Rational value = w.to_rational();
        if (cell.row == k) {
            out.coeffs[cell.col] += value;
            continue;
        }
        // C(k+1, j) = C(k, j-1) + C(k, j); out-of-range terms are zero.
        if (cell.col >= 1) out.coeffs[cell.col - 1] += value;
        if (cell.col <= k) out.coeffs[cell.col] += value;
    }
    return out;
}

Rational dot(const RowCoefficients& coeffs, std::span<const BigInt> entries) {
    if (coeffs.coeffs.size() != entries.size()) {
        throw DomainError("dot: " + std::to_string(coeffs.coeffs.size()) + " coefficients against " +
                          std::to_string(entries.size()) + " entries");
    }
    // Accumulate over the common denominator; reduce once at the end.
    BigInt common(1);
    for (const Rational& c : coeffs.coeffs) {
        const BigInt& d = c.denominator();
        if (!common.divisible_by(d)) common = (common * d).div_exact(BigInt::gcd(common, d));
    }
    BigInt sum;
    for (std::size_t j = 0; j < entries.size(); ++j) {
        const Rational& c = coeffs.coeffs[j];
        if (c.is_zero()) continue;
        sum += c.numerator() * common.div_exact(c.denominator()) * entries[j];
    }
    return Rational(std::move(sum), std::move(common));
}

RowCoefficients symmetrize(const RowCoefficients& v) {
    RowCoefficients out{v.row, std::vector<Rational>(v.coeffs.size())};
    const std::size_t n = v.coeffs.size();
    for (std::size_t j = 0; j < n; ++j) {
        out.coeffs[j] = (v.coeffs[j] + v.coeffs[n - 1 - j]) * Rational(BigInt(1), BigInt(2));
    }
    return out;
}

}  // namespace fibpascal
