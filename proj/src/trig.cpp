#include "fibpascal/trig.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "fibpascal/errors.hpp"
#include "fibpascal/fib.hpp"
#include "fibpascal/pascal.hpp"

namespace fibpascal {

CosineSeries::CosineSeries(Terms terms) {
    for (auto& [t, c] : terms) add(static_cast<std::int64_t>(t), c);
}

void CosineSeries::add(std::int64_t t, const Rational& c) {
    if (c.is_zero()) return;
    const auto key = static_cast<std::uint64_t>(t < 0 ? -t : t);
    auto [it, inserted] = terms_.try_emplace(key, c);
    if (!inserted) {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Rational CosineSeries::coefficient(std::uint64_t t) const {
    const auto it = terms_.find(t);
    return it == terms_.end() ? Rational() : it->second;
}

double CosineSeries::evaluate(double theta) const {
    double s = 0.0;
    for (const auto& [t, c] : terms_) s += c.to_double() * std::cos(static_cast<double>(t) * theta);
    return s;
}

std::vector<CosPowerTerm> cos_power_terms(std::uint64_t m) {
    std::vector<CosPowerTerm> out;
    const BigInt denom = BigInt::pow2(m);
    const Rational paired(BigInt(2), denom);
    if (m % 2 == 0) {
        out.push_back({0, m / 2, Rational(BigInt(1), denom)});
        for (std::uint64_t k = 0; k + 1 <= m / 2; ++k) out.push_back({m - 2 * k, k, paired});
    } else {
        for (std::uint64_t k = 0; k <= (m - 1) / 2; ++k) out.push_back({m - 2 * k, k, paired});
    }
    return out;
}

CosineSeries expand_cos_power(std::uint64_t m) {
    if (m < 1) throw DomainError("expand_cos_power: exponent must be >= 1");
    CosineSeries s;
    for (const CosPowerTerm& term : cos_power_terms(m)) {
        s.add(static_cast<std::int64_t>(term.multiple),
              term.scale * Rational(binomial(static_cast<std::int64_t>(m), static_cast<std::int64_t>(term.binomial_index))));
    }
    return s;
}

CosineSeries series_mul(const CosineSeries& a, const CosineSeries& b) {
    const Rational half(BigInt(1), BigInt(2));
    CosineSeries out;
    for (const auto& [ta, ca] : a.terms()) {
        for (const auto& [tb, cb] : b.terms()) {
            const Rational c = ca * cb * half;
            const auto sa = static_cast<std::int64_t>(ta);
            const auto sb = static_cast<std::int64_t>(tb);
            out.add(sa + sb, c);
            out.add(sa - sb, c);
        }
    }
    return out;
}

ExactCosTable::ExactCosTable() {
    const Rational q(BigInt(1), BigInt(4));
    values_[0] = QuadRational(Rational(1));
    values_[1] = QuadRational(q, q);    // cos(pi/5) = (1 + r5)/4
    values_[2] = QuadRational(-q, q);   // cos(2pi/5) = (r5 - 1)/4
    values_[3] = QuadRational(q, -q);   // cos(3pi/5) = (1 - r5)/4
    values_[4] = QuadRational(-q, -q);  // cos(4pi/5) = -(1 + r5)/4
    values_[5] = QuadRational(Rational(-1));
    for (int t = 6; t < 10; ++t) values_[t] = values_[10 - t];
}

const ExactCosTable& ExactCosTable::instance() {
    static const ExactCosTable table;
    return table;
}

const QuadRational& ExactCosTable::at(std::int64_t t) const {
    const std::int64_t r = ((t % 10) + 10) % 10;
    return values_[r];
}

QuadRational substitute_exact(const CosineSeries& s, std::uint64_t angle_multiple) {
    const ExactCosTable& table = ExactCosTable::instance();
    QuadRational sum;
    for (const auto& [t, c] : s.terms()) {
        const auto residue = static_cast<std::int64_t>((angle_multiple % 10) * (t % 10) % 10);
        sum += table.at(residue) * QuadRational(c);
    }
    return sum;
}

std::vector<QuadRational> derive_quadratic_coefficients(std::uint64_t k) {
    const ExactCosTable& table = ExactCosTable::instance();
    // cos^2((2j-1) pi/10) for j = 1, 2.
    const QuadRational half_angle_sq[2] = {
        QuadRational(Rational(BigInt(5), BigInt(8)), Rational(BigInt(1), BigInt(8))),
        QuadRational(Rational(BigInt(5), BigInt(8)), Rational(BigInt(-1), BigInt(8))),
    };
    const Rational prefactor(BigInt::pow2(k + 2), BigInt(5));

    const std::vector<CosPowerTerm> terms = cos_power_terms(k);

    std::vector<QuadRational> coeffs(k + 1);
    for (std::uint64_t j = 1; j <= 2; ++j) {
        // cos^k(alpha_j) with alpha_j = (2j-1) pi/5: a series in theta = pi/5
        // whose multiples are scaled by 2j-1 at substitution.
        const std::uint64_t angle_multiple = 2 * j - 1;
        // scale takes two values (central / paired), the cosine ten residues:
        // cache table(residue) * cos^2 * scale * 2^{k+2}/5 per combination.
        std::vector<std::pair<Rational, std::array<std::optional<QuadRational>, 10>>> cache;
        for (const CosPowerTerm& term : terms) {
            auto it = std::find_if(cache.begin(), cache.end(), [&](const auto& e) { return e.first == term.scale; });
            if (it == cache.end()) it = cache.insert(cache.end(), {term.scale, {}});
            const auto residue = (angle_multiple * (term.multiple % 10)) % 10;
            auto& product = it->second[residue];
            if (!product) {
                product = table.at(static_cast<std::int64_t>(residue)) * half_angle_sq[j - 1] *
                          QuadRational(term.scale * prefactor);
            }
            coeffs[term.binomial_index] += *product;
        }
    }
    return coeffs;
}

RowCoefficients derive_identity_base(std::uint64_t m) {
    if (m < 1) throw DomainError("derive_identity: index must be >= 1");
    const std::uint64_t k = m - 1;
    const auto quad = derive_quadratic_coefficients(k);
    RowCoefficients out{k, {}};
    out.coeffs.reserve(quad.size());
    for (std::size_t i = 0; i < quad.size(); ++i) {
        if (!quad[i].is_rational()) {
            throw InconsistencyError("derivation: coefficient of C(" + std::to_string(k) + "," + std::to_string(i) +
                                     ") keeps sqrt5 part " + quad[i].sqrt5_part().to_string());
        }
        out.coeffs.push_back(quad[i].rational_part());
    }
    return out;
}

namespace {

RowCoefficients lift_to_next_row(const RowCoefficients& base) {
    const std::uint64_t m = base.row + 1;
    RowCoefficients out{m, std::vector<Rational>(m + 1)};
    for (std::uint64_t i = 0; i < m; ++i) {
        if (base.coeffs[i].is_zero()) continue;
        out.coeffs[i] = base.coeffs[i] * Rational(BigInt(static_cast<std::int64_t>(m - i)),
                                                  BigInt(static_cast<std::int64_t>(m)));
    }
    return out;
}

}  // namespace

RowCoefficients derive_identity(std::uint64_t m) {
    RowCoefficients lifted = lift_to_next_row(derive_identity_base(m));
    const Rational value = dot(lifted, pascal_row(m).view());
    const BigInt oracle = fib_recurrence(m);
    if (value != Rational(oracle)) {
        throw InconsistencyError("derivation: row-" + std::to_string(m) + " combination gives " + value.to_string() +
                                 ", expected " + oracle.to_string());
    }
    return lifted;
}

DerivationReport derive_report(std::uint64_t m) {
    if (m < 1) throw DomainError("derive_identity: index must be >= 1");
    DerivationReport r;
    r.m = m;
    r.oracle = fib_recurrence(m);

    const auto quad = derive_quadratic_coefficients(m - 1);
    r.sqrt5_cancelled = true;
    r.base_coefficients = RowCoefficients{m - 1, {}};
    for (const auto& q : quad) {
        r.sqrt5_cancelled = r.sqrt5_cancelled && q.is_rational();
        r.base_coefficients.coeffs.push_back(q.rational_part());
    }
    r.coefficients = lift_to_next_row(r.base_coefficients);

    const Rational value = dot(r.coefficients, pascal_row(m).view());
    r.value = value.is_integer() ? value.numerator() : BigInt(0);
    r.sound = r.sqrt5_cancelled && value == Rational(r.oracle);

    const RowCoefficients reduced = reduce_to_row(synthesize_pattern(m - 1));
    const auto base_row = pascal_row(m - 1);
    r.coherent_in_value = dot(reduced, base_row.view()) == dot(r.base_coefficients, base_row.view());
    r.coherent = symmetrize(reduced) == symmetrize(r.base_coefficients);
    return r;
}

BinetCosineCheck check_binet_from_cosine(std::uint64_t first, std::uint64_t last) {
    BinetCosineCheck out;
    for (std::uint64_t m = first; m <= last; ++m) {
        ++out.checked;
        try {
            const BigInt c = fib_cosine_exact(m);
            const BigInt b = fib_binet_exact(m);
            if (c == b) continue;
            out.detail = "m=" + std::to_string(m) + ": cosine " + c.to_string() + " != binet " + b.to_string();
        } catch (const std::exception& e) {
            out.detail = "m=" + std::to_string(m) + ": " + e.what();
        }
        out.agree = false;
        out.first_disagreement = m;
        break;
    }
    return out;
}

}  // namespace fibpascal
