#include "fibpascal/pascal.hpp"

#include <algorithm>
#include <string>

#include "fibpascal/errors.hpp"

namespace fibpascal {

BigInt binomial(std::int64_t n, std::int64_t k) {
    if (n < 0) throw DomainError("binomial: negative row " + std::to_string(n));
    if (k < 0 || k > n) return BigInt(0);
    k = std::min(k, n - k);
    BigInt c(1);
    for (std::int64_t i = 1; i <= k; ++i) {
        // c = C(n, i-1) here, and C(n, i) = C(n, i-1) (n - i + 1) / i exactly.
        c.mul_word(static_cast<unsigned long>(n - i + 1));
        c.div_exact_word(static_cast<unsigned long>(i));
    }
    return c;
}

PascalRow build_pascal_row(std::uint64_t n) {
    PascalRow row;
    row.n = n;
    row.entries.resize(n + 1);
    BigInt c(1);
    row.entries[0] = c;
    for (std::uint64_t j = 1; j <= n / 2; ++j) {
        c.mul_word(static_cast<unsigned long>(n - j + 1));
        c.div_exact_word(static_cast<unsigned long>(j));
        row.entries[j] = c;
    }
    for (std::uint64_t j = n / 2 + 1; j <= n; ++j) row.entries[j] = row.entries[n - j];
    return row;
}

PascalTable::PascalTable(std::uint64_t max_row, std::size_t cached_rows)
    : max_row_(max_row), capacity_(cached_rows) {}

std::shared_ptr<const PascalRow> PascalTable::lookup(std::uint64_t n) const {
    std::lock_guard lock(mutex_);
    for (auto it = lru_.begin(); it != lru_.end(); ++it) {
        if ((*it)->n == n) {
            auto hit = *it;
            lru_.splice(lru_.begin(), lru_, it);
            return hit;
        }
    }
    return nullptr;
}

std::shared_ptr<const PascalRow> PascalTable::row(std::uint64_t n) const {
    if (n > max_row()) {
        throw ResourceLimitError("pascal row " + std::to_string(n) + " exceeds the row cap " +
                                 std::to_string(max_row()));
    }
    if (capacity_ == 0) return std::make_shared<const PascalRow>(build_pascal_row(n));
    if (auto hit = lookup(n)) return hit;

    // Built outside the lock; two threads racing on the same row both get a
    // correct row and only one copy is kept.
    auto built = std::make_shared<const PascalRow>(build_pascal_row(n));
    std::lock_guard lock(mutex_);
    for (const auto& r : lru_) {
        if (r->n == n) return r;
    }
    lru_.push_front(built);
    if (lru_.size() > capacity_) lru_.pop_back();
    return built;
}

BigInt PascalTable::binomial(std::int64_t n, std::int64_t k) const {
    if (n >= 0 && k >= 0 && k <= n) {
        if (auto hit = lookup(static_cast<std::uint64_t>(n))) return hit->entries[static_cast<std::size_t>(k)];
    }
    return fibpascal::binomial(n, k);
}

PascalTable& default_pascal_table() {
    static PascalTable table;
    return table;
}

PascalRow pascal_row(std::uint64_t n) { return *default_pascal_table().row(n); }

}  // namespace fibpascal
