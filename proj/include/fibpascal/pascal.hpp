#pragma once

#include <atomic>
#include <cstddef>
#include <cstdint>
#include <list>
#include <memory>
#include <mutex>
#include <span>
#include <vector>

#include "fibpascal/bigint.hpp"

namespace fibpascal {

inline constexpr std::uint64_t kDefaultMaxRow = 100'000;

struct PascalRow {
    std::uint64_t n = 0;
    std::vector<BigInt> entries;  // C(n, 0..n)

    std::span<const BigInt> view() const { return entries; }
};

// C(n, k) by the multiplicative formula; 0 for k < 0 or k > n.
// Throws DomainError for n < 0.
BigInt binomial(std::int64_t n, std::int64_t k);

// Row source with a row cap and a small LRU cache of recently built rows.
// The cache is invisible to callers: row(n) always returns C(n, .) exactly.
// Safe for concurrent use.
class PascalTable {
public:
    explicit PascalTable(std::uint64_t max_row = kDefaultMaxRow, std::size_t cached_rows = 16);

    PascalTable(const PascalTable&) = delete;
    PascalTable& operator=(const PascalTable&) = delete;

    // Throws ResourceLimitError if n exceeds max_row().
    std::shared_ptr<const PascalRow> row(std::uint64_t n) const;
    // Uses a cached row when one is present; never populates the cache.
    BigInt binomial(std::int64_t n, std::int64_t k) const;

    std::uint64_t max_row() const { return max_row_.load(std::memory_order_relaxed); }
    void set_max_row(std::uint64_t n) { max_row_.store(n, std::memory_order_relaxed); }
    std::size_t cached_rows() const { return capacity_; }

private:
    std::shared_ptr<const PascalRow> lookup(std::uint64_t n) const;

    std::atomic<std::uint64_t> max_row_;
    std::size_t capacity_;
    mutable std::mutex mutex_;
    mutable std::list<std::shared_ptr<const PascalRow>> lru_;  // most recent first
};

// Process-wide table used by the engines unless one is passed explicitly.
PascalTable& default_pascal_table();

// Full row from the default table (copy). Throws ResourceLimitError past the cap.
PascalRow pascal_row(std::uint64_t n);

// Builds a row without any cache or cap.
PascalRow build_pascal_row(std::uint64_t n);

}  // namespace fibpascal
