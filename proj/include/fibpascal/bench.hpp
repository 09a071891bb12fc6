#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fibpascal/bigint.hpp"
#include "fibpascal/fib.hpp"

namespace fibpascal {

struct BenchRecord {
    FibMethod method = FibMethod::recurrence;
    std::uint64_t index = 0;
    std::uint64_t ns_median = 0;
    std::size_t digits = 0;
    std::string digest;
    bool agreement = false;
};

struct BenchReport {
    std::vector<BenchRecord> records;  // method-major, index ascending
    bool all_agree = true;
    std::optional<std::string> first_disagreement;
};

// Full decimal value when it has at most 16 digits, else "first8...last8".
std::string value_digest(const BigInt& v);

// Times every method at every index 1..max_index (median over repetitions).
// Engines run without row caching so repeated runs measure the full cost.
// Values are compared across methods before any timing is kept.
BenchReport run_bench(std::uint64_t max_index, std::span<const FibMethod> methods, unsigned repetitions);

// Header: method,index,ns_median,digits,digest,agreement
std::string bench_to_csv(const BenchReport& report);

}  // namespace fibpascal
