#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace fibpascal {

struct SuiteResult {
    std::string name;
    std::uint64_t checked = 0;
    std::uint64_t passed = 0;
};

struct VerifyFailure {
    std::string suite;
    std::uint64_t index = 0;
    std::string expected;
    std::string actual;
};

struct VerifyReport {
    std::uint64_t max_index = 0;
    std::vector<SuiteResult> suites;
    std::optional<VerifyFailure> failure;  // first failure in suite order, then index order

    bool ok() const { return !failure.has_value(); }
};

// Runs the seven cross-check suites over 1..max_index:
//   seven_way_agreement     all engines equal fib_doubling(m)
//   reversal_symmetry       1^T Q^k e_2 == 1^T Q^k e_3, k = 0..max_index
//   pattern_evaluation      evaluate(synthesize_pattern(k)) == F_{k+1}, k = 0..max_index-1
//   pattern_structure       alphabet, mirror symmetry, 5 | 2c - r lattice, k = 0..max_index-1
//   pascal_reduction        dot(reduce_to_row(pattern), row k) == F_{k+1}
//   binet_cosine            binet == cosine, with 2^m | 2b
//   derivation              derived row-m coefficients are rational and sum to F_m
// Indices are spread over `threads` workers (0 = hardware concurrency); the
// report does not depend on scheduling.
VerifyReport run_verify(std::uint64_t max_index, unsigned threads = 0);

std::string verify_to_json(const VerifyReport& report);

}  // namespace fibpascal
