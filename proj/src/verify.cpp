#include "fibpascal/verify.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include <json.hpp>

#include "fibpascal/errors.hpp"
#include "fibpascal/fib.hpp"
#include "fibpascal/trig.hpp"
#include "fibpascal/weight_pattern.hpp"

namespace fibpascal {

namespace {

struct Outcome {
    bool pass = true;
    std::string expected;
    std::string actual;
};

using Check = std::function<Outcome(std::uint64_t)>;

struct Suite {
    std::string name;
    std::uint64_t first = 0;
    std::uint64_t last = 0;
    Check check;
};

Outcome expect_equal(const BigInt& expected, const BigInt& actual) {
    return Outcome{expected == actual, expected.to_string(), actual.to_string()};
}

Outcome seven_way(std::uint64_t m) {
    const BigInt oracle = fib_doubling(m);
    for (FibMethod method : kAllFibMethods) {
        const BigInt v = fib(method, m);
        if (v != oracle) {
            return Outcome{false, oracle.to_string(), std::string(method_name(method)) + "=" + v.to_string()};
        }
    }
    return Outcome{true, {}, {}};
}

Outcome reversal(std::uint64_t k) { return Outcome{check_reversal_symmetry(k), "true", "false"}; }

Outcome pattern_evaluation(std::uint64_t k) {
    return expect_equal(fib_doubling(k + 1), evaluate_pattern(synthesize_pattern(k)));
}

Outcome pattern_structure(std::uint64_t k) {
    const WeightPattern p = synthesize_pattern(k);
    for (std::uint64_t r = k; r <= k + 1; ++r) {
        for (std::uint64_t c = 0; c <= r; ++c) {
            const HalfRational w = p.weight(r, c);
            const bool lattice = (2 * static_cast<std::int64_t>(c) - static_cast<std::int64_t>(r)) % 5 == 0;
            const std::string where = "(" + std::to_string(r) + "," + std::to_string(c) + ")";
            if (lattice == w.is_zero()) return Outcome{false, "nonzero exactly on 5 | 2c-r", where};
            if (!w.is_zero() && !w.in_weight_alphabet()) return Outcome{false, "weight in {-1,-1/2,1/2,1}", where};
            if (w != p.weight(r, r - c)) return Outcome{false, "mirror symmetry", where};
        }
    }
    return expect_equal(fib_novel(k + 1), evaluate_pattern(p));
}

Outcome pascal_reduction(std::uint64_t k) {
    const RowCoefficients reduced = reduce_to_row(synthesize_pattern(k));
    const Rational value = dot(reduced, default_pascal_table().row(k)->view());
    const BigInt oracle = fib_doubling(k + 1);
    return Outcome{value == Rational(oracle), oracle.to_string(), value.to_string()};
}

Outcome binet_cosine(std::uint64_t m) {
    const BinetTrace t = binet_trace(m);
    if (!t.twice_b.divisible_by(t.scale)) return Outcome{false, "2^m | 2b", t.twice_b.to_string()};
    return expect_equal(fib_binet_exact(m), fib_cosine_exact(m));
}

Outcome derivation(std::uint64_t m) {
    const DerivationReport r = derive_report(m);
    if (!r.sqrt5_cancelled) return Outcome{false, "sqrt5 parts cancel", "residual sqrt5 component"};
    return Outcome{r.sound, r.oracle.to_string(), r.value.to_string()};
}

void parallel_for(std::uint64_t first, std::uint64_t last, unsigned threads,
                  const std::function<void(std::uint64_t)>& body) {
    if (first > last) return;
    const std::uint64_t count = last - first + 1;
    if (threads == 0) threads = std::max(1U, std::thread::hardware_concurrency());
    threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, count));
    std::atomic<std::uint64_t> next{first};
    auto worker = [&] {
        for (std::uint64_t i = next++; i <= last; i = next++) body(i);
    };
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
    worker();
}

}  // namespace

VerifyReport run_verify(std::uint64_t max_index, unsigned threads) {
    if (max_index < 1) throw DomainError("verify: max index must be >= 1");
    const std::uint64_t n = max_index;
    const std::vector<Suite> suites = {
        {"seven_way_agreement", 1, n, seven_way},
        {"reversal_symmetry", 0, n, reversal},
        {"pattern_evaluation", 0, n - 1, pattern_evaluation},
        {"pattern_structure", 0, n - 1, pattern_structure},
        {"pascal_reduction", 0, n - 1, pascal_reduction},
        {"binet_cosine", 1, n, binet_cosine},
        {"derivation", 1, n, derivation},
    };

    VerifyReport report;
    report.max_index = n;
    for (const Suite& suite : suites) {
        std::vector<Outcome> outcomes(suite.last - suite.first + 1);
        parallel_for(suite.first, suite.last, threads, [&](std::uint64_t i) {
            Outcome& out = outcomes[i - suite.first];
            try {
                out = suite.check(i);
            } catch (const std::exception& e) {
                out = Outcome{false, "no error", e.what()};
            }
        });
        SuiteResult result{suite.name, 0, 0};
        for (std::size_t j = 0; j < outcomes.size(); ++j) {
            ++result.checked;
            if (outcomes[j].pass) {
                ++result.passed;
            } else if (!report.failure) {
                report.failure = VerifyFailure{suite.name, suite.first + j, outcomes[j].expected, outcomes[j].actual};
            }
        }
        report.suites.push_back(std::move(result));
    }
    return report;
}

std::string verify_to_json(const VerifyReport& report) {
    nlohmann::ordered_json doc;
    doc["max_index"] = report.max_index;
    doc["passed"] = report.ok();
    std::size_t suites_passed = 0;
    nlohmann::ordered_json suites = nlohmann::ordered_json::array();
    for (const SuiteResult& s : report.suites) {
        if (s.passed == s.checked) ++suites_passed;
        nlohmann::ordered_json j;
        j["name"] = s.name;
        j["checked"] = s.checked;
        j["passed"] = s.passed;
        suites.push_back(std::move(j));
    }
    doc["suites_passed"] = suites_passed;
    doc["suites_total"] = report.suites.size();
    doc["suites"] = std::move(suites);
    if (report.failure) {
        nlohmann::ordered_json f;
        f["suite"] = report.failure->suite;
        f["index"] = report.failure->index;
        f["expected"] = report.failure->expected;
        f["actual"] = report.failure->actual;
        doc["failure"] = std::move(f);
    } else {
        doc["failure"] = nullptr;
    }
    return doc.dump(2) + "\n";
}

}  // namespace fibpascal
