#include "fibpascal/bench.hpp"

#include <algorithm>
#include <chrono>
#include <sstream>

#include "fibpascal/errors.hpp"

namespace fibpascal {

std::string value_digest(const BigInt& v) {
    const std::string s = v.to_string();
    if (s.size() <= 16) return s;
    return s.substr(0, 8) + "..." + s.substr(s.size() - 8);
}

BenchReport run_bench(std::uint64_t max_index, std::span<const FibMethod> methods, unsigned repetitions) {
    if (max_index < 1) throw DomainError("bench: max index must be >= 1");
    if (repetitions < 1) throw DomainError("bench: repetitions must be >= 1");
    if (methods.empty()) throw DomainError("bench: no methods given");

    const PascalTable uncached(kDefaultMaxRow, 0);
    auto evaluate = [&](FibMethod method, std::uint64_t m) {
        return method == FibMethod::novel ? fib_novel(m, uncached) : fib(method, m);
    };

    BenchReport report;
    std::vector<std::vector<BenchRecord>> per_method(methods.size());
    std::vector<std::uint64_t> samples(repetitions);

    for (std::uint64_t m = 1; m <= max_index; ++m) {
        std::vector<BigInt> values(methods.size());
        for (std::size_t i = 0; i < methods.size(); ++i) {
            for (unsigned rep = 0; rep < repetitions; ++rep) {
                const auto start = std::chrono::steady_clock::now();
                BigInt v = evaluate(methods[i], m);
                const auto stop = std::chrono::steady_clock::now();
                samples[rep] = static_cast<std::uint64_t>(
                    std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count());
                values[i] = std::move(v);
            }
            std::nth_element(samples.begin(), samples.begin() + repetitions / 2, samples.end());
            BenchRecord rec;
            rec.method = methods[i];
            rec.index = m;
            rec.ns_median = samples[repetitions / 2];
            rec.digits = values[i].decimal_digits();
            rec.digest = value_digest(values[i]);
            rec.agreement = values[i] == values[0];
            if (!rec.agreement && report.all_agree) {
                report.all_agree = false;
                report.first_disagreement = "index " + std::to_string(m) + ": " + std::string(method_name(methods[i])) +
                                            " gives " + rec.digest + ", " + std::string(method_name(methods[0])) +
                                            " gives " + value_digest(values[0]);
            }
            per_method[i].push_back(std::move(rec));
        }
    }
    for (auto& recs : per_method) {
        for (auto& r : recs) report.records.push_back(std::move(r));
    }
    return report;
}

std::string bench_to_csv(const BenchReport& report) {
    std::ostringstream os;
    os << "method,index,ns_median,digits,digest,agreement\n";
    for (const BenchRecord& r : report.records) {
        os << method_name(r.method) << ',' << r.index << ',' << r.ns_median << ',' << r.digits << ',' << r.digest << ','
           << (r.agreement ? "true" : "false") << '\n';
    }
    return os.str();
}

}  // namespace fibpascal
