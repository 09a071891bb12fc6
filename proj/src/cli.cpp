#include "fibpascal/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "fibpascal/bench.hpp"
#include "fibpascal/errors.hpp"
#include "fibpascal/fib.hpp"
#include "fibpascal/render.hpp"
#include "fibpascal/serialize.hpp"
#include "fibpascal/trig.hpp"
#include "fibpascal/verify.hpp"
#include "fibpascal/weight_pattern.hpp"

namespace fibpascal {

namespace {

// Usage error raised after parsing (bad value combinations, caps).
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Verification failure carrying the report already written to the buffer.
struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::uint64_t max_rows = kDefaultMaxRow;
    std::uint64_t max_index = 1'000'000;
    std::string out_path;

    std::int64_t fib_index = 0;
    std::string fib_method = "doubling";

    std::int64_t verify_max = 0;
    unsigned threads = 0;

    std::int64_t pattern_k = -1;
    std::string pattern_format = "json";

    std::string render_mode = "novel";
    std::int64_t render_k = 0;
    std::int64_t render_rows = -1;
    std::string render_format = "ascii";
    bool render_numbers = false;

    std::int64_t derive_m = 0;

    std::int64_t bench_max = 0;
    std::string bench_methods = "doubling,novel";
    std::int64_t bench_reps = 3;
};

std::uint64_t checked_index(std::int64_t v, std::int64_t lowest, const Options& opt, const char* what) {
    if (v < lowest) throw UsageError(std::string(what) + " must be >= " + std::to_string(lowest));
    if (static_cast<std::uint64_t>(v) > opt.max_index) {
        throw UsageError(std::string(what) + " " + std::to_string(v) + " exceeds --max-index " +
                         std::to_string(opt.max_index));
    }
    return static_cast<std::uint64_t>(v);
}

std::vector<FibMethod> parse_method_list(const std::string& list) {
    std::vector<FibMethod> methods;
    std::stringstream ss(list);
    std::string name;
    while (std::getline(ss, name, ',')) {
        if (name == "all") {
            methods.insert(methods.end(), kAllFibMethods.begin(), kAllFibMethods.end());
            continue;
        }
        const auto m = parse_method(name);
        if (!m) throw UsageError("unknown method '" + name + "'");
        methods.push_back(*m);
    }
    if (methods.empty()) throw UsageError("no methods given");
    return methods;
}

void cmd_fib(const Options& opt, std::ostream& out) {
    const std::uint64_t m = checked_index(opt.fib_index, 1, opt, "--index");
    if (opt.fib_method != "all") {
        const auto method = parse_method(opt.fib_method);
        if (!method) throw UsageError("unknown method '" + opt.fib_method + "'");
        out << fib(*method, m) << '\n';
        return;
    }
    std::optional<BigInt> first;
    bool agree = true;
    for (FibMethod method : kAllFibMethods) {
        const BigInt v = fib(method, m);
        out << v << '\n';
        if (!first) first = v;
        agree = agree && v == *first;
    }
    if (!agree) throw VerificationFailure("methods disagree at index " + std::to_string(m));
}

void cmd_verify(const Options& opt, std::ostream& out) {
    const std::uint64_t n = checked_index(opt.verify_max, 1, opt, "--max");
    if (n + 1 > opt.max_rows) throw UsageError("--max needs Pascal rows beyond --max-rows");
    const VerifyReport report = run_verify(n, opt.threads);
    out << verify_to_json(report);
    if (!report.ok()) {
        const VerifyFailure& f = *report.failure;
        throw VerificationFailure("suite " + f.suite + " failed at index " + std::to_string(f.index) + ": expected " +
                                  f.expected + ", got " + f.actual);
    }
}

void cmd_pattern(const Options& opt, std::ostream& out) {
    const std::uint64_t k = checked_index(opt.pattern_k, 0, opt, "--k");
    if (opt.pattern_format != "json" && opt.pattern_format != "csv") {
        throw UsageError("unknown pattern format '" + opt.pattern_format + "'");
    }
    const WeightPattern p = synthesize_pattern(k);
    if (opt.pattern_format == "csv") {
        out << pattern_to_csv(p);
    } else {
        out << pattern_to_json(p, evaluate_pattern(p));
    }
}

void cmd_render(const Options& opt, std::ostream& out) {
    RenderSpec spec;
    const auto mode = parse_render_mode(opt.render_mode);
    if (!mode) throw UsageError("unknown render mode '" + opt.render_mode + "'");
    const auto format = parse_render_format(opt.render_format);
    if (!format) throw UsageError("unknown render format '" + opt.render_format + "'");
    spec.mode = *mode;
    spec.format = *format;
    spec.k = checked_index(opt.render_k, 0, opt, "--k");
    spec.cell_numbers = opt.render_numbers;
    if (opt.render_rows < 0) {
        spec.rows = spec.mode == RenderMode::novel ? spec.k + 2 : std::max<std::uint64_t>(spec.k, 1);
    } else {
        spec.rows = static_cast<std::uint64_t>(opt.render_rows);
    }
    if (spec.rows > opt.max_rows) throw UsageError("--rows exceeds --max-rows");
    try {
        spec.validate();
    } catch (const DomainError& e) {
        throw UsageError(e.what());
    }
    out << render(spec);
}

void cmd_derive(const Options& opt, std::ostream& out) {
    const std::uint64_t m = checked_index(opt.derive_m, 1, opt, "--m");
    if (m > opt.max_rows) throw UsageError("--m exceeds --max-rows");
    const DerivationReport r = derive_report(m);
    out << derivation_to_json(r);
    if (!r.sound) throw VerificationFailure("derivation for m=" + std::to_string(m) + " is unsound");
}

void cmd_bench(const Options& opt, std::ostream& out) {
    const std::uint64_t n = checked_index(opt.bench_max, 1, opt, "--max");
    if (opt.bench_reps < 1) throw UsageError("--reps must be >= 1");
    const auto methods = parse_method_list(opt.bench_methods);
    const BenchReport report = run_bench(n, methods, static_cast<unsigned>(opt.bench_reps));
    if (!report.all_agree) throw VerificationFailure("benchmark disagreement: " + *report.first_disagreement);
    out << bench_to_csv(report);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Exact Fibonacci identities over Pascal's triangle", "fibpascal"};
    app.require_subcommand(1);
    app.fallthrough();
    app.option_defaults()->always_capture_default();
    app.add_option("--max-rows", opt.max_rows, "Largest Pascal row any command may build");
    app.add_option("--max-index", opt.max_index, "Largest Fibonacci index any command may request");
    app.add_option("--out", opt.out_path, "Write standard output to PATH instead");

    auto* fib_cmd = app.add_subcommand("fib", "Print F_index computed by one method or all of them");
    fib_cmd->add_option("--index", opt.fib_index, "Fibonacci index m (F_1 = F_2 = 1)")->required();
    fib_cmd->add_option("--method", opt.fib_method,
                        "recurrence|doubling|matrix|binet|cosine|diagonal|novel|all");

    auto* verify_cmd = app.add_subcommand("verify", "Run every cross-check suite over 1..max");
    verify_cmd->add_option("--max", opt.verify_max, "Largest index checked")->required();
    verify_cmd->add_option("--threads", opt.threads, "Worker threads (0 = all cores)");

    auto* pattern_cmd = app.add_subcommand("pattern", "Emit the weight pattern whose sum is F_{k+1}");
    pattern_cmd->add_option("--k", opt.pattern_k, "Pattern index k >= 0")->required();
    pattern_cmd->add_option("--format", opt.pattern_format, "json|csv");

    auto* render_cmd = app.add_subcommand("render", "Draw the classical or novel pattern");
    render_cmd->add_option("--mode", opt.render_mode, "classical|novel");
    render_cmd->add_option("--k", opt.render_k, "Pattern index (novel mode)");
    render_cmd->add_option("--rows", opt.render_rows, "Rows to draw (default k+2 for novel)");
    render_cmd->add_option("--format", opt.render_format, "ascii|svg");
    render_cmd->add_flag("--cell-numbers", opt.render_numbers, "Print binomial values in cells that fit");

    auto* derive_cmd = app.add_subcommand("derive", "Derive the row-m binomial identity for F_m");
    derive_cmd->add_option("--m", opt.derive_m, "Fibonacci index m >= 1")->required();

    auto* bench_cmd = app.add_subcommand("bench", "Time methods over indices 1..max as CSV");
    bench_cmd->add_option("--max", opt.bench_max, "Largest index timed")->required();
    bench_cmd->add_option("--methods", opt.bench_methods, "Comma-separated method list");
    bench_cmd->add_option("--reps", opt.bench_reps, "Repetitions per (method, index)");

    std::vector<const char*> argv;
    argv.reserve(args.size());
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }

    std::ostringstream buffer;
    int code = kExitOk;
    try {
        default_pascal_table().set_max_row(opt.max_rows);
        if (fib_cmd->parsed()) cmd_fib(opt, buffer);
        if (verify_cmd->parsed()) cmd_verify(opt, buffer);
        if (pattern_cmd->parsed()) cmd_pattern(opt, buffer);
        if (render_cmd->parsed()) cmd_render(opt, buffer);
        if (derive_cmd->parsed()) cmd_derive(opt, buffer);
        if (bench_cmd->parsed()) cmd_bench(opt, buffer);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ResourceLimitError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const VerificationFailure& e) {
        err << "verification failed: " << e.what() << '\n';
        code = kExitVerification;
    } catch (const InconsistencyError& e) {
        err << "verification failed: " << e.what() << '\n';
        code = kExitVerification;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        code = kExitVerification;
    }

    if (opt.out_path.empty()) {
        out << buffer.str();
    } else {
        std::ofstream file(opt.out_path, std::ios::binary);
        if (!file) {
            err << "error: cannot open " << opt.out_path << " for writing\n";
            return kExitUsage;
        }
        file << buffer.str();
    }
    return code;
}

}  // namespace fibpascal
