#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "fibpascal/bench.hpp"
#include "fibpascal/cli.hpp"
#include "fibpascal/errors.hpp"
#include "fibpascal/fib.hpp"
#include "fibpascal/pascal.hpp"
#include "fibpascal/render.hpp"
#include "fibpascal/serialize.hpp"
#include "fibpascal/trig.hpp"
#include "fibpascal/verify.hpp"
#include "fibpascal/weight_pattern.hpp"

namespace py = pybind11;
namespace fp = fibpascal;

// Python int <-> BigInt, through the decimal representation.
namespace pybind11::detail {
template <>
struct type_caster<fp::BigInt> {
    PYBIND11_TYPE_CASTER(fp::BigInt, const_name("int"));

    bool load(handle src, bool) {
        if (!src || !PyLong_Check(src.ptr())) return false;
        value = fp::BigInt(py::str(src).cast<std::string>());
        return true;
    }

    static handle cast(const fp::BigInt& v, return_value_policy, handle) {
        return PyLong_FromString(v.to_string().c_str(), nullptr, 10);
    }
};
}  // namespace pybind11::detail

namespace {

py::object fraction(const fp::Rational& r) {
    static py::object cls = py::module_::import("fractions").attr("Fraction");
    return cls(py::cast(r.numerator()), py::cast(r.denominator()));
}

fp::Rational to_rational(const py::handle& h) {
    if (PyLong_Check(h.ptr())) return fp::Rational(h.cast<fp::BigInt>());
    return fp::Rational(h.attr("numerator").cast<fp::BigInt>(), h.attr("denominator").cast<fp::BigInt>());
}

py::list fractions(const std::vector<fp::Rational>& v) {
    py::list out;
    for (const auto& r : v) out.append(fraction(r));
    return out;
}

py::dict series_to_dict(const fp::CosineSeries& s) {
    py::dict d;
    for (const auto& [t, c] : s.terms()) d[py::int_(t)] = fraction(c);
    return d;
}

fp::CosineSeries series_from_dict(const py::dict& d) {
    fp::CosineSeries s;
    for (const auto& [t, c] : d) s.add(t.cast<std::int64_t>(), to_rational(c));
    return s;
}

py::tuple quad_tuple(const fp::QuadRational& q) {
    return py::make_tuple(fraction(q.rational_part()), fraction(q.sqrt5_part()));
}

fp::FibMethod method_from(const std::string& name) {
    const auto m = fp::parse_method(name);
    if (!m) throw fp::DomainError("unknown method '" + name + "'");
    return *m;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
    m.doc() = "Exact Fibonacci identities over Pascal's triangle";

    py::register_exception<fp::InconsistencyError>(m, "InconsistencyError", PyExc_ArithmeticError);
    py::register_exception_translator([](std::exception_ptr p) {
        try {
            if (p) std::rethrow_exception(p);
        } catch (const fp::DomainError& e) {
            PyErr_SetString(PyExc_ValueError, e.what());
        } catch (const fp::ResourceLimitError& e) {
            PyErr_SetString(PyExc_OverflowError, e.what());
        }
    });

    m.def("methods", [] {
        std::vector<std::string> names;
        for (auto method : fp::kAllFibMethods) names.emplace_back(fp::method_name(method));
        return names;
    });
    m.def("fib", [](std::uint64_t index, const std::string& method) { return fp::fib(method_from(method), index); },
          py::arg("index"), py::arg("method") = "doubling",
          "F_index (F_1 = F_2 = 1) computed by the named method.");
    m.def("check_reversal_symmetry", &fp::check_reversal_symmetry, py::arg("k"));

    m.def("binomial", [](std::int64_t n, std::int64_t k) { return fp::binomial(n, k); }, py::arg("n"), py::arg("k"));
    m.def("pascal_row", [](std::uint64_t n) { return fp::pascal_row(n).entries; }, py::arg("n"));

    py::class_<fp::WeightPattern>(m, "WeightPattern")
        .def_property_readonly("k", &fp::WeightPattern::k)
        .def_property_readonly("cells",
                               [](const fp::WeightPattern& p) {
                                   py::dict d;
                                   for (const auto& [cell, w] : p.cells()) {
                                       d[py::make_tuple(cell.row, cell.col)] = fraction(w.to_rational());
                                   }
                                   return d;
                               })
        .def("weight", [](const fp::WeightPattern& p, std::uint64_t r, std::uint64_t c) {
            return fraction(p.weight(r, c).to_rational());
        })
        .def("__len__", [](const fp::WeightPattern& p) { return p.cells().size(); })
        .def("__repr__", [](const fp::WeightPattern& p) {
            return "<WeightPattern k=" + std::to_string(p.k()) + " cells=" + std::to_string(p.cells().size()) + ">";
        });

    m.def("synthesize_pattern", &fp::synthesize_pattern, py::arg("k"));
    m.def("classify_weight",
          [](std::uint64_t k, std::uint64_t r, std::uint64_t c) { return fraction(fp::classify_weight(k, r, c).to_rational()); },
          py::arg("k"), py::arg("row"), py::arg("col"));
    m.def("evaluate_pattern", [](const fp::WeightPattern& p) { return fp::evaluate_pattern(p); });
    m.def("reduce_to_row", [](const fp::WeightPattern& p) { return fractions(fp::reduce_to_row(p).coeffs); },
          "Coefficients over row k after the Pascal rule removes row k+1.");
    m.def("pattern_json", [](std::uint64_t k) {
        const auto p = fp::synthesize_pattern(k);
        return fp::pattern_to_json(p, fp::evaluate_pattern(p));
    });
    m.def("pattern_csv", [](std::uint64_t k) { return fp::pattern_to_csv(fp::synthesize_pattern(k)); });
    m.def("pattern_from_json", &fp::pattern_from_json);

    m.def("expand_cos_power", [](std::uint64_t power) { return series_to_dict(fp::expand_cos_power(power)); },
          py::arg("m"), "cos^m as {multiple: Fraction}.");
    m.def("series_mul", [](const py::dict& a, const py::dict& b) {
        return series_to_dict(fp::series_mul(series_from_dict(a), series_from_dict(b)));
    });
    m.def("substitute_exact",
          [](const py::dict& s, std::uint64_t angle_multiple) {
              return quad_tuple(fp::substitute_exact(series_from_dict(s), angle_multiple));
          },
          py::arg("series"), py::arg("angle_multiple") = 1,
          "Value at theta = pi/5 as (a, b) meaning a + b*sqrt(5).");
    m.def("derive_identity", [](std::uint64_t index) { return fractions(fp::derive_identity(index).coeffs); },
          py::arg("m"), "Coefficients over row m whose dot with C(m, .) is F_m.");
    m.def("derive_json", [](std::uint64_t index) { return fp::derivation_to_json(fp::derive_report(index)); },
          py::arg("m"));
    m.def("check_binet_from_cosine",
          [](std::uint64_t first, std::uint64_t last) { return fp::check_binet_from_cosine(first, last).agree; },
          py::arg("first"), py::arg("last"));

    m.def("render",
          [](const std::string& mode, std::uint64_t k, std::uint64_t rows, const std::string& format, bool numbers) {
              const auto md = fp::parse_render_mode(mode);
              const auto fmt = fp::parse_render_format(format);
              if (!md || !fmt) throw fp::DomainError("unknown render mode or format");
              return fp::render(fp::RenderSpec{*md, k, rows, *fmt, numbers});
          },
          py::arg("mode") = "novel", py::arg("k") = 0, py::arg("rows") = 2, py::arg("format") = "ascii",
          py::arg("cell_numbers") = false);

    m.def("verify_json", [](std::uint64_t max_index) {
        py::gil_scoped_release release;
        return fp::verify_to_json(fp::run_verify(max_index));
    }, py::arg("max_index"));

    m.def("bench_csv", [](std::uint64_t max_index, const std::vector<std::string>& names, unsigned reps) {
        std::vector<fp::FibMethod> methods;
        for (const auto& n : names) methods.push_back(method_from(n));
        const auto report = fp::run_bench(max_index, methods, reps);
        if (!report.all_agree) throw fp::InconsistencyError(*report.first_disagreement);
        return fp::bench_to_csv(report);
    }, py::arg("max_index"), py::arg("methods"), py::arg("repetitions") = 3);

    m.def("run_cli", [](std::vector<std::string> args) {
        args.insert(args.begin(), "fibpascal");
        std::ostringstream out;
        std::ostringstream err;
        const int code = fp::run_cli(args, out, err);
        return py::make_tuple(code, out.str(), err.str());
    }, "Run the command-line tool in-process; returns (exit_code, stdout, stderr).");
}
