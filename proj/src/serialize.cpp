#include "fibpascal/serialize.hpp"

#include <sstream>

#include <json.hpp>

#include "fibpascal/errors.hpp"

namespace fibpascal {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json rationals_to_json(const RowCoefficients& v) {
    ordered_json arr = ordered_json::array();
    for (const Rational& c : v.coeffs) arr.push_back(c.to_string());
    return arr;
}

}  // namespace

std::string pattern_to_json(const WeightPattern& p, const BigInt& value) {
    ordered_json doc;
    doc["k"] = p.k();
    doc["target_index"] = p.k() + 1;
    doc["value"] = value.to_string();
    ordered_json cells = ordered_json::array();
    for (const auto& [cell, w] : p.cells()) {
        ordered_json c;
        c["row"] = cell.row;
        c["col"] = cell.col;
        c["weight"] = w.to_string();
        cells.push_back(std::move(c));
    }
    doc["cells"] = std::move(cells);
    return doc.dump(2) + "\n";
}

std::string pattern_to_csv(const WeightPattern& p) {
    std::ostringstream os;
    os << "row,col,weight\n";
    for (const auto& [cell, w] : p.cells()) os << cell.row << ',' << cell.col << ',' << w.to_string() << '\n';
    return os.str();
}

WeightPattern pattern_from_json(const std::string& text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(text);
        WeightPattern::CellMap cells;
        for (const auto& c : doc.at("cells")) {
            cells.emplace(Cell{c.at("row").get<std::uint64_t>(), c.at("col").get<std::uint64_t>()},
                          HalfRational::parse(c.at("weight").get<std::string>()));
        }
        return WeightPattern(doc.at("k").get<std::uint64_t>(), std::move(cells));
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("malformed pattern JSON: ") + e.what());
    }
}

std::string derivation_to_json(const DerivationReport& r) {
    ordered_json doc;
    doc["m"] = r.m;
    doc["row"] = r.coefficients.row;
    doc["coefficients"] = rationals_to_json(r.coefficients);
    doc["base_row"] = r.base_coefficients.row;
    doc["base_coefficients"] = rationals_to_json(r.base_coefficients);
    doc["value"] = r.value.to_string();
    doc["oracle"] = r.oracle.to_string();
    doc["sqrt5_cancelled"] = r.sqrt5_cancelled;
    doc["soundness"] = r.sound ? "pass" : "fail";
    doc["coherence"] = r.coherent ? "coefficient-equal" : (r.coherent_in_value ? "value-equal" : "mismatch");
    doc["verdict"] = r.sound ? "pass" : "fail";
    return doc.dump(2) + "\n";
}

}  // namespace fibpascal
