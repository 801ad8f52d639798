#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <limits>

#include <json.hpp>

#include "spectro/oracle.hpp"
#include "spectro/report.hpp"
#include "spectro/synthesis.hpp"

namespace py = pybind11;
using namespace spectro;

namespace {

py::object json_to_py(const nlohmann::json& value) {
    switch (value.type()) {
        case nlohmann::json::value_t::null:
            return py::none();
        case nlohmann::json::value_t::boolean:
            return py::bool_(value.get<bool>());
        case nlohmann::json::value_t::number_integer:
            return py::int_(value.get<long long>());
        case nlohmann::json::value_t::number_unsigned:
            return py::int_(value.get<unsigned long long>());
        case nlohmann::json::value_t::number_float:
            return py::float_(value.get<double>());
        case nlohmann::json::value_t::string:
            return py::str(value.get<std::string>());
        case nlohmann::json::value_t::array: {
            py::list out;
            for (const auto& item : value) out.append(json_to_py(item));
            return out;
        }
        case nlohmann::json::value_t::object: {
            py::dict out;
            for (auto it = value.begin(); it != value.end(); ++it)
                out[py::str(it.key())] = json_to_py(it.value());
            return out;
        }
        default:
            return py::none();
    }
}

py::tuple price_tuple(const Price& price) {
    py::tuple out(6);
    for (int i = 0; i < 6; ++i) {
        if (price[i] == Price::infinity)
            out[i] = py::float_(std::numeric_limits<double>::infinity());
        else
            out[i] = py::int_(price[i]);
    }
    return out;
}

struct LoadedPair {
    Lts lts;
    StateId lhs;
    StateId rhs;
};

LoadedPair load_pair(const std::string& definitions, const std::string& lhs,
                     const std::string& rhs) {
    ProcessDefinitions defs = parse(definitions);
    Lts lts = derive_lts(defs, {lhs, rhs});
    StateId l = *lts.root(lhs);
    StateId r = *lts.root(rhs);
    return LoadedPair{std::move(lts), l, r};
}

py::dict py_compare(const std::string& definitions, const std::string& lhs,
                    const std::string& rhs, bool with_s3) {
    LoadedPair pair = load_pair(definitions, lhs, rhs);
    SynthesisOptions options;
    options.with_s3 = with_s3;
    SpectroscopyResult result = spectroscope(pair.lts, pair.lhs, pair.rhs, options);
    Report report = build_report(pair.lts, lhs, rhs, result, with_s3, 0.0);
    return json_to_py(report_json(report));
}

py::tuple py_formula_price(const std::string& formula) {
    return price_tuple(standalone_price(parse_formula(formula)));
}

std::vector<std::string> py_formula_languages(const std::string& formula,
                                              bool with_s3) {
    Formula f = parse_formula(formula);
    std::vector<std::string> out;
    for (Notion x : notion_set(with_s3))
        if (in_language(f, x)) out.push_back(notion_label(x));
    return out;
}

bool py_satisfies(const std::string& definitions, const std::string& process,
                  const std::string& formula) {
    ProcessDefinitions defs = parse(definitions);
    Lts lts = derive_lts(defs, {process});
    return satisfies(lts, *lts.root(process), parse_formula(formula));
}

py::dict py_verify(const std::string& definitions, const std::string& lhs,
                   const std::string& rhs, const std::vector<long long>& cap,
                   py::object max_conjuncts) {
    if (cap.size() != 6)
        throw py::value_error("cap needs exactly six components");
    for (long long c : cap)
        if (c < 0) throw py::value_error("cap components must be non-negative");

    LoadedPair pair = load_pair(definitions, lhs, rhs);
    EnumerationBudget budget;
    budget.cap = Price(cap[0], cap[1], cap[2], cap[3], cap[4], cap[5]);
    budget.max_conjuncts = max_conjuncts.is_none()
                               ? pair.lts.state_count()
                               : max_conjuncts.cast<std::size_t>();

    auto oracle = brute_force_front(pair.lts, pair.lhs, pair.rhs, budget);
    SpectroscopyResult result = spectroscope(pair.lts, pair.lhs, pair.rhs);

    py::list oracle_front, engine_front;
    for (const auto& [price, witness] : oracle)
        oracle_front.append(
            py::make_tuple(price_tuple(price), witness.to_string()));
    bool match = true;
    std::size_t matched = 0;
    for (const auto& [price, witness] : result.forward.front) {
        if (!price.leq(budget.cap)) continue;
        engine_front.append(
            py::make_tuple(price_tuple(price), witness.to_string()));
        match = match && matched < oracle.size() && oracle[matched].first == price;
        ++matched;
    }
    match = match && matched == oracle.size();

    py::dict out;
    out["oracle_front"] = oracle_front;
    out["engine_front"] = engine_front;
    out["match"] = match;
    return out;
}

py::dict py_budgets(bool with_s3) {
    py::dict out;
    for (Notion x : notion_set(with_s3))
        out[notion_label(x)] = price_tuple(budget(x));
    return out;
}

}  // namespace

PYBIND11_MODULE(_spectro, m) {
    m.doc() =
        "Spectroscopy of behavioral equivalences: minimal-price "
        "distinguishing formulas for finite-state processes";

    m.def("compare", &py_compare, py::arg("definitions"), py::arg("lhs"),
          py::arg("rhs"), py::arg("with_s3") = false,
          "Compare two defined processes; returns the full report as a dict.");
    m.def("formula_price", &py_formula_price, py::arg("formula"),
          "Standalone expressiveness price of a formula, as a 6-tuple.");
    m.def("formula_languages", &py_formula_languages, py::arg("formula"),
          py::arg("with_s3") = false,
          "Notion labels whose observation language contains the formula.");
    m.def("satisfies", &py_satisfies, py::arg("definitions"),
          py::arg("process"), py::arg("formula"),
          "Truth of a formula at a defined process.");
    m.def("verify", &py_verify, py::arg("definitions"), py::arg("lhs"),
          py::arg("rhs"), py::arg("cap"), py::arg("max_conjuncts") = py::none(),
          "Cross-check the engine front against the brute-force search.");
    m.def("budgets", &py_budgets, py::arg("with_s3") = false,
          "Expressiveness price bound per notion label.");
}
