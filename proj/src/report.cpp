#include "spectro/report.hpp"

#include <algorithm>
#include <stdexcept>

namespace spectro {

namespace {

std::vector<Notion> languages_of(const Price& price, bool with_s3) {
    std::vector<Notion> result;
    for (Notion x : notion_set(with_s3))
        if (price.leq(budget(x))) result.push_back(x);
    return result;
}

Report::Direction build_direction(const Lts& lts, const DirectionResult& dir,
                                  bool with_s3) {
    Report::Direction out;
    out.from = lts.state_name(dir.lhs);
    out.to = lts.state_name(dir.rhs);
    for (const auto& [price, formula] : dir.front) {
        if (!distinguishes(lts, formula, dir.lhs, StateSet{dir.rhs}))
            throw std::logic_error("reported formula fails re-verification: " +
                                   formula.to_string());
        out.formulas.push_back(
            Report::Entry{formula.to_string(), price, languages_of(price, with_s3)});
    }
    out.verdict = dir.verdict;
    return out;
}

std::string notion_list(const std::vector<Notion>& notions, bool long_names) {
    std::string out;
    for (std::size_t i = 0; i < notions.size(); ++i) {
        if (i) out += ", ";
        out += notion_label(notions[i]);
        if (long_names) {
            out += " (";
            out += notion_long_name(notions[i]);
            out += ')';
        }
    }
    return out.empty() ? "none" : out;
}

}  // namespace

Report build_report(const Lts& lts, const std::string& lhs_name,
                    const std::string& rhs_name, const SpectroscopyResult& result,
                    bool with_s3, double timing_ms) {
    Report report;
    report.lhs = lhs_name;
    report.rhs = rhs_name;
    report.bisimilar = result.bisimilar;
    report.bisimulation_size = result.bisimulation.size();
    report.timing_ms = timing_ms;
    report.forward = build_direction(lts, result.forward, with_s3);
    report.backward = build_direction(lts, result.backward, with_s3);

    for (Notion x : result.forward.verdict.preordered) {
        const auto& other = result.backward.verdict.preordered;
        if (std::find(other.begin(), other.end(), x) != other.end())
            report.equivalences_holding.push_back(x);
    }
    return report;
}

std::string report_text(const Report& report) {
    std::string out;
    out += "compare " + report.lhs + " vs " + report.rhs + "\n";
    if (report.bisimilar) {
        out += "  bisimilar (relation size " +
               std::to_string(report.bisimulation_size) + ")\n";
        out += "  equivalences holding: " +
               notion_list(report.equivalences_holding, false) + "\n";
        return out;
    }
    for (const Report::Direction* dir : {&report.forward, &report.backward}) {
        out += "  " + dir->from + " distinguished from " + dir->to + " by:\n";
        if (dir->formulas.empty()) out += "    (nothing; preordered)\n";
        for (const auto& entry : dir->formulas) {
            out += "    " + entry.formula + "  price " +
                   entry.price.to_string("∞") + "  in " +
                   notion_list(entry.languages, false) + "\n";
        }
        out += "    coarsest distinguishing: " +
               notion_list(dir->verdict.coarsest_distinguishing, true) + "\n";
        out += "    finest preorders: " +
               notion_list(dir->verdict.finest_preorders, true) + "\n";
    }
    out += "  equivalences holding: " +
           notion_list(report.equivalences_holding, false) + "\n";
    return out;
}

namespace {

nlohmann::json price_json(const Price& price) {
    nlohmann::json out = nlohmann::json::array();
    for (int i = 0; i < 6; ++i) {
        if (price[i] == Price::infinity)
            out.push_back("inf");
        else
            out.push_back(price[i]);
    }
    return out;
}

nlohmann::json notions_json(const std::vector<Notion>& notions) {
    nlohmann::json out = nlohmann::json::array();
    for (Notion x : notions) out.push_back(notion_label(x));
    return out;
}

nlohmann::json direction_json(const Report::Direction& dir) {
    nlohmann::json formulas = nlohmann::json::array();
    for (const auto& entry : dir.formulas)
        formulas.push_back({{"formula", entry.formula},
                            {"price", price_json(entry.price)},
                            {"languages", notions_json(entry.languages)}});
    return {{"from", dir.from}, {"to", dir.to}, {"formulas", formulas}};
}

nlohmann::json verdict_json(const Verdict& verdict) {
    return {{"distinguished", notions_json(verdict.distinguished)},
            {"preordered", notions_json(verdict.preordered)},
            {"coarsest_distinguishing",
             notions_json(verdict.coarsest_distinguishing)},
            {"finest_preorders", notions_json(verdict.finest_preorders)}};
}

}  // namespace

nlohmann::json report_json(const Report& report) {
    return {{"lhs", report.lhs},
            {"rhs", report.rhs},
            {"bisimilar", report.bisimilar},
            {"bisimulation_size", report.bisimulation_size},
            {"directions",
             nlohmann::json::array({direction_json(report.forward),
                                    direction_json(report.backward)})},
            {"verdicts",
             {{"forward", verdict_json(report.forward.verdict)},
              {"backward", verdict_json(report.backward.verdict)},
              {"equivalences_holding",
               notions_json(report.equivalences_holding)}}},
            {"timing_ms", report.timing_ms}};
}

}  // namespace spectro
