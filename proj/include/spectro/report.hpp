#ifndef SPECTRO_REPORT_HPP
#define SPECTRO_REPORT_HPP

#include <string>
#include <vector>

#include <json.hpp>

#include "spectro/synthesis.hpp"

namespace spectro {

// Comparison report as rendered by the CLI. Only Pareto-front formulas are
// listed; each entry carries every notion whose budget covers its price.
struct Report {
    struct Entry {
        std::string formula;
        Price price;
        std::vector<Notion> languages;
    };
    struct Direction {
        std::string from;
        std::string to;
        std::vector<Entry> formulas;
        Verdict verdict;
    };

    std::string lhs;
    std::string rhs;
    bool bisimilar = false;
    std::size_t bisimulation_size = 0;
    Direction forward;
    Direction backward;
    std::vector<Notion> equivalences_holding;  // preordered both ways
    double timing_ms = 0.0;
};

// Builds the report and re-verifies every listed formula against the LTS
// (throws std::logic_error if a formula fails to distinguish, which would
// indicate an engine bug).
Report build_report(const Lts& lts, const std::string& lhs_name,
                    const std::string& rhs_name, const SpectroscopyResult& result,
                    bool with_s3, double timing_ms);

std::string report_text(const Report& report);
nlohmann::json report_json(const Report& report);

}  // namespace spectro

#endif
