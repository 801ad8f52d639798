#include "spectro/cli.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "spectro/oracle.hpp"
#include "spectro/report.hpp"
#include "spectro/synthesis.hpp"

namespace spectro {

namespace {

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw InputError("cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

Price parse_cap(const std::string& text) {
    std::vector<Price::Component> parts;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
        std::size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(item, &used);
        } catch (const std::exception&) {
            throw InputError("cap components must be integers: '" + item + "'");
        }
        if (used != item.size())
            throw InputError("cap components must be integers: '" + item + "'");
        if (value < 0) throw InputError("cap components must be non-negative");
        parts.push_back(static_cast<Price::Component>(value));
    }
    if (parts.size() != 6) throw InputError("cap needs exactly six components");
    return Price(parts[0], parts[1], parts[2], parts[3], parts[4], parts[5]);
}

std::optional<Price> cap_from_env() {
    const char* env = std::getenv("SPECTRO_CAP");
    if (!env || !*env) return std::nullopt;
    return parse_cap(env);
}

struct Inputs {
    Lts lts;
    StateId lhs;
    StateId rhs;
};

Inputs load(const std::string& file, const std::string& lhs,
            const std::string& rhs) {
    ProcessDefinitions defs = parse(read_file(file));
    for (const std::string& name : {lhs, rhs})
        if (!defs.contains(name))
            throw InputError("process '" + name + "' is not defined in " + file);
    Lts lts = derive_lts(defs, {lhs, rhs});
    StateId l = *lts.root(lhs);
    StateId r = *lts.root(rhs);
    return Inputs{std::move(lts), l, r};
}

int cmd_compare(const std::string& file, const std::string& lhs,
                const std::string& rhs, const std::string& format, bool with_s3,
                std::optional<Price> cap, bool quiet, std::ostream& out) {
    Inputs inputs = load(file, lhs, rhs);

    SynthesisOptions options;
    options.with_s3 = with_s3;
    options.cap = cap ? cap : cap_from_env();

    auto start = std::chrono::steady_clock::now();
    SpectroscopyResult result =
        spectroscope(inputs.lts, inputs.lhs, inputs.rhs, options);
    auto elapsed = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();

    Report report = build_report(inputs.lts, lhs, rhs, result, with_s3, elapsed);
    if (!quiet) {
        if (format == "json")
            out << report_json(report).dump(2) << "\n";
        else
            out << report_text(report);
        if (result.cap_filtered > 0)
            out << "note: safety cap dropped " << result.cap_filtered
                << " formulas; rerun with a larger --cap\n";
    }
    return report.bisimilar ? exit_bisimilar : exit_distinguished;
}

int cmd_game_dump(const std::string& file, const std::string& lhs,
                  const std::string& rhs, const std::string& dump_format,
                  bool annotate, std::ostream& out) {
    Inputs inputs = load(file, lhs, rhs);
    SpectroscopyGame game =
        build_game(inputs.lts, inputs.lhs, StateSet{inputs.rhs});
    WinningRegion region = compute_winning_region(game.game());

    // Annotations: the per-position formula sets of the fixed point, as far
    // as they exist (the initial position must be attacker-won).
    FormulaSetMap strats;
    if (annotate && region.attacker_wins(game.initial())) {
        StrategyGraph graph = winning_strategy_graph(game, region, game.initial());
        std::size_t filtered = 0;
        auto n = static_cast<Price::Component>(inputs.lts.state_count());
        strats = solve_formulas(graph, Price(n, n, n, n, n, n), filtered);
    }

    GameDumpLabels labels = game.dump_labels(inputs.lts);
    if (annotate) {
        auto base = labels.position;
        labels.position = [&game, &strats, base](int id) {
            std::string text = base(id);
            if (id < static_cast<int>(strats.size()) && strats[id].has_value()) {
                text += " | {";
                const FormulaSet& set = *strats[id];
                for (std::size_t i = 0; i < set.size(); ++i) {
                    if (i) text += ", ";
                    text += set[i].to_string();
                }
                text += '}';
            }
            return text;
        };
    }

    if (dump_format == "tsv")
        out << dump_tsv(game.game(), labels);
    else
        out << dump_dot(game.game(), labels, &region);
    return 0;
}

int cmd_verify(const std::string& file, const std::string& lhs,
               const std::string& rhs, const Price& cap,
               std::optional<std::size_t> max_conjuncts, bool quiet,
               std::ostream& out) {
    Inputs inputs = load(file, lhs, rhs);

    EnumerationBudget budget;
    budget.cap = cap;
    budget.max_conjuncts = max_conjuncts.value_or(inputs.lts.state_count());

    auto oracle_front = brute_force_front(inputs.lts, inputs.lhs, inputs.rhs, budget);

    SpectroscopyResult result = spectroscope(inputs.lts, inputs.lhs, inputs.rhs);
    std::vector<std::pair<Price, Formula>> engine_front;
    for (const auto& entry : result.forward.front)
        if (entry.first.leq(cap)) engine_front.push_back(entry);

    bool match = oracle_front.size() == engine_front.size();
    for (std::size_t i = 0; match && i < oracle_front.size(); ++i)
        match = oracle_front[i].first == engine_front[i].first;

    if (!quiet) {
        out << "oracle front (cap " << cap.to_string() << "):\n";
        for (const auto& [price, witness] : oracle_front)
            out << "  " << price.to_string() << "  " << witness.to_string() << "\n";
        out << "engine front (restricted to cap):\n";
        for (const auto& [price, witness] : engine_front)
            out << "  " << price.to_string() << "  " << witness.to_string() << "\n";
    }
    out << (match ? "MATCH" : "MISMATCH") << "\n";
    return match ? 0 : 1;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"Behavioral-equivalence spectroscopy for finite-state processes"};
    app.require_subcommand(1);

    std::string file, lhs, rhs;
    std::string format = "text";
    std::string dump_format = "dot";
    std::string cap_text;
    bool with_s3 = false;
    bool quiet = false;
    bool annotate = false;
    std::optional<std::size_t> max_conjuncts;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("file", file, "process definition file")->required();
        cmd->add_option("P", lhs, "left process name")->required();
        cmd->add_option("Q", rhs, "right process name")->required();
    };

    CLI::App* compare = app.add_subcommand(
        "compare", "minimal-price distinguishing formulas and verdicts");
    add_common(compare);
    compare->add_option("--format", format, "text|json")
        ->check(CLI::IsMember({"text", "json"}));
    compare->add_option("--cap", cap_text,
                        "six comma-separated per-dimension price caps");
    compare->add_flag("--with-s3", with_s3, "include 3-nested simulation");
    compare->add_flag("--quiet", quiet, "suppress output, use the exit code");

    CLI::App* dump = app.add_subcommand(
        "game-dump", "emit the reachable spectroscopy game");
    add_common(dump);
    dump->add_option("--dump", dump_format, "dot|tsv")
        ->check(CLI::IsMember({"dot", "tsv"}));
    dump->add_flag("--annotate", annotate,
                   "attach per-position formula sets");

    CLI::App* verify = app.add_subcommand(
        "verify", "cross-check against the brute-force search");
    add_common(verify);
    verify->add_option("--cap", cap_text,
                       "six comma-separated per-dimension price caps")
        ->capture_default_str();
    verify->add_option("--max-conjuncts", max_conjuncts,
                       "conjuncts per conjunction in the search");
    verify->add_flag("--quiet", quiet, "print only MATCH/MISMATCH");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return exit_input_error;
    }

    try {
        if (compare->parsed()) {
            std::optional<Price> cap;
            if (!cap_text.empty()) cap = parse_cap(cap_text);
            return cmd_compare(file, lhs, rhs, format, with_s3, cap, quiet, out);
        }
        if (dump->parsed())
            return cmd_game_dump(file, lhs, rhs, dump_format, annotate, out);
        if (verify->parsed()) {
            Price cap = cap_text.empty()
                            ? cap_from_env().value_or(Price(3, 2, 2, 2, 2, 2))
                            : parse_cap(cap_text);
            return cmd_verify(file, lhs, rhs, cap, max_conjuncts, quiet, out);
        }
    } catch (const InputError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
    return exit_input_error;
}

}  // namespace spectro
