#include "cli.hpp"

#include "crnkit/concord.hpp"
#include "crnkit/decomp.hpp"
#include "crnkit/fixtures.hpp"
#include "crnkit/makin.hpp"
#include "crnkit/scenarios.hpp"
#include "crnkit/structure.hpp"
#include "crnkit/transform.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>

namespace crnkit::cli {

namespace {

using Json = nlohmann::ordered_json;

struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Network load(const std::string& source) {
    constexpr std::string_view prefix = "fixture:";
    if (source.starts_with(prefix)) {
        return fixture(std::string_view(source).substr(prefix.size()));
    }
    std::ifstream in(source);
    if (!in) {
        throw InputError("cannot read " + source);
    }
    std::ostringstream text;
    text << in.rdbuf();
    try {
        return parse_network(text.str());
    } catch (const ParseError& e) {
        throw InputError(source + ": " + e.what());
    }
}

std::string label_of(const Reaction& r) {
    return r.label.empty() ? "(" + r.to_string() + ")" : r.label;
}

std::string yes_no(bool b) {
    return b ? "yes" : "no";
}

std::string sci(double v) {
    std::ostringstream s;
    s << std::scientific << std::setprecision(2) << v;
    return s.str();
}

// Left-aligned columns separated by two spaces.
class Table {
public:
    explicit Table(std::string indent = "") : indent_(std::move(indent)) {}
    void add(std::vector<std::string> row) { rows_.push_back(std::move(row)); }
    void print(std::ostream& out) const {
        std::vector<std::size_t> width;
        for (const auto& row : rows_) {
            width.resize(std::max(width.size(), row.size()), 0);
            for (std::size_t c = 0; c < row.size(); ++c) {
                width[c] = std::max(width[c], row[c].size());
            }
        }
        for (const auto& row : rows_) {
            std::string line = indent_;
            for (std::size_t c = 0; c < row.size(); ++c) {
                line += row[c];
                if (c + 1 < row.size()) {
                    line += std::string(width[c] - row[c].size() + 2, ' ');
                }
            }
            out << line << '\n';
        }
    }

private:
    std::string indent_;
    std::vector<std::vector<std::string>> rows_;
};

struct NumberRow {
    const char* name;
    const char* symbol;
    const char* key;
    long (*get)(const NetworkNumbers&);
};

const std::vector<NumberRow>& number_rows() {
    static const std::vector<NumberRow> rows = {
        {"species", "m", "species", [](const NetworkNumbers& k) { return static_cast<long>(k.m); }},
        {"complexes", "n", "complexes", [](const NetworkNumbers& k) { return static_cast<long>(k.n); }},
        {"reactant complexes", "n_r", "reactantComplexes",
         [](const NetworkNumbers& k) { return static_cast<long>(k.n_r); }},
        {"reversible reactions", "r_rev", "reversibleReactions",
         [](const NetworkNumbers& k) { return static_cast<long>(k.r_rev); }},
        {"irreversible reactions", "r_irrev", "irreversibleReactions",
         [](const NetworkNumbers& k) { return static_cast<long>(k.r_irrev); }},
        {"reactions", "r", "reactions", [](const NetworkNumbers& k) { return static_cast<long>(k.r); }},
        {"linkage classes", "l", "linkageClasses", [](const NetworkNumbers& k) { return static_cast<long>(k.l); }},
        {"strong linkage classes", "sl", "strongLinkageClasses",
         [](const NetworkNumbers& k) { return static_cast<long>(k.sl); }},
        {"terminal strong linkage classes", "t", "terminalStrongLinkageClasses",
         [](const NetworkNumbers& k) { return static_cast<long>(k.t); }},
        {"rank", "s", "rank", [](const NetworkNumbers& k) { return static_cast<long>(k.s); }},
        {"reactant rank", "q", "reactantRank", [](const NetworkNumbers& k) { return static_cast<long>(k.q); }},
        {"deficiency", "delta", "deficiency", [](const NetworkNumbers& k) { return k.delta; }},
        {"reactant deficiency", "delta_p", "reactantDeficiency", [](const NetworkNumbers& k) { return k.delta_p; }},
    };
    return rows;
}

Json numbers_json(const NetworkNumbers& k) {
    Json j = Json::object();
    for (const auto& row : number_rows()) {
        j[row.key] = row.get(k);
    }
    return j;
}

std::vector<std::pair<std::string, bool>> flag_rows(const StructuralFlags& f) {
    return {{"branching", f.branching},
            {"closed", f.closed},
            {"cycleTerminal", f.cycleTerminal},
            {"highReactantDiversity", f.highReactantDiversity},
            {"maximallyClosed", f.maximallyClosed},
            {"pointTerminal", f.pointTerminal},
            {"tMinimal", f.tMinimal},
            {"weaklyReversible", f.weaklyReversible}};
}

std::string flag_title(const std::string& key) {
    std::string out;
    for (char c : key) {
        if (std::isupper(static_cast<unsigned char>(c))) {
            out += ' ';
            out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
        } else {
            out += c;
        }
    }
    return out;
}

Json reaction_json(const Reaction& r) {
    return Json{{"label", r.label}, {"reaction", r.to_string()}};
}

Json reactions_json(const std::vector<Reaction>& rs) {
    Json j = Json::array();
    for (const auto& r : rs) {
        j.push_back(reaction_json(r));
    }
    return j;
}

void print_reactions(std::ostream& out, const std::vector<Reaction>& rs, const std::string& indent) {
    for (const auto& r : rs) {
        out << indent << (r.label.empty() ? "" : r.label + ": ") << r.to_string() << '\n';
    }
}

std::vector<std::string> rational_strings(const RationalVector& v) {
    std::vector<std::string> out;
    for (const auto& x : v) {
        out.push_back(x.str());
    }
    return out;
}

void emit(std::ostream& out, const Json& j) {
    out << j.dump(2) << '\n';
}

// analyze

int cmd_analyze(const std::string& input, bool json, std::ostream& out) {
    const Network net = load(input);
    const NetworkNumbers k = network_numbers(net);
    const StructuralFlags f = structural_flags(k);
    const bool coincides = kinetic_subspace_coincides(net) == Coincidence::Yes;
    const DeficiencyZeroReport dz = deficiency_zero_report(net);
    if (json) {
        Json flags = Json::object();
        for (const auto& [key, value] : flag_rows(f)) {
            flags[key] = value;
        }
        emit(out, Json{{"command", "analyze"},
                       {"input", input},
                       {"numbers", numbers_json(k)},
                       {"flags", flags},
                       {"kineticSubspaceCoincides", coincides ? "yes" : "undetermined"},
                       {"deficiencyZero",
                        {{"applies", dz.applies},
                         {"reversible", dz.reversible},
                         {"weaklyReversible", dz.weaklyReversible},
                         {"deficiency", dz.delta}}}});
        return exit_ok;
    }
    out << "input  " << input << "\n\nnetwork numbers\n";
    Table numbers("  ");
    for (const auto& row : number_rows()) {
        numbers.add({row.name, row.symbol, std::to_string(row.get(k))});
    }
    numbers.print(out);
    out << "\nstructural properties\n";
    Table flags("  ");
    for (const auto& [key, value] : flag_rows(f)) {
        flags.add({flag_title(key), yes_no(value)});
    }
    flags.print(out);
    out << '\n';
    Table tail;
    tail.add({"kinetic subspace coincides", coincides ? "yes" : "undetermined"});
    tail.add({"deficiency zero theorem", dz.applies ? "applies" : "does not apply"});
    tail.print(out);
    return exit_ok;
}

// fid

int cmd_fid(const std::string& input, bool json, std::ostream& out) {
    const Network net = load(input);
    const Decomposition d = fid(net);
    const std::vector<NetworkNumbers> numbers = decomposition_numbers(d);
    const bool independent = is_independent(d);
    const bool incidence = is_incidence_independent(d);
    std::size_t rank_sum = 0;
    for (std::size_t b = 1; b < numbers.size(); ++b) {
        rank_sum += numbers[b].s;
    }
    if (json) {
        Json blocks = Json::array();
        for (std::size_t b = 0; b < d.size(); ++b) {
            blocks.push_back(Json{{"labels", d.block_labels()[b]}, {"numbers", numbers_json(numbers[b + 1])}});
        }
        emit(out, Json{{"command", "fid"},
                       {"input", input},
                       {"numbers", numbers_json(numbers[0])},
                       {"blocks", blocks},
                       {"independent", independent},
                       {"incidenceIndependent", incidence},
                       {"blockRankSum", rank_sum}});
        return exit_ok;
    }
    out << "input   " << input << "\nblocks  " << d.size() << "\n\n";
    Table listing;
    for (std::size_t b = 0; b < d.size(); ++b) {
        std::string labels;
        for (std::size_t j : d.blocks()[b]) {
            labels += (labels.empty() ? "" : " ") + label_of(net.reactions()[j]);
        }
        listing.add({"N" + std::to_string(b + 1), labels});
    }
    listing.print(out);
    out << "\nnetwork numbers\n";
    Table table("  ");
    std::vector<std::string> header = {"", "", "N"};
    for (std::size_t b = 0; b < d.size(); ++b) {
        header.push_back("N" + std::to_string(b + 1));
    }
    table.add(header);
    for (const auto& row : number_rows()) {
        std::vector<std::string> cells = {row.name, row.symbol};
        for (const auto& k : numbers) {
            cells.push_back(std::to_string(row.get(k)));
        }
        table.add(cells);
    }
    table.print(out);
    out << '\n';
    Table tail;
    tail.add({"sum of block ranks", std::to_string(rank_sum)});
    tail.add({"independent", yes_no(independent)});
    tail.add({"incidence independent", yes_no(incidence)});
    tail.print(out);
    return exit_ok;
}

// concordance

std::string status_name(ConcordanceStatus s) {
    switch (s) {
        case ConcordanceStatus::Concordant:
            return "concordant";
        case ConcordanceStatus::Discordant:
            return "discordant";
        case ConcordanceStatus::Unknown:
            break;
    }
    return "unknown";
}

int cmd_concordance(const std::string& input, std::uint64_t budget, bool json, std::ostream& out) {
    const Network net = load(input);
    const ConcordanceVerdict v = check_concordance(net, budget);
    const DependenceResult dep = is_positive_dependent(net);
    const DependenceResult cons = is_conservative(net);
    const bool verified = v.witness && verify_witness(net, *v.witness);
    if (json) {
        Json j{{"command", "concordance"},
               {"input", input},
               {"verdict", status_name(v.status)},
               {"nodes", v.searchNodes},
               {"budget", budget}};
        if (v.witness) {
            Json alpha = Json::array();
            for (std::size_t r = 0; r < net.reaction_count(); ++r) {
                alpha.push_back(Json{{"label", net.reactions()[r].label}, {"value", v.witness->alpha[r].str()}});
            }
            Json sigma = Json::array();
            for (std::size_t i = 0; i < net.species_count(); ++i) {
                sigma.push_back(Json{{"species", net.species()[i]}, {"value", v.witness->sigma[i].str()}});
            }
            j["witness"] = Json{{"alpha", alpha}, {"sigma", sigma}, {"verified", verified}};
        }
        j["positiveDependent"] = Json{{"holds", dep.holds}, {"certificate", rational_strings(dep.certificate)}};
        j["conservative"] = Json{{"holds", cons.holds}, {"certificate", rational_strings(cons.certificate)}};
        emit(out, j);
    } else {
        Table head;
        head.add({"input", input});
        head.add({"verdict", status_name(v.status)});
        head.add({"nodes", std::to_string(v.searchNodes)});
        head.add({"positive dependent", yes_no(dep.holds)});
        head.add({"conservative", yes_no(cons.holds)});
        head.print(out);
        if (v.witness) {
            out << "\nwitness (" << (verified ? "verified" : "NOT verified") << ")\n  alpha\n";
            Table alpha("    ");
            for (std::size_t r = 0; r < net.reaction_count(); ++r) {
                alpha.add({label_of(net.reactions()[r]), v.witness->alpha[r].str()});
            }
            alpha.print(out);
            out << "  sigma\n";
            Table sigma("    ");
            for (std::size_t i = 0; i < net.species_count(); ++i) {
                sigma.add({net.species()[i], v.witness->sigma[i].str()});
            }
            sigma.print(out);
        }
    }
    return v.status == ConcordanceStatus::Unknown ? exit_unknown : exit_ok;
}

// compare

int compare_csen(const std::string& a_name, const Network& a, const std::string& b_name, const Network& b, bool json,
                 std::ostream& out) {
    const CsenReport rep = csen(a, b);
    if (json) {
        emit(out, Json{{"command", "compare"},
                       {"mode", "csen"},
                       {"inputs", {a_name, b_name}},
                       {"commonSpecies", rep.commonSpecies},
                       {"common", reactions_json(rep.commonOriginal)},
                       {"embeddingDerived", reactions_json(rep.embeddingDerived)},
                       {"unique1", reactions_json(rep.unique1)},
                       {"unique2", reactions_json(rep.unique2)}});
        return exit_ok;
    }
    std::string species;
    for (const auto& s : rep.commonSpecies) {
        species += (species.empty() ? "" : " ") + s;
    }
    out << "common species  " << species << "\n\ncommon reactions\n";
    print_reactions(out, rep.commonOriginal, "  ");
    out << "\nembedding-derived common reactions\n";
    print_reactions(out, rep.embeddingDerived, "  ");
    out << "\nunique to " << a_name << '\n';
    print_reactions(out, rep.unique1, "  ");
    out << "\nunique to " << b_name << '\n';
    print_reactions(out, rep.unique2, "  ");
    return exit_ok;
}

Json placement_json(const CorePlacement& p) {
    std::vector<std::string> blocks;
    for (std::size_t b : p.blocks) {
        blocks.push_back("N" + std::to_string(b + 1));
    }
    return Json{{"blocks", blocks},
                {"unionRank", p.unionRank},
                {"complementRank", p.complementRank},
                {"independent", p.independent}};
}

void print_placement(std::ostream& out, const std::string& name, const CorePlacement& p) {
    std::string blocks;
    for (std::size_t b : p.blocks) {
        blocks += (blocks.empty() ? "" : " ") + ("N" + std::to_string(b + 1));
    }
    out << '\n' << name << '\n';
    Table t("  ");
    t.add({"FID blocks", blocks});
    t.add({"union rank", std::to_string(p.unionRank)});
    t.add({"complement rank", std::to_string(p.complementRank)});
    t.add({"independent", yes_no(p.independent)});
    t.print(out);
}

int compare_core(const std::string& a_name, const Network& a, const std::string& b_name, const Network& b, bool json,
                 std::ostream& out) {
    const CoreReport rep = core(a, b);
    if (json) {
        emit(out, Json{{"command", "compare"},
                       {"mode", "core"},
                       {"inputs", {a_name, b_name}},
                       {"core", reactions_json(rep.core.reactions())},
                       {"reversible", rep.reversible},
                       {"deficiency", rep.deficiency},
                       {"rank", rep.rank},
                       {"placement1", placement_json(rep.placement1)},
                       {"placement2", placement_json(rep.placement2)}});
        return exit_ok;
    }
    out << "core  " << rep.core.reaction_count() << " reactions\n";
    print_reactions(out, rep.core.reactions(), "  ");
    out << '\n';
    Table t;
    t.add({"reversible", yes_no(rep.reversible)});
    t.add({"deficiency", std::to_string(rep.deficiency)});
    t.add({"rank", std::to_string(rep.rank)});
    t.print(out);
    print_placement(out, a_name, rep.placement1);
    print_placement(out, b_name, rep.placement2);
    return exit_ok;
}

int compare_m3cr(const std::string& a_name, const Network& a, const std::string& b_name, const Network& b,
                 std::uint64_t budget, bool json, std::ostream& out) {
    const std::vector<Reaction> mandatory = common_reactions(a, b);
    if (mandatory.empty()) {
        throw NetworkError("m3cr: the networks share no reactions");
    }
    const M3crResult ra = m3cr(a, mandatory, budget);
    const M3crResult rb = m3cr(b, mandatory, budget);
    auto part_json = [](const std::string& name, const M3crResult& r) {
        Json j{{"input", name},
               {"container", reactions_json(r.container.reactions())},
               {"discordanceSet", reactions_json(r.discordanceSet)},
               {"maximalityVerified", r.maximalityVerified},
               {"orderIndependent", r.orderIndependent.value_or(false)}};
        return j;
    };
    if (json) {
        emit(out, Json{{"command", "compare"},
                       {"mode", "m3cr"},
                       {"inputs", {a_name, b_name}},
                       {"mandatory", reactions_json(mandatory)},
                       {"containers", {part_json(a_name, ra), part_json(b_name, rb)}}});
        return exit_ok;
    }
    out << "mandatory  " << mandatory.size() << " common reactions\n";
    for (const auto* part : {&ra, &rb}) {
        const std::string& name = part == &ra ? a_name : b_name;
        const Network& parent = part == &ra ? a : b;
        out << '\n' << name << "\n  container  " << part->container.reaction_count() << " reactions\n";
        print_reactions(out, part->container.reactions(), "    ");
        out << "  discordance set\n";
        print_reactions(out, part->discordanceSet, "    ");
        Table t("  ");
        t.add({"maximal", part->maximalityVerified ? "yes" : "not verified"});
        t.add({"order independent", yes_no(part->orderIndependent.value_or(false))});
        if (part->alternateContainer && !part->orderIndependent.value_or(true)) {
            std::string excluded;
            for (const auto& r : difference(parent, *part->alternateContainer)) {
                excluded += (excluded.empty() ? "" : " ") + label_of(r);
            }
            t.add({"reverse order excludes", excluded});
        }
        t.print(out);
    }
    return exit_ok;
}

int cmd_compare(const std::string& mode, const std::string& a_name, const std::string& b_name, std::uint64_t budget,
                bool json, std::ostream& out) {
    const Network a = load(a_name);
    const Network b = load(b_name);
    if (mode == "csen") {
        return compare_csen(a_name, a, b_name, b, json, out);
    }
    if (mode == "core") {
        return compare_core(a_name, a, b_name, b, json, out);
    }
    return compare_m3cr(a_name, a, b_name, b, budget, json, out);
}

// equilibria

int cmd_equilibria(const std::string& model, std::size_t samples, std::uint64_t seed, bool json, std::ostream& out) {
    if (samples < 2) {
        throw InputError("equilibria needs at least 2 samples");
    }
    const ParametrizationFixture& pf = [&]() -> const ParametrizationFixture& {
        try {
            return parametrization_fixture(model);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }();
    const Network net = fixture(pf.network);
    const Decomposition d = fid(net);
    std::mt19937_64 rng(seed);
    std::vector<double> residuals;
    double block_max = 0.0;
    for (std::size_t i = 0; i < samples; ++i) {
        const RateAssignment k = random_rates(net, rng);
        const Concentrations x = pf.evaluate(k, random_free_parameters(pf, rng));
        residuals.push_back(equilibrium_residual(net, k, x));
        for (std::size_t b = 0; b < d.size(); ++b) {
            block_max = std::max(block_max, equilibrium_residual(d.block_network(b), k, x));
        }
    }
    std::vector<double> sorted = residuals;
    std::sort(sorted.begin(), sorted.end());
    const double max = sorted.back();
    const double median = sorted.size() % 2 == 1 ? sorted[sorted.size() / 2]
                                                 : (sorted[sorted.size() / 2 - 1] + sorted[sorted.size() / 2]) / 2;
    const RateAssignment k = random_rates(net, rng);
    const std::vector<AcrVerdict> acr = acr_scan(model, k, samples, seed);
    std::vector<std::string> constant;
    for (const auto& v : acr) {
        if (v.constant) {
            constant.push_back(v.species);
        }
    }
    if (json) {
        Json table = Json::array();
        for (const auto& v : acr) {
            table.push_back(
                Json{{"species", v.species}, {"constant", v.constant}, {"spread", v.spread}, {"value", v.value}});
        }
        emit(out, Json{{"command", "equilibria"},
                       {"model", model},
                       {"network", "fixture:" + pf.network},
                       {"samples", samples},
                       {"seed", seed},
                       {"residual", {{"max", max}, {"median", median}, {"blockMax", block_max}}},
                       {"acr", constant},
                       {"acrTable", table}});
        return exit_ok;
    }
    Table head;
    head.add({"model", model});
    head.add({"network", "fixture:" + pf.network});
    head.add({"samples", std::to_string(samples)});
    head.add({"seed", std::to_string(seed)});
    head.add({"residual max", sci(max)});
    head.add({"residual median", sci(median)});
    head.add({"FID block residual max", sci(block_max)});
    head.print(out);
    std::string acr_list;
    for (const auto& s : constant) {
        acr_list += (acr_list.empty() ? "" : " ") + s;
    }
    out << "\nACR  " << (acr_list.empty() ? "none" : acr_list) << '\n';
    Table table("  ");
    for (const auto& v : acr) {
        std::ostringstream value;
        value << std::setprecision(6) << v.value;
        table.add({v.species, v.constant ? "constant" : "varies", "spread " + sci(v.spread), "mean " + value.str()});
    }
    table.print(out);
    return exit_ok;
}

// scenario

int cmd_scenario(const std::string& name, std::size_t points, std::uint64_t seed, bool json, std::ostream& out) {
    const auto names = scenario_names();
    if (std::find(names.begin(), names.end(), name) == names.end()) {
        throw InputError("unknown scenario: " + name);
    }
    const ScenarioReport rep = run_scenario(name, points, seed);
    if (json) {
        emit(out, Json{{"command", "scenario"},
                       {"scenario", name},
                       {"steps", rep.steps},
                       {"source", reactions_json(rep.source.reactions())},
                       {"target", reactions_json(rep.target.reactions())},
                       {"massAction", rep.target.mass_action_count()},
                       {"sourceRank", rep.sourceRank},
                       {"targetRank", rep.targetRank},
                       {"points", points},
                       {"equivalent", rep.equivalent},
                       {"matchesExpected", rep.matchesExpected}});
        return exit_ok;
    }
    out << "scenario  " << name << "\n\nsteps\n";
    for (const auto& s : rep.steps) {
        out << "  " << s << '\n';
    }
    out << "\ntarget\n";
    for (std::size_t j = 0; j < rep.target.size(); ++j) {
        const Reaction& r = rep.target.reactions()[j];
        out << "  " << label_of(r) << ": " << r.to_string() << (rep.target.is_mass_action(j) ? "" : "  (non mass action)")
            << '\n';
    }
    out << '\n';
    Table t;
    t.add({"source", std::to_string(rep.source.size()) + " reactions, rank " + std::to_string(rep.sourceRank)});
    t.add({"target", std::to_string(rep.target.size()) + " reactions, rank " + std::to_string(rep.targetRank) + ", " +
                         std::to_string(rep.target.mass_action_count()) + " mass action"});
    t.add({"right-hand sides", (rep.equivalent ? "identical at " : "differ within ") + std::to_string(points) + " points"});
    t.add({"matches expected network", yes_no(rep.matchesExpected)});
    t.print(out);
    return exit_ok;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Chemical reaction network analysis", "crnkit"};
    app.require_subcommand(1);

    bool json = false;
    std::uint64_t budget = 0;
    std::string input;
    std::string second;
    std::string mode;
    std::size_t samples = 100;
    std::size_t points = 200;
    std::uint64_t seed = 1;
    const char* input_help = "fixture:<name> or path to a .crn file";

    auto* analyze = app.add_subcommand("analyze", "network numbers and structural properties");
    analyze->add_option("input", input, input_help)->required();
    analyze->add_flag("--json", json, "JSON output");

    auto* decompose = app.add_subcommand("fid", "finest independent decomposition");
    decompose->add_option("input", input, input_help)->required();
    decompose->add_flag("--json", json, "JSON output");

    auto* concordance = app.add_subcommand("concordance", "concordance verdict and witness");
    concordance->add_option("input", input, input_help)->required();
    concordance->add_option("--budget", budget, "search node budget");
    concordance->add_flag("--json", json, "JSON output");

    auto* compare = app.add_subcommand("compare", "compare two networks");
    compare->add_option("mode", mode, "csen, core or m3cr")
        ->required()
        ->check(CLI::IsMember({"csen", "core", "m3cr"}));
    compare->add_option("first", input, input_help)->required();
    compare->add_option("second", second, input_help)->required();
    compare->add_option("--budget", budget, "search node budget per concordance check");
    compare->add_flag("--json", json, "JSON output");

    auto* equilibria = app.add_subcommand("equilibria", "check equilibria parametrizations and ACR");
    equilibria->add_option("model", input, "schmitz, fal or maclean")->required();
    equilibria->add_option("--samples", samples, "number of random draws");
    equilibria->add_option("--seed", seed, "random seed");
    equilibria->add_flag("--json", json, "JSON output");

    auto* scenario = app.add_subcommand("scenario", "replay a network transformation");
    scenario->add_option("name", input, "lee-inflow or schmitz-gmak")->required();
    scenario->add_option("--points", points, "number of random evaluation points");
    scenario->add_option("--seed", seed, "random seed");
    scenario->add_flag("--json", json, "JSON output");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err) == 0 ? exit_ok : exit_input;
    }
    try {
        if (budget == 0) {
            budget = node_budget_from_env();
        }
        if (*analyze) {
            return cmd_analyze(input, json, out);
        }
        if (*decompose) {
            return cmd_fid(input, json, out);
        }
        if (*concordance) {
            return cmd_concordance(input, budget, json, out);
        }
        if (*compare) {
            return cmd_compare(mode, input, second, budget, json, out);
        }
        if (*equilibria) {
            return cmd_equilibria(input, samples, seed, json, out);
        }
        return cmd_scenario(input, points, seed, json, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
    } catch (const ParseError& e) {
        err << "error: " << e.what() << '\n';
    }
    return exit_input;
}

}  // namespace crnkit::cli
