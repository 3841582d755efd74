#include "covbetti_cli/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "covbetti/atlas.hpp"
#include "covbetti/betti.hpp"
#include "covbetti/covers.hpp"
#include "covbetti/errors.hpp"
#include "covbetti/families.hpp"
#include "covbetti/graph_io.hpp"
#include "covbetti/harness.hpp"
#include "covbetti/spectrum.hpp"

namespace covbetti::cli {

namespace {

using json = nlohmann::ordered_json;

class UsageError : public Error {
public:
    using Error::Error;
};

/// Where graph-consuming commands read their input from.
struct GraphSource {
    std::string graph_path;
    std::string family;

    void add_to(CLI::App& cmd) {
        cmd.add_option("--graph", graph_path, "graph file (graph6 lines or edge list), '-' for stdin");
        cmd.add_option("--family", family, "named family, e.g. hs:5, c4, 2k2, spectrum:10,5");
    }

    [[nodiscard]] std::vector<Graph> load(std::istream& in) const {
        if (!graph_path.empty() && !family.empty()) {
            throw UsageError("give exactly one of --graph and --family");
        }
        if (!family.empty()) {
            return {build_family(parse_family(family))};
        }
        std::string text;
        if (graph_path.empty() || graph_path == "-") {
            text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
        } else {
            std::ifstream file(graph_path, std::ios::binary);
            if (!file) {
                throw UsageError("cannot open " + graph_path);
            }
            text.assign(std::istreambuf_iterator<char>(file), std::istreambuf_iterator<char>());
        }
        if (detect_format(text) == GraphFormat::edge_list) {
            return {parse_edge_list(text)};
        }
        std::vector<Graph> graphs;
        std::istringstream lines(text);
        std::string line;
        while (std::getline(lines, line)) {
            if (!line.empty() && line.back() == '\r') {
                line.pop_back();
            }
            if (!line.empty()) {
                graphs.push_back(parse_graph6(line));
            }
        }
        if (graphs.empty()) {
            throw ParseError("no graph on input", 0);
        }
        return graphs;
    }
};

int resolve_max_n(int flag) { return flag >= 0 ? flag : betti_limit_from_env(); }

json invariants_record(const Graph& g) {
    json out;
    out["graph6"] = to_graph6(g);
    out["n"] = g.order();
    out["m"] = g.size();
    const CoverReport cover = tau_max(g);
    out["tau_max"] = cover.tau_max;
    out["i"] = cover.i_min;
    out["matching"] = matching_number(g);
    out["induced_matching"] = induced_matching_number(g);
    out["chordal"] = is_chordal(g);
    out["gap_free"] = is_gap_free(g);
    out["bipartite"] = is_bipartite(g);
    out["connected"] = is_connected(g);
    out["isolated_vertices"] = isolated_vertices(g);
    out["num_minimal_covers"] = cover.num_minimal_covers;
    out["witness_cover"] = cover.witness_cover;
    out["witness_independent"] = cover.witness_independent;
    out["family"] = to_string(recognize_family(g));
    return out;
}

GraphFilter parse_filter(const std::string& text) {
    if (text == "all") {
        return GraphFilter::all;
    }
    if (text == "no-isolated") {
        return GraphFilter::no_isolated;
    }
    if (text == "connected") {
        return GraphFilter::connected;
    }
    throw UsageError("unknown filter '" + text + "'");
}

struct Options {
    GraphSource source;
    int characteristic = 2;
    std::string format;
    int max_n = -1;
    int n = -1;
    int p = -1;
    int r = -1;
    bool exhaustive = false;
    int samples = 0;
    std::optional<std::uint64_t> seed;
    std::string filter = "all";
    std::vector<std::string> construct_args;
};

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact MAX MIN vertex cover, Betti tables of edge ideals, and bound verification", "covbetti"};
    app.require_subcommand(1);
    Options opt;

    auto* invariants = app.add_subcommand("invariants", "combinatorial invariants and witnesses as JSON lines");
    opt.source.add_to(*invariants);

    auto* covers = app.add_subcommand("covers", "list every minimal vertex cover");
    opt.source.add_to(*covers);

    auto* betti = app.add_subcommand("betti", "graded Betti table of S/I(G)");
    opt.source.add_to(*betti);

    auto* dual = app.add_subcommand("dual", "Alexander dual regularity versus pd and tau_max");
    opt.source.add_to(*dual);

    for (auto* cmd : {betti, dual}) {
        cmd->add_option("--char", opt.characteristic, "field characteristic: 0 or a prime")->capture_default_str();
        cmd->add_option("--max-n", opt.max_n, "vertex cap for subset sums (default 16 or COVBETTI_BETTI_MAX_N)");
    }
    betti->add_option("--format", opt.format, "json | ascii")->check(CLI::IsMember({"json", "ascii"}));

    auto* construct = app.add_subcommand("construct", "build a named family member and print it");
    construct->add_option("spec", opt.construct_args, "kind and parameters, e.g. 'hs 5' or 'pdr 8 5 2'");
    construct->add_option("--family", opt.source.family, "family spec, e.g. hs:5");
    construct->add_option("--n", opt.n, "order for spectrum / pdr, or the parameter of a one-parameter family");
    construct->add_option("--p", opt.p, "projective dimension for spectrum / pdr");
    construct->add_option("--r", opt.r, "regularity for pdr");
    construct->add_option("--format", opt.format, "graph6 | edges")->check(CLI::IsMember({"graph6", "edges"}));

    auto* enumerate = app.add_subcommand("enumerate", "one graph6 line per isomorphism class");
    enumerate->add_option("--n", opt.n, "number of vertices (<= 9)")->required();
    enumerate->add_option("--filter", opt.filter, "all | no-isolated | connected");

    auto* verify = app.add_subcommand("verify", "theorem harnesses");
    verify->require_subcommand(1);
    auto* bound = verify->add_subcommand("bound", "tau_max >= ceil(2 sqrt(n) - 2)");
    bound->add_option("--n", opt.n, "largest order; one record per n from 2")->required();
    bound->add_flag("--exhaustive", opt.exhaustive, "all isolate-free classes (n <= 9)");
    bound->add_option("--samples", opt.samples, "random isolate-free graphs at order n");
    bound->add_option("--seed", opt.seed, "seed for sampled mode");
    auto* classification = verify->add_subcommand("classification", "equality cases at a perfect square n");
    classification->add_option("--n", opt.n, "perfect square <= 9")->required();
    auto* spectrum = verify->add_subcommand("spectrum", "reg = 1 constructions for every legal p");
    spectrum->add_option("--n", opt.n, "largest order; one record per n from 2")->required();
    spectrum->add_option("--max-n", opt.max_n, "largest order checked through Hochster's formula (default 14)");
    auto* pdr_spec = verify->add_subcommand("pdr-spec", "all (pd, reg) pairs on n vertices");
    pdr_spec->add_option("--n", opt.n, "2..8")->required();
    pdr_spec->add_option("--format", opt.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
    auto* pdr_graphs = verify->add_subcommand("pdr-graphs", "disjoint-union constructions for every legal (p, r)");
    pdr_graphs->add_option("--n", opt.n, "largest order; one record per n from 2")->required();
    auto* extremal = verify->add_subcommand("extremal", "non-chordal, non-gap-free graphs attaining the bound");
    extremal->add_option("--n", opt.n, "order, <= 16")->required();
    for (auto* cmd : {spectrum, pdr_spec, pdr_graphs}) {
        cmd->add_option("--char", opt.characteristic, "field characteristic: 0 or a prime");
    }

    std::vector<const char*> argv{"covbetti"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? kOk : kUsage;
    }

    try {
        if (invariants->parsed()) {
            for (const auto& g : opt.source.load(in)) {
                out << invariants_record(g).dump() << "\n";
            }
            return kOk;
        }
        if (covers->parsed()) {
            for (const auto& g : opt.source.load(in)) {
                json record;
                record["graph6"] = to_graph6(g);
                record["minimal_covers"] = enumerate_minimal_covers(g);
                out << record.dump() << "\n";
            }
            return kOk;
        }
        if (betti->parsed()) {
            const FieldSpec field(opt.characteristic);
            for (const auto& g : opt.source.load(in)) {
                const BettiTable table = betti_table(g, field, resolve_max_n(opt.max_n));
                out << (opt.format == "ascii" ? table.to_ascii() : table.to_json() + "\n");
            }
            return kOk;
        }
        if (dual->parsed()) {
            const FieldSpec field(opt.characteristic);
            int status = kOk;
            for (const auto& g : opt.source.load(in)) {
                const DualReport report = dual_check(g, field, resolve_max_n(opt.max_n));
                json record;
                record["graph6"] = to_graph6(g);
                record["reg_dual"] = report.reg_dual;
                record["pd"] = report.pd_primal;
                record["tau_max"] = report.tau_max;
                record["terai"] = report.terai_holds();
                record["reg_dual_ge_tau_max"] = report.bounds_tau();
                out << record.dump() << "\n";
                if (!report.terai_holds() || !report.bounds_tau()) {
                    status = kCounterexample;
                }
            }
            return status;
        }
        if (construct->parsed()) {
            std::string spec = opt.source.family;
            if (!opt.construct_args.empty()) {
                if (!spec.empty()) {
                    throw UsageError("give the family either positionally or with --family");
                }
                for (const auto& part : opt.construct_args) {
                    spec += (spec.empty() ? "" : " ") + part;
                }
            }
            if (spec.empty()) {
                throw UsageError("construct needs a family");
            }
            std::string params;
            for (int value : {opt.n, opt.p, opt.r}) {
                if (value >= 0) {
                    params += (params.empty() ? "" : ",") + std::to_string(value);
                }
            }
            if (!params.empty()) {
                spec += ":" + params;
            }
            const Graph g = build_family(parse_family(spec));
            out << (opt.format == "edges" ? to_edge_list(g) : to_graph6(g) + "\n");
            return kOk;
        }
        if (enumerate->parsed()) {
            for (const auto& form : enumerate_graphs(opt.n, parse_filter(opt.filter))) {
                out << form.graph6() << "\n";
            }
            return kOk;
        }
        if (bound->parsed()) {
            if (opt.exhaustive == (opt.samples > 0)) {
                throw UsageError("choose exactly one of --exhaustive and --samples K");
            }
            bool clean = true;
            if (opt.exhaustive) {
                if (opt.n > kAtlasLimit) {
                    throw ResourceLimitError("exhaustive bound check", kAtlasLimit);
                }
                for (int n = 2; n <= opt.n; ++n) {
                    const BoundReport report = verify_bound_exhaustive(n);
                    clean = clean && report.ok();
                    out << report.to_json() << "\n";
                }
            } else {
                if (!opt.seed) {
                    throw UsageError("sampled mode requires --seed");
                }
                if (opt.n < 2) {
                    throw UsageError("--n must be at least 2");
                }
                const BoundReport report = verify_bound_sampled(opt.n, opt.samples, *opt.seed);
                clean = report.ok();
                out << report.to_json() << "\n";
            }
            return clean ? kOk : kCounterexample;
        }
        if (classification->parsed()) {
            const ClassificationReport report = verify_classification(opt.n);
            out << report.to_json() << "\n";
            return report.ok() ? kOk : kCounterexample;
        }
        if (spectrum->parsed()) {
            const FieldSpec field(opt.characteristic);
            const int cap = opt.max_n >= 0 ? opt.max_n : 14;
            bool clean = true;
            for (int n = 2; n <= opt.n; ++n) {
                const SpectrumReport report = verify_spectrum(n, field, cap);
                clean = clean && report.ok();
                out << report.to_json() << "\n";
            }
            return clean ? kOk : kCounterexample;
        }
        if (pdr_spec->parsed()) {
            const PdrSpectrumReport report = pdr_spectrum(opt.n, FieldSpec(opt.characteristic));
            out << (opt.format == "json" ? report.to_json() + "\n" : report.to_csv());
            if (!report.ok()) {
                err << "pdr-spec: " << (report.reg_one_row_ok() ? "" : "reg = 1 row differs; ")
                    << report.conjecture_violations.size() << " conjecture violation(s)\n";
            }
            return report.ok() ? kOk : kCounterexample;
        }
        if (pdr_graphs->parsed()) {
            const FieldSpec field(opt.characteristic);
            bool clean = true;
            for (int n = 2; n <= opt.n; ++n) {
                const PdrGraphReport report = verify_pdr_graphs(n, field);
                clean = clean && report.ok();
                out << report.to_json() << "\n";
            }
            return clean ? kOk : kCounterexample;
        }
        if (extremal->parsed()) {
            out << search_non_chordal_extremal(opt.n).to_json() << "\n";
            return kOk;
        }
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return kUsage;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return kParse;
    } catch (const ResourceLimitError& e) {
        err << "resource cap: " << e.what() << "\n";
        return kResourceCap;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kUsage;
    }
    return kUsage;
}

}  // namespace covbetti::cli
