#include "covbetti/harness.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "covbetti/betti.hpp"
#include "covbetti/covers.hpp"
#include "covbetti/errors.hpp"
#include "covbetti/graph_io.hpp"
#include "covbetti/spectrum.hpp"

namespace covbetti {

namespace {

using json = nlohmann::ordered_json;

std::string pair_label(int p, int r) { return "(" + std::to_string(p) + "," + std::to_string(r) + ")"; }

}  // namespace

std::string BoundReport::to_json() const {
    json out;
    out["n"] = n;
    out["classes_visited"] = classes_visited;
    out["violations"] = violations;
    out["equality_class"] = equality_class;
    return out.dump();
}

BoundReport verify_bound_exhaustive(int n) {
    BoundReport report;
    report.n = n;
    const int bound = min_tau_bound(n);
    for (const auto& form : enumerate_graphs(n, GraphFilter::no_isolated)) {
        const Graph g = form.graph();
        const int tau = tau_max(g).tau_max;
        ++report.classes_visited;
        if (tau < bound) {
            report.violations.push_back(form.graph6());
        } else if (tau == bound) {
            report.equality_class.push_back(form.graph6());
        }
    }
    return report;
}

Graph random_isolate_free_graph(int n, std::mt19937_64& rng) {
    if (n < 2) {
        throw RangeError("random_isolate_free_graph requires n >= 2");
    }
    while (true) {
        const double p = 0.1 + 0.8 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
        Graph g = random_graph(n, p, rng());
        if (!has_isolated_vertex(g)) {
            return g;
        }
    }
}

BoundReport verify_bound_sampled(int n, int samples, std::uint64_t seed) {
    BoundReport report;
    report.n = n;
    const int bound = min_tau_bound(n);
    std::mt19937_64 rng(seed);
    std::set<std::string> equality;
    for (int k = 0; k < samples; ++k) {
        const Graph g = random_isolate_free_graph(n, rng);
        const int tau = tau_max(g).tau_max;
        ++report.classes_visited;
        const std::string code = n <= kCanonicalLimit ? canonical_form(g).graph6() : to_graph6(g);
        if (tau < bound) {
            report.violations.push_back(code);
        } else if (tau == bound) {
            equality.insert(code);
        }
    }
    report.equality_class.assign(equality.begin(), equality.end());
    return report;
}

std::string ClassificationReport::to_json() const {
    json out;
    out["n"] = n;
    out["classes_visited"] = classes_visited;
    out["equality_class"] = json::array();
    for (const auto& [code, family] : equality_class) {
        out["equality_class"].push_back({{"graph6", code}, {"family", family}});
    }
    out["mismatches"] = mismatches;
    return out.dump();
}

ClassificationReport verify_classification(int n) {
    int root = 0;
    while ((root + 1) * (root + 1) <= n) {
        ++root;
    }
    if (n < 1 || n > kAtlasLimit || root * root != n) {
        throw RangeError("verify_classification: n must be a perfect square in [1, " + std::to_string(kAtlasLimit) +
                         "], got " + std::to_string(n));
    }
    ClassificationReport report;
    report.n = n;
    const int extreme = 2 * root - 2;
    for (const auto& form : enumerate_graphs(n, GraphFilter::no_isolated)) {
        const Graph g = form.graph();
        ++report.classes_visited;
        const bool equal = tau_max(g).tau_max == extreme;
        const FamilyTag tag = recognize_family(g);
        const bool member = tag.kind != FamilyKind::other;
        if (equal) {
            report.equality_class.emplace_back(form.graph6(), to_string(tag));
        }
        if (equal != member) {
            report.mismatches.push_back(form.graph6());
        }
    }
    return report;
}

std::string PdrSpectrumReport::to_csv() const {
    std::ostringstream os;
    os << "n,p,r,witness_graph6\n";
    for (const auto& [pr, code] : points) {
        os << n << ',' << pr.first << ',' << pr.second << ',' << code << '\n';
    }
    return os.str();
}

std::string PdrSpectrumReport::to_json() const {
    json out;
    out["n"] = n;
    out["char"] = field.characteristic();
    out["classes_visited"] = classes_visited;
    out["points"] = json::array();
    for (const auto& [pr, code] : points) {
        out["points"].push_back({{"p", pr.first}, {"r", pr.second}, {"witness", code}});
    }
    out["reg_one_row"] = reg_one_row;
    out["expected_reg_one_row"] = expected_reg_one_row;
    out["conjecture_violations"] = json::array();
    for (const auto& [p, r] : conjecture_violations) {
        out["conjecture_violations"].push_back({{"p", p}, {"r", r}});
    }
    return out.dump();
}

PdrSpectrumReport pdr_spectrum(int n, FieldSpec field) {
    if (n < 2 || n > 8) {
        throw RangeError("pdr_spectrum: n must lie in [2, 8], got " + std::to_string(n));
    }
    PdrSpectrumReport report;
    report.n = n;
    report.field = field;
    for (const auto& form : enumerate_graphs(n, GraphFilter::no_isolated)) {
        const BettiTable table = betti_table(form.graph(), field, n);
        ++report.classes_visited;
        report.points.try_emplace({table.pd, table.reg}, form.graph6());
    }
    for (const auto& [pr, code] : report.points) {
        if (pr.second == 1) {
            report.reg_one_row.push_back(pr.first);
        }
        if (pr.second >= 2 && !report.points.contains({pr.first, pr.second - 1})) {
            report.conjecture_violations.push_back(pr);
        }
    }
    for (int p = min_tau_bound(n); p <= n - 1; ++p) {
        report.expected_reg_one_row.push_back(p);
    }
    return report;
}

std::string SpectrumReport::to_json() const {
    json out;
    out["n"] = n;
    out["p_values"] = p_values;
    out["betti_checked"] = betti_checked;
    out["failures"] = failures;
    return out.dump();
}

SpectrumReport verify_spectrum(int n, FieldSpec field, int betti_max_n) {
    if (n < 2) {
        throw RangeError("verify_spectrum requires n >= 2");
    }
    SpectrumReport report;
    report.n = n;
    report.betti_checked = n <= betti_max_n;
    for (int p = min_tau_bound(n); p <= n - 1; ++p) {
        report.p_values.push_back(p);
        const Graph g = build_spectrum_graph(n, p);
        const std::string where = "p=" + std::to_string(p) + ": ";
        auto fail = [&](const std::string& what) { report.failures.push_back(where + what + " " + to_graph6(g)); };
        if (g.order() != n) {
            fail("wrong order");
        }
        if (const int tau = tau_max(g).tau_max; tau != p) {
            fail("tau_max " + std::to_string(tau));
        }
        if (!is_chordal(g)) {
            fail("not chordal");
        }
        if (!is_gap_free(g)) {
            fail("not gap-free");
        }
        if (induced_matching_number(g) != 1) {
            fail("induced matching number != 1");
        }
        if (report.betti_checked) {
            const BettiTable table = betti_table(g, field, betti_max_n);
            if (table.pd != p || table.reg != 1) {
                fail("(pd, reg) = " + pair_label(table.pd, table.reg));
            }
        }
    }
    return report;
}

std::string PdrGraphReport::to_json() const {
    json out;
    out["n"] = n;
    out["checked"] = json::array();
    for (const auto& [p, r] : checked) {
        out["checked"].push_back({{"p", p}, {"r", r}});
    }
    out["failures"] = failures;
    return out.dump();
}

PdrGraphReport verify_pdr_graphs(int n, FieldSpec field) {
    PdrGraphReport report;
    report.n = n;
    for (int r = 1; 2 * r <= n; ++r) {
        for (int p = 0; p <= n - r; ++p) {
            if (!pdr_in_range(n, p, r)) {
                continue;
            }
            report.checked.emplace_back(p, r);
            const Graph g = build_pdr_graph(n, p, r);
            const BettiTable table = betti_table(g, field, std::max(n, kDefaultBettiLimit));
            if (g.order() != n || table.pd != p || table.reg != r) {
                report.failures.push_back(pair_label(p, r) + " -> " + pair_label(table.pd, table.reg) + " " +
                                          to_graph6(g));
            }
        }
    }
    return report;
}

std::string ExtremalSearchReport::to_json() const {
    json out;
    out["n"] = n;
    out["target"] = target;
    out["hereditary_classes"] = hereditary_classes;
    out["attaining"] = attaining;
    out["non_chordal_non_gap_free"] = non_chordal_non_gap_free;
    return out.dump();
}

ExtremalSearchReport search_non_chordal_extremal(int n) {
    if (n < 2 || n > kCanonicalInternalLimit) {
        throw RangeError("search_non_chordal_extremal: n must lie in [2, " + std::to_string(kCanonicalInternalLimit) +
                         "]");
    }
    ExtremalSearchReport report;
    report.n = n;
    report.target = min_tau_bound(n);
    const int target = report.target;
    const auto classes =
        enumerate_hereditary(n, [target](const Graph& g) { return tau_max(g).tau_max <= target; });
    report.hereditary_classes = classes.size();
    for (const auto& form : classes) {
        const Graph g = form.graph();
        if (has_isolated_vertex(g) || tau_max(g).tau_max != target) {
            continue;
        }
        ++report.attaining;
        if (!is_chordal(g) && !is_gap_free(g)) {
            report.non_chordal_non_gap_free.push_back(form.graph6());
        }
    }
    return report;
}

}  // namespace covbetti
