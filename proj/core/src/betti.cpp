#include "covbetti/betti.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <sstream>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "covbetti/covers.hpp"
#include "covbetti/errors.hpp"

namespace covbetti {

namespace {

using Summand = std::map<int, std::size_t>;

void check_limit(const Graph& g, int max_n, const char* what) {
    if (g.order() > max_n) {
        throw ResourceLimitError(std::string(what) + " over 2^n vertex subsets refused for n = " +
                                     std::to_string(g.order()),
                                 max_n);
    }
}

/// Hochster summands of an edge ideal with two homotopy-invariant
/// simplifications of Ind(g[w]):
///  - an isolated vertex of g[w] is a cone point, so all reduced homology
///    vanishes;
///  - if N(u) is contained in N(v) for distinct u, v then Ind(H) and
///    Ind(H - v) are homotopy equivalent (fold lemma).
/// The reduced graph, relabelled in vertex order, keys a memo table.
class HochsterEngine {
public:
    HochsterEngine(const Graph& g, FieldSpec field) : field_(field), adj_(static_cast<std::size_t>(g.order())) {
        g.require_mask_width("Hochster summand");
        for (Vertex v = 0; v < g.order(); ++v) {
            adj_[v] = g.neighbor_mask(v);
        }
    }

    /// Folds w down; returns 0 with `cone` set when homology vanishes.
    Mask reduce(Mask w, bool& cone) const {
        cone = false;
        if (w == 0) {
            return 0;
        }
        while (true) {
            for (Mask rest = w; rest != 0; rest &= rest - 1) {
                if ((adj_[std::countr_zero(rest)] & w) == 0) {
                    cone = true;
                    return 0;
                }
            }
            bool folded = false;
            for (Mask us = w; us != 0 && !folded; us &= us - 1) {
                int u = std::countr_zero(us);
                Mask nu = adj_[u] & w;
                for (Mask vs = w & ~(Mask{1} << u); vs != 0; vs &= vs - 1) {
                    int v = std::countr_zero(vs);
                    if ((nu & ~adj_[v]) == 0) {
                        w &= ~(Mask{1} << v);
                        folded = true;
                        break;
                    }
                }
            }
            if (!folded) {
                return w;
            }
        }
    }

    const Summand& summand(Mask w) {
        static const Summand empty_complex{{-1, 1}};
        static const Summand zero;
        if (w == 0) {
            return empty_complex;
        }
        bool cone = false;
        Mask reduced = reduce(w, cone);
        if (cone) {
            return zero;
        }
        return lookup(reduced);
    }

    /// Size of the folded graph (0 for a cone); used by the fast paths.
    int reduced_size(Mask w) const {
        bool cone = false;
        Mask reduced = reduce(w, cone);
        return cone ? 0 : std::popcount(reduced);
    }

private:
    const Summand& lookup(Mask reduced) {
        std::vector<Vertex> keep = mask_to_set(reduced);
        const std::size_t k = keep.size();
        std::string key(k * sizeof(Mask), '\0');
        std::vector<Edge> edges;
        for (std::size_t a = 0; a < k; ++a) {
            Mask row = 0;
            for (std::size_t b = 0; b < k; ++b) {
                if ((adj_[keep[a]] >> keep[b]) & 1U) {
                    row |= Mask{1} << b;
                    if (a < b) {
                        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
                    }
                }
            }
            for (std::size_t byte = 0; byte < sizeof(Mask); ++byte) {
                key[a * sizeof(Mask) + byte] = static_cast<char>((row >> (8 * byte)) & 0xFFU);
            }
        }
        auto it = memo_.find(key);
        if (it != memo_.end()) {
            return it->second;
        }
        Graph sub(static_cast<int>(k), edges);
        return memo_.emplace(std::move(key), reduced_homology(SimplicialComplex::independence(sub), field_))
            .first->second;
    }

    FieldSpec field_;
    std::vector<Mask> adj_;
    std::unordered_map<std::string, Summand> memo_;
};

/// Calls visit(w) for every subset of {0..n-1} of size j, in increasing
/// numeric order.
template <typename F>
void for_each_subset_of_size(int n, int j, F&& visit) {
    if (j == 0) {
        visit(Mask{0});
        return;
    }
    if (j > n) {
        return;
    }
    const Mask limit = n == 64 ? 0 : (Mask{1} << n);
    Mask w = (j == 64) ? ~Mask{0} : ((Mask{1} << j) - 1);
    while (true) {
        visit(w);
        Mask low = w & (~w + 1);
        Mask ripple = w + low;
        if (ripple == 0) {
            return;
        }
        w = ripple | (((w ^ ripple) >> 2) / low);
        if (limit != 0 && w >= limit) {
            return;
        }
    }
}

void finish(BettiTable& table) {
    table.pd = 0;
    table.reg = 0;
    for (const auto& [ij, beta] : table.entries) {
        table.pd = std::max(table.pd, ij.first);
        table.reg = std::max(table.reg, ij.second - ij.first);
    }
}

}  // namespace

int betti_limit_from_env() {
    if (const char* value = std::getenv("COVBETTI_BETTI_MAX_N")) {
        char* end = nullptr;
        long parsed = std::strtol(value, &end, 10);
        if (end != value && *end == '\0' && parsed >= 0 && parsed <= kMaskLimit) {
            return static_cast<int>(parsed);
        }
    }
    return kDefaultBettiLimit;
}

std::uint64_t BettiTable::at(int i, int j) const {
    auto it = entries.find({i, j});
    return it == entries.end() ? 0 : it->second;
}

std::string BettiTable::to_json() const {
    nlohmann::ordered_json out;
    out["n"] = n;
    out["char"] = field.characteristic();
    out["entries"] = nlohmann::ordered_json::array();
    for (const auto& [ij, beta] : entries) {
        out["entries"].push_back({{"i", ij.first}, {"j", ij.second}, {"beta", beta}});
    }
    out["pd"] = pd;
    out["reg"] = reg;
    return out.dump();
}

std::string BettiTable::to_ascii() const {
    std::vector<std::uint64_t> totals(static_cast<std::size_t>(pd + 1), 0);
    for (const auto& [ij, beta] : entries) {
        totals[static_cast<std::size_t>(ij.first)] += beta;
    }
    std::size_t width = 1;
    for (auto t : totals) {
        width = std::max(width, std::to_string(t).size());
    }
    const std::size_t label = std::max<std::size_t>(std::string("total:").size(), std::to_string(reg).size() + 1);
    auto pad = [](const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; };
    std::ostringstream os;
    os << std::string(label, ' ');
    for (int i = 0; i <= pd; ++i) {
        os << ' ' << pad(std::to_string(i), width);
    }
    os << "\n" << pad("total:", label);
    for (auto t : totals) {
        os << ' ' << pad(std::to_string(t), width);
    }
    os << "\n";
    for (int row = 0; row <= reg; ++row) {
        os << pad(std::to_string(row) + ":", label);
        for (int i = 0; i <= pd; ++i) {
            std::uint64_t beta = at(i, i + row);
            os << ' ' << pad(beta == 0 ? "." : std::to_string(beta), width);
        }
        os << "\n";
    }
    return os.str();
}

BettiTable betti_table(const Graph& g, FieldSpec field, int max_n) {
    check_limit(g, max_n, "betti_table");
    HochsterEngine engine(g, field);
    BettiTable table;
    table.n = g.order();
    table.field = field;
    const int n = g.order();
    for (int j = 0; j <= n; ++j) {
        for_each_subset_of_size(n, j, [&](Mask w) {
            for (auto [k, dim] : engine.summand(w)) {
                table.entries[{j - k - 1, j}] += dim;
            }
        });
    }
    finish(table);
    return table;
}

int proj_dim(const Graph& g, FieldSpec field, int max_n) {
    check_limit(g, max_n, "proj_dim");
    HochsterEngine engine(g, field);
    const int n = g.order();
    int best = 0;
    // A non-empty subset of size j contributes only to i <= j - 1.
    for (int j = n; j >= 1 && best < j - 1; --j) {
        for_each_subset_of_size(n, j, [&](Mask w) {
            const auto& summand = engine.summand(w);
            if (!summand.empty()) {
                best = std::max(best, j - summand.begin()->first - 1);
            }
        });
    }
    return best;
}

int regularity(const Graph& g, FieldSpec field, int max_n) {
    check_limit(g, max_n, "regularity");
    HochsterEngine engine(g, field);
    const int n = g.order();
    // reg(H) <= matching number(H) <= |V(H)|/2 for every graph H, so a
    // folded subgraph on fewer than 2(best + 1) vertices cannot raise best,
    // and best can stop at the matching number of g.
    const int ceiling = n == 0 ? 0 : matching_number(g);
    int best = 0;
    for (int j = n; j >= 2 && best < ceiling; --j) {
        if (j < 2 * (best + 1)) {
            break;
        }
        for_each_subset_of_size(n, j, [&](Mask w) {
            if (best >= ceiling || engine.reduced_size(w) < 2 * (best + 1)) {
                return;
            }
            const auto& summand = engine.summand(w);
            if (!summand.empty()) {
                best = std::max(best, summand.rbegin()->first + 1);
            }
        });
    }
    return best;
}

std::map<int, std::size_t> hochster_summand(const Graph& g, const VertexSet& w, FieldSpec field) {
    for (Vertex v : w) {
        if (v < 0 || v >= g.order()) {
            throw RangeError("hochster_summand: vertex " + std::to_string(v) + " outside 0.." +
                             std::to_string(g.order() - 1));
        }
    }
    HochsterEngine engine(g, field);
    return engine.summand(set_to_mask(w));
}

BettiTable stanley_reisner_betti(int n, const std::function<bool(Mask)>& is_face, FieldSpec field, int max_n) {
    if (n > max_n) {
        throw ResourceLimitError("stanley_reisner_betti over 2^n vertex subsets refused for n = " + std::to_string(n),
                                 max_n);
    }
    BettiTable table;
    table.n = n;
    table.field = field;
    for (int j = 0; j <= n; ++j) {
        for_each_subset_of_size(n, j, [&](Mask w) {
            auto cx = SimplicialComplex::from_oracle(w, [&](Mask f) { return (f & ~w) == 0 && is_face(f); });
            for (auto [k, dim] : reduced_homology(cx, field)) {
                table.entries[{j - k - 1, j}] += dim;
            }
        });
    }
    finish(table);
    return table;
}

DualReport dual_check(const Graph& g, FieldSpec field, int max_n) {
    if (has_isolated_vertex(g)) {
        throw PreconditionError("dual_check: graph has an isolated vertex");
    }
    if (g.size() == 0) {
        throw PreconditionError("dual_check: graph has no edge");
    }
    check_limit(g, max_n, "dual_check");
    const auto edges = g.edges();
    const Mask all = g.vertex_mask();
    // F is a face of the dual complex iff its complement contains an edge.
    auto is_face = [&](Mask f) {
        Mask rest = all & ~f;
        return std::any_of(edges.begin(), edges.end(), [rest](const Edge& e) {
            return ((rest >> e.first) & 1U) && ((rest >> e.second) & 1U);
        });
    };
    DualReport report;
    report.dual_table = stanley_reisner_betti(g.order(), is_face, field, max_n);
    // reg of the ideal J is reg(S/J) + 1 because beta_{i,j}(J) = beta_{i+1,j}(S/J).
    report.reg_dual = report.dual_table.reg + 1;
    report.pd_primal = betti_table(g, field, max_n).pd;
    report.tau_max = tau_max(g).tau_max;
    return report;
}

}  // namespace covbetti
