#include "covbetti/covers.hpp"

#include <algorithm>
#include <bit>

namespace covbetti {

namespace {

struct MisEnumerator {
    const Graph& g;
    std::vector<Mask> closed;  // N[v]
    const std::function<void(Mask)>& visit;

    void run(Mask r, Mask p, Mask x) {
        if (p == 0) {
            if (x == 0) {
                visit(r);
            }
            return;
        }
        // Pivot maximising the candidates it rules out: in the complement,
        // the pivot's neighbours are the non-neighbours in g.
        Mask pivot_keep = p;
        int best = -1;
        for (Mask px = p | x; px != 0; px &= px - 1) {
            int u = std::countr_zero(px);
            int cover = std::popcount(p & ~closed[u]);
            if (cover > best) {
                best = cover;
                pivot_keep = p & closed[u];
            }
        }
        for (Mask todo = pivot_keep; todo != 0; todo &= todo - 1) {
            int v = std::countr_zero(todo);
            Mask bit = Mask{1} << v;
            run(r | bit, p & ~closed[v], x & ~closed[v]);
            p &= ~bit;
            x |= bit;
        }
    }
};

struct MatchingSearch {
    std::vector<Mask> adj;
    int best = 0;

    void run(Mask remaining, int current) {
        Mask live = 0;
        int pick = -1;
        int pick_degree = 1 << 30;
        for (Mask rest = remaining; rest != 0; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            int d = std::popcount(adj[v] & remaining);
            if (d > 0) {
                live |= Mask{1} << v;
                if (d < pick_degree) {
                    pick_degree = d;
                    pick = v;
                }
            }
        }
        if (pick < 0) {
            best = std::max(best, current);
            return;
        }
        if (current + std::popcount(live) / 2 <= best) {
            return;
        }
        const Mask vbit = Mask{1} << pick;
        // A vertex of degree one is matched to its neighbour in some maximum
        // matching, so that branch alone suffices.
        for (Mask nb = adj[pick] & remaining; nb != 0; nb &= nb - 1) {
            int u = std::countr_zero(nb);
            run(remaining & ~vbit & ~(Mask{1} << u), current + 1);
        }
        if (pick_degree > 1) {
            run(remaining & ~vbit, current);
        }
    }
};

struct InducedMatchingSearch {
    std::vector<std::vector<char>> compatible;
    int best = 0;

    void run(const std::vector<int>& candidates, int size) {
        if (candidates.empty()) {
            best = std::max(best, size);
            return;
        }
        if (size + static_cast<int>(candidates.size()) <= best) {
            return;
        }
        std::vector<int> next;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            if (size + static_cast<int>(candidates.size() - i) <= best) {
                return;
            }
            next.clear();
            for (std::size_t j = i + 1; j < candidates.size(); ++j) {
                if (compatible[candidates[i]][candidates[j]]) {
                    next.push_back(candidates[j]);
                }
            }
            run(next, size + 1);
        }
    }
};

}  // namespace

bool lex_less(Mask a, Mask b) noexcept {
    Mask diff = a ^ b;
    if (diff == 0) {
        return false;
    }
    int v = std::countr_zero(diff);
    bool a_has = (a >> v) & 1U;
    // The list missing v either continues with a larger element (and is
    // greater) or ends there (and is a proper prefix, hence smaller).
    Mask other_tail = (a_has ? b : a) >> v;
    bool holder_smaller = other_tail != 0;
    return a_has ? holder_smaller : !holder_smaller;
}

void for_each_maximal_independent_set(const Graph& g, const std::function<void(Mask)>& visit) {
    g.require_mask_width("maximal independent set enumeration");
    MisEnumerator e{g, std::vector<Mask>(static_cast<std::size_t>(g.order())), visit};
    for (Vertex v = 0; v < g.order(); ++v) {
        e.closed[v] = g.neighbor_mask(v) | (Mask{1} << v);
    }
    e.run(0, g.vertex_mask(), 0);
}

std::vector<VertexSet> enumerate_minimal_covers(const Graph& g) {
    std::vector<Mask> covers;
    const Mask all = g.vertex_mask();
    for_each_maximal_independent_set(g, [&](Mask independent) { covers.push_back(all & ~independent); });
    std::sort(covers.begin(), covers.end(), lex_less);
    std::vector<VertexSet> out;
    out.reserve(covers.size());
    for (Mask c : covers) {
        out.push_back(mask_to_set(c));
    }
    return out;
}

CoverReport tau_max(const Graph& g) {
    CoverReport report;
    const Mask all = g.vertex_mask();
    Mask best_cover = 0;
    int best = -1;
    for_each_maximal_independent_set(g, [&](Mask independent) {
        ++report.num_minimal_covers;
        Mask cover = all & ~independent;
        int size = std::popcount(cover);
        if (size > best || (size == best && lex_less(cover, best_cover))) {
            best = size;
            best_cover = cover;
        }
    });
    report.tau_max = best;
    report.i_min = g.order() - best;
    report.witness_cover = mask_to_set(best_cover);
    report.witness_independent = mask_to_set(all & ~best_cover);
    return report;
}

int matching_number(const Graph& g) {
    g.require_mask_width("matching_number");
    MatchingSearch search;
    search.adj.resize(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        search.adj[v] = g.neighbor_mask(v);
    }
    search.run(g.vertex_mask(), 0);
    return search.best;
}

int induced_matching_number(const Graph& g) {
    const auto edges = g.edges();
    const std::size_t m = edges.size();
    InducedMatchingSearch search;
    search.compatible.assign(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        auto [a, b] = edges[i];
        for (std::size_t j = i + 1; j < m; ++j) {
            auto [c, d] = edges[j];
            bool ok = a != c && a != d && b != c && b != d && !g.adjacent(a, c) && !g.adjacent(a, d) &&
                      !g.adjacent(b, c) && !g.adjacent(b, d);
            search.compatible[i][j] = search.compatible[j][i] = ok ? 1 : 0;
        }
    }
    std::vector<int> all(m);
    for (std::size_t i = 0; i < m; ++i) {
        all[i] = static_cast<int>(i);
    }
    search.run(all, 0);
    return search.best;
}

bool is_vertex_cover(const Graph& g, const VertexSet& w) {
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : w) {
        in[v] = 1;
    }
    for (auto [u, v] : g.edges()) {
        if (!in[u] && !in[v]) {
            return false;
        }
    }
    return true;
}

bool is_minimal_vertex_cover(const Graph& g, const VertexSet& w) {
    if (!is_vertex_cover(g, w)) {
        return false;
    }
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : w) {
        in[v] = 1;
    }
    for (Vertex v : w) {
        auto nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return !in[u]; })) {
            return false;
        }
    }
    return true;
}

bool is_independent_set(const Graph& g, const VertexSet& w) {
    for (std::size_t i = 0; i < w.size(); ++i) {
        for (std::size_t j = i + 1; j < w.size(); ++j) {
            if (g.adjacent(w[i], w[j])) {
                return false;
            }
        }
    }
    return true;
}

bool is_maximal_independent_set(const Graph& g, const VertexSet& w) {
    if (!is_independent_set(g, w)) {
        return false;
    }
    std::vector<char> in(static_cast<std::size_t>(g.order()), 0);
    for (Vertex v : w) {
        in[v] = 1;
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        if (in[v]) {
            continue;
        }
        auto nb = g.neighbors(v);
        if (std::none_of(nb.begin(), nb.end(), [&](Vertex u) { return in[u] != 0; })) {
            return false;
        }
    }
    return true;
}

}  // namespace covbetti
