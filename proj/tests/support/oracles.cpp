#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include <boost/multiprecision/cpp_int.hpp>

namespace oracle {

using boost::multiprecision::cpp_rational;

Graph make_graph(int n, std::initializer_list<std::pair<int, int>> edges) {
    std::vector<covbetti::Edge> list(edges.begin(), edges.end());
    return Graph(n, list);
}

bool covers(const Graph& g, Mask w) {
    for (auto [u, v] : g.edges()) {
        if (((w >> u) & 1U) == 0 && ((w >> v) & 1U) == 0) {
            return false;
        }
    }
    return true;
}

bool independent(const Graph& g, Mask w) {
    for (auto [u, v] : g.edges()) {
        if (((w >> u) & 1U) != 0 && ((w >> v) & 1U) != 0) {
            return false;
        }
    }
    return true;
}

namespace {

std::vector<int> to_list(Mask m) {
    std::vector<int> out;
    for (int v = 0; v < 64; ++v) {
        if ((m >> v) & 1U) {
            out.push_back(v);
        }
    }
    return out;
}

bool minimal_cover(const Graph& g, Mask w) {
    if (!covers(g, w)) {
        return false;
    }
    for (int v = 0; v < g.order(); ++v) {
        if (((w >> v) & 1U) != 0 && covers(g, w & ~(Mask{1} << v))) {
            return false;
        }
    }
    return true;
}

}  // namespace

std::vector<std::vector<int>> minimal_covers(const Graph& g) {
    std::vector<std::vector<int>> out;
    const Mask all = (Mask{1} << g.order()) - 1;
    for (Mask w = 0; w <= all; ++w) {
        if (minimal_cover(g, w)) {
            out.push_back(to_list(w));
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int tau_max(const Graph& g) {
    int best = 0;
    for (const auto& c : minimal_covers(g)) {
        best = std::max(best, static_cast<int>(c.size()));
    }
    return best;
}

int i_min(const Graph& g) {
    const int n = g.order();
    int best = n;
    for (Mask w = 0; w < (Mask{1} << n); ++w) {
        if (!independent(g, w)) {
            continue;
        }
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v) {
            if (((w >> v) & 1U) == 0 && independent(g, w | (Mask{1} << v))) {
                maximal = false;
            }
        }
        if (maximal) {
            best = std::min(best, std::popcount(w));
        }
    }
    return best;
}

int alpha(const Graph& g) {
    int best = 0;
    for (Mask w = 0; w < (Mask{1} << g.order()); ++w) {
        if (independent(g, w)) {
            best = std::max(best, std::popcount(w));
        }
    }
    return best;
}

namespace {

// Largest set of pairwise disjoint edges from edges[k..], with an extra
// compatibility test against the chosen ones.
int best_edge_family(const std::vector<covbetti::Edge>& edges, std::size_t k, std::vector<covbetti::Edge>& chosen,
                     const std::function<bool(const covbetti::Edge&, const covbetti::Edge&)>& compatible) {
    if (k == edges.size()) {
        return static_cast<int>(chosen.size());
    }
    int best = best_edge_family(edges, k + 1, chosen, compatible);
    bool ok = true;
    for (const auto& e : chosen) {
        if (!compatible(e, edges[k])) {
            ok = false;
            break;
        }
    }
    if (ok) {
        chosen.push_back(edges[k]);
        best = std::max(best, best_edge_family(edges, k + 1, chosen, compatible));
        chosen.pop_back();
    }
    return best;
}

bool disjoint(const covbetti::Edge& a, const covbetti::Edge& b) {
    return a.first != b.first && a.first != b.second && a.second != b.first && a.second != b.second;
}

}  // namespace

int matching_number(const Graph& g) {
    std::vector<covbetti::Edge> chosen;
    return best_edge_family(g.edges(), 0, chosen, disjoint);
}

int induced_matching_number(const Graph& g) {
    std::vector<covbetti::Edge> chosen;
    return best_edge_family(g.edges(), 0, chosen, [&](const covbetti::Edge& a, const covbetti::Edge& b) {
        return disjoint(a, b) && !g.adjacent(a.first, b.first) && !g.adjacent(a.first, b.second) &&
               !g.adjacent(a.second, b.first) && !g.adjacent(a.second, b.second);
    });
}

bool has_chordless_cycle(const Graph& g) {
    const int n = g.order();
    for (Mask w = 0; w < (Mask{1} << n); ++w) {
        const int k = std::popcount(w);
        if (k < 4) {
            continue;
        }
        const auto vs = to_list(w);
        int edges = 0;
        bool two_regular = true;
        for (int v : vs) {
            int d = 0;
            for (int u : vs) {
                d += g.adjacent(u, v) ? 1 : 0;
            }
            two_regular = two_regular && d == 2;
            edges += d;
        }
        if (!two_regular) {
            continue;
        }
        // 2-regular: a single cycle iff connected.
        Mask seen = Mask{1} << vs.front();
        std::vector<int> stack{vs.front()};
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int u : vs) {
                if (g.adjacent(u, v) && ((seen >> u) & 1U) == 0) {
                    seen |= Mask{1} << u;
                    stack.push_back(u);
                }
            }
        }
        if (seen == w) {
            return true;
        }
    }
    return false;
}

bool has_induced_2k2(const Graph& g) {
    const int n = g.order();
    for (Mask w = 0; w < (Mask{1} << n); ++w) {
        if (std::popcount(w) != 4) {
            continue;
        }
        const auto vs = to_list(w);
        int edges = 0;
        bool degree_one = true;
        for (int v : vs) {
            int d = 0;
            for (int u : vs) {
                d += g.adjacent(u, v) ? 1 : 0;
            }
            degree_one = degree_one && d == 1;
            edges += d;
        }
        if (degree_one && edges == 4) {
            return true;
        }
    }
    return false;
}

bool bipartite(const Graph& g) {
    for (Mask side = 0; side < (Mask{1} << g.order()); ++side) {
        if (independent(g, side) && independent(g, ~side & ((Mask{1} << g.order()) - 1))) {
            return true;
        }
    }
    return false;
}

namespace {

template <class T>
std::size_t rank_of(std::vector<std::vector<T>> rows, const std::function<T(const T&)>& inverse,
                    const std::function<T(const T&)>& normalise) {
    std::size_t rank = 0;
    if (rows.empty()) {
        return 0;
    }
    const std::size_t cols = rows.front().size();
    for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
        std::size_t pivot = rank;
        while (pivot < rows.size() && rows[pivot][c] == T(0)) {
            ++pivot;
        }
        if (pivot == rows.size()) {
            continue;
        }
        std::swap(rows[rank], rows[pivot]);
        const T inv = inverse(rows[rank][c]);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            if (r == rank || rows[r][c] == T(0)) {
                continue;
            }
            const T factor = normalise(rows[r][c] * inv);
            for (std::size_t k = c; k < cols; ++k) {
                rows[r][k] = normalise(rows[r][k] - factor * rows[rank][k]);
            }
        }
        ++rank;
    }
    return rank;
}

std::int64_t mod_pow(std::int64_t b, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1;
    b %= p;
    while (e > 0) {
        if (e & 1) {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    return r;
}

// Signed boundary of the faces in `upper` (dimension k) onto `lower`
// (dimension k - 1), as rows indexed by upper faces.
std::vector<std::vector<int>> boundary(const std::vector<Mask>& upper, const std::vector<Mask>& lower) {
    std::vector<std::vector<int>> rows(upper.size(), std::vector<int>(lower.size(), 0));
    for (std::size_t a = 0; a < upper.size(); ++a) {
        int position = 0;
        for (int v = 0; v < 64; ++v) {
            if (((upper[a] >> v) & 1U) == 0) {
                continue;
            }
            const Mask facet = upper[a] & ~(Mask{1} << v);
            auto it = std::find(lower.begin(), lower.end(), facet);
            rows[a][static_cast<std::size_t>(it - lower.begin())] = position % 2 == 0 ? 1 : -1;
            ++position;
        }
    }
    return rows;
}

std::size_t matrix_rank(const std::vector<std::vector<int>>& m, int characteristic) {
    if (m.empty() || m.front().empty()) {
        return 0;
    }
    if (characteristic == 0) {
        std::vector<std::vector<cpp_rational>> rows;
        for (const auto& r : m) {
            rows.emplace_back(r.begin(), r.end());
        }
        return rank_of<cpp_rational>(
            rows, [](const cpp_rational& x) { return cpp_rational(1) / x; }, [](const cpp_rational& x) { return x; });
    }
    const std::int64_t p = characteristic;
    std::vector<std::vector<std::int64_t>> rows;
    for (const auto& r : m) {
        std::vector<std::int64_t> row;
        for (int x : r) {
            row.push_back(((x % p) + p) % p);
        }
        rows.push_back(row);
    }
    return rank_of<std::int64_t>(
        rows, [p](const std::int64_t& x) { return mod_pow(x, p - 2, p); },
        [p](const std::int64_t& x) { return ((x % p) + p) % p; });
}

}  // namespace

std::map<int, std::size_t> reduced_homology(Mask ground, const std::function<bool(Mask)>& is_face, int characteristic) {
    std::map<int, std::size_t> out;
    if (!is_face(0)) {
        return out;
    }
    // faces_by_dim[k + 1] = k-faces.
    std::vector<std::vector<Mask>> faces_by_dim(static_cast<std::size_t>(std::popcount(ground)) + 1);
    for (Mask f = ground;; f = (f - 1) & ground) {
        if (is_face(f)) {
            faces_by_dim[static_cast<std::size_t>(std::popcount(f))].push_back(f);
        }
        if (f == 0) {
            break;
        }
    }
    const int top = static_cast<int>(faces_by_dim.size()) - 2;
    std::vector<std::size_t> ranks(faces_by_dim.size() + 1, 0);
    // ranks[k + 1] = rank of the boundary from k-faces to (k-1)-faces.
    for (int k = 0; k <= top; ++k) {
        ranks[static_cast<std::size_t>(k + 1)] = matrix_rank(
            boundary(faces_by_dim[static_cast<std::size_t>(k + 1)], faces_by_dim[static_cast<std::size_t>(k)]),
            characteristic);
    }
    for (int k = -1; k <= top; ++k) {
        const std::size_t f = faces_by_dim[static_cast<std::size_t>(k + 1)].size();
        const std::size_t h = f - ranks[static_cast<std::size_t>(k + 1)] - ranks[static_cast<std::size_t>(k + 2)];
        if (h != 0) {
            out[k] = h;
        }
    }
    return out;
}

std::map<std::pair<int, int>, std::uint64_t> stanley_reisner_betti(int n, const std::function<bool(Mask)>& is_face,
                                                                   int characteristic) {
    std::map<std::pair<int, int>, std::uint64_t> table;
    for (Mask w = 0; w < (Mask{1} << n); ++w) {
        const int j = std::popcount(w);
        for (auto [k, dim] : reduced_homology(w, is_face, characteristic)) {
            table[{j - k - 1, j}] += dim;
        }
    }
    return table;
}

std::map<std::pair<int, int>, std::uint64_t> betti(const Graph& g, int characteristic) {
    return stanley_reisner_betti(g.order(), [&](Mask f) { return independent(g, f); }, characteristic);
}

int proj_dim(const std::map<std::pair<int, int>, std::uint64_t>& table) {
    int pd = 0;
    for (const auto& [key, value] : table) {
        if (value != 0) {
            pd = std::max(pd, key.first);
        }
    }
    return pd;
}

int regularity(const std::map<std::pair<int, int>, std::uint64_t>& table) {
    int reg = 0;
    for (const auto& [key, value] : table) {
        if (value != 0) {
            reg = std::max(reg, key.second - key.first);
        }
    }
    return reg;
}

std::uint64_t brute_canonical_code(const Graph& g) {
    const int n = g.order();
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::uint64_t best = ~std::uint64_t{0};
    do {
        std::uint64_t code = 0;
        int bit = 0;
        for (int j = 1; j < n; ++j) {
            for (int i = 0; i < j; ++i, ++bit) {
                if (g.adjacent(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)])) {
                    code |= std::uint64_t{1} << bit;
                }
            }
        }
        best = std::min(best, code);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return best;
}

std::vector<int> random_permutation(int n, std::mt19937_64& rng) {
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::shuffle(perm.begin(), perm.end(), rng);
    return perm;
}

Graph random_gnp(int n, double q, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(q);
    std::vector<covbetti::Edge> edges;
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            if (coin(rng)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(n, edges);
}

Graph random_isolate_free(int n, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> density(0.15, 0.85);
    for (;;) {
        Graph g = random_gnp(n, density(rng), rng);
        bool isolated = false;
        for (int v = 0; v < n; ++v) {
            isolated = isolated || g.degree(v) == 0;
        }
        if (!isolated) {
            return g;
        }
    }
}

}  // namespace oracle
