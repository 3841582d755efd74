#include "covbetti/graph.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "covbetti/errors.hpp"

namespace covbetti {

namespace {

std::size_t words_for(int n) { return n <= 64 ? 1 : (static_cast<std::size_t>(n) + 63) / 64; }

}  // namespace

Graph::Graph(int n) : Graph(n, std::span<const Edge>{}) {}

Graph::Graph(int n, std::span<const Edge> edges) : n_(n), words_(words_for(n)) {
    if (n < 0) {
        throw RangeError("vertex count must be non-negative, got " + std::to_string(n));
    }
    rows_.assign(static_cast<std::size_t>(n) * words_, 0);
    adj_.resize(static_cast<std::size_t>(n));
    for (auto [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n) {
            throw RangeError("edge {" + std::to_string(u) + "," + std::to_string(v) + "} outside 0.." +
                             std::to_string(n - 1));
        }
        if (u == v) {
            throw PreconditionError("loop at vertex " + std::to_string(u));
        }
        if (adjacent(u, v)) {
            throw PreconditionError("duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
        }
        rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] |= std::uint64_t{1} << (v % 64);
        rows_[static_cast<std::size_t>(v) * words_ + static_cast<std::size_t>(u) / 64] |= std::uint64_t{1} << (u % 64);
        adj_[static_cast<std::size_t>(u)].push_back(v);
        adj_[static_cast<std::size_t>(v)].push_back(u);
        ++m_;
    }
    for (auto& list : adj_) {
        std::sort(list.begin(), list.end());
    }
}

Mask Graph::vertex_mask() const noexcept {
    return n_ >= 64 ? ~Mask{0} : ((Mask{1} << n_) - 1);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u) {
        for (Vertex v : neighbors(u)) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

void Graph::require_mask_width(const char* operation) const {
    if (n_ > kMaskLimit) {
        throw ResourceLimitError(std::string(operation) + " supports at most " + std::to_string(kMaskLimit) +
                                     " vertices, graph has " + std::to_string(n_),
                                 kMaskLimit);
    }
}

Graph complement(const Graph& g) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < g.order(); ++u) {
        for (Vertex v = u + 1; v < g.order(); ++v) {
            if (!g.adjacent(u, v)) {
                edges.emplace_back(u, v);
            }
        }
    }
    return Graph(g.order(), edges);
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    auto edges = g.edges();
    for (auto [u, v] : h.edges()) {
        edges.emplace_back(u + g.order(), v + g.order());
    }
    return Graph(g.order() + h.order(), edges);
}

Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep) {
    std::vector<Vertex> sorted(keep.begin(), keep.end());
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw PreconditionError("induced_subgraph: repeated vertex");
    }
    if (!sorted.empty() && (sorted.front() < 0 || sorted.back() >= g.order())) {
        throw RangeError("induced_subgraph: vertex outside 0.." + std::to_string(g.order() - 1));
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        for (std::size_t j = i + 1; j < sorted.size(); ++j) {
            if (g.adjacent(sorted[i], sorted[j])) {
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
            }
        }
    }
    return Graph(static_cast<int>(sorted.size()), edges);
}

bool is_bipartite(const Graph& g) {
    std::vector<int> side(static_cast<std::size_t>(g.order()), -1);
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < g.order(); ++root) {
        if (side[root] != -1) {
            continue;
        }
        side[root] = 0;
        stack.push_back(root);
        while (!stack.empty()) {
            Vertex u = stack.back();
            stack.pop_back();
            for (Vertex v : g.neighbors(u)) {
                if (side[v] == -1) {
                    side[v] = 1 - side[u];
                    stack.push_back(v);
                } else if (side[v] == side[u]) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_connected(const Graph& g) {
    if (g.order() == 0) {
        return true;
    }
    std::vector<char> seen(static_cast<std::size_t>(g.order()), 0);
    std::vector<Vertex> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = 1;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == g.order();
}

VertexSet isolated_vertices(const Graph& g) {
    VertexSet out;
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) {
            out.push_back(v);
        }
    }
    return out;
}

bool has_isolated_vertex(const Graph& g) {
    for (Vertex v = 0; v < g.order(); ++v) {
        if (g.degree(v) == 0) {
            return true;
        }
    }
    return false;
}

Graph relabel(const Graph& g, std::span<const Vertex> perm) {
    if (static_cast<int>(perm.size()) != g.order()) {
        throw PreconditionError("relabel: permutation size mismatch");
    }
    std::vector<Edge> edges;
    edges.reserve(g.size());
    for (auto [u, v] : g.edges()) {
        edges.emplace_back(perm[u], perm[v]);
    }
    return Graph(g.order(), edges);
}

bool is_chordal(const Graph& g) {
    const int n = g.order();
    // Lexicographic BFS: pick the unvisited vertex with the largest label,
    // where a label is the decreasing list of visit times of visited
    // neighbours.
    std::vector<std::vector<int>> label(static_cast<std::size_t>(n));
    std::vector<int> visit_time(static_cast<std::size_t>(n), -1);
    std::vector<Vertex> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        Vertex best = -1;
        for (Vertex v = 0; v < n; ++v) {
            if (visit_time[v] == -1 && (best == -1 || label[v] > label[best])) {
                best = v;
            }
        }
        visit_time[best] = step;
        order.push_back(best);
        for (Vertex w : g.neighbors(best)) {
            if (visit_time[w] == -1) {
                label[w].push_back(n - step);
            }
        }
    }
    // The reverse visit order is a perfect elimination ordering iff g is
    // chordal: the earlier-visited neighbours of each vertex form a clique.
    std::vector<Vertex> earlier;
    for (Vertex v : order) {
        earlier.clear();
        for (Vertex w : g.neighbors(v)) {
            if (visit_time[w] < visit_time[v]) {
                earlier.push_back(w);
            }
        }
        for (std::size_t i = 0; i < earlier.size(); ++i) {
            for (std::size_t j = i + 1; j < earlier.size(); ++j) {
                if (!g.adjacent(earlier[i], earlier[j])) {
                    return false;
                }
            }
        }
    }
    return true;
}

bool is_gap_free(const Graph& g) {
    const auto edges = g.edges();
    for (std::size_t i = 0; i < edges.size(); ++i) {
        auto [a, b] = edges[i];
        for (std::size_t j = i + 1; j < edges.size(); ++j) {
            auto [c, d] = edges[j];
            if (a == c || a == d || b == c || b == d) {
                continue;
            }
            if (!g.adjacent(a, c) && !g.adjacent(a, d) && !g.adjacent(b, c) && !g.adjacent(b, d)) {
                return false;
            }
        }
    }
    return true;
}

VertexSet mask_to_set(Mask m) {
    VertexSet out;
    out.reserve(static_cast<std::size_t>(std::popcount(m)));
    while (m != 0) {
        out.push_back(std::countr_zero(m));
        m &= m - 1;
    }
    return out;
}

Mask set_to_mask(std::span<const Vertex> vs) {
    Mask m = 0;
    for (Vertex v : vs) {
        m |= Mask{1} << v;
    }
    return m;
}

}  // namespace covbetti
