#pragma once

#include <cstdint>
#include <span>
#include <utility>
#include <vector>

namespace covbetti {

using Vertex = int;
using Edge = std::pair<Vertex, Vertex>;

/// Sorted ascending list of vertex labels.
using VertexSet = std::vector<Vertex>;

/// Bit i set <=> vertex i present. Only valid for graphs with at most
/// kMaskLimit vertices.
using Mask = std::uint64_t;

inline constexpr int kMaskLimit = 64;

/// Immutable finite simple graph on vertices 0..n-1.
class Graph {
public:
    Graph() = default;

    /// Edgeless graph on n vertices.
    explicit Graph(int n);

    /// Edges may be given in either orientation. A loop or a duplicate edge
    /// throws PreconditionError; an endpoint outside 0..n-1 throws RangeError.
    Graph(int n, std::span<const Edge> edges);

    [[nodiscard]] int order() const noexcept { return n_; }
    [[nodiscard]] std::size_t size() const noexcept { return m_; }

    [[nodiscard]] bool adjacent(Vertex u, Vertex v) const noexcept {
        return (rows_[static_cast<std::size_t>(u) * words_ + static_cast<std::size_t>(v) / 64] >> (v % 64)) & 1U;
    }

    [[nodiscard]] std::span<const Vertex> neighbors(Vertex v) const noexcept { return adj_[static_cast<std::size_t>(v)]; }
    [[nodiscard]] int degree(Vertex v) const noexcept { return static_cast<int>(adj_[static_cast<std::size_t>(v)].size()); }

    /// Neighbourhood as a bit mask; requires order() <= kMaskLimit.
    [[nodiscard]] Mask neighbor_mask(Vertex v) const noexcept { return rows_[static_cast<std::size_t>(v) * words_]; }

    /// Mask of all vertices; requires order() <= kMaskLimit.
    [[nodiscard]] Mask vertex_mask() const noexcept;

    /// Edges (u, v) with u < v, sorted lexicographically.
    [[nodiscard]] std::vector<Edge> edges() const;

    /// Throws ResourceLimitError unless order() <= kMaskLimit.
    void require_mask_width(const char* operation) const;

    friend bool operator==(const Graph& a, const Graph& b) noexcept {
        return a.n_ == b.n_ && a.rows_ == b.rows_;
    }

private:
    int n_ = 0;
    std::size_t m_ = 0;
    std::size_t words_ = 1;
    std::vector<std::uint64_t> rows_;
    std::vector<std::vector<Vertex>> adj_;
};

[[nodiscard]] Graph complement(const Graph& g);

/// Vertices of h are relabelled by offset g.order().
[[nodiscard]] Graph disjoint_union(const Graph& g, const Graph& h);

/// Induced subgraph on `keep` (any order, no duplicates); vertex w of the
/// result is the w-th smallest element of `keep`.
[[nodiscard]] Graph induced_subgraph(const Graph& g, std::span<const Vertex> keep);

[[nodiscard]] bool is_bipartite(const Graph& g);
[[nodiscard]] bool is_connected(const Graph& g);
[[nodiscard]] VertexSet isolated_vertices(const Graph& g);
[[nodiscard]] bool has_isolated_vertex(const Graph& g);

/// Relabel: vertex v of g becomes perm[v].
[[nodiscard]] Graph relabel(const Graph& g, std::span<const Vertex> perm);

/// True iff g has a perfect elimination ordering (lexicographic BFS plus
/// verification).
[[nodiscard]] bool is_chordal(const Graph& g);

/// True iff every two disjoint edges are joined by an edge.
[[nodiscard]] bool is_gap_free(const Graph& g);

[[nodiscard]] VertexSet mask_to_set(Mask m);
[[nodiscard]] Mask set_to_mask(std::span<const Vertex> vs);

}  // namespace covbetti
