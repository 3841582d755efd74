#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "covbetti/graph.hpp"

namespace covbetti {

struct CoverReport {
    int tau_max = 0;
    /// Size of a minimum maximal independent set.
    int i_min = 0;
    /// Lexicographically first minimal vertex cover of size tau_max.
    VertexSet witness_cover;
    /// Complement of witness_cover; a maximal independent set of size i_min.
    VertexSet witness_independent;
    std::uint64_t num_minimal_covers = 0;
};

/// Visits every maximal independent set exactly once (Bron-Kerbosch with
/// pivoting on the complement). Visiting order is deterministic but
/// unspecified. Requires order() <= kMaskLimit.
void for_each_maximal_independent_set(const Graph& g, const std::function<void(Mask)>& visit);

/// Every minimal vertex cover exactly once, sorted lexicographically as
/// ascending vertex lists. Isolated vertices never appear; the edgeless
/// graph yields the single empty cover.
[[nodiscard]] std::vector<VertexSet> enumerate_minimal_covers(const Graph& g);

[[nodiscard]] CoverReport tau_max(const Graph& g);

[[nodiscard]] int matching_number(const Graph& g);
[[nodiscard]] int induced_matching_number(const Graph& g);

[[nodiscard]] bool is_vertex_cover(const Graph& g, const VertexSet& w);

/// A vertex cover no proper subset of which is a cover: every member has an
/// edge to a vertex outside the set.
[[nodiscard]] bool is_minimal_vertex_cover(const Graph& g, const VertexSet& w);

[[nodiscard]] bool is_independent_set(const Graph& g, const VertexSet& w);
[[nodiscard]] bool is_maximal_independent_set(const Graph& g, const VertexSet& w);

/// Lexicographic order of the ascending vertex lists encoded by two masks.
[[nodiscard]] bool lex_less(Mask a, Mask b) noexcept;

}  // namespace covbetti
