#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "covbetti/canonical.hpp"
#include "covbetti/graph.hpp"

namespace covbetti {

/// Largest n for the full isomorph-free atlas.
inline constexpr int kAtlasLimit = 9;

enum class GraphFilter { all, no_isolated, connected };

/// One canonical form per isomorphism class on n vertices passing `filter`,
/// sorted by form. Classes are generated by adding a vertex to every class
/// on n-1 vertices in every possible way and deduplicating canonical forms.
/// Levels are cached for the lifetime of the process. Throws
/// ResourceLimitError above kAtlasLimit.
[[nodiscard]] std::vector<CanonicalForm> enumerate_graphs(int n, GraphFilter filter = GraphFilter::all);

/// Isomorph-free enumeration on n vertices restricted to a hereditary class
/// (closed under deleting a vertex): every level keeps only the classes
/// satisfying `keep`, so the search never leaves the class. Works up to
/// kCanonicalInternalLimit vertices; the caller is responsible for the size
/// of the class.
[[nodiscard]] std::vector<CanonicalForm> enumerate_hereditary(int n, const std::function<bool(const Graph&)>& keep);

/// Erdos-Renyi G(n, edge_prob) driven by std::mt19937_64 seeded with
/// `seed`. Pairs (u, v), u < v, are visited in graph6 column order and the
/// edge is present iff the top 53 bits of the next draw, scaled to [0, 1),
/// fall below edge_prob. Identical output on every platform.
[[nodiscard]] Graph random_graph(int n, double edge_prob, std::uint64_t seed);

enum class FamilyKind { two_k2, c4, hs, other };

struct FamilyTag {
    FamilyKind kind = FamilyKind::other;
    /// Clique size for FamilyKind::hs, 0 otherwise.
    int s = 0;

    friend bool operator==(const FamilyTag&, const FamilyTag&) = default;
};

/// Structural recognition of 2K_2, C_4 and H_s (H_1 = K_1, H_2 = P_3)
/// without isomorphism testing.
[[nodiscard]] FamilyTag recognize_family(const Graph& g);

[[nodiscard]] std::string to_string(const FamilyTag& tag);

}  // namespace covbetti
