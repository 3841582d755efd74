#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "covbetti/graph.hpp"

namespace covbetti {

/// Public limit of canonical_form.
inline constexpr int kCanonicalLimit = 12;

/// Largest order the labeller handles internally (hereditary searches).
inline constexpr int kCanonicalInternalLimit = 16;

/// Upper triangle of the adjacency matrix under the canonical vertex order,
/// in graph6 column order, packed most significant bit first into a
/// 128-bit value split as (high, low). Equal forms <=> isomorphic graphs.
struct CanonicalForm {
    int n = 0;
    std::array<std::uint64_t, 2> bits{0, 0};

    friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;

    /// The canonically labelled graph.
    [[nodiscard]] Graph graph() const;
    [[nodiscard]] std::string graph6() const;
};

struct CanonicalFormHash {
    std::size_t operator()(const CanonicalForm& f) const noexcept {
        std::uint64_t h = f.bits[0] * 0x9E3779B97F4A7C15ULL ^ (f.bits[1] + 0x632BE59BD9B4E019ULL + (h_rot(f.bits[0])));
        return static_cast<std::size_t>(h ^ static_cast<std::uint64_t>(f.n) * 0xBF58476D1CE4E5B9ULL);
    }

private:
    static std::uint64_t h_rot(std::uint64_t x) noexcept { return (x << 31) | (x >> 33); }
};

/// Minimum adjacency string over the leaves of an individualisation /
/// refinement search tree (equitable colour refinement, first non-singleton
/// target cell, prefix and automorphism pruning). Relabelling-invariant.
/// Throws ResourceLimitError above kCanonicalLimit vertices.
[[nodiscard]] CanonicalForm canonical_form(const Graph& g);

/// `labeling[v]` is the canonical position of vertex v.
[[nodiscard]] std::vector<Vertex> canonical_labeling(const Graph& g);

namespace detail {

/// Adjacency rows as masks; order <= kCanonicalInternalLimit.
struct SmallGraph {
    int n = 0;
    std::array<std::uint32_t, kCanonicalInternalLimit> adj{};
};

[[nodiscard]] SmallGraph to_small(const Graph& g);
[[nodiscard]] SmallGraph from_form(const CanonicalForm& form);
[[nodiscard]] CanonicalForm canonical_form_small(const SmallGraph& g, std::array<int, kCanonicalInternalLimit>* order = nullptr);

}  // namespace detail

}  // namespace covbetti
