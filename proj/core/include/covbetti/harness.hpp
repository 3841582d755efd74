#pragma once

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "covbetti/atlas.hpp"
#include "covbetti/homology.hpp"

namespace covbetti {

/// tau_max >= ceil(2 sqrt(n) - 2) on the graphs visited at one order n.
struct BoundReport {
    int n = 0;
    std::uint64_t classes_visited = 0;
    /// graph6 of graphs breaking the bound.
    std::vector<std::string> violations;
    /// graph6 of graphs meeting it with equality.
    std::vector<std::string> equality_class;

    [[nodiscard]] bool ok() const noexcept { return violations.empty(); }
    /// {"n":..,"classes_visited":..,"violations":[..],"equality_class":[..]}
    [[nodiscard]] std::string to_json() const;
};

/// Every isolate-free class on n <= kAtlasLimit vertices.
[[nodiscard]] BoundReport verify_bound_exhaustive(int n);

/// `samples` random isolate-free graphs on n vertices (see
/// random_isolate_free_graph); equality witnesses are deduplicated.
[[nodiscard]] BoundReport verify_bound_sampled(int n, int samples, std::uint64_t seed);

/// Random isolate-free graph on n >= 2 vertices: repeatedly draws an edge
/// probability in [0.1, 0.9) and a random_graph seed from `rng` until no
/// vertex is isolated.
[[nodiscard]] Graph random_isolate_free_graph(int n, std::mt19937_64& rng);

/// For perfect squares n <= kAtlasLimit: tau_max = 2 sqrt(n) - 2 exactly
/// on 2K_2, C_4 and H_s among the isolate-free classes.
struct ClassificationReport {
    int n = 0;
    std::uint64_t classes_visited = 0;
    /// (graph6, recognised family) of every class attaining equality.
    std::vector<std::pair<std::string, std::string>> equality_class;
    /// graph6 of classes where equality and recognition disagree.
    std::vector<std::string> mismatches;

    [[nodiscard]] bool ok() const noexcept { return mismatches.empty(); }
    [[nodiscard]] std::string to_json() const;
};

/// Throws RangeError unless n is a perfect square in [1, kAtlasLimit].
[[nodiscard]] ClassificationReport verify_classification(int n);

/// All (pd, reg) pairs realised by isolate-free graphs on n vertices.
struct PdrSpectrumReport {
    int n = 0;
    FieldSpec field;
    std::uint64_t classes_visited = 0;
    /// (p, r) -> graph6 of the first witness in canonical order.
    std::map<std::pair<int, int>, std::string> points;
    std::vector<int> reg_one_row;
    std::vector<int> expected_reg_one_row;
    /// (p, r) with r >= 2 whose (p, r - 1) is missing.
    std::vector<std::pair<int, int>> conjecture_violations;

    [[nodiscard]] bool reg_one_row_ok() const { return reg_one_row == expected_reg_one_row; }
    [[nodiscard]] bool ok() const { return reg_one_row_ok() && conjecture_violations.empty(); }
    /// Header "n,p,r,witness_graph6" then one line per point sorted by (p, r).
    [[nodiscard]] std::string to_csv() const;
    [[nodiscard]] std::string to_json() const;
};

/// Requires 2 <= n <= 8.
[[nodiscard]] PdrSpectrumReport pdr_spectrum(int n, FieldSpec field = {});

/// Checks build_spectrum_graph(n, p) for every legal p: n vertices,
/// tau_max = p, chordal, gap-free, induced matching number 1, and (when
/// n <= betti_max_n) pd = p and reg = 1 by Hochster's formula.
struct SpectrumReport {
    int n = 0;
    std::vector<int> p_values;
    bool betti_checked = false;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
    [[nodiscard]] std::string to_json() const;
};

[[nodiscard]] SpectrumReport verify_spectrum(int n, FieldSpec field = {}, int betti_max_n = 14);

/// Checks build_pdr_graph(n, p, r) for every legal (p, r): pd = p, reg = r.
struct PdrGraphReport {
    int n = 0;
    std::vector<std::pair<int, int>> checked;
    std::vector<std::string> failures;

    [[nodiscard]] bool ok() const noexcept { return failures.empty(); }
    [[nodiscard]] std::string to_json() const;
};

[[nodiscard]] PdrGraphReport verify_pdr_graphs(int n, FieldSpec field = {});

/// Isolate-free classes on n vertices with tau_max = ceil(2 sqrt(n) - 2)
/// that are neither chordal nor gap-free. tau_max is monotone under taking
/// induced subgraphs, so the search enumerates the hereditary class
/// tau_max <= target.
struct ExtremalSearchReport {
    int n = 0;
    int target = 0;
    std::uint64_t hereditary_classes = 0;
    std::uint64_t attaining = 0;
    std::vector<std::string> non_chordal_non_gap_free;

    [[nodiscard]] std::string to_json() const;
};

[[nodiscard]] ExtremalSearchReport search_non_chordal_extremal(int n);

}  // namespace covbetti
