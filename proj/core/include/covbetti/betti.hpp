#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <string>
#include <utility>

#include "covbetti/graph.hpp"
#include "covbetti/homology.hpp"

namespace covbetti {

/// Default cap on the vertex count for subset-sum Betti computations.
inline constexpr int kDefaultBettiLimit = 16;

/// kDefaultBettiLimit, or the value of COVBETTI_BETTI_MAX_N when set.
[[nodiscard]] int betti_limit_from_env();

/// Graded Betti numbers of S/I over a field. entries maps (i, j) to a
/// non-zero beta_{i,j}; beta_{0,0} = 1 is always present.
struct BettiTable {
    int n = 0;
    FieldSpec field;
    std::map<std::pair<int, int>, std::uint64_t> entries;
    int pd = 0;
    int reg = 0;

    [[nodiscard]] std::uint64_t at(int i, int j) const;

    /// {"n":..,"char":..,"entries":[{"i":..,"j":..,"beta":..},..],"pd":..,"reg":..}
    /// with entries sorted by (i, j).
    [[nodiscard]] std::string to_json() const;

    /// Columns i = 0..pd, rows j - i = 0..reg, '.' for zero, plus a
    /// "total:" row.
    [[nodiscard]] std::string to_ascii() const;
};

/// Betti table of S/I(g) by Hochster's formula over every vertex subset.
/// Throws ResourceLimitError when g.order() > max_n.
[[nodiscard]] BettiTable betti_table(const Graph& g, FieldSpec field = {}, int max_n = betti_limit_from_env());

/// Same values as betti_table(...).pd / .reg, skipping subsets that cannot
/// raise the running maximum.
[[nodiscard]] int proj_dim(const Graph& g, FieldSpec field = {}, int max_n = betti_limit_from_env());
[[nodiscard]] int regularity(const Graph& g, FieldSpec field = {}, int max_n = betti_limit_from_env());

/// Reduced homology k -> dim of Ind(g[w]), non-zero entries only.
[[nodiscard]] std::map<int, std::size_t> hochster_summand(const Graph& g, const VertexSet& w, FieldSpec field = {});

/// Betti table of S/I_D for the Stanley-Reisner ideal of the complex D on
/// ground set {0..n-1} given by a downward-closed face predicate. No
/// homotopy reductions are applied.
[[nodiscard]] BettiTable stanley_reisner_betti(int n, const std::function<bool(Mask)>& is_face, FieldSpec field = {},
                                               int max_n = betti_limit_from_env());

struct DualReport {
    /// Regularity of the cover ideal I(g)^v (as an ideal).
    int reg_dual = 0;
    int pd_primal = 0;
    int tau_max = 0;
    /// Betti table of S / I(g)^v.
    BettiTable dual_table;

    [[nodiscard]] bool terai_holds() const noexcept { return reg_dual == pd_primal; }
    [[nodiscard]] bool bounds_tau() const noexcept { return reg_dual >= tau_max; }
};

/// Computes reg(I(g)^v) from the Alexander dual complex, whose facets are the
/// complements of the edges, alongside pd(g) and tau_max(g). Throws
/// PreconditionError if g has an isolated vertex or no edge.
[[nodiscard]] DualReport dual_check(const Graph& g, FieldSpec field = {}, int max_n = betti_limit_from_env());

}  // namespace covbetti
