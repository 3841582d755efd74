#pragma once

#include <vector>

#include "covbetti/graph.hpp"

namespace covbetti {

/// Block arithmetic of the reg = 1 construction with projective dimension
/// p on n vertices: a clique K_s, a pendant block of t-1 vertices on every
/// clique vertex, and extra pendant blocks B_1..B_s of the listed sizes.
struct SpectrumPlan {
    int n = 0;
    int p = 0;
    int s = 0;  ///< ceil(p/2) + 1
    int T = 0;  ///< floor(p/2) + 1
    int t = 0;  ///< largest with (s-1)t + T <= n
    int a = 0;  ///< T - t
    std::vector<int> b_sizes;

    [[nodiscard]] int pendant_block() const noexcept { return t - 1; }
};

/// Smallest integer tau >= 0 with tau >= 2 sqrt(n) - 2, i.e. with
/// (tau + 2)^2 >= 4n. Exact integer arithmetic.
[[nodiscard]] int min_tau_bound(int n);

/// True iff real 2 sqrt(m) + offset <= p, evaluated exactly.
[[nodiscard]] bool two_sqrt_plus_le(int m, int offset, int p);

/// Requires n >= 2 and min_tau_bound(n) <= p <= n - 2; RangeError
/// otherwise. B_1 receives a vertices and the remaining n - st - a are
/// poured into B_2, B_3, ... in order, each capped at a.
[[nodiscard]] SpectrumPlan plan_spectrum(int n, int p);

/// Graph on n vertices, chordal and gap-free, with tau_max = pd = p and
/// reg = 1. p = n - 1 gives the star K_{1,n-1} with centre 0. Otherwise the
/// clique is 0..s-1, followed by the pendant blocks W_1..W_s (t-1 each) and
/// then B_1..B_s, each block attached to its clique vertex.
[[nodiscard]] Graph build_spectrum_graph(int n, int p);

/// True iff r >= 1, 2r <= n and 2 sqrt(n - 2(r-1)) + r - 3 <= p <= n - r.
[[nodiscard]] bool pdr_in_range(int n, int p, int r);

/// build_spectrum_graph(n - 2(r-1), p - (r-1)) followed by r-1 disjoint
/// edges; pd = p and reg = r. RangeError outside pdr_in_range.
[[nodiscard]] Graph build_pdr_graph(int n, int p, int r);

}  // namespace covbetti
