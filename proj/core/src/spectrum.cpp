#include "covbetti/spectrum.hpp"

#include <string>

#include "covbetti/errors.hpp"

namespace covbetti {

int min_tau_bound(int n) {
    int tau = 0;
    while (static_cast<long long>(tau + 2) * (tau + 2) < 4LL * n) {
        ++tau;
    }
    return tau;
}

bool two_sqrt_plus_le(int m, int offset, int p) {
    // 2 sqrt(m) <= p - offset
    long long rhs = static_cast<long long>(p) - offset;
    return rhs >= 0 && rhs * rhs >= 4LL * m;
}

SpectrumPlan plan_spectrum(int n, int p) {
    if (n < 2) {
        throw RangeError("plan_spectrum requires n >= 2, got " + std::to_string(n));
    }
    const int lo = min_tau_bound(n);
    if (p < lo || p > n - 2) {
        throw RangeError("plan_spectrum(" + std::to_string(n) + ", p): p = " + std::to_string(p) + " outside [" +
                         std::to_string(lo) + ", " + std::to_string(n - 2) + "]");
    }
    SpectrumPlan plan;
    plan.n = n;
    plan.p = p;
    plan.s = (p + 1) / 2 + 1;
    plan.T = p / 2 + 1;
    plan.t = (n - plan.T) / (plan.s - 1);
    plan.a = plan.T - plan.t;
    plan.b_sizes.assign(static_cast<std::size_t>(plan.s), 0);
    int remaining = n - plan.s * plan.t;
    for (auto& size : plan.b_sizes) {
        size = std::min(plan.a, remaining);
        remaining -= size;
    }
    return plan;
}

Graph build_spectrum_graph(int n, int p) {
    if (n >= 2 && p == n - 1) {
        std::vector<Edge> edges;
        for (Vertex v = 1; v < n; ++v) {
            edges.emplace_back(0, v);
        }
        return Graph(n, edges);
    }
    if (n >= 2 && p > n - 1) {
        throw RangeError("build_spectrum_graph(" + std::to_string(n) + ", " + std::to_string(p) + "): p exceeds n - 1");
    }
    const SpectrumPlan plan = plan_spectrum(n, p);
    std::vector<Edge> edges;
    for (int i = 0; i < plan.s; ++i) {
        for (int j = i + 1; j < plan.s; ++j) {
            edges.emplace_back(i, j);
        }
    }
    Vertex next = plan.s;
    for (int i = 0; i < plan.s; ++i) {
        for (int k = 0; k < plan.pendant_block(); ++k) {
            edges.emplace_back(i, next++);
        }
    }
    for (int i = 0; i < plan.s; ++i) {
        for (int k = 0; k < plan.b_sizes[static_cast<std::size_t>(i)]; ++k) {
            edges.emplace_back(i, next++);
        }
    }
    return Graph(n, edges);
}

bool pdr_in_range(int n, int p, int r) {
    if (r < 1 || 2 * r > n || p > n - r) {
        return false;
    }
    return two_sqrt_plus_le(n - 2 * (r - 1), r - 3, p);
}

Graph build_pdr_graph(int n, int p, int r) {
    if (!pdr_in_range(n, p, r)) {
        throw RangeError("build_pdr_graph(" + std::to_string(n) + ", " + std::to_string(p) + ", " +
                         std::to_string(r) + "): need 1 <= r <= n/2 and 2 sqrt(n - 2(r-1)) + r - 3 <= p <= n - r");
    }
    Graph g = build_spectrum_graph(n - 2 * (r - 1), p - (r - 1));
    const Edge edge[] = {{0, 1}};
    const Graph k2(2, edge);
    for (int k = 1; k < r; ++k) {
        g = disjoint_union(g, k2);
    }
    return g;
}

}  // namespace covbetti
