#include "covbetti/atlas.hpp"

#include <algorithm>
#include <bit>
#include <mutex>
#include <random>
#include <string>
#include <unordered_set>

#include "covbetti/errors.hpp"

namespace covbetti {

namespace {

using detail::SmallGraph;

std::vector<CanonicalForm> extend(const std::vector<CanonicalForm>& parents, int n,
                                  const std::function<bool(const Graph&)>* keep) {
    std::unordered_set<CanonicalForm, CanonicalFormHash> seen;
    seen.reserve(parents.size() * 8);
    const int old = n - 1;
    const std::uint32_t subsets = std::uint32_t{1} << old;
    for (const auto& parent : parents) {
        const SmallGraph base = detail::from_form(parent);
        for (std::uint32_t nb = 0; nb < subsets; ++nb) {
            SmallGraph child = base;
            child.n = n;
            child.adj[old] = nb;
            for (std::uint32_t rest = nb; rest != 0; rest &= rest - 1) {
                child.adj[std::countr_zero(rest)] |= std::uint32_t{1} << old;
            }
            seen.insert(detail::canonical_form_small(child));
        }
    }
    std::vector<CanonicalForm> level(seen.begin(), seen.end());
    if (keep != nullptr) {
        std::erase_if(level, [&](const CanonicalForm& f) { return !(*keep)(f.graph()); });
    }
    std::sort(level.begin(), level.end());
    return level;
}

std::vector<CanonicalForm> base_level(int n) {
    CanonicalForm form;
    form.n = n;
    return {form};
}

class AtlasCache {
public:
    const std::vector<CanonicalForm>& level(int n) {
        std::lock_guard lock(mutex_);
        if (levels_.empty()) {
            levels_.push_back(base_level(0));
            levels_.push_back(base_level(1));
        }
        while (static_cast<int>(levels_.size()) <= n) {
            const int next = static_cast<int>(levels_.size());
            levels_.push_back(extend(levels_.back(), next, nullptr));
        }
        return levels_[static_cast<std::size_t>(n)];
    }

private:
    std::mutex mutex_;
    std::vector<std::vector<CanonicalForm>> levels_;
};

AtlasCache& atlas_cache() {
    static AtlasCache cache;
    return cache;
}

bool passes(const CanonicalForm& form, GraphFilter filter) {
    if (filter == GraphFilter::all) {
        return true;
    }
    const SmallGraph g = detail::from_form(form);
    if (filter == GraphFilter::no_isolated) {
        for (int v = 0; v < g.n; ++v) {
            if (g.adj[v] == 0) {
                return false;
            }
        }
        return true;
    }
    if (g.n == 0) {
        return true;
    }
    std::uint32_t seen = 1;
    std::uint32_t frontier = 1;
    while (frontier != 0) {
        std::uint32_t next = 0;
        for (std::uint32_t rest = frontier; rest != 0; rest &= rest - 1) {
            next |= g.adj[std::countr_zero(rest)];
        }
        frontier = next & ~seen;
        seen |= next;
    }
    return std::popcount(seen) == g.n;
}

}  // namespace

std::vector<CanonicalForm> enumerate_graphs(int n, GraphFilter filter) {
    if (n < 0) {
        throw RangeError("enumerate_graphs: n must be non-negative");
    }
    if (n > kAtlasLimit) {
        throw ResourceLimitError("enumerate_graphs: n = " + std::to_string(n), kAtlasLimit);
    }
    const auto& level = atlas_cache().level(n);
    std::vector<CanonicalForm> out;
    out.reserve(level.size());
    std::copy_if(level.begin(), level.end(), std::back_inserter(out),
                 [filter](const CanonicalForm& f) { return passes(f, filter); });
    return out;
}

std::vector<CanonicalForm> enumerate_hereditary(int n, const std::function<bool(const Graph&)>& keep) {
    if (n < 0) {
        throw RangeError("enumerate_hereditary: n must be non-negative");
    }
    if (n > kCanonicalInternalLimit) {
        throw ResourceLimitError("enumerate_hereditary: n = " + std::to_string(n), kCanonicalInternalLimit);
    }
    auto level = base_level(0);
    std::erase_if(level, [&](const CanonicalForm& f) { return !keep(f.graph()); });
    for (int k = 1; k <= n && !level.empty(); ++k) {
        level = extend(level, k, &keep);
    }
    return level;
}

Graph random_graph(int n, double edge_prob, std::uint64_t seed) {
    if (!(edge_prob >= 0.0 && edge_prob <= 1.0)) {
        throw RangeError("random_graph: edge probability must lie in [0, 1]");
    }
    if (n < 0) {
        throw RangeError("random_graph: n must be non-negative");
    }
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex j = 1; j < n; ++j) {
        for (Vertex i = 0; i < j; ++i) {
            const double x = static_cast<double>(rng() >> 11) * 0x1.0p-53;
            if (x < edge_prob) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph(n, edges);
}

FamilyTag recognize_family(const Graph& g) {
    const int n = g.order();
    if (n == 4) {
        bool all_degree_one = true;
        bool all_degree_two = true;
        for (Vertex v = 0; v < 4; ++v) {
            all_degree_one = all_degree_one && g.degree(v) == 1;
            all_degree_two = all_degree_two && g.degree(v) == 2;
        }
        if (all_degree_one) {
            return {FamilyKind::two_k2, 0};
        }
        if (all_degree_two && g.size() == 4) {
            bool triangle = false;
            for (Vertex a = 0; a < 4; ++a) {
                for (Vertex b = a + 1; b < 4; ++b) {
                    for (Vertex c = b + 1; c < 4; ++c) {
                        triangle = triangle || (g.adjacent(a, b) && g.adjacent(b, c) && g.adjacent(a, c));
                    }
                }
            }
            if (!triangle) {
                return {FamilyKind::c4, 0};
            }
        }
    }
    int s = 0;
    while ((s + 1) * (s + 1) <= n) {
        ++s;
    }
    if (s == 0 || s * s != n) {
        return {};
    }
    if (s == 1) {
        return g.size() == 0 ? FamilyTag{FamilyKind::hs, 1} : FamilyTag{};
    }
    std::vector<Vertex> clique;
    for (Vertex v = 0; v < n; ++v) {
        if (g.degree(v) == 2 * s - 2) {
            clique.push_back(v);
        } else if (g.degree(v) != 1) {
            return {};
        }
    }
    if (static_cast<int>(clique.size()) != s) {
        return {};
    }
    for (std::size_t i = 0; i < clique.size(); ++i) {
        for (std::size_t j = i + 1; j < clique.size(); ++j) {
            if (!g.adjacent(clique[i], clique[j])) {
                return {};
            }
        }
    }
    // Each clique vertex has s-1 clique neighbours, so its remaining s-1
    // neighbours are pendants; pendants have degree one, so the blocks are
    // disjoint and cover all s(s-1) non-clique vertices.
    for (Vertex c : clique) {
        int pendants = 0;
        for (Vertex u : g.neighbors(c)) {
            pendants += g.degree(u) == 1 ? 1 : 0;
        }
        if (pendants != s - 1) {
            return {};
        }
    }
    return {FamilyKind::hs, s};
}

std::string to_string(const FamilyTag& tag) {
    switch (tag.kind) {
        case FamilyKind::two_k2:
            return "2K2";
        case FamilyKind::c4:
            return "C4";
        case FamilyKind::hs:
            return "H" + std::to_string(tag.s);
        case FamilyKind::other:
            break;
    }
    return "other";
}

}  // namespace covbetti
