#include "covbetti/canonical.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

#include "covbetti/errors.hpp"
#include "covbetti/graph_io.hpp"

namespace covbetti {

namespace detail {

namespace {

using u128 = unsigned __int128;
using Cells = std::array<std::uint32_t, kCanonicalInternalLimit>;
using Perm = std::array<int, kCanonicalInternalLimit>;

struct Partition {
    Cells cells{};
    int count = 0;
};

int bit_count(int n) { return n * (n - 1) / 2; }

/// Splits cells by neighbour counts into each splitter cell until the
/// partition is equitable. Sub-cells are ordered by increasing count, so the
/// result depends only on the ordered partition, not on labels.
void refine(const SmallGraph& g, Partition& p) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int s = 0; s < p.count && !changed; ++s) {
            const std::uint32_t splitter = p.cells[s];
            for (int c = 0; c < p.count; ++c) {
                const std::uint32_t cell = p.cells[c];
                if (std::has_single_bit(cell)) {
                    continue;
                }
                std::array<std::uint32_t, kCanonicalInternalLimit + 1> by_count{};
                int distinct = 0;
                for (std::uint32_t rest = cell; rest != 0; rest &= rest - 1) {
                    int v = std::countr_zero(rest);
                    int k = std::popcount(g.adj[v] & splitter);
                    if (by_count[k] == 0) {
                        ++distinct;
                    }
                    by_count[k] |= std::uint32_t{1} << v;
                }
                if (distinct == 1) {
                    continue;
                }
                Partition next;
                for (int i = 0; i < c; ++i) {
                    next.cells[next.count++] = p.cells[i];
                }
                for (auto part : by_count) {
                    if (part != 0) {
                        next.cells[next.count++] = part;
                    }
                }
                for (int i = c + 1; i < p.count; ++i) {
                    next.cells[next.count++] = p.cells[i];
                }
                p = next;
                changed = true;
                break;
            }
        }
    }
}

/// Bits of the relabelled adjacency for columns j < fixed, where the first
/// `fixed` cells are singletons. Left-aligned into the full string width.
u128 prefix_bits(const SmallGraph& g, const Partition& p, int fixed) {
    u128 out = 0;
    for (int j = 1; j < fixed; ++j) {
        int vj = std::countr_zero(p.cells[j]);
        for (int i = 0; i < j; ++i) {
            int vi = std::countr_zero(p.cells[i]);
            out = (out << 1) | ((g.adj[vi] >> vj) & 1U);
        }
    }
    return out << (bit_count(g.n) - bit_count(fixed));
}

struct Search {
    const SmallGraph& g;
    bool have_best = false;
    u128 best = 0;
    Perm best_order{};
    Perm first_order{};
    std::vector<int> path{};
    std::vector<int> first_path{};
    std::vector<int> best_path{};
    std::vector<Perm> automorphisms{};

    static int common_prefix(const std::vector<int>& a, const std::vector<int>& b) {
        int k = 0;
        while (k < static_cast<int>(a.size()) && k < static_cast<int>(b.size()) && a[k] == b[k]) {
            ++k;
        }
        return k;
    }

    void record_automorphism(const Perm& from, const Perm& to) {
        Perm gamma{};
        for (int k = 0; k < g.n; ++k) {
            gamma[from[k]] = to[k];
        }
        if (automorphisms.size() < 64) {
            automorphisms.push_back(gamma);
        }
    }

    /// Returns the depth to resume at; anything below the current depth
    /// unwinds the recursion up to that ancestor.
    int visit(Partition p) {
        refine(g, p);
        const int depth = static_cast<int>(path.size());
        int fixed = 0;
        while (fixed < p.count && std::has_single_bit(p.cells[fixed])) {
            ++fixed;
        }
        if (have_best && fixed > 1) {
            u128 prefix = prefix_bits(g, p, fixed);
            u128 best_prefix = fixed == g.n ? best : (best >> (bit_count(g.n) - bit_count(fixed))) << (bit_count(g.n) - bit_count(fixed));
            if (prefix > best_prefix) {
                return depth;
            }
        }
        if (p.count == g.n) {
            Perm order{};
            for (int k = 0; k < g.n; ++k) {
                order[k] = std::countr_zero(p.cells[k]);
            }
            u128 value = prefix_bits(g, p, g.n);
            if (!have_best) {
                have_best = true;
                best = value;
                best_order = first_order = order;
                first_path = best_path = path;
                return depth;
            }
            if (value == best) {
                record_automorphism(best_order, order);
                return common_prefix(path, best_path);
            }
            if (value < best) {
                best = value;
                best_order = order;
                best_path = path;
            }
            return depth;
        }
        int target = fixed;
        while (std::has_single_bit(p.cells[target])) {
            ++target;
        }
        const std::uint32_t cell = p.cells[target];
        std::uint32_t explored = 0;
        for (std::uint32_t rest = cell; rest != 0; rest &= rest - 1) {
            int v = std::countr_zero(rest);
            if (explored != 0 && in_explored_orbit(v, explored)) {
                continue;
            }
            explored |= std::uint32_t{1} << v;
            Partition child;
            for (int i = 0; i < target; ++i) {
                child.cells[child.count++] = p.cells[i];
            }
            child.cells[child.count++] = std::uint32_t{1} << v;
            child.cells[child.count++] = cell & ~(std::uint32_t{1} << v);
            for (int i = target + 1; i < p.count; ++i) {
                child.cells[child.count++] = p.cells[i];
            }
            path.push_back(v);
            int resume = visit(child);
            path.pop_back();
            if (resume < depth) {
                return resume;
            }
        }
        return depth;
    }

    /// Orbit test under the automorphisms found so far that fix the current
    /// path pointwise.
    bool in_explored_orbit(int v, std::uint32_t explored) const {
        std::array<int, kCanonicalInternalLimit> parent{};
        std::iota(parent.begin(), parent.begin() + g.n, 0);
        auto find = [&](int x) {
            while (parent[x] != x) {
                parent[x] = parent[parent[x]];
                x = parent[x];
            }
            return x;
        };
        bool any = false;
        for (const auto& gamma : automorphisms) {
            bool fixes = std::all_of(path.begin(), path.end(), [&](int u) { return gamma[u] == u; });
            if (!fixes) {
                continue;
            }
            any = true;
            for (int x = 0; x < g.n; ++x) {
                int a = find(x);
                int b = find(gamma[x]);
                if (a != b) {
                    parent[a] = b;
                }
            }
        }
        if (!any) {
            return false;
        }
        int root = find(v);
        for (std::uint32_t rest = explored; rest != 0; rest &= rest - 1) {
            if (find(std::countr_zero(rest)) == root) {
                return true;
            }
        }
        return false;
    }
};

}  // namespace

SmallGraph to_small(const Graph& g) {
    SmallGraph s;
    s.n = g.order();
    for (Vertex v = 0; v < g.order(); ++v) {
        s.adj[v] = static_cast<std::uint32_t>(g.neighbor_mask(v));
    }
    return s;
}

SmallGraph from_form(const CanonicalForm& form) {
    SmallGraph s;
    s.n = form.n;
    u128 bits = (static_cast<u128>(form.bits[0]) << 64) | form.bits[1];
    int position = bit_count(form.n) - 1;
    for (int j = 1; j < form.n; ++j) {
        for (int i = 0; i < j; ++i, --position) {
            if ((bits >> position) & 1U) {
                s.adj[i] |= std::uint32_t{1} << j;
                s.adj[j] |= std::uint32_t{1} << i;
            }
        }
    }
    return s;
}

CanonicalForm canonical_form_small(const SmallGraph& g, std::array<int, kCanonicalInternalLimit>* order) {
    CanonicalForm form;
    form.n = g.n;
    if (g.n == 0) {
        return form;
    }
    Partition root;
    root.cells[0] = (std::uint32_t{1} << g.n) - 1;
    root.count = 1;
    Search search{g};
    search.visit(root);
    form.bits[0] = static_cast<std::uint64_t>(search.best >> 64);
    form.bits[1] = static_cast<std::uint64_t>(search.best);
    if (order != nullptr) {
        *order = search.best_order;
    }
    return form;
}

}  // namespace detail

Graph CanonicalForm::graph() const {
    auto small = detail::from_form(*this);
    std::vector<Edge> edges;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            if ((small.adj[i] >> j) & 1U) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph(n, edges);
}

std::string CanonicalForm::graph6() const { return to_graph6(graph()); }

CanonicalForm canonical_form(const Graph& g) {
    if (g.order() > kCanonicalLimit) {
        throw ResourceLimitError("canonical_form: graph has " + std::to_string(g.order()) + " vertices",
                                 kCanonicalLimit);
    }
    return detail::canonical_form_small(detail::to_small(g));
}

std::vector<Vertex> canonical_labeling(const Graph& g) {
    if (g.order() > kCanonicalLimit) {
        throw ResourceLimitError("canonical_labeling: graph has " + std::to_string(g.order()) + " vertices",
                                 kCanonicalLimit);
    }
    std::array<int, kCanonicalInternalLimit> order{};
    (void)detail::canonical_form_small(detail::to_small(g), &order);
    std::vector<Vertex> labeling(static_cast<std::size_t>(g.order()));
    for (int k = 0; k < g.order(); ++k) {
        labeling[order[k]] = k;
    }
    return labeling;
}

}  // namespace covbetti
