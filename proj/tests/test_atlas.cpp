#include <doctest.h>

#include <random>
#include <set>
#include <unordered_set>

#include "covbetti/atlas.hpp"
#include "covbetti/canonical.hpp"
#include "covbetti/covers.hpp"
#include "covbetti/errors.hpp"
#include "covbetti/families.hpp"
#include "covbetti/graph_io.hpp"
#include "support/oracles.hpp"

using namespace covbetti;

namespace {

Graph labeled_graph(int n, std::uint64_t bits) {
    std::vector<Edge> edges;
    int bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i, ++bit) {
            if ((bits >> bit) & 1U) {
                edges.emplace_back(i, j);
            }
        }
    }
    return Graph(n, edges);
}

// Isomorphism classes of all labelled graphs on n vertices by brute force.
std::set<std::uint64_t> brute_classes(int n, GraphFilter filter) {
    std::set<std::uint64_t> classes;
    const int pairs = n * (n - 1) / 2;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
        const Graph g = labeled_graph(n, bits);
        if (filter == GraphFilter::no_isolated && has_isolated_vertex(g)) {
            continue;
        }
        if (filter == GraphFilter::connected && !is_connected(g)) {
            continue;
        }
        classes.insert(oracle::brute_canonical_code(g));
    }
    return classes;
}

}  // namespace

TEST_CASE("canonical form distinguishes exactly the isomorphism classes") {
    CHECK(canonical_form(build_family(family::Path{2})) != canonical_form(build_family(family::CompleteBipartite{1, 3})));
    for (int n = 1; n <= 6; ++n) {
        std::map<std::uint64_t, CanonicalForm> by_code;
        const int pairs = n * (n - 1) / 2;
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs); ++bits) {
            const Graph g = labeled_graph(n, bits);
            const CanonicalForm form = canonical_form(g);
            const auto [it, inserted] = by_code.emplace(oracle::brute_canonical_code(g), form);
            if (!inserted) {
                CHECK(it->second == form);
            }
        }
        std::set<CanonicalForm> distinct;
        for (const auto& [code, form] : by_code) {
            distinct.insert(form);
        }
        CHECK(distinct.size() == by_code.size());
    }
}

TEST_CASE("canonical form is invariant under relabelling") {
    std::mt19937_64 rng(51);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 8);
        const Graph g = oracle::random_gnp(n, 0.2 + 0.6 * static_cast<double>(rng() % 10) / 10.0, rng);
        const CanonicalForm form = canonical_form(g);
        CHECK(canonical_form(form.graph()) == form);
        const auto labeling = canonical_labeling(g);
        CHECK(relabel(g, labeling) == form.graph());
        for (int k = 0; k < 50; ++k) {
            CHECK(canonical_form(relabel(g, oracle::random_permutation(n, rng))) == form);
        }
    }
}

TEST_CASE("canonical form on larger and symmetric graphs") {
    std::mt19937_64 rng(52);
    for (const Graph& g : {build_family(family::Hs{3}), build_family(family::Cycle{12}), build_family(family::Complete{12}),
                           Graph(12), build_family(family::CompleteBipartite{6, 6}), oracle::random_gnp(12, 0.5, rng),
                           disjoint_union(build_family(family::Cycle{5}), build_family(family::Cycle{6}))}) {
        const CanonicalForm form = canonical_form(g);
        for (int k = 0; k < 20; ++k) {
            CHECK(canonical_form(relabel(g, oracle::random_permutation(g.order(), rng))) == form);
        }
    }
    CHECK_THROWS_AS((void)canonical_form(Graph(13)), ResourceLimitError);
    // Petersen graph and the 5-prism are both cubic on 10 vertices.
    const Graph petersen = oracle::make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                                   {3, 8}, {4, 9}, {5, 7}, {7, 9}, {9, 6}, {6, 8}, {8, 5}});
    const Graph prism = oracle::make_graph(10, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}, {0, 5}, {1, 6}, {2, 7},
                                                {3, 8}, {4, 9}, {5, 6}, {6, 7}, {7, 8}, {8, 9}, {9, 5}});
    CHECK(canonical_form(petersen) != canonical_form(prism));
    CHECK(canonical_form(relabel(petersen, oracle::random_permutation(10, rng))) == canonical_form(petersen));
}

TEST_CASE("enumeration counts") {
    CHECK(enumerate_graphs(1).size() == 1);
    CHECK(enumerate_graphs(4).size() == 11);
    CHECK(enumerate_graphs(4, GraphFilter::no_isolated).size() == 7);
    CHECK(enumerate_graphs(4, GraphFilter::connected).size() == 6);
    CHECK(enumerate_graphs(5).size() == 34);
    CHECK(enumerate_graphs(6).size() == 156);
    CHECK(enumerate_graphs(7).size() == 1044);
    CHECK(enumerate_graphs(8).size() == 12346);
    CHECK(enumerate_graphs(7, GraphFilter::connected).size() == 853);
    CHECK_THROWS_AS((void)enumerate_graphs(10), ResourceLimitError);
    for (int n = 1; n <= 6; ++n) {
        for (GraphFilter f : {GraphFilter::all, GraphFilter::no_isolated, GraphFilter::connected}) {
            const auto forms = enumerate_graphs(n, f);
            CHECK(forms.size() == brute_classes(n, f).size());
            CHECK(std::is_sorted(forms.begin(), forms.end()));
            std::set<std::uint64_t> codes;
            for (const auto& form : forms) {
                codes.insert(oracle::brute_canonical_code(form.graph()));
            }
            CHECK(codes == brute_classes(n, f));
        }
    }
}

TEST_CASE("hereditary enumeration matches the filtered atlas") {
    for (int n = 1; n <= 7; ++n) {
        const auto keep = [](const Graph& g) { return is_chordal(g); };
        std::set<CanonicalForm> expected;
        for (const auto& form : enumerate_graphs(n)) {
            if (keep(form.graph())) {
                expected.insert(form);
            }
        }
        const auto found = enumerate_hereditary(n, keep);
        CHECK(std::set<CanonicalForm>(found.begin(), found.end()) == expected);
    }
}

TEST_CASE("random graphs") {
    CHECK(random_graph(10, 0.3, 7) == random_graph(10, 0.3, 7));
    CHECK(random_graph(10, 0.0, 7).size() == 0);
    CHECK(random_graph(10, 1.0, 7).size() == 45);
    CHECK_THROWS_AS((void)random_graph(5, 1.5, 1), RangeError);
    int differ = 0;
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        differ += random_graph(10, 0.5, seed) == random_graph(10, 0.5, seed + 100) ? 0 : 1;
    }
    CHECK(differ > 0);
}

TEST_CASE("family recognition") {
    CHECK(recognize_family(build_family(family::Hs{4})) == FamilyTag{FamilyKind::hs, 4});
    CHECK(recognize_family(build_family(family::Path{2})) == FamilyTag{FamilyKind::other, 0});
    CHECK(recognize_family(build_family(family::Path{3})) == FamilyTag{FamilyKind::hs, 2});
    CHECK(recognize_family(build_family(family::Cycle{5})) == FamilyTag{FamilyKind::other, 0});
    CHECK(recognize_family(build_family(family::Cycle{4})) == FamilyTag{FamilyKind::c4, 0});
    CHECK(recognize_family(build_family(family::TwoK2{})) == FamilyTag{FamilyKind::two_k2, 0});
    std::mt19937_64 rng(53);
    for (int s = 1; s <= 10; ++s) {
        const Graph h = build_family(family::Hs{s});
        CHECK(recognize_family(h) == FamilyTag{FamilyKind::hs, s});
        CHECK(recognize_family(relabel(h, oracle::random_permutation(h.order(), rng))) == FamilyTag{FamilyKind::hs, s});
    }
    CHECK(to_string(FamilyTag{FamilyKind::hs, 3}) == "H3");
}
