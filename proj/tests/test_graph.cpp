#include <doctest.h>

#include <random>

#include "covbetti/errors.hpp"
#include "covbetti/families.hpp"
#include "covbetti/graph.hpp"
#include "covbetti/graph_io.hpp"
#include "support/oracles.hpp"

using namespace covbetti;

TEST_CASE("graph construction") {
    const Graph g = oracle::make_graph(4, {{1, 0}, {2, 3}});
    CHECK(g.order() == 4);
    CHECK(g.size() == 2);
    CHECK(g.adjacent(0, 1));
    CHECK(g.adjacent(1, 0));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
    CHECK(g.degree(3) == 1);

    const std::vector<Edge> loop{{1, 1}};
    CHECK_THROWS_AS(Graph(3, loop), PreconditionError);
    const std::vector<Edge> dup{{0, 1}, {1, 0}};
    CHECK_THROWS_AS(Graph(3, dup), PreconditionError);
    const std::vector<Edge> out{{0, 3}};
    CHECK_THROWS_AS(Graph(3, out), RangeError);
    CHECK(Graph(0).order() == 0);
}

TEST_CASE("graph operations") {
    const Graph k4 = build_family(family::Complete{4});
    CHECK(complement(k4).size() == 0);
    const Graph k2 = build_family(family::Complete{2});
    CHECK(disjoint_union(k2, k2) == build_family(family::TwoK2{}));
    const Graph c5 = build_family(family::Cycle{5});
    const std::vector<Vertex> keep{0, 1, 2};
    CHECK(induced_subgraph(c5, keep) == build_family(family::Path{2}));
    CHECK(isolated_vertices(oracle::make_graph(4, {{1, 2}})) == VertexSet{0, 3});
    CHECK(has_isolated_vertex(oracle::make_graph(3, {{0, 1}})));
    CHECK(is_connected(c5));
    CHECK_FALSE(is_connected(build_family(family::TwoK2{})));
    CHECK(mask_to_set(0b1011) == VertexSet{0, 1, 3});
    const std::vector<Vertex> vs{0, 2};
    CHECK(set_to_mask(vs) == 0b101);
}

TEST_CASE("complement is an involution and relabel preserves structure") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 10);
        const Graph g = oracle::random_gnp(n, 0.4, rng);
        CHECK(complement(complement(g)) == g);
        CHECK(complement(g).size() + g.size() == static_cast<std::size_t>(n * (n - 1) / 2));
        const auto perm = oracle::random_permutation(n, rng);
        const Graph h = relabel(g, perm);
        for (auto [u, v] : g.edges()) {
            CHECK(h.adjacent(perm[static_cast<std::size_t>(u)], perm[static_cast<std::size_t>(v)]));
        }
        CHECK(h.size() == g.size());
    }
}

TEST_CASE("chordality and gap-freeness") {
    CHECK_FALSE(is_chordal(build_family(family::Cycle{4})));
    for (int s = 1; s <= 8; ++s) {
        CHECK(is_chordal(build_family(family::Hs{s})));
    }
    for (int n = 2; n <= 40; ++n) {
        CHECK(is_chordal(build_family(family::Gn{n})));
    }
    CHECK_FALSE(is_gap_free(build_family(family::TwoK2{})));
    CHECK(is_gap_free(build_family(family::Hs{4})));
    CHECK(is_gap_free(build_family(family::Cycle{5})));
    CHECK_FALSE(is_gap_free(build_family(family::Cycle{6})));
    CHECK(is_bipartite(build_family(family::Cycle{4})));
    CHECK_FALSE(is_bipartite(build_family(family::Cycle{5})));
}

TEST_CASE("chordal, gap-free and bipartite agree with subset search") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 400; ++trial) {
        const int n = 1 + static_cast<int>(rng() % 7);
        const Graph g = oracle::random_gnp(n, 0.2 + 0.6 * static_cast<double>(trial % 5) / 5.0, rng);
        CHECK(is_chordal(g) == !oracle::has_chordless_cycle(g));
        CHECK(is_gap_free(g) == !oracle::has_induced_2k2(g));
        CHECK(is_bipartite(g) == oracle::bipartite(g));
    }
}

TEST_CASE("families") {
    const Graph h5 = build_family(family::Hs{5});
    CHECK(h5.order() == 25);
    CHECK(h5.size() == 30);
    for (int v = 0; v < 5; ++v) {
        CHECK(h5.degree(v) == 8);
    }
    for (int v = 5; v < 25; ++v) {
        CHECK(h5.degree(v) == 1);
    }
    CHECK(build_family(family::Hs{1}) == Graph(1));
    const Graph g27 = build_family(family::Gn{27});
    CHECK(g27.order() == 27);
    CHECK(g27.size() == 32);
    CHECK(build_family(family::CompleteBipartite{1, 3}).size() == 3);
    CHECK(build_family(family::Path{3}).size() == 3);
    CHECK_THROWS_AS((void)build_family(family::Hs{0}), RangeError);
    CHECK_THROWS_AS((void)build_family(family::Cycle{2}), RangeError);
    CHECK_THROWS_AS((void)build_family(family::Gn{1}), RangeError);

    CHECK(build_family(parse_family("hs:5")) == h5);
    CHECK(build_family(parse_family("hs 5")) == h5);
    CHECK(build_family(parse_family("c4")) == build_family(family::Cycle{4}));
    CHECK(build_family(parse_family("kbip:2,3")) == build_family(family::CompleteBipartite{2, 3}));
    CHECK(build_family(parse_family("pdr:8,5,2")).order() == 8);
    CHECK_THROWS((void)parse_family("nonsense"));
    for (const char* text : {"hs:3", "gn:27", "k:5", "kbip:1,3", "cycle:4", "path:3", "2k2", "spectrum:10,5", "pdr:8,5,2"}) {
        const FamilySpec spec = parse_family(text);
        CHECK(build_family(parse_family(to_string(spec))) == build_family(spec));
    }
}

TEST_CASE("edge list format") {
    const Graph k2 = parse_edge_list("2 1\n0 1");
    CHECK(k2 == build_family(family::Complete{2}));
    CHECK(parse_edge_list(to_edge_list(build_family(family::Hs{3}))) == build_family(family::Hs{3}));
    CHECK(parse_edge_list("3 0\n") == Graph(3));
    CHECK(parse_edge_list("\n3 1\n\n0 2\n\n") == oracle::make_graph(3, {{0, 2}}));
    CHECK_THROWS_AS((void)parse_edge_list("2 1\n0 2"), ParseError);
    CHECK_THROWS_AS((void)parse_edge_list("2 1\n1 1"), ParseError);
    CHECK_THROWS_AS((void)parse_edge_list("3 2\n0 1\n1 0"), ParseError);
    CHECK_THROWS_AS((void)parse_edge_list("3 2\n0 1"), ParseError);
    CHECK_THROWS_AS((void)parse_edge_list("3 1\n0 x"), ParseError);
    CHECK_THROWS_AS((void)parse_edge_list(""), ParseError);
    CHECK(detect_format("2 1\n0 1") == GraphFormat::edge_list);
    CHECK(detect_format("Cr") == GraphFormat::graph6);
}

TEST_CASE("graph6 format") {
    CHECK(to_graph6(Graph(0)) == "?");
    CHECK(to_graph6(build_family(family::Cycle{4})) == "Cl");
    CHECK(parse_graph6("Cl") == build_family(family::Cycle{4}));
    CHECK(parse_graph6(">>graph6<<Cl\n") == build_family(family::Cycle{4}));
    CHECK(parse_graph6("Cr").edges() == std::vector<Edge>{{0, 1}, {0, 2}, {1, 3}, {2, 3}});
    CHECK(to_graph6(build_family(family::Complete{5})) == "D~{");
    CHECK_THROWS_AS((void)parse_graph6("C"), ParseError);
    CHECK_THROWS_AS((void)parse_graph6("Bx"), ParseError);  // non-zero padding bit
    CHECK_THROWS_AS((void)parse_graph6("C\x7f"), ParseError);

    std::mt19937_64 rng(13);
    for (int n : {0, 1, 2, 5, 6, 7, 30, 62, 63, 64, 100}) {
        for (int trial = 0; trial < 5; ++trial) {
            const Graph g = oracle::random_gnp(n, 0.3, rng);
            const std::string text = to_graph6(g);
            CHECK(parse_graph6(text) == g);
            CHECK(parse_graph(text) == g);
            CHECK(parse_graph(emit_graph(g, GraphFormat::edge_list)) == g);
        }
    }
    CHECK(to_graph6(Graph(63)).front() == '~');
}
