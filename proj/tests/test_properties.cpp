#include <doctest.h>

#include <random>

#include "covbetti/betti.hpp"
#include "covbetti/covers.hpp"
#include "covbetti/harness.hpp"
#include "covbetti/spectrum.hpp"
#include "support/oracles.hpp"

using namespace covbetti;

TEST_CASE("cover and matching identities on random graphs") {
    std::mt19937_64 rng(61);
    for (int trial = 0; trial < 500; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 8);
        const Graph g = oracle::random_isolate_free(n, rng);
        const CoverReport c = tau_max(g);
        CHECK(c.tau_max + c.i_min == n);
        CHECK((c.tau_max + 2) * (c.tau_max + 2) >= 4 * n);
        const int nu = induced_matching_number(g);
        const int beta = matching_number(g);
        CHECK(nu <= beta);
        CHECK(nu >= 1);
        CHECK(is_gap_free(g) == (nu <= 1));
        CHECK(beta <= c.tau_max);
    }
}

TEST_CASE("betti bounds on random graphs") {
    std::mt19937_64 rng(62);
    for (int trial = 0; trial < 300; ++trial) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const Graph g = oracle::random_isolate_free(n, rng);
        const BettiTable t = betti_table(g);
        CHECK(t.at(1, 2) == g.size());
        for (const auto& [key, value] : t.entries) {
            CHECK(value >= 1);
            CHECK((key.first != 0 || key.second == 0));
            CHECK(key.second >= key.first);
        }
        const int tau = tau_max(g).tau_max;
        const int nu = induced_matching_number(g);
        CHECK(nu <= t.reg);
        CHECK(t.reg <= matching_number(g));
        CHECK(tau <= t.pd);
        CHECK(t.pd <= n - 1);
        if (is_chordal(g)) {
            CHECK(t.pd == tau);
            CHECK(t.reg == nu);
        }
        const DualReport d = dual_check(g);
        CHECK(d.reg_dual == t.pd);
        CHECK(d.bounds_tau());
    }
}

TEST_CASE("realizable pairs appear in the pd-reg spectrum") {
    for (int n = 2; n <= 8; ++n) {
        const PdrSpectrumReport spec = pdr_spectrum(n);
        CHECK(spec.ok());
        for (int r = 1; 2 * r <= n; ++r) {
            for (int p = 0; p <= n; ++p) {
                if (pdr_in_range(n, p, r)) {
                    CHECK(spec.points.contains({p, r}));
                }
            }
        }
    }
}
