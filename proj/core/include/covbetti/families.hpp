#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "covbetti/graph.hpp"

namespace covbetti {

namespace family {

/// K_s with s-1 private pendant vertices on each clique vertex (s >= 1).
/// Clique is 0..s-1; the pendants of clique vertex i are
/// s + i(s-1) .. s + i(s-1) + s-2.
struct Hs {
    int s;
};

/// Extremal chordal gap-free graph on n >= 2 vertices: H_a for
/// a^2 <= n < (a+1)^2, plus up to two rounds of leaves on the clique
/// vertices 0, 1, ... appended as vertices a^2, a^2+1, ...
struct Gn {
    int n;
};

struct Complete {
    int s;
};

/// Parts 0..r-1 and r..r+s-1.
struct CompleteBipartite {
    int r;
    int s;
};

/// Cycle 0-1-...-(length-1)-0, length >= 3.
struct Cycle {
    int length;
};

/// Path with `length` edges on vertices 0..length.
struct Path {
    int length;
};

struct TwoK2 {};

/// See build_spectrum_graph.
struct Spectrum {
    int n;
    int p;
};

/// See build_pdr_graph.
struct Pdr {
    int n;
    int p;
    int r;
};

}  // namespace family

using FamilySpec = std::variant<family::Hs, family::Gn, family::Complete, family::CompleteBipartite, family::Cycle,
                                family::Path, family::TwoK2, family::Spectrum, family::Pdr>;

/// Throws RangeError when a parameter is outside the kind's legal range.
[[nodiscard]] Graph build_family(const FamilySpec& spec);

/// Parses "hs:5", "gn:27", "k:5", "kbip:1,3", "cycle:4" (alias "c4"),
/// "path:3", "2k2", "spectrum:10,5", "pdr:8,5,2". Also accepts the
/// whitespace-separated form "hs 5".
[[nodiscard]] FamilySpec parse_family(std::string_view text);

[[nodiscard]] std::string to_string(const FamilySpec& spec);

}  // namespace covbetti
