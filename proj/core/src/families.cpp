#include "covbetti/families.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <vector>

#include "covbetti/errors.hpp"
#include "covbetti/spectrum.hpp"

namespace covbetti {

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw RangeError(what);
    }
}

void add_hs_edges(int s, std::vector<Edge>& edges) {
    for (int i = 0; i < s; ++i) {
        for (int j = i + 1; j < s; ++j) {
            edges.emplace_back(i, j);
        }
    }
    for (int i = 0; i < s; ++i) {
        for (int k = 0; k < s - 1; ++k) {
            edges.emplace_back(i, s + i * (s - 1) + k);
        }
    }
}

Graph build(const family::Hs& f) {
    require(f.s >= 1, "Hs requires s >= 1, got " + std::to_string(f.s));
    std::vector<Edge> edges;
    add_hs_edges(f.s, edges);
    return Graph(f.s * f.s, edges);
}

Graph build(const family::Gn& f) {
    require(f.n >= 2, "Gn requires n >= 2, got " + std::to_string(f.n));
    int a = 1;
    while ((a + 1) * (a + 1) <= f.n) {
        ++a;
    }
    std::vector<Edge> edges;
    add_hs_edges(a, edges);
    int next = a * a;
    // First round of leaves covers a^2 < n <= a^2 + a, the second round the
    // rest up to (a+1)^2 - 1.
    for (int round = 0; round < 2; ++round) {
        for (int i = 0; i < a && next < f.n; ++i) {
            edges.emplace_back(i, next++);
        }
    }
    return Graph(f.n, edges);
}

Graph build(const family::Complete& f) {
    require(f.s >= 1, "K_s requires s >= 1, got " + std::to_string(f.s));
    std::vector<Edge> edges;
    for (int i = 0; i < f.s; ++i) {
        for (int j = i + 1; j < f.s; ++j) {
            edges.emplace_back(i, j);
        }
    }
    return Graph(f.s, edges);
}

Graph build(const family::CompleteBipartite& f) {
    require(f.r >= 1 && f.s >= 1, "K_{r,s} requires r, s >= 1");
    std::vector<Edge> edges;
    for (int i = 0; i < f.r; ++i) {
        for (int j = 0; j < f.s; ++j) {
            edges.emplace_back(i, f.r + j);
        }
    }
    return Graph(f.r + f.s, edges);
}

Graph build(const family::Cycle& f) {
    require(f.length >= 3, "C_len requires len >= 3, got " + std::to_string(f.length));
    std::vector<Edge> edges;
    for (int i = 0; i < f.length; ++i) {
        edges.emplace_back(i, (i + 1) % f.length);
    }
    return Graph(f.length, edges);
}

Graph build(const family::Path& f) {
    require(f.length >= 0, "P_len requires len >= 0, got " + std::to_string(f.length));
    std::vector<Edge> edges;
    for (int i = 0; i < f.length; ++i) {
        edges.emplace_back(i, i + 1);
    }
    return Graph(f.length + 1, edges);
}

Graph build(const family::TwoK2&) {
    const Edge edges[] = {{0, 1}, {2, 3}};
    return Graph(4, edges);
}

Graph build(const family::Spectrum& f) { return build_spectrum_graph(f.n, f.p); }

Graph build(const family::Pdr& f) { return build_pdr_graph(f.n, f.p, f.r); }

std::vector<int> parse_ints(std::string_view text, std::string_view whole) {
    std::vector<int> out;
    while (!text.empty()) {
        while (!text.empty() && (text.front() == ',' || std::isspace(static_cast<unsigned char>(text.front())))) {
            text.remove_prefix(1);
        }
        if (text.empty()) {
            break;
        }
        int value = 0;
        auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
        if (ec != std::errc{}) {
            throw RangeError("family '" + std::string(whole) + "': expected integer parameters");
        }
        out.push_back(value);
        text.remove_prefix(static_cast<std::size_t>(ptr - text.data()));
    }
    return out;
}

}  // namespace

Graph build_family(const FamilySpec& spec) {
    return std::visit([](const auto& f) { return build(f); }, spec);
}

FamilySpec parse_family(std::string_view text) {
    auto split = text.find_first_of(": ");
    std::string kind(text.substr(0, split));
    std::transform(kind.begin(), kind.end(), kind.begin(), [](unsigned char c) { return std::tolower(c); });
    auto args = parse_ints(split == std::string_view::npos ? std::string_view{} : text.substr(split + 1), text);
    auto want = [&](std::size_t count) {
        if (args.size() != count) {
            throw RangeError("family '" + std::string(text) + "' expects " + std::to_string(count) + " parameter(s)");
        }
    };
    if (kind == "hs") {
        want(1);
        return family::Hs{args[0]};
    }
    if (kind == "gn") {
        want(1);
        return family::Gn{args[0]};
    }
    if (kind == "k" || kind == "complete") {
        want(1);
        return family::Complete{args[0]};
    }
    if (kind == "kbip" || kind == "bipartite") {
        want(2);
        return family::CompleteBipartite{args[0], args[1]};
    }
    if (kind == "cycle" || kind == "c") {
        want(1);
        return family::Cycle{args[0]};
    }
    if (kind == "c4") {
        want(0);
        return family::Cycle{4};
    }
    if (kind == "path" || kind == "p") {
        want(1);
        return family::Path{args[0]};
    }
    if (kind == "2k2") {
        want(0);
        return family::TwoK2{};
    }
    if (kind == "spectrum") {
        want(2);
        return family::Spectrum{args[0], args[1]};
    }
    if (kind == "pdr") {
        want(3);
        return family::Pdr{args[0], args[1], args[2]};
    }
    throw RangeError("unknown family '" + std::string(text) + "'");
}

std::string to_string(const FamilySpec& spec) {
    struct Namer {
        std::string operator()(const family::Hs& f) const { return "hs:" + std::to_string(f.s); }
        std::string operator()(const family::Gn& f) const { return "gn:" + std::to_string(f.n); }
        std::string operator()(const family::Complete& f) const { return "k:" + std::to_string(f.s); }
        std::string operator()(const family::CompleteBipartite& f) const {
            return "kbip:" + std::to_string(f.r) + "," + std::to_string(f.s);
        }
        std::string operator()(const family::Cycle& f) const { return "cycle:" + std::to_string(f.length); }
        std::string operator()(const family::Path& f) const { return "path:" + std::to_string(f.length); }
        std::string operator()(const family::TwoK2&) const { return "2k2"; }
        std::string operator()(const family::Spectrum& f) const {
            return "spectrum:" + std::to_string(f.n) + "," + std::to_string(f.p);
        }
        std::string operator()(const family::Pdr& f) const {
            return "pdr:" + std::to_string(f.n) + "," + std::to_string(f.p) + "," + std::to_string(f.r);
        }
    };
    return std::visit(Namer{}, spec);
}

}  // namespace covbetti
