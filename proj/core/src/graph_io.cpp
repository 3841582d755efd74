#include "covbetti/graph_io.hpp"

#include <cctype>
#include <charconv>
#include <algorithm>
#include <cstdint>
#include <set>
#include <vector>

#include "covbetti/errors.hpp"

namespace covbetti {

namespace {

constexpr std::string_view kGraph6Header = ">>graph6<<";
constexpr std::uint64_t kMaxGraph6Order = 68719476735ULL;  // 2^36 - 1

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) {
        s.remove_prefix(1);
    }
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) {
        s.remove_suffix(1);
    }
    return s;
}

void append_size(std::string& out, std::uint64_t n) {
    auto push_bits = [&](int groups) {
        for (int k = groups - 1; k >= 0; --k) {
            out.push_back(static_cast<char>(((n >> (6 * k)) & 63U) + 63));
        }
    };
    if (n <= 62) {
        out.push_back(static_cast<char>(n + 63));
    } else if (n <= 258047) {
        out.push_back(static_cast<char>(126));
        push_bits(3);
    } else {
        out.push_back(static_cast<char>(126));
        out.push_back(static_cast<char>(126));
        push_bits(6);
    }
}

}  // namespace

std::string to_graph6(const Graph& g) {
    std::string out;
    append_size(out, static_cast<std::uint64_t>(g.order()));
    int acc = 0;
    int filled = 0;
    for (Vertex j = 1; j < g.order(); ++j) {
        for (Vertex i = 0; i < j; ++i) {
            acc = (acc << 1) | (g.adjacent(i, j) ? 1 : 0);
            if (++filled == 6) {
                out.push_back(static_cast<char>(acc + 63));
                acc = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>((acc << (6 - filled)) + 63));
    }
    return out;
}

Graph parse_graph6(std::string_view text) {
    std::size_t offset = 0;
    if (text.substr(0, kGraph6Header.size()) == kGraph6Header) {
        offset = kGraph6Header.size();
    }
    std::string_view body = text.substr(offset);
    while (!body.empty() && (body.back() == '\n' || body.back() == '\r')) {
        body.remove_suffix(1);
    }
    auto byte_at = [&](std::size_t i) -> int {
        if (i >= body.size()) {
            throw ParseError("graph6: truncated input", offset + i);
        }
        int c = static_cast<unsigned char>(body[i]);
        if (c < 63 || c > 126) {
            throw ParseError("graph6: byte " + std::to_string(c) + " outside 63..126", offset + i);
        }
        return c - 63;
    };

    std::size_t pos = 0;
    std::uint64_t n = 0;
    int first = byte_at(pos++);
    if (first < 63) {
        n = static_cast<std::uint64_t>(first);
    } else {
        int groups = 3;
        if (byte_at(pos) == 63) {
            ++pos;
            groups = 6;
        }
        for (int k = 0; k < groups; ++k) {
            n = (n << 6) | static_cast<std::uint64_t>(byte_at(pos++));
        }
        if (n > kMaxGraph6Order) {
            throw ParseError("graph6: vertex count too large", offset);
        }
    }
    if (n > static_cast<std::uint64_t>(1) << 20) {
        throw ParseError("graph6: vertex count " + std::to_string(n) + " unsupported", offset);
    }
    const auto order = static_cast<int>(n);
    const std::uint64_t bits = n * (n == 0 ? 0 : n - 1) / 2;
    const std::size_t data_bytes = static_cast<std::size_t>((bits + 5) / 6);
    if (body.size() != pos + data_bytes) {
        throw ParseError("graph6: expected " + std::to_string(pos + data_bytes) + " bytes, got " +
                             std::to_string(body.size()),
                         offset + std::min(body.size(), pos + data_bytes));
    }

    std::vector<Edge> edges;
    std::uint64_t bit_index = 0;
    for (Vertex j = 1; j < order; ++j) {
        for (Vertex i = 0; i < j; ++i, ++bit_index) {
            std::size_t byte = pos + static_cast<std::size_t>(bit_index / 6);
            int shift = 5 - static_cast<int>(bit_index % 6);
            if ((byte_at(byte) >> shift) & 1) {
                edges.emplace_back(i, j);
            }
        }
    }
    if (bits % 6 != 0) {
        int pad_mask = (1 << (6 - static_cast<int>(bits % 6))) - 1;
        std::size_t last = pos + data_bytes - 1;
        if (byte_at(last) & pad_mask) {
            throw ParseError("graph6: nonzero padding bits", offset + last);
        }
    }
    return Graph(order, edges);
}

std::string to_edge_list(const Graph& g) {
    std::string out = std::to_string(g.order()) + " " + std::to_string(g.size()) + "\n";
    for (auto [u, v] : g.edges()) {
        out += std::to_string(u) + " " + std::to_string(v) + "\n";
    }
    return out;
}

Graph parse_edge_list(std::string_view text) {
    std::vector<std::vector<long long>> lines;
    std::vector<std::size_t> line_numbers;
    std::size_t line_no = 0;
    while (!text.empty()) {
        auto nl = text.find('\n');
        std::string_view line = text.substr(0, nl);
        text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
        ++line_no;
        line = trim(line);
        if (line.empty()) {
            continue;
        }
        std::vector<long long> fields;
        while (!line.empty()) {
            long long value = 0;
            auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
            if (ec != std::errc{} || value < 0) {
                throw ParseError("edge list: expected a non-negative integer", line_no);
            }
            fields.push_back(value);
            line.remove_prefix(static_cast<std::size_t>(ptr - line.data()));
            if (!line.empty() && !std::isspace(static_cast<unsigned char>(line.front()))) {
                throw ParseError("edge list: unexpected character '" + std::string(1, line.front()) + "'", line_no);
            }
            line = trim(line);
        }
        if (fields.size() != 2) {
            throw ParseError("edge list: expected exactly two integers per line", line_no);
        }
        lines.push_back(std::move(fields));
        line_numbers.push_back(line_no);
    }
    if (lines.empty()) {
        throw ParseError("edge list: missing \"n m\" header", line_no);
    }
    const long long n = lines[0][0];
    const long long m = lines[0][1];
    if (n > (1 << 20)) {
        throw ParseError("edge list: vertex count too large", line_numbers[0]);
    }
    if (static_cast<long long>(lines.size()) - 1 != m) {
        throw ParseError("edge list: header announces " + std::to_string(m) + " edges, found " +
                             std::to_string(lines.size() - 1),
                         line_numbers[0]);
    }
    std::vector<Edge> edges;
    std::set<Edge> seen;
    for (std::size_t k = 1; k < lines.size(); ++k) {
        long long u = lines[k][0];
        long long v = lines[k][1];
        if (u >= n || v >= n) {
            throw ParseError("edge list: vertex index >= n", line_numbers[k]);
        }
        if (u == v) {
            throw ParseError("edge list: loop at vertex " + std::to_string(u), line_numbers[k]);
        }
        if (!seen.emplace(static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))).second) {
            throw ParseError("edge list: duplicate edge", line_numbers[k]);
        }
        edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
    }
    return Graph(static_cast<int>(n), edges);
}

GraphFormat detect_format(std::string_view text) {
    text = trim(text);
    if (!text.empty() && std::isdigit(static_cast<unsigned char>(text.front()))) {
        return GraphFormat::edge_list;
    }
    return GraphFormat::graph6;
}

Graph parse_graph(std::string_view text) {
    if (detect_format(text) == GraphFormat::edge_list) {
        return parse_edge_list(text);
    }
    return parse_graph6(trim(text));
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    return format == GraphFormat::graph6 ? to_graph6(g) : to_edge_list(g);
}

}  // namespace covbetti
