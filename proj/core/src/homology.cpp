#include "covbetti/homology.hpp"

#include <algorithm>
#include <bit>
#include <string>
#include <unordered_map>

#include <boost/multiprecision/cpp_int.hpp>

#include "covbetti/errors.hpp"

namespace covbetti {

namespace {

bool is_prime(int p) {
    if (p < 2) {
        return false;
    }
    for (int d = 2; d * d <= p; ++d) {
        if (p % d == 0) {
            return false;
        }
    }
    return true;
}

void store(std::vector<std::vector<Mask>>& faces, Mask face) {
    auto slot = static_cast<std::size_t>(std::popcount(face));
    if (faces.size() <= slot) {
        faces.resize(slot + 1);
    }
    faces[slot].push_back(face);
}

void grow_independent(const std::vector<Mask>& adj, Mask face, Mask candidates,
                      std::vector<std::vector<Mask>>& faces) {
    store(faces, face);
    for (Mask rest = candidates; rest != 0; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        Mask later = rest & (rest - 1);
        grow_independent(adj, face | (Mask{1} << v), later & ~adj[v], faces);
    }
}

void grow_oracle(const std::function<bool(Mask)>& is_face, Mask face, Mask candidates,
                 std::vector<std::vector<Mask>>& faces) {
    store(faces, face);
    for (Mask rest = candidates; rest != 0; rest &= rest - 1) {
        int v = std::countr_zero(rest);
        Mask bigger = face | (Mask{1} << v);
        if (is_face(bigger)) {
            grow_oracle(is_face, bigger, rest & (rest - 1), faces);
        }
    }
}

// Each elimination keeps rows with a pivot at their lowest non-zero
// position; a new row is reduced against existing pivots until it vanishes
// or claims a fresh pivot.

std::size_t rank_gf2(const std::vector<std::vector<std::size_t>>& columns, std::size_t rows) {
    const std::size_t words = (rows + 63) / 64;
    std::vector<std::vector<std::uint64_t>> pivot_rows(rows);
    std::vector<std::uint64_t> v(words);
    std::size_t rank = 0;
    for (const auto& col : columns) {
        std::fill(v.begin(), v.end(), 0);
        for (std::size_t r : col) {
            v[r / 64] ^= std::uint64_t{1} << (r % 64);
        }
        std::size_t w = 0;
        while (true) {
            while (w < words && v[w] == 0) {
                ++w;
            }
            if (w == words) {
                break;
            }
            std::size_t lead = w * 64 + static_cast<std::size_t>(std::countr_zero(v[w]));
            auto& pivot = pivot_rows[lead];
            if (pivot.empty()) {
                pivot = v;
                ++rank;
                break;
            }
            for (std::size_t k = w; k < words; ++k) {
                v[k] ^= pivot[k];
            }
        }
    }
    return rank;
}

std::size_t rank_gfp(const std::vector<std::vector<std::pair<std::size_t, int>>>& columns, std::size_t rows,
                     std::uint32_t p) {
    auto inverse = [p](std::uint64_t a) {
        std::uint64_t result = 1;
        std::uint64_t e = p - 2;
        while (e > 0) {
            if (e & 1U) {
                result = result * a % p;
            }
            a = a * a % p;
            e >>= 1;
        }
        return result;
    };
    std::vector<std::vector<std::uint32_t>> pivot_rows(rows);
    std::vector<std::uint32_t> v(rows);
    std::size_t rank = 0;
    for (const auto& col : columns) {
        std::fill(v.begin(), v.end(), 0);
        for (auto [r, c] : col) {
            v[r] = static_cast<std::uint32_t>(((c % static_cast<int>(p)) + static_cast<int>(p)) % static_cast<int>(p));
        }
        std::size_t lead = 0;
        while (true) {
            while (lead < rows && v[lead] == 0) {
                ++lead;
            }
            if (lead == rows) {
                break;
            }
            auto& pivot = pivot_rows[lead];
            if (pivot.empty()) {
                std::uint64_t scale = inverse(v[lead]);
                for (std::size_t k = lead; k < rows; ++k) {
                    v[k] = static_cast<std::uint32_t>(v[k] * scale % p);
                }
                pivot = v;
                ++rank;
                break;
            }
            std::uint64_t factor = v[lead];
            for (std::size_t k = lead; k < rows; ++k) {
                v[k] = static_cast<std::uint32_t>((v[k] + (p - factor) * pivot[k]) % p);
            }
        }
    }
    return rank;
}

std::size_t rank_rational(const std::vector<std::vector<std::pair<std::size_t, int>>>& columns, std::size_t rows) {
    using boost::multiprecision::cpp_int;
    std::vector<std::vector<cpp_int>> pivot_rows(rows);
    std::vector<cpp_int> v(rows);
    std::size_t rank = 0;
    for (const auto& col : columns) {
        std::fill(v.begin(), v.end(), cpp_int(0));
        for (auto [r, c] : col) {
            v[r] = c;
        }
        std::size_t lead = 0;
        while (true) {
            while (lead < rows && v[lead] == 0) {
                ++lead;
            }
            if (lead == rows) {
                break;
            }
            auto& pivot = pivot_rows[lead];
            if (pivot.empty()) {
                pivot = v;
                ++rank;
                break;
            }
            // Fraction-free step, then divide out the content.
            cpp_int a = pivot[lead];
            cpp_int b = v[lead];
            cpp_int content = 0;
            for (std::size_t k = lead; k < rows; ++k) {
                v[k] = a * v[k] - b * pivot[k];
                if (v[k] != 0) {
                    content = gcd(content, abs(v[k]));
                }
            }
            if (content > 1) {
                for (std::size_t k = lead; k < rows; ++k) {
                    v[k] /= content;
                }
            }
        }
    }
    return rank;
}

}  // namespace

FieldSpec::FieldSpec(int characteristic) : characteristic_(characteristic) {
    if (characteristic != 0 && !is_prime(characteristic)) {
        throw RangeError("field characteristic must be 0 or a prime, got " + std::to_string(characteristic));
    }
    if (characteristic > 46337) {
        throw RangeError("field characteristic " + std::to_string(characteristic) + " too large");
    }
}

SimplicialComplex SimplicialComplex::independence(const Graph& g) {
    g.require_mask_width("independence complex");
    std::vector<Mask> adj(static_cast<std::size_t>(g.order()));
    for (Vertex v = 0; v < g.order(); ++v) {
        adj[v] = g.neighbor_mask(v);
    }
    SimplicialComplex cx;
    grow_independent(adj, 0, g.vertex_mask(), cx.faces_);
    return cx;
}

SimplicialComplex SimplicialComplex::from_oracle(Mask ground, const std::function<bool(Mask)>& is_face) {
    SimplicialComplex cx;
    if (is_face(0)) {
        grow_oracle(is_face, 0, ground, cx.faces_);
    }
    return cx;
}

std::span<const Mask> SimplicialComplex::faces(int k) const noexcept {
    auto slot = static_cast<std::size_t>(k + 1);
    if (k < -1 || slot >= faces_.size()) {
        return {};
    }
    return faces_[slot];
}

std::size_t SimplicialComplex::total_faces() const noexcept {
    std::size_t total = 0;
    for (const auto& level : faces_) {
        total += level.size();
    }
    return total;
}

Mask SimplicialComplex::vertices() const noexcept {
    Mask all = 0;
    for (Mask v : faces(0)) {
        all |= v;
    }
    return all;
}

bool SimplicialComplex::contains(Mask face) const {
    auto level = faces(std::popcount(face) - 1);
    return std::find(level.begin(), level.end(), face) != level.end();
}

std::size_t boundary_rank(const SimplicialComplex& cx, int k, FieldSpec field) {
    if (k < 0 || k > cx.dimension()) {
        return 0;
    }
    if (k == 0) {
        return cx.face_count(0) > 0 ? 1 : 0;
    }
    auto lower = cx.faces(k - 1);
    auto upper = cx.faces(k);
    std::unordered_map<Mask, std::size_t> index;
    index.reserve(lower.size());
    for (std::size_t i = 0; i < lower.size(); ++i) {
        index.emplace(lower[i], i);
    }
    if (field.characteristic() == 2) {
        std::vector<std::vector<std::size_t>> columns;
        columns.reserve(upper.size());
        for (Mask face : upper) {
            auto& col = columns.emplace_back();
            for (Mask rest = face; rest != 0; rest &= rest - 1) {
                col.push_back(index.at(face & ~(rest & -rest)));
            }
        }
        return rank_gf2(columns, lower.size());
    }
    std::vector<std::vector<std::pair<std::size_t, int>>> columns;
    columns.reserve(upper.size());
    for (Mask face : upper) {
        auto& col = columns.emplace_back();
        int sign = 1;
        for (Mask rest = face; rest != 0; rest &= rest - 1) {
            col.emplace_back(index.at(face & ~(rest & -rest)), sign);
            sign = -sign;
        }
    }
    if (field.characteristic() == 0) {
        return rank_rational(columns, lower.size());
    }
    return rank_gfp(columns, lower.size(), static_cast<std::uint32_t>(field.characteristic()));
}

std::size_t reduced_homology_dim(const SimplicialComplex& cx, int k, FieldSpec field) {
    if (k < -1 || k > cx.dimension()) {
        return 0;
    }
    return cx.face_count(k) - boundary_rank(cx, k, field) - boundary_rank(cx, k + 1, field);
}

std::map<int, std::size_t> reduced_homology(const SimplicialComplex& cx, FieldSpec field) {
    std::map<int, std::size_t> out;
    const int top = cx.dimension();
    if (top < -1) {
        return out;
    }
    std::vector<std::size_t> ranks(static_cast<std::size_t>(top + 3), 0);  // ranks[k + 1] = rank of boundary k
    for (int k = 0; k <= top; ++k) {
        ranks[static_cast<std::size_t>(k + 1)] = boundary_rank(cx, k, field);
    }
    for (int k = -1; k <= top; ++k) {
        std::size_t dim = cx.face_count(k) - ranks[static_cast<std::size_t>(k + 1)] - ranks[static_cast<std::size_t>(k + 2)];
        if (dim != 0) {
            out.emplace(k, dim);
        }
    }
    return out;
}

}  // namespace covbetti
