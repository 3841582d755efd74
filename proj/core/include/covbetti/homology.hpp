#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <vector>

#include "covbetti/graph.hpp"

namespace covbetti {

/// Coefficient field: 0 for the rationals, otherwise a prime p for GF(p).
class FieldSpec {
public:
    /// GF(2).
    constexpr FieldSpec() = default;

    /// Throws RangeError unless `characteristic` is 0 or a prime.
    explicit FieldSpec(int characteristic);

    [[nodiscard]] constexpr int characteristic() const noexcept { return characteristic_; }

    friend constexpr bool operator==(FieldSpec, FieldSpec) = default;

private:
    int characteristic_ = 2;
};

/// Finite abstract simplicial complex on vertex labels below kMaskLimit.
/// A face is a Mask of its vertices. Faces of each dimension are kept in
/// lexicographic order of their ascending vertex lists, which is the
/// backtracking order of construction and the row/column order of the
/// boundary matrices.
class SimplicialComplex {
public:
    /// The void complex: no faces at all, not even the empty one.
    SimplicialComplex() = default;

    /// Faces are the independent sets of g (including the empty set).
    [[nodiscard]] static SimplicialComplex independence(const Graph& g);

    /// Faces are the subsets F of `ground` with is_face(F). The predicate
    /// must be downward closed. If is_face(0) is false the result is void.
    [[nodiscard]] static SimplicialComplex from_oracle(Mask ground, const std::function<bool(Mask)>& is_face);

    [[nodiscard]] bool is_void() const noexcept { return faces_.empty(); }

    /// Largest k with a k-face; -1 for the complex {empty set}; -2 if void.
    [[nodiscard]] int dimension() const noexcept { return static_cast<int>(faces_.size()) - 2; }

    /// Faces of dimension k (k >= -1); empty span when there are none.
    [[nodiscard]] std::span<const Mask> faces(int k) const noexcept;
    [[nodiscard]] std::size_t face_count(int k) const noexcept { return faces(k).size(); }
    [[nodiscard]] std::size_t total_faces() const noexcept;

    /// Union of all faces.
    [[nodiscard]] Mask vertices() const noexcept;

    [[nodiscard]] bool contains(Mask face) const;

private:
    // faces_[k + 1] holds the k-faces.
    std::vector<std::vector<Mask>> faces_;
};

/// Rank of the reduced boundary map from k-faces to (k-1)-faces. The map
/// from vertices to the empty face (k = 0) is the augmentation. Zero for
/// k < 0 and above the dimension.
[[nodiscard]] std::size_t boundary_rank(const SimplicialComplex& cx, int k, FieldSpec field);

/// dim of reduced homology in degree k over `field`; 0 for k outside
/// -1..dimension().
[[nodiscard]] std::size_t reduced_homology_dim(const SimplicialComplex& cx, int k, FieldSpec field);

/// All non-zero reduced Betti numbers, degree -> dimension.
[[nodiscard]] std::map<int, std::size_t> reduced_homology(const SimplicialComplex& cx, FieldSpec field);

}  // namespace covbetti
