#ifndef ICMKIT_COMPLEX_HPP
#define ICMKIT_COMPLEX_HPP

#include <vector>

#include "icmkit/types.hpp"

namespace icmkit {

/// f-vector (f_{-1}, f_0, ..., f_{d}) where d = dim. The void complex has an
/// empty entry list.
struct FVector {
    std::vector<long long> entries;

    /// f_i, zero outside the stored range. Index -1 is entries[0].
    long long f(int i) const {
        int idx = i + 1;
        if (idx < 0 || idx >= static_cast<int>(entries.size())) return 0;
        return entries[static_cast<std::size_t>(idx)];
    }

    bool operator==(const FVector&) const = default;
};

/// Coefficients h_0, ..., h_d of the h-polynomial, d = dim + 1.
struct HPolynomial {
    std::vector<long long> coeffs;

    long long h(int j) const {
        if (j < 0 || j >= static_cast<int>(coeffs.size())) return 0;
        return coeffs[static_cast<std::size_t>(j)];
    }

    /// Largest j with h_j != 0.
    int degree() const {
        for (int j = static_cast<int>(coeffs.size()) - 1; j >= 0; --j)
            if (coeffs[static_cast<std::size_t>(j)] != 0) return j;
        return 0;
    }

    bool operator==(const HPolynomial&) const = default;
};

/// Abstract simplicial complex on a fixed ground set, stored by its facets.
///
/// Two degenerate complexes are distinguished throughout: the void complex
/// (no faces at all, dimension -infinity) and the irrelevant complex {{}}
/// whose only face is the empty set (dimension -1). Facets are kept as an
/// antichain sorted by (cardinality, bitmask).
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    /// The complex with no faces whatsoever.
    static SimplicialComplex void_complex(VertexSet vs);

    /// The complex {{}} whose single face is the empty set.
    static SimplicialComplex irrelevant_complex(VertexSet vs);

    /// The full simplex on the whole ground set.
    static SimplicialComplex full_simplex(VertexSet vs);

    /// Builds from facet candidates: deduplicates, drops non-maximal faces.
    /// An empty candidate list yields the void complex.
    static SimplicialComplex from_facets(VertexSet vs, std::vector<Face> candidates);

    bool is_void() const { return facets_.empty(); }
    bool is_irrelevant() const { return facets_.size() == 1 && facets_[0].is_empty(); }
    bool is_full_simplex() const;

    /// All facets share one dimension. True for the void complex.
    bool is_pure() const;

    int vertex_count() const { return vertices_.size(); }
    const VertexSet& vertices() const { return vertices_; }
    const std::vector<Face>& facets() const { return facets_; }

    /// Dimension: max facet dimension, kNegInfinity when void.
    int dim() const;

    /// Initial dimension: min facet dimension, kNegInfinity when void.
    int indim() const;

    /// Krull dimension of the face ring, dim() + 1. Zero for {{}}.
    int dim_ring() const;

    /// indim() + 1.
    int indim_ring() const;

    bool contains(Face f) const;

    /// Every face, empty face included, in canonical (cardinality, bits) order.
    std::vector<Face> all_faces() const;

    /// Faces of dimension i in canonical order.
    std::vector<Face> faces_of_dimension(int i) const;

    /// Minimal non-faces: the monomial generators of the defining ideal.
    /// Undefined for the void complex. Empty for the full simplex.
    std::vector<Face> minimal_nonfaces() const;

    /// Alexander dual: facets are complements of minimal non-faces. Swaps the
    /// void complex and the full simplex; an involution on everything.
    SimplicialComplex alexander_dual() const;

    /// i-skeleton, i >= -1: all faces of dimension <= i.
    SimplicialComplex skeleton(int i) const;

    /// Pure i-skeleton, -1 <= i <= dim: the complex generated by the
    /// i-dimensional faces alone.
    SimplicialComplex pure_skeleton(int i) const;

    /// Link of a face, on the ground set with f's vertices removed.
    SimplicialComplex link(Face f) const;

    /// Faces disjoint from f, on the unchanged ground set.
    SimplicialComplex deletion(Face f) const;

    /// Restriction to w, re-grounded on w's vertices.
    SimplicialComplex induced(Face w) const;

    /// Truncation at degree k: the complex of the ideal generated by the
    /// degree >= k part of the defining ideal. Facets are the old facets
    /// together with all (k-1)-subsets of the ground set. Requires a
    /// non-void complex with at least one non-face and mindeg <= k <= n.
    SimplicialComplex truncated(int k) const;

    FVector f_vector() const;
    HPolynomial h_polynomial() const;

    bool operator==(const SimplicialComplex&) const = default;

private:
    VertexSet vertices_;
    std::vector<Face> facets_;
};

/// Keeps only the maximal faces, deduplicated, in canonical order.
std::vector<Face> maximal_faces(std::vector<Face> faces);

/// All k-element subsets of the given face, in increasing bitmask order.
std::vector<Face> subsets_of_size(Face f, int k);

}  // namespace icmkit

#endif
