#ifndef ICMKIT_INVARIANTS_HPP
#define ICMKIT_INVARIANTS_HPP

#include <optional>

#include "icmkit/complex.hpp"
#include "icmkit/types.hpp"

namespace icmkit {

/// depth of the face ring over the field, via the link formula
///   depth = min { |F| + i + 1 : F a face, H~_i(link F) != 0 }.
/// The search walks faces by increasing cardinality and each link's homology
/// from the top index down, shrinking the bound as soon as possible.
/// Undefined for the void complex; 0 exactly for {{}}.
int depth(const SimplicialComplex& c, const FieldSpec& field);

/// Cohen-Macaulay: depth equals the Krull dimension of the face ring.
bool is_cohen_macaulay(const SimplicialComplex& c, const FieldSpec& field);

/// Initially Cohen-Macaulay: depth equals indim + 1, the least facet size.
/// The void complex counts as ICM. Three equivalent routes are exposed so
/// they can be played against each other; is_icm is the depth route.
bool is_icm_via_depth(const SimplicialComplex& c, const FieldSpec& field);

/// ICM via the pure skeleton: the complex generated by the smallest facets
/// is Cohen-Macaulay.
bool is_icm_via_skeleton(const SimplicialComplex& c, const FieldSpec& field);

/// ICM via vanishing: H~_i(link F) = 0 for every face F with |F| <= indim
/// and every i < indim - |F|.
bool is_icm_via_links(const SimplicialComplex& c, const FieldSpec& field);

bool is_icm(const SimplicialComplex& c, const FieldSpec& field);

/// Sequentially Cohen-Macaulay: every pure skeleton between indim and dim is
/// Cohen-Macaulay. The void complex counts as SCM.
bool is_sequentially_cm(const SimplicialComplex& c, const FieldSpec& field);

/// The defining ideal's regularity equals its largest generator degree.
/// Requires a nonzero ideal (a complex other than void or the full simplex).
bool has_degree_resolution(const SimplicialComplex& c, const FieldSpec& field);

/// The defining ideal has a linear resolution: all generators in one degree
/// and regularity equal to it. Requires a nonzero ideal.
bool has_linear_resolution(const SimplicialComplex& c, const FieldSpec& field);

/// Both the complex and its Alexander dual are ICM. Degenerate complexes
/// (void, full simplex) count as bi-ICM since both duals are ICM.
bool is_bi_icm(const SimplicialComplex& c, const FieldSpec& field);

/// Castelnuovo-Mumford regularity of the defining ideal, through duality:
/// reg I = n - depth of the dual's face ring. Requires a nonzero ideal.
int ideal_regularity(const SimplicialComplex& c, const FieldSpec& field);

/// Largest generator degree of the defining ideal. Requires a nonzero ideal.
int ideal_degree(const SimplicialComplex& c);

/// Everything at once, with the numeric identities cross-checked.
struct InvariantReport {
    int n = 0;
    FieldSpec field;
    bool void_complex = false;

    // Dimensions of the complex; kNegInfinity when void.
    int dim = kNegInfinity;
    int indim = kNegInfinity;

    // Ring-level numbers; meaningless (0) when void.
    int dim_ring = 0;
    int indim_ring = 0;
    int depth = 0;
    int pdim = 0;
    int height = 0;
    int big_height = 0;

    // Ideal-level numbers; absent when the defining ideal is zero.
    std::optional<int> deg_ideal;
    std::optional<int> reg_ideal;

    bool is_pure = false;
    bool is_cm = false;
    bool is_icm = false;
    bool is_scm = false;
    std::optional<bool> degree_resolution;
    std::optional<bool> linear_resolution;
    bool bi_icm = false;
    bool weakly_connected = false;
    bool stably_connected = false;

    FVector f_vector;
    HPolynomial h_polynomial;
};

InvariantReport report(const SimplicialComplex& c, const FieldSpec& field);

}  // namespace icmkit

#endif
