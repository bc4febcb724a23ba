#ifndef ICMKIT_HOMOLOGY_HPP
#define ICMKIT_HOMOLOGY_HPP

#include <vector>

#include "icmkit/complex.hpp"
#include "icmkit/exact_rank.hpp"
#include "icmkit/types.hpp"

namespace icmkit {

/// Reduced simplicial homology dimensions over one field: dims[q - min_q]
/// carries dim_K H~_q. The profile of the void complex is empty; the profile
/// of {{}} has the single entry H~_{-1} = 1.
struct HomologyProfile {
    int min_q = 0;
    std::vector<int> dims;
    FieldSpec field;

    int at(int q) const {
        int idx = q - min_q;
        if (idx < 0 || idx >= static_cast<int>(dims.size())) return 0;
        return dims[static_cast<std::size_t>(idx)];
    }

    bool all_zero() const {
        for (int d : dims)
            if (d != 0) return false;
        return true;
    }
};

/// Signed boundary matrix of the augmented chain complex in degree q: rows
/// are the (q-1)-faces, columns the q-faces, both in canonical order. The
/// empty face is the single chain in degree -1.
linalg::IntMatrix boundary_matrix(const SimplicialComplex& c, int q);

/// Rank of the degree-q boundary map over the field. Zero outside the range
/// of existing faces.
int boundary_rank(const SimplicialComplex& c, int q, const FieldSpec& field);

/// All reduced homology dimensions, q from -1 up to dim.
HomologyProfile reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& field);

/// One reduced homology dimension. Zero for q outside [-1, dim].
int reduced_betti(const SimplicialComplex& c, int q, const FieldSpec& field);

}  // namespace icmkit

#endif
