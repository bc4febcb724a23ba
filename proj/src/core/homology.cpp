#include "icmkit/homology.hpp"

#include <unordered_map>

namespace icmkit {

linalg::IntMatrix boundary_matrix(const SimplicialComplex& c, int q) {
    std::vector<Face> domain = c.faces_of_dimension(q);
    std::vector<Face> codomain = c.faces_of_dimension(q - 1);
    linalg::IntMatrix m(static_cast<int>(codomain.size()), static_cast<int>(domain.size()));
    std::unordered_map<std::uint64_t, int> row;
    row.reserve(codomain.size());
    for (std::size_t i = 0; i < codomain.size(); ++i)
        row[codomain[i].bits] = static_cast<int>(i);
    for (std::size_t j = 0; j < domain.size(); ++j) {
        std::vector<int> verts = domain[j].members();
        for (std::size_t pos = 0; pos < verts.size(); ++pos) {
            Face sub = domain[j].without(verts[pos]);
            int sign = (pos % 2 == 0) ? 1 : -1;
            m.at(row.at(sub.bits), static_cast<int>(j)) = sign;
        }
    }
    return m;
}

int boundary_rank(const SimplicialComplex& c, int q, const FieldSpec& field) {
    if (c.is_void() || q < 0 || q > c.dim()) return 0;
    return linalg::rank(boundary_matrix(c, q), field);
}

HomologyProfile reduced_homology_dims(const SimplicialComplex& c, const FieldSpec& field) {
    HomologyProfile profile;
    profile.field = field;
    profile.min_q = -1;
    if (c.is_void()) return profile;
    int d = c.dim();
    // dim H~_q = f_q - rank d_q - rank d_{q+1}, with f_{-1} = 1 for the
    // augmentation. Ranks are shared between adjacent degrees.
    std::vector<int> ranks(static_cast<std::size_t>(d + 2), 0);
    for (int q = 0; q <= d; ++q)
        ranks[static_cast<std::size_t>(q)] = boundary_rank(c, q, field);
    FVector fv = c.f_vector();
    profile.dims.resize(static_cast<std::size_t>(d + 2));
    for (int q = -1; q <= d; ++q) {
        long long faces = fv.f(q);
        int lower = (q >= 0) ? ranks[static_cast<std::size_t>(q)] : 0;
        int upper = (q + 1 <= d) ? ranks[static_cast<std::size_t>(q + 1)] : 0;
        profile.dims[static_cast<std::size_t>(q + 1)] = static_cast<int>(faces) - lower - upper;
    }
    return profile;
}

int reduced_betti(const SimplicialComplex& c, int q, const FieldSpec& field) {
    if (c.is_void() || q < -1 || q > c.dim()) return 0;
    long long faces = (q == -1) ? 1 : static_cast<long long>(c.faces_of_dimension(q).size());
    return static_cast<int>(faces) - boundary_rank(c, q, field) - boundary_rank(c, q + 1, field);
}

}  // namespace icmkit
