#include "icmkit/invariants.hpp"

#include <algorithm>

#include "icmkit/connectivity.hpp"
#include "icmkit/homology.hpp"

namespace icmkit {

namespace {

// Lazily computed boundary ranks of one link, shared across the homology
// indices probed for it.
class LinkRanks {
public:
    LinkRanks(const SimplicialComplex& link, const FieldSpec& field)
        : link_(link), field_(field),
          ranks_(static_cast<std::size_t>(std::max(0, link.is_void() ? 0 : link.dim() + 2)), -1) {}

    // dim H~_q of the link.
    int betti(int q) {
        if (link_.is_void() || q < -1 || q > link_.dim()) return 0;
        long long faces = (q == -1) ? 1
                                    : static_cast<long long>(link_.faces_of_dimension(q).size());
        return static_cast<int>(faces) - rank_at(q) - rank_at(q + 1);
    }

private:
    int rank_at(int q) {
        if (q < 0 || q > link_.dim()) return 0;
        int& slot = ranks_[static_cast<std::size_t>(q)];
        if (slot < 0) slot = boundary_rank(link_, q, field_);
        return slot;
    }

    const SimplicialComplex& link_;
    FieldSpec field_;
    std::vector<int> ranks_;
};

}  // namespace

int depth(const SimplicialComplex& c, const FieldSpec& field) {
    if (c.is_void()) throw domain_error("depth undefined for the void complex");
    if (c.is_irrelevant()) return 0;
    int best = c.indim_ring();
    for (Face f : c.all_faces()) {
        // A face of cardinality >= best cannot lower the bound, and faces
        // come sorted by cardinality. depth >= 1 holds whenever a vertex
        // exists, so best == 1 is final.
        if (f.cardinality() >= best || best == 1) break;
        SimplicialComplex link = c.link(f);
        LinkRanks ranks(link, field);
        int top = std::min(link.dim(), best - f.cardinality() - 2);
        for (int q = top; q >= -1; --q) {
            if (f.cardinality() + q + 1 >= best) continue;
            if (ranks.betti(q) > 0) best = f.cardinality() + q + 1;
        }
    }
    return best;
}

bool is_cohen_macaulay(const SimplicialComplex& c, const FieldSpec& field) {
    if (c.is_void()) return true;
    return depth(c, field) == c.dim_ring();
}

bool is_icm_via_depth(const SimplicialComplex& c, const FieldSpec& field) {
    if (c.is_void()) return true;
    return depth(c, field) == c.indim_ring();
}

bool is_icm_via_skeleton(const SimplicialComplex& c, const FieldSpec& field) {
    if (c.is_void()) return true;
    return is_cohen_macaulay(c.skeleton(c.indim()), field);
}

bool is_icm_via_links(const SimplicialComplex& c, const FieldSpec& field) {
    if (c.is_void()) return true;
    int indim = c.indim();
    for (Face f : c.all_faces()) {
        if (f.cardinality() > indim) break;
        SimplicialComplex link = c.link(f);
        LinkRanks ranks(link, field);
        for (int q = indim - f.cardinality() - 1; q >= -1; --q)
            if (ranks.betti(q) > 0) return false;
    }
    return true;
}

bool is_icm(const SimplicialComplex& c, const FieldSpec& field) {
    return is_icm_via_depth(c, field);
}

bool is_sequentially_cm(const SimplicialComplex& c, const FieldSpec& field) {
    if (c.is_void()) return true;
    for (int i = c.indim(); i <= c.dim(); ++i)
        if (!is_cohen_macaulay(c.pure_skeleton(i), field)) return false;
    return true;
}

int ideal_degree(const SimplicialComplex& c) {
    std::vector<Face> nf = c.minimal_nonfaces();
    if (nf.empty()) throw domain_error("the zero ideal has no generator degrees");
    return nf.back().cardinality();
}

int ideal_regularity(const SimplicialComplex& c, const FieldSpec& field) {
    if (c.is_void() || c.is_full_simplex())
        throw domain_error("ideal regularity requires a nonzero defining ideal");
    // Terai duality: reg I = n - depth of the dual face ring.
    return c.vertex_count() - depth(c.alexander_dual(), field);
}

bool has_degree_resolution(const SimplicialComplex& c, const FieldSpec& field) {
    return ideal_regularity(c, field) == ideal_degree(c);
}

bool has_linear_resolution(const SimplicialComplex& c, const FieldSpec& field) {
    std::vector<Face> nf = c.minimal_nonfaces();
    if (nf.empty()) throw domain_error("the zero ideal has no resolution type");
    if (nf.front().cardinality() != nf.back().cardinality()) return false;
    return ideal_regularity(c, field) == nf.front().cardinality();
}

bool is_bi_icm(const SimplicialComplex& c, const FieldSpec& field) {
    return is_icm(c, field) && is_icm(c.alexander_dual(), field);
}

InvariantReport report(const SimplicialComplex& c, const FieldSpec& field) {
    InvariantReport r;
    r.n = c.vertex_count();
    r.field = field;
    r.void_complex = c.is_void();
    r.is_pure = c.is_pure();
    r.weakly_connected = is_weakly_connected(c);
    r.stably_connected = is_stably_connected(c);
    if (r.void_complex) {
        r.is_cm = true;
        r.is_icm = true;
        r.is_scm = true;
        r.bi_icm = is_bi_icm(c, field);
        return r;
    }

    r.dim = c.dim();
    r.indim = c.indim();
    r.dim_ring = c.dim_ring();
    r.indim_ring = c.indim_ring();
    r.depth = depth(c, field);
    r.pdim = r.n - r.depth;
    r.height = r.n - r.dim_ring;
    r.big_height = r.n - r.indim_ring;
    r.f_vector = c.f_vector();
    r.h_polynomial = c.h_polynomial();

    std::vector<Face> nf = c.minimal_nonfaces();
    if (!nf.empty()) {
        r.deg_ideal = nf.back().cardinality();
        r.reg_ideal = ideal_regularity(c, field);
        r.degree_resolution = (*r.reg_ideal == *r.deg_ideal);
        bool equigenerated = nf.front().cardinality() == nf.back().cardinality();
        r.linear_resolution = equigenerated && (*r.reg_ideal == nf.front().cardinality());
    }

    r.is_cm = (r.depth == r.dim_ring);
    r.is_icm = (r.depth == r.indim_ring);
    r.is_scm = is_sequentially_cm(c, field);
    r.bi_icm = r.is_icm && is_icm(c.alexander_dual(), field);

    // Identities that hold by theory; a failure means an internal bug.
    if (r.depth > r.indim_ring)
        throw consistency_error("depth exceeded the least facet cardinality");
    if (r.is_cm != (r.is_icm && r.is_pure))
        throw consistency_error("Cohen-Macaulay flag disagrees with ICM + purity");
    if (r.pdim < r.big_height)
        throw consistency_error("projective dimension fell below the big height");
    if ((r.pdim == r.big_height) != r.is_icm)
        throw consistency_error("projective dimension equals big height exactly for ICM");

    return r;
}

}  // namespace icmkit
