#include "icmkit/complex.hpp"

#include <algorithm>
#include <unordered_set>

namespace icmkit {

namespace {

// Checks every facet fits inside the ground set.
void check_in_ground(const VertexSet& vs, const std::vector<Face>& faces) {
    Face ground = full_face(vs.size());
    for (Face f : faces)
        if (!f.subset_of(ground))
            throw domain_error("face uses a vertex outside the ground set");
}

// Binomial coefficient, exact in long long at the sizes we handle (n <= 64).
long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long r = 1;
    for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}

}  // namespace

std::vector<Face> maximal_faces(std::vector<Face> faces) {
    std::sort(faces.begin(), faces.end(),
              [](Face a, Face b) { return face_less(b, a); });
    std::vector<Face> out;
    for (Face f : faces) {
        bool dominated = false;
        for (Face g : out)
            if (f.subset_of(g)) { dominated = true; break; }
        if (!dominated) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

std::vector<Face> subsets_of_size(Face f, int k) {
    std::vector<int> verts = f.members();
    int m = static_cast<int>(verts.size());
    std::vector<Face> out;
    if (k < 0 || k > m) return out;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        Face s;
        for (int i : idx) s = s.with(verts[static_cast<std::size_t>(i)]);
        out.push_back(s);
        int pos = k - 1;
        while (pos >= 0 && idx[static_cast<std::size_t>(pos)] == m - k + pos) --pos;
        if (pos < 0) break;
        ++idx[static_cast<std::size_t>(pos)];
        for (int i = pos + 1; i < k; ++i)
            idx[static_cast<std::size_t>(i)] = idx[static_cast<std::size_t>(i - 1)] + 1;
    }
    std::sort(out.begin(), out.end(), [](Face a, Face b) { return a.bits < b.bits; });
    return out;
}

SimplicialComplex SimplicialComplex::void_complex(VertexSet vs) {
    SimplicialComplex c;
    c.vertices_ = std::move(vs);
    return c;
}

SimplicialComplex SimplicialComplex::irrelevant_complex(VertexSet vs) {
    SimplicialComplex c;
    c.vertices_ = std::move(vs);
    c.facets_ = {Face::empty()};
    return c;
}

SimplicialComplex SimplicialComplex::full_simplex(VertexSet vs) {
    SimplicialComplex c;
    Face all = full_face(vs.size());
    c.vertices_ = std::move(vs);
    c.facets_ = {all};
    return c;
}

SimplicialComplex SimplicialComplex::from_facets(VertexSet vs, std::vector<Face> candidates) {
    check_in_ground(vs, candidates);
    SimplicialComplex c;
    c.vertices_ = std::move(vs);
    c.facets_ = maximal_faces(std::move(candidates));
    return c;
}

bool SimplicialComplex::is_full_simplex() const {
    return facets_.size() == 1 && facets_[0] == full_face(vertex_count());
}

bool SimplicialComplex::is_pure() const {
    if (facets_.empty()) return true;
    return facets_.front().cardinality() == facets_.back().cardinality();
}

int SimplicialComplex::dim() const {
    if (is_void()) return kNegInfinity;
    return facets_.back().dimension();
}

int SimplicialComplex::indim() const {
    if (is_void()) return kNegInfinity;
    return facets_.front().dimension();
}

int SimplicialComplex::dim_ring() const {
    if (is_void()) throw domain_error("ring dimension undefined for the void complex");
    return dim() + 1;
}

int SimplicialComplex::indim_ring() const {
    if (is_void()) throw domain_error("initial dimension undefined for the void complex");
    return indim() + 1;
}

bool SimplicialComplex::contains(Face f) const {
    for (Face g : facets_)
        if (f.subset_of(g)) return true;
    return false;
}

std::vector<Face> SimplicialComplex::all_faces() const {
    std::unordered_set<std::uint64_t> seen;
    for (Face g : facets_) {
        // Submask loop covers every subset of g, the empty face included.
        std::uint64_t s = g.bits;
        while (true) {
            seen.insert(s);
            if (s == 0) break;
            s = (s - 1) & g.bits;
        }
    }
    std::vector<Face> out;
    out.reserve(seen.size());
    for (std::uint64_t b : seen) out.push_back(Face{b});
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

std::vector<Face> SimplicialComplex::faces_of_dimension(int i) const {
    std::unordered_set<std::uint64_t> seen;
    for (Face g : facets_)
        for (Face s : subsets_of_size(g, i + 1)) seen.insert(s.bits);
    std::vector<Face> out;
    out.reserve(seen.size());
    for (std::uint64_t b : seen) out.push_back(Face{b});
    std::sort(out.begin(), out.end(), face_less);
    return out;
}

std::vector<Face> SimplicialComplex::minimal_nonfaces() const {
    if (is_void())
        throw domain_error("minimal non-faces undefined for the void complex");
    // Minimal non-faces are the minimal transversals of the facet
    // complements, built up one complement at a time.
    Face ground = full_face(vertex_count());
    std::vector<Face> trans = {Face::empty()};
    for (Face g : facets_) {
        Face co = ground.minus(g);
        std::vector<Face> next;
        std::vector<Face> extend;
        for (Face t : trans) {
            if (t.intersect(co).is_empty()) extend.push_back(t);
            else next.push_back(t);
        }
        for (Face t : extend)
            for (int v : co.members()) {
                Face cand = t.with(v);
                bool dominated = false;
                for (Face k : next)
                    if (k.subset_of(cand)) { dominated = true; break; }
                if (!dominated) next.push_back(cand);
            }
        // Re-minimalize: extensions can dominate one another.
        std::sort(next.begin(), next.end(), face_less);
        std::vector<Face> reduced;
        for (Face t : next) {
            bool dominated = false;
            for (Face k : reduced)
                if (k.subset_of(t)) { dominated = true; break; }
            if (!dominated) reduced.push_back(t);
        }
        trans = std::move(reduced);
    }
    if (trans.size() == 1 && trans[0].is_empty()) return {};  // full simplex
    std::sort(trans.begin(), trans.end(), face_less);
    return trans;
}

SimplicialComplex SimplicialComplex::alexander_dual() const {
    Face ground = full_face(vertex_count());
    if (is_void()) return full_simplex(vertices_);
    std::vector<Face> nf = minimal_nonfaces();
    if (nf.empty()) return void_complex(vertices_);
    std::vector<Face> duals;
    duals.reserve(nf.size());
    for (Face f : nf) duals.push_back(ground.minus(f));
    // Complements of an antichain of minimal sets are already maximal.
    std::sort(duals.begin(), duals.end(), face_less);
    SimplicialComplex c;
    c.vertices_ = vertices_;
    c.facets_ = std::move(duals);
    return c;
}

SimplicialComplex SimplicialComplex::skeleton(int i) const {
    if (i < -1) throw domain_error("skeleton index must be at least -1");
    if (is_void()) return *this;
    if (i >= dim()) return *this;
    std::vector<Face> cand;
    for (Face g : facets_) {
        if (g.dimension() <= i) cand.push_back(g);
        else for (Face s : subsets_of_size(g, i + 1)) cand.push_back(s);
    }
    return from_facets(vertices_, std::move(cand));
}

SimplicialComplex SimplicialComplex::pure_skeleton(int i) const {
    if (is_void()) throw domain_error("pure skeleton undefined for the void complex");
    if (i < -1 || i > dim()) throw domain_error("pure skeleton index out of range");
    SimplicialComplex c;
    c.vertices_ = vertices_;
    c.facets_ = faces_of_dimension(i);
    return c;
}

SimplicialComplex SimplicialComplex::link(Face f) const {
    if (!contains(f)) throw domain_error("link requires a face of the complex");
    std::vector<Face> cand;
    for (Face g : facets_)
        if (f.subset_of(g)) cand.push_back(g.minus(f));
    // Supersets of distinct facets stay incomparable after removing f, so
    // cand is an antichain, but re-indexing still has to happen.
    std::vector<int> kept;
    for (int v = 0; v < vertex_count(); ++v)
        if (!f.contains(v)) kept.push_back(v);
    std::vector<int> newindex(static_cast<std::size_t>(vertex_count()), -1);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        newindex[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
        names.push_back(vertices_.names[static_cast<std::size_t>(kept[i])]);
    }
    std::vector<Face> mapped;
    mapped.reserve(cand.size());
    for (Face g : cand) {
        Face m;
        for (int v : g.members()) m = m.with(newindex[static_cast<std::size_t>(v)]);
        mapped.push_back(m);
    }
    SimplicialComplex c;
    c.vertices_ = VertexSet(std::move(names));
    c.facets_ = maximal_faces(std::move(mapped));
    return c;
}

SimplicialComplex SimplicialComplex::deletion(Face f) const {
    Face keep = full_face(vertex_count()).minus(f);
    if (is_void()) return *this;
    std::vector<Face> cand;
    cand.reserve(facets_.size());
    for (Face g : facets_) cand.push_back(g.intersect(keep));
    return from_facets(vertices_, std::move(cand));
}

SimplicialComplex SimplicialComplex::induced(Face w) const {
    if (!w.subset_of(full_face(vertex_count())))
        throw domain_error("induced subcomplex requires a subset of the ground set");
    std::vector<int> kept = w.members();
    std::vector<int> newindex(static_cast<std::size_t>(vertex_count()), -1);
    std::vector<std::string> names;
    for (std::size_t i = 0; i < kept.size(); ++i) {
        newindex[static_cast<std::size_t>(kept[i])] = static_cast<int>(i);
        names.push_back(vertices_.names[static_cast<std::size_t>(kept[i])]);
    }
    VertexSet vs(std::move(names));
    if (is_void()) return void_complex(std::move(vs));
    std::vector<Face> cand;
    cand.reserve(facets_.size());
    for (Face g : facets_) {
        Face m;
        for (int v : g.intersect(w).members())
            m = m.with(newindex[static_cast<std::size_t>(v)]);
        cand.push_back(m);
    }
    SimplicialComplex c;
    c.vertices_ = std::move(vs);
    c.facets_ = maximal_faces(std::move(cand));
    return c;
}

SimplicialComplex SimplicialComplex::truncated(int k) const {
    if (is_void()) throw domain_error("truncation undefined for the void complex");
    std::vector<Face> nf = minimal_nonfaces();
    if (nf.empty()) throw domain_error("truncation requires at least one non-face");
    int mindeg = nf.front().cardinality();
    if (k < mindeg || k > vertex_count())
        throw domain_error("truncation degree must lie between the least generator degree and n");
    std::vector<Face> cand = facets_;
    for (Face s : subsets_of_size(full_face(vertex_count()), k - 1)) cand.push_back(s);
    return from_facets(vertices_, std::move(cand));
}

FVector SimplicialComplex::f_vector() const {
    FVector fv;
    if (is_void()) return fv;
    std::vector<long long> count(static_cast<std::size_t>(dim() + 2), 0);
    for (Face f : all_faces()) ++count[static_cast<std::size_t>(f.cardinality())];
    fv.entries = std::move(count);
    return fv;
}

HPolynomial SimplicialComplex::h_polynomial() const {
    if (is_void()) throw domain_error("h-polynomial undefined for the void complex");
    FVector fv = f_vector();
    int d = dim_ring();
    HPolynomial hp;
    hp.coeffs.assign(static_cast<std::size_t>(d + 1), 0);
    // h_j = sum_i (-1)^(j-i) C(d-i, j-i) f_{i-1}
    for (int j = 0; j <= d; ++j) {
        long long acc = 0;
        for (int i = 0; i <= j; ++i) {
            long long term = binomial(d - i, j - i) * fv.f(i - 1);
            acc += ((j - i) % 2 == 0) ? term : -term;
        }
        hp.coeffs[static_cast<std::size_t>(j)] = acc;
    }
    return hp;
}

}  // namespace icmkit
