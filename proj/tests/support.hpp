#ifndef ICMKIT_TESTS_SUPPORT_HPP
#define ICMKIT_TESTS_SUPPORT_HPP

#include <algorithm>
#include <bit>
#include <cstdint>
#include <numeric>
#include <random>
#include <string>
#include <vector>

#include "icmkit/complex.hpp"
#include "icmkit/graph.hpp"
#include "icmkit/homology.hpp"
#include "icmkit/types.hpp"

namespace support {

using icmkit::Face;
using icmkit::FieldSpec;
using icmkit::Graph;
using icmkit::SimplicialComplex;
using icmkit::VertexSet;

/// Complex from facet vertex lists on x1..xn.
inline SimplicialComplex make_complex(int n, const std::vector<std::vector<int>>& facets) {
    std::vector<Face> fs;
    for (const std::vector<int>& facet : facets) {
        Face f;
        for (int v : facet) f = f.with(v);
        fs.push_back(f);
    }
    return SimplicialComplex::from_facets(VertexSet::numbered(n), std::move(fs));
}

/// Deterministic random complex: a handful of random candidate facets of
/// random cardinalities. Never void; may be {{}}.
inline SimplicialComplex random_complex(std::mt19937& rng, int min_n, int max_n) {
    std::uniform_int_distribution<int> npick(min_n, max_n);
    int n = npick(rng);
    std::uniform_int_distribution<int> cpick(1, 2 * n + 1);
    int count = cpick(rng);
    std::vector<Face> candidates;
    std::vector<int> verts(static_cast<std::size_t>(n));
    std::iota(verts.begin(), verts.end(), 0);
    for (int c = 0; c < count; ++c) {
        std::uniform_int_distribution<int> kpick(0, n);
        int k = kpick(rng);
        std::shuffle(verts.begin(), verts.end(), rng);
        Face f;
        for (int i = 0; i < k; ++i) f = f.with(verts[static_cast<std::size_t>(i)]);
        candidates.push_back(f);
    }
    return SimplicialComplex::from_facets(VertexSet::numbered(n), std::move(candidates));
}

/// As above, but with at least one non-face (that is: not the full simplex).
inline SimplicialComplex random_complex_with_nonface(std::mt19937& rng, int min_n, int max_n) {
    while (true) {
        SimplicialComplex c = random_complex(rng, min_n, max_n);
        if (!c.is_full_simplex()) return c;
    }
}

/// Random graph with edge probability 1/2.
inline Graph random_graph(std::mt19937& rng, int min_n, int max_n) {
    std::uniform_int_distribution<int> npick(min_n, max_n);
    int n = npick(rng);
    Graph g(VertexSet::numbered(n));
    std::bernoulli_distribution coin(0.5);
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (coin(rng)) g.add_edge(a, b);
    return g;
}

/// Cone over a complex: one new apex joined to every facet.
inline SimplicialComplex cone(const SimplicialComplex& c) {
    std::vector<std::string> names = c.vertices().names;
    names.push_back("apex");
    int apex = c.vertex_count();
    std::vector<Face> facets;
    if (c.is_void()) {
        facets.push_back(Face::empty().with(apex));
    } else {
        for (Face f : c.facets()) facets.push_back(f.with(apex));
    }
    return SimplicialComplex::from_facets(VertexSet(std::move(names)), std::move(facets));
}

/// Face membership by direct subset enumeration.
inline bool oracle_is_face(const SimplicialComplex& c, Face f) {
    for (Face g : c.facets())
        if (f.subset_of(g)) return true;
    return false;
}

/// Minimal non-faces by sweeping every vertex subset.
inline std::vector<Face> oracle_minimal_nonfaces(const SimplicialComplex& c) {
    int n = c.vertex_count();
    std::vector<Face> out;
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
        Face f{bits};
        if (oracle_is_face(c, f)) continue;
        bool minimal = true;
        for (int v : f.members())
            if (!oracle_is_face(c, f.without(v))) { minimal = false; break; }
        if (minimal) out.push_back(f);
    }
    std::sort(out.begin(), out.end(), icmkit::face_less);
    return out;
}

/// depth by the unpruned link-homology formula: the minimum of |F| + i + 1
/// over all faces F and all i with H~_i(link F) nonzero.
inline int oracle_depth(const SimplicialComplex& c, const FieldSpec& field) {
    int best = c.vertex_count() + 1;
    for (Face f : c.all_faces()) {
        icmkit::HomologyProfile profile = icmkit::reduced_homology_dims(c.link(f), field);
        for (std::size_t k = 0; k < profile.dims.size(); ++k) {
            if (profile.dims[k] == 0) continue;
            int q = profile.min_q + static_cast<int>(k);
            best = std::min(best, f.cardinality() + q + 1);
        }
    }
    return best;
}

/// Chordality by looking for an induced cycle of length at least four.
inline bool oracle_is_chordal(const Graph& g) {
    int n = g.vertex_count();
    for (std::uint64_t sub = 0; sub < (std::uint64_t{1} << n); ++sub) {
        if (std::popcount(sub) < 4) continue;
        // Induced subgraph is a single cycle iff it is 2-regular and
        // connected.
        bool regular = true;
        for (std::uint64_t b = sub; b != 0; b &= b - 1) {
            int v = std::countr_zero(b);
            if (std::popcount(g.adj[static_cast<std::size_t>(v)] & sub) != 2) {
                regular = false;
                break;
            }
        }
        if (!regular) continue;
        int start = std::countr_zero(sub);
        std::uint64_t seen = std::uint64_t{1} << start;
        std::vector<int> queue = {start};
        while (!queue.empty()) {
            int v = queue.back();
            queue.pop_back();
            std::uint64_t next = g.adj[static_cast<std::size_t>(v)] & sub & ~seen;
            while (next != 0) {
                int u = std::countr_zero(next);
                next &= next - 1;
                seen |= std::uint64_t{1} << u;
                queue.push_back(u);
            }
        }
        if (seen == sub) return false;  // induced chordless cycle found
    }
    return true;
}

/// All graphs on n labeled vertices, every edge subset.
inline std::vector<Graph> all_graphs(int n) {
    int slots = n * (n - 1) / 2;
    std::vector<Graph> out;
    out.reserve(std::size_t{1} << slots);
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << slots); ++code) {
        Graph g(VertexSet::numbered(n));
        int slot = 0;
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b) {
                if ((code >> slot) & 1u) g.add_edge(a, b);
                ++slot;
            }
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace support

#endif
