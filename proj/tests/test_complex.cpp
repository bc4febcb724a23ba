#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "icmkit/complex.hpp"
#include "support.hpp"

using icmkit::Face;
using icmkit::FVector;
using icmkit::HPolynomial;
using icmkit::SimplicialComplex;
using icmkit::VertexSet;
using support::make_complex;

namespace {

// Coefficient list of sum_i f_{i-1} t^i (1-t)^(d-i), multiplied out term by
// term; an independent route to the h-polynomial.
std::vector<long long> expand_h(const FVector& fv, int d) {
    std::vector<long long> acc(static_cast<std::size_t>(d + 1), 0);
    for (int i = 0; i <= d; ++i) {
        // t^i (1-t)^(d-i)
        std::vector<long long> term(static_cast<std::size_t>(d + 1), 0);
        term[static_cast<std::size_t>(i)] = 1;
        for (int rep = 0; rep < d - i; ++rep) {
            std::vector<long long> next(static_cast<std::size_t>(d + 1), 0);
            for (int k = 0; k <= d; ++k) {
                if (term[static_cast<std::size_t>(k)] == 0) continue;
                next[static_cast<std::size_t>(k)] += term[static_cast<std::size_t>(k)];
                if (k + 1 <= d) next[static_cast<std::size_t>(k + 1)] -= term[static_cast<std::size_t>(k)];
            }
            term = next;
        }
        for (int k = 0; k <= d; ++k) acc[static_cast<std::size_t>(k)] += fv.f(i - 1) * term[static_cast<std::size_t>(k)];
    }
    return acc;
}

}  // namespace

TEST_CASE("face basics") {
    Face f = Face::of({0, 2, 5});
    CHECK(f.cardinality() == 3);
    CHECK(f.dimension() == 2);
    CHECK(f.contains(2));
    CHECK_FALSE(f.contains(1));
    CHECK(f.members() == std::vector<int>{0, 2, 5});
    CHECK(f.without(2) == Face::of({0, 5}));
    CHECK(Face::of({0, 2}).subset_of(f));
    CHECK_FALSE(f.subset_of(Face::of({0, 2})));
    CHECK(Face::empty().subset_of(f));

    // Canonical order: cardinality first, bitmask second.
    CHECK(icmkit::face_less(Face::of({5}), Face::of({0, 1})));
    CHECK(icmkit::face_less(Face::of({0, 1}), Face::of({0, 2})));
    CHECK_FALSE(icmkit::face_less(Face::of({0, 2}), Face::of({0, 2})));
}

TEST_CASE("vertex sets") {
    VertexSet vs = VertexSet::numbered(3);
    CHECK(vs.names == std::vector<std::string>{"x1", "x2", "x3"});
    CHECK(vs.size() == 3);
    CHECK_THROWS_AS(VertexSet(std::vector<std::string>(65, "v")), icmkit::domain_error);
}

TEST_CASE("construction canonicalizes facets") {
    // Non-maximal and duplicate candidates disappear.
    SimplicialComplex c = make_complex(3, {{0}, {0, 2}, {1}, {0, 2}});
    REQUIRE(c.facets().size() == 2);
    CHECK(c.facets()[0] == Face::of({1}));
    CHECK(c.facets()[1] == Face::of({0, 2}));
    CHECK_FALSE(c.is_pure());
    CHECK(c.dim() == 1);
    CHECK(c.indim() == 0);
    CHECK(c.dim_ring() == 2);
    CHECK(c.indim_ring() == 1);

    CHECK_THROWS_AS(make_complex(2, {{0, 3}}), icmkit::domain_error);
}

TEST_CASE("void and irrelevant complexes are distinct") {
    SimplicialComplex void_c = SimplicialComplex::void_complex(VertexSet::numbered(2));
    SimplicialComplex irr = SimplicialComplex::irrelevant_complex(VertexSet::numbered(2));
    CHECK(void_c.is_void());
    CHECK_FALSE(void_c.is_irrelevant());
    CHECK(irr.is_irrelevant());
    CHECK_FALSE(irr.is_void());
    CHECK(void_c.dim() == icmkit::kNegInfinity);
    CHECK(irr.dim() == -1);
    CHECK(irr.dim_ring() == 0);
    CHECK(void_c.all_faces().empty());
    CHECK(irr.all_faces() == std::vector<Face>{Face::empty()});
    CHECK(void_c.is_pure());
    CHECK(irr.is_pure());
    CHECK_FALSE(void_c.contains(Face::empty()));
    CHECK(irr.contains(Face::empty()));
    CHECK_THROWS_AS(void_c.dim_ring(), icmkit::domain_error);
    // from_facets with an empty-face candidate is {{}} rather than void.
    CHECK(SimplicialComplex::from_facets(VertexSet::numbered(2), {Face::empty()}).is_irrelevant());
}

TEST_CASE("face enumeration") {
    SimplicialComplex c = make_complex(3, {{1}, {0, 2}});
    std::vector<Face> faces = c.all_faces();
    REQUIRE(faces.size() == 5);
    CHECK(faces[0] == Face::empty());
    CHECK(faces[1] == Face::of({0}));
    CHECK(faces[2] == Face::of({1}));
    CHECK(faces[3] == Face::of({2}));
    CHECK(faces[4] == Face::of({0, 2}));
    CHECK(c.faces_of_dimension(-1) == std::vector<Face>{Face::empty()});
    CHECK(c.faces_of_dimension(0).size() == 3);
    CHECK(c.faces_of_dimension(1) == std::vector<Face>{Face::of({0, 2})});
    CHECK(c.faces_of_dimension(2).empty());

    SECTION("membership agrees with brute force") {
        std::mt19937 rng(20240811);
        for (int trial = 0; trial < 40; ++trial) {
            SimplicialComplex r = support::random_complex(rng, 1, 6);
            for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << r.vertex_count()); ++bits)
                CHECK(r.contains(Face{bits}) == support::oracle_is_face(r, Face{bits}));
        }
    }
}

TEST_CASE("minimal nonfaces") {
    // Facets {x2}, {x1 x3}: the ideal is (x1 x2, x2 x3).
    SimplicialComplex c = make_complex(3, {{1}, {0, 2}});
    std::vector<Face> nf = c.minimal_nonfaces();
    REQUIRE(nf.size() == 2);
    CHECK(nf[0] == Face::of({0, 1}));
    CHECK(nf[1] == Face::of({1, 2}));

    CHECK(SimplicialComplex::full_simplex(VertexSet::numbered(3)).minimal_nonfaces().empty());
    // {{}} on n vertices: every variable is a generator.
    std::vector<Face> vars =
        SimplicialComplex::irrelevant_complex(VertexSet::numbered(3)).minimal_nonfaces();
    REQUIRE(vars.size() == 3);
    CHECK(vars[0] == Face::of({0}));
    CHECK_THROWS_AS(SimplicialComplex::void_complex(VertexSet::numbered(2)).minimal_nonfaces(),
                    icmkit::domain_error);

    SECTION("agrees with subset sweep") {
        std::mt19937 rng(20240812);
        for (int trial = 0; trial < 120; ++trial) {
            SimplicialComplex r = support::random_complex(rng, 1, 7);
            CHECK(r.minimal_nonfaces() == support::oracle_minimal_nonfaces(r));
        }
    }
}

TEST_CASE("alexander dual") {
    SimplicialComplex c = make_complex(3, {{1}, {0, 2}});
    SimplicialComplex dual = c.alexander_dual();
    REQUIRE(dual.facets().size() == 2);
    CHECK(dual.facets()[0] == Face::of({0}));
    CHECK(dual.facets()[1] == Face::of({2}));
    CHECK(dual.vertices() == c.vertices());

    SECTION("void and full simplex swap") {
        SimplicialComplex void_c = SimplicialComplex::void_complex(VertexSet::numbered(3));
        CHECK(void_c.alexander_dual().is_full_simplex());
        CHECK(SimplicialComplex::full_simplex(VertexSet::numbered(3)).alexander_dual().is_void());
        // {{}} on one vertex is self-dual.
        SimplicialComplex irr = SimplicialComplex::irrelevant_complex(VertexSet::numbered(1));
        CHECK(irr.alexander_dual() == irr);
    }

    SECTION("involution on random complexes") {
        std::mt19937 rng(20240813);
        for (int trial = 0; trial < 100; ++trial) {
            SimplicialComplex r = support::random_complex(rng, 1, 7);
            CHECK(r.alexander_dual().alexander_dual() == r);
        }
    }

    SECTION("dual facets are complements of the oracle's minimal nonfaces") {
        std::mt19937 rng(20240814);
        for (int trial = 0; trial < 50; ++trial) {
            SimplicialComplex r = support::random_complex(rng, 1, 6);
            std::vector<Face> expected;
            Face ground = icmkit::full_face(r.vertex_count());
            for (Face f : support::oracle_minimal_nonfaces(r)) expected.push_back(ground.minus(f));
            std::sort(expected.begin(), expected.end(), icmkit::face_less);
            if (expected.empty()) {
                CHECK(r.alexander_dual().is_void());
            } else {
                CHECK(r.alexander_dual().facets() == expected);
            }
        }
    }
}

TEST_CASE("skeleton") {
    SimplicialComplex c = make_complex(4, {{0, 1, 2}, {2, 3}});
    SimplicialComplex sk1 = c.skeleton(1);
    REQUIRE(sk1.dim() == 1);
    CHECK(sk1.facets() == std::vector<Face>{Face::of({0, 1}), Face::of({0, 2}), Face::of({1, 2}),
                                            Face::of({2, 3})});
    CHECK(c.skeleton(0).facets().size() == 4);
    CHECK(c.skeleton(-1).is_irrelevant());
    CHECK(c.skeleton(2) == c);
    CHECK(c.skeleton(5) == c);
    CHECK(SimplicialComplex::void_complex(VertexSet::numbered(2)).skeleton(1).is_void());
    CHECK_THROWS_AS(c.skeleton(-2), icmkit::domain_error);

    SECTION("f-vector of the skeleton is a prefix") {
        std::mt19937 rng(20240815);
        for (int trial = 0; trial < 60; ++trial) {
            SimplicialComplex r = support::random_complex(rng, 1, 7);
            int d = r.dim();
            for (int i = -1; i <= d; ++i) {
                FVector whole = r.f_vector();
                FVector part = r.skeleton(i).f_vector();
                for (int q = -1; q <= i; ++q) CHECK(part.f(q) == whole.f(q));
                for (int q = i + 1; q <= d; ++q) CHECK(part.f(q) == 0);
            }
        }
    }
}

TEST_CASE("pure skeleton") {
    SimplicialComplex c = make_complex(4, {{0, 1, 2}, {2, 3}});
    SimplicialComplex p1 = c.pure_skeleton(1);
    CHECK(p1.facets() == std::vector<Face>{Face::of({0, 1}), Face::of({0, 2}), Face::of({1, 2}),
                                           Face::of({2, 3})});
    SimplicialComplex p2 = c.pure_skeleton(2);
    CHECK(p2.facets() == std::vector<Face>{Face::of({0, 1, 2})});
    CHECK(c.pure_skeleton(-1).is_irrelevant());
    CHECK_THROWS_AS(c.pure_skeleton(3), icmkit::domain_error);
    CHECK_THROWS_AS(SimplicialComplex::void_complex(VertexSet::numbered(2)).pure_skeleton(0),
                    icmkit::domain_error);

    SECTION("always pure, keeps the ground set") {
        std::mt19937 rng(20240816);
        for (int trial = 0; trial < 60; ++trial) {
            SimplicialComplex r = support::random_complex(rng, 1, 7);
            for (int i = -1; i <= r.dim(); ++i) {
                SimplicialComplex p = r.pure_skeleton(i);
                CHECK(p.is_pure());
                CHECK(p.dim() == i);
                CHECK(p.vertices() == r.vertices());
            }
            // The skeleton at indim is generated by the minimum facets, so
            // taking it is the same as the pure skeleton there.
            CHECK(r.skeleton(r.indim()).facets().size() >= r.pure_skeleton(r.indim()).facets().size());
        }
    }
}

TEST_CASE("link") {
    // Independence complex of the 4-cycle: two disjoint edges.
    SimplicialComplex c = make_complex(4, {{0, 2}, {1, 3}});
    SimplicialComplex lk = c.link(Face::of({0}));
    CHECK(lk.vertex_count() == 3);
    CHECK(lk.vertices().names == std::vector<std::string>{"x2", "x3", "x4"});
    REQUIRE(lk.facets().size() == 1);
    CHECK(lk.facets()[0] == Face::of({1}));  // x3 after re-indexing

    CHECK(c.link(Face::empty()) == c);
    CHECK(c.link(Face::of({0, 2})).is_irrelevant());
    CHECK(c.link(Face::of({0, 2})).vertex_count() == 2);
    CHECK_THROWS_AS(c.link(Face::of({0, 1})), icmkit::domain_error);

    SECTION("the link of a face of a minimum facet has indim at least indim - |F|") {
        std::mt19937 rng(20240817);
        for (int trial = 0; trial < 60; ++trial) {
            SimplicialComplex r = support::random_complex(rng, 1, 7);
            if (r.is_irrelevant()) continue;
            Face minf = r.facets().front();
            for (int v : minf.members()) {
                SimplicialComplex lk2 = r.link(Face::of({v}));
                CHECK(lk2.indim() >= r.indim() - 1);
            }
        }
    }
}

TEST_CASE("deletion and induced") {
    SimplicialComplex c = make_complex(4, {{0, 2}, {1, 3}});
    SimplicialComplex del = c.deletion(Face::of({0}));
    CHECK(del.vertex_count() == 4);  // ground set unchanged
    CHECK(del.facets() == std::vector<Face>{Face::of({2}), Face::of({1, 3})});

    SimplicialComplex ind = c.induced(Face::of({0, 1}));
    CHECK(ind.vertex_count() == 2);
    CHECK(ind.facets() == std::vector<Face>{Face::of({0}), Face::of({1})});
    CHECK(ind.vertices().names == std::vector<std::string>{"x1", "x2"});

    CHECK(c.induced(Face::empty()).is_irrelevant());
    CHECK(c.induced(Face::empty()).vertex_count() == 0);
    SimplicialComplex void_c = SimplicialComplex::void_complex(VertexSet::numbered(3));
    CHECK(void_c.induced(Face::of({0})).is_void());
    CHECK_THROWS_AS(c.induced(Face::of({5})), icmkit::domain_error);
}

TEST_CASE("truncation") {
    // Path on three vertices, independence side: ideal (x1 x2, x2 x3).
    SimplicialComplex c = make_complex(3, {{1}, {0, 2}});
    SimplicialComplex t3 = c.truncated(3);
    CHECK(t3.facets() == std::vector<Face>{Face::of({0, 1}), Face::of({0, 2}), Face::of({1, 2})});
    CHECK(t3.minimal_nonfaces() == std::vector<Face>{Face::of({0, 1, 2})});
    CHECK(c.truncated(2) == c);  // k at mindeg changes nothing

    CHECK_THROWS_AS(c.truncated(1), icmkit::domain_error);
    CHECK_THROWS_AS(c.truncated(4), icmkit::domain_error);
    CHECK_THROWS_AS(SimplicialComplex::full_simplex(VertexSet::numbered(3)).truncated(2),
                    icmkit::domain_error);
    CHECK_THROWS_AS(SimplicialComplex::void_complex(VertexSet::numbered(3)).truncated(1),
                    icmkit::domain_error);

    SECTION("duality exchanges truncation and skeleta") {
        std::mt19937 rng(20240818);
        for (int trial = 0; trial < 80; ++trial) {
            SimplicialComplex r = support::random_complex_with_nonface(rng, 1, 7);
            int n = r.vertex_count();
            int mindeg = r.minimal_nonfaces().front().cardinality();
            for (int k = mindeg; k <= n; ++k) {
                SimplicialComplex lhs = r.truncated(k).alexander_dual();
                SimplicialComplex rhs = r.alexander_dual().skeleton(n - k - 1);
                CHECK(lhs == rhs);
            }
        }
    }
}

TEST_CASE("f-vector and h-polynomial") {
    // Two isolated points.
    SimplicialComplex pts = make_complex(2, {{0}, {1}});
    CHECK(pts.f_vector().entries == std::vector<long long>{1, 2});
    CHECK(pts.h_polynomial().coeffs == std::vector<long long>{1, 1});
    CHECK(pts.h_polynomial().degree() == 1);

    SimplicialComplex full = SimplicialComplex::full_simplex(VertexSet::numbered(2));
    CHECK(full.f_vector().entries == std::vector<long long>{1, 2, 1});
    CHECK(full.h_polynomial().coeffs == std::vector<long long>{1, 0, 0});
    CHECK(full.h_polynomial().degree() == 0);

    SimplicialComplex irr = SimplicialComplex::irrelevant_complex(VertexSet::numbered(2));
    CHECK(irr.f_vector().entries == std::vector<long long>{1});
    CHECK(irr.h_polynomial().coeffs == std::vector<long long>{1});

    CHECK(SimplicialComplex::void_complex(VertexSet::numbered(2)).f_vector().entries.empty());
    CHECK_THROWS_AS(SimplicialComplex::void_complex(VertexSet::numbered(2)).h_polynomial(),
                    icmkit::domain_error);

    SECTION("matches the defining polynomial expansion") {
        std::mt19937 rng(20240819);
        for (int trial = 0; trial < 80; ++trial) {
            SimplicialComplex r = support::random_complex(rng, 1, 7);
            HPolynomial h = r.h_polynomial();
            CHECK(h.coeffs == expand_h(r.f_vector(), r.dim_ring()));
        }
    }
}
