#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "icmkit/connectivity.hpp"
#include "icmkit/graph.hpp"
#include "icmkit/invariants.hpp"
#include "support.hpp"

using icmkit::FieldSpec;
using icmkit::SimplicialComplex;
using icmkit::VertexSet;
using support::make_complex;

TEST_CASE("strong connectivity") {
    CHECK_FALSE(is_strongly_connected(SimplicialComplex::void_complex(VertexSet::numbered(2))));
    CHECK(is_strongly_connected(SimplicialComplex::irrelevant_complex(VertexSet::numbered(2))));
    CHECK(is_strongly_connected(SimplicialComplex::full_simplex(VertexSet::numbered(4))));
    CHECK(is_strongly_connected(make_complex(5, {{0, 1, 2, 3, 4}})));

    // Zero-dimensional complexes: facets meet in the empty set, and that is
    // exactly a shared face of codimension one.
    CHECK(is_strongly_connected(make_complex(3, {{0}, {1}, {2}})));

    // One-dimensional: strong connectivity is graph connectivity.
    CHECK(is_strongly_connected(make_complex(3, {{0, 1}, {1, 2}, {0, 2}})));
    CHECK_FALSE(is_strongly_connected(make_complex(4, {{0, 1}, {2, 3}})));

    // Two triangles: a shared edge connects, a shared vertex does not.
    CHECK(is_strongly_connected(make_complex(4, {{0, 1, 2}, {1, 2, 3}})));
    CHECK_FALSE(is_strongly_connected(make_complex(5, {{0, 1, 2}, {2, 3, 4}})));

    // Non-pure complexes with several facets always fail: only facets of the
    // top cardinality can share a face of dimension dim - 1.
    CHECK_FALSE(is_strongly_connected(make_complex(4, {{0, 1, 2}, {2, 3}})));
    CHECK_FALSE(is_strongly_connected(make_complex(4, {{0, 1, 2}, {3}})));

    std::mt19937 rng(21);
    for (int trial = 0; trial < 80; ++trial) {
        SimplicialComplex c = support::random_complex(rng, 1, 7);
        if (!c.is_pure() && c.facets().size() > 1)
            CHECK_FALSE(is_strongly_connected(c));
    }
}

TEST_CASE("weak connectivity reads the minimum skeleton") {
    SimplicialComplex c7 = independence_complex(icmkit::cycle_graph(7));
    CHECK(is_weakly_connected(c7));

    // Two triangles glued at a vertex: pure, so weak equals strong here.
    SimplicialComplex wedge = make_complex(5, {{0, 1, 2}, {2, 3, 4}});
    CHECK_FALSE(is_weakly_connected(wedge));

    // Adding a low-dimensional facet drops the skeleton that gets tested.
    SimplicialComplex mixed = make_complex(6, {{0, 1, 2}, {2, 3, 4}, {5}});
    CHECK(is_weakly_connected(mixed));  // skeleton(0) is a set of points

    CHECK_FALSE(is_weakly_connected(SimplicialComplex::void_complex(VertexSet::numbered(2))));
    CHECK(is_weakly_connected(SimplicialComplex::irrelevant_complex(VertexSet::numbered(2))));

    // The skeleton at the minimum facet dimension is pure, so the weak test
    // agrees with strong connectivity of the pure skeleton.
    std::mt19937 rng(22);
    for (int trial = 0; trial < 80; ++trial) {
        SimplicialComplex c = support::random_complex(rng, 1, 7);
        CHECK(is_weakly_connected(c) ==
              is_strongly_connected(c.pure_skeleton(c.indim())));
    }
}

TEST_CASE("stable connectivity checks every pure skeleton") {
    SimplicialComplex c7 = independence_complex(icmkit::cycle_graph(7));
    CHECK(is_stably_connected(c7));

    SimplicialComplex wedge = make_complex(5, {{0, 1, 2}, {2, 3, 4}});
    CHECK_FALSE(is_stably_connected(wedge));

    // Triangle plus point: every pure skeleton is strongly connected.
    SimplicialComplex tripoint = make_complex(4, {{0, 1, 2}, {3}});
    CHECK(is_stably_connected(tripoint));

    // Path edges plus a far-away edge: the pure 1-skeleton is disconnected.
    SimplicialComplex split = make_complex(5, {{0, 1}, {1, 2}, {3, 4}});
    CHECK_FALSE(is_stably_connected(split));

    CHECK_FALSE(is_stably_connected(SimplicialComplex::void_complex(VertexSet::numbered(2))));
    CHECK(is_stably_connected(SimplicialComplex::irrelevant_complex(VertexSet::numbered(2))));

    std::mt19937 rng(23);
    for (int trial = 0; trial < 80; ++trial) {
        SimplicialComplex c = support::random_complex(rng, 1, 7);
        if (is_stably_connected(c)) CHECK(is_weakly_connected(c));
    }
}

TEST_CASE("connectivity is necessary for the depth classes") {
    FieldSpec q = FieldSpec::rationals();
    std::mt19937 rng(24);
    int icm_seen = 0, scm_seen = 0;
    for (int trial = 0; trial < 120; ++trial) {
        SimplicialComplex c = support::random_complex(rng, 1, 6);
        if (is_icm(c, q)) {
            ++icm_seen;
            CHECK(is_weakly_connected(c));
        }
        if (is_sequentially_cm(c, q)) {
            ++scm_seen;
            CHECK(is_stably_connected(c));
        }
    }
    CHECK(icm_seen > 10);
    CHECK(scm_seen > 10);
}

TEST_CASE("low depth candidates reduce to a connectivity check") {
    // With the minimum facet dimension at most one, weak connectivity is the
    // whole story.
    FieldSpec q = FieldSpec::rationals();
    std::mt19937 rng(25);
    int tested = 0;
    for (int trial = 0; trial < 200; ++trial) {
        SimplicialComplex c = support::random_complex(rng, 1, 7);
        if (c.indim() > 1) continue;
        ++tested;
        CHECK(is_icm(c, q) == is_weakly_connected(c));
    }
    CHECK(tested > 40);

    for (const icmkit::Graph& g : support::all_graphs(5)) {
        SimplicialComplex ind = independence_complex(g);
        if (ind.indim() > 1) continue;
        CHECK(is_icm(ind, q) == is_weakly_connected(ind));
    }
}
