#ifndef ICMKIT_GRAPH_HPP
#define ICMKIT_GRAPH_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "icmkit/complex.hpp"
#include "icmkit/types.hpp"

namespace icmkit {

/// Finite simple graph on an ordered vertex set, adjacency as bitmasks.
struct Graph {
    VertexSet vertices;
    std::vector<std::uint64_t> adj;

    Graph() = default;
    explicit Graph(VertexSet vs)
        : vertices(std::move(vs)),
          adj(static_cast<std::size_t>(vertices.size()), 0) {}

    /// Builds from an edge list; rejects loops, ignores duplicates.
    static Graph from_edges(VertexSet vs, const std::vector<std::pair<int, int>>& edges);

    int vertex_count() const { return vertices.size(); }
    bool has_edge(int a, int b) const { return (adj[static_cast<std::size_t>(a)] >> b) & 1u; }
    void add_edge(int a, int b);

    int degree(int v) const { return std::popcount(adj[static_cast<std::size_t>(v)]); }
    int max_degree() const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;

    Graph complement() const;

    bool operator==(const Graph&) const = default;
};

/// Independence complex: faces are the independent vertex sets.
SimplicialComplex independence_complex(const Graph& g);

/// Clique complex: faces are the cliques.
SimplicialComplex clique_complex(const Graph& g);

/// Chordality by maximum cardinality search plus perfect elimination check.
bool is_chordal(const Graph& g);

Graph path_graph(int n);
Graph cycle_graph(int n);
Graph complete_graph(int n);

/// Construction plan for a d-tree: start from a complete graph on
/// steps[0].clique_size vertices, then each later step adds one vertex
/// adjacent to an existing clique of size clique_size - 1. Sizes must be
/// positive and non-increasing.
struct DTreeRecipe {
    struct Step {
        int clique_size = 0;
        Face attachment;  // indices among the vertices built so far
    };
    std::vector<Step> steps;
};

/// Builds the graph a recipe describes; throws domain_error on an invalid
/// recipe (bad sizes, attachment not an existing clique of the right size).
Graph dtree(const DTreeRecipe& recipe);

/// A pseudorandom valid recipe with the given number of steps; the same seed
/// always yields the same recipe.
DTreeRecipe random_dtree_recipe(int steps, std::uint64_t seed);

/// Whether some recipe builds this graph: peels simplicial vertices with
/// non-decreasing degrees, backtracking over choices. Exact, exponential in
/// the worst case, meant for small graphs.
bool is_dtree(const Graph& g);

/// Vertices that lie in exactly one facet.
std::vector<int> free_vertices(const SimplicialComplex& c);

/// The facets of least cardinality.
std::vector<Face> minimum_facets(const SimplicialComplex& c);

/// Whether some minimum facet contains a vertex free in the whole complex.
bool has_free_vertex_in_minimum_facet(const SimplicialComplex& c);

/// bight of the edge ideal equals the graph's maximum degree. Works on the
/// independence complex; n >= 1.
bool bight_equals_maxdeg(const Graph& g);

/// pdim of the edge ideal's quotient equals the maximum degree.
bool pdim_equals_maxdeg(const Graph& g, const FieldSpec& field);

}  // namespace icmkit

#endif
