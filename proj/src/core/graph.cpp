#include "icmkit/graph.hpp"

#include <algorithm>
#include <functional>
#include <random>
#include <unordered_map>

#include "icmkit/invariants.hpp"

namespace icmkit {

namespace {

// Bron-Kerbosch with pivoting; reports every maximal clique of adj.
void bron_kerbosch(const std::vector<std::uint64_t>& adj, std::uint64_t r,
                   std::uint64_t p, std::uint64_t x, std::vector<Face>& out) {
    if (p == 0 && x == 0) {
        out.push_back(Face{r});
        return;
    }
    // Pivot: vertex of p|x with the most neighbours inside p.
    std::uint64_t px = p | x;
    int pivot = -1, best = -1;
    for (std::uint64_t b = px; b != 0; b &= b - 1) {
        int v = std::countr_zero(b);
        int cnt = std::popcount(adj[static_cast<std::size_t>(v)] & p);
        if (cnt > best) { best = cnt; pivot = v; }
    }
    std::uint64_t candidates = p & ~adj[static_cast<std::size_t>(pivot)];
    for (std::uint64_t b = candidates; b != 0; b &= b - 1) {
        int v = std::countr_zero(b);
        std::uint64_t vbit = std::uint64_t{1} << v;
        bron_kerbosch(adj, r | vbit, p & adj[static_cast<std::size_t>(v)],
                      x & adj[static_cast<std::size_t>(v)], out);
        p &= ~vbit;
        x |= vbit;
    }
}

SimplicialComplex complex_of_cliques(const Graph& g, const std::vector<std::uint64_t>& adj) {
    std::vector<Face> cliques;
    std::uint64_t all = g.vertex_count() == 0 ? 0 : full_face(g.vertex_count()).bits;
    bron_kerbosch(adj, 0, all, 0, cliques);
    SimplicialComplex c = SimplicialComplex::from_facets(g.vertices, std::move(cliques));
    return c;
}

bool is_clique(const std::vector<std::uint64_t>& adj, std::uint64_t mask) {
    for (std::uint64_t b = mask; b != 0; b &= b - 1) {
        int v = std::countr_zero(b);
        std::uint64_t others = mask & ~(std::uint64_t{1} << v);
        if ((adj[static_cast<std::size_t>(v)] & others) != others) return false;
    }
    return true;
}

}  // namespace

Graph Graph::from_edges(VertexSet vs, const std::vector<std::pair<int, int>>& edges) {
    Graph g(std::move(vs));
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= g.vertex_count() || b >= g.vertex_count())
            throw domain_error("edge endpoint outside the vertex set");
        if (a == b) throw domain_error("loops are not allowed");
        g.add_edge(a, b);
    }
    return g;
}

void Graph::add_edge(int a, int b) {
    adj[static_cast<std::size_t>(a)] |= std::uint64_t{1} << b;
    adj[static_cast<std::size_t>(b)] |= std::uint64_t{1} << a;
}

int Graph::max_degree() const {
    int best = 0;
    for (int v = 0; v < vertex_count(); ++v) best = std::max(best, degree(v));
    return best;
}

int Graph::edge_count() const {
    int total = 0;
    for (int v = 0; v < vertex_count(); ++v) total += degree(v);
    return total / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int a = 0; a < vertex_count(); ++a)
        for (int b = a + 1; b < vertex_count(); ++b)
            if (has_edge(a, b)) out.emplace_back(a, b);
    return out;
}

Graph Graph::complement() const {
    Graph g(vertices);
    std::uint64_t all = vertex_count() == 0 ? 0 : full_face(vertex_count()).bits;
    for (int v = 0; v < vertex_count(); ++v)
        g.adj[static_cast<std::size_t>(v)] =
            all & ~adj[static_cast<std::size_t>(v)] & ~(std::uint64_t{1} << v);
    return g;
}

SimplicialComplex independence_complex(const Graph& g) {
    return complex_of_cliques(g, g.complement().adj);
}

SimplicialComplex clique_complex(const Graph& g) {
    return complex_of_cliques(g, g.adj);
}

bool is_chordal(const Graph& g) {
    int n = g.vertex_count();
    if (n <= 2) return true;
    // Maximum cardinality search. Ties broken by lowest index.
    std::vector<int> weight(static_cast<std::size_t>(n), 0);
    std::vector<bool> numbered(static_cast<std::size_t>(n), false);
    std::vector<int> order;
    order.reserve(static_cast<std::size_t>(n));
    for (int step = 0; step < n; ++step) {
        int pick = -1;
        for (int v = 0; v < n; ++v)
            if (!numbered[static_cast<std::size_t>(v)] &&
                (pick < 0 || weight[static_cast<std::size_t>(v)] > weight[static_cast<std::size_t>(pick)]))
                pick = v;
        numbered[static_cast<std::size_t>(pick)] = true;
        order.push_back(pick);
        for (std::uint64_t b = g.adj[static_cast<std::size_t>(pick)]; b != 0; b &= b - 1) {
            int u = std::countr_zero(b);
            if (!numbered[static_cast<std::size_t>(u)]) ++weight[static_cast<std::size_t>(u)];
        }
    }
    // Reversed MCS order is a perfect elimination order iff chordal: each
    // vertex's later neighbourhood must be a clique, and it is enough to
    // check it against the earliest later neighbour.
    std::vector<int> position(static_cast<std::size_t>(n));
    std::reverse(order.begin(), order.end());
    for (int i = 0; i < n; ++i) position[static_cast<std::size_t>(order[static_cast<std::size_t>(i)])] = i;
    for (int i = 0; i < n; ++i) {
        int v = order[static_cast<std::size_t>(i)];
        std::uint64_t later = 0;
        int first = -1, firstpos = n;
        for (std::uint64_t b = g.adj[static_cast<std::size_t>(v)]; b != 0; b &= b - 1) {
            int u = std::countr_zero(b);
            int pu = position[static_cast<std::size_t>(u)];
            if (pu > i) {
                later |= std::uint64_t{1} << u;
                if (pu < firstpos) { firstpos = pu; first = u; }
            }
        }
        if (first < 0) continue;
        std::uint64_t rest = later & ~(std::uint64_t{1} << first);
        if ((g.adj[static_cast<std::size_t>(first)] & rest) != rest) return false;
    }
    return true;
}

Graph path_graph(int n) {
    if (n < 1) throw domain_error("a path needs at least one vertex");
    Graph g(VertexSet::numbered(n));
    for (int v = 0; v + 1 < n; ++v) g.add_edge(v, v + 1);
    return g;
}

Graph cycle_graph(int n) {
    if (n < 3) throw domain_error("a cycle needs at least three vertices");
    Graph g(VertexSet::numbered(n));
    for (int v = 0; v < n; ++v) g.add_edge(v, (v + 1) % n);
    return g;
}

Graph complete_graph(int n) {
    if (n < 1) throw domain_error("a complete graph needs at least one vertex");
    Graph g(VertexSet::numbered(n));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) g.add_edge(a, b);
    return g;
}

Graph dtree(const DTreeRecipe& recipe) {
    if (recipe.steps.empty()) throw domain_error("a d-tree recipe needs at least one step");
    int n = recipe.steps[0].clique_size + static_cast<int>(recipe.steps.size()) - 1;
    if (n > kMaxVertices) throw domain_error("d-tree recipe builds too many vertices");
    Graph g(VertexSet::numbered(n));
    int built = 0;
    int previous = 0;
    for (std::size_t s = 0; s < recipe.steps.size(); ++s) {
        const DTreeRecipe::Step& step = recipe.steps[s];
        if (step.clique_size < 1)
            throw domain_error("d-tree clique sizes must be positive");
        if (s == 0) {
            if (!step.attachment.is_empty())
                throw domain_error("the first d-tree step takes no attachment");
            for (int a = 0; a < step.clique_size; ++a)
                for (int b = a + 1; b < step.clique_size; ++b) g.add_edge(a, b);
            built = step.clique_size;
        } else {
            if (step.clique_size > previous)
                throw domain_error("d-tree clique sizes must be non-increasing");
            if (step.attachment.cardinality() != step.clique_size - 1)
                throw domain_error("d-tree attachment must have clique_size - 1 vertices");
            if (!step.attachment.subset_of(full_face(built)))
                throw domain_error("d-tree attachment must use existing vertices");
            if (!is_clique(g.adj, step.attachment.bits))
                throw domain_error("d-tree attachment must be a clique");
            for (int v : step.attachment.members()) g.add_edge(built, v);
            ++built;
        }
        previous = step.clique_size;
    }
    return g;
}

DTreeRecipe random_dtree_recipe(int steps, std::uint64_t seed) {
    if (steps < 1) throw domain_error("a d-tree recipe needs at least one step");
    std::mt19937_64 rng(seed);
    DTreeRecipe recipe;
    int first = static_cast<int>(rng() % 4) + 1;
    recipe.steps.push_back({first, Face::empty()});
    Graph g = dtree(recipe);
    int previous = first;
    for (int s = 1; s < steps; ++s) {
        int size = static_cast<int>(rng() % static_cast<std::uint64_t>(previous)) + 1;
        // Collect all cliques of size - 1 among the built vertices and pick
        // one; cliques of that size always exist since size <= previous.
        std::vector<Face> choices;
        int built = g.vertex_count();
        for (Face f : subsets_of_size(full_face(built), size - 1))
            if (is_clique(g.adj, f.bits)) choices.push_back(f);
        Face attach = choices[static_cast<std::size_t>(rng() % choices.size())];
        recipe.steps.push_back({size, attach});
        g = dtree(recipe);
        previous = size;
    }
    return recipe;
}

bool is_dtree(const Graph& g) {
    int n = g.vertex_count();
    if (n == 0) return false;
    if (n > 32) throw guard_error("d-tree recognition limited to 32 vertices");
    // Reverse of a build order: peel simplicial vertices, the implied clique
    // sizes non-decreasing, until a complete graph at least as large as the
    // last peeled size remains. Memoized backtracking over (subset, size).
    std::unordered_map<std::uint64_t, bool> memo;
    auto key = [n](std::uint64_t mask, int last) {
        return mask | (static_cast<std::uint64_t>(last) << n);
    };
    auto complete = [&](std::uint64_t mask) {
        for (std::uint64_t b = mask; b != 0; b &= b - 1) {
            int v = std::countr_zero(b);
            std::uint64_t others = mask & ~(std::uint64_t{1} << v);
            if ((g.adj[static_cast<std::size_t>(v)] & others) != others) return false;
        }
        return true;
    };
    std::function<bool(std::uint64_t, int)> peel = [&](std::uint64_t mask, int last) -> bool {
        if (complete(mask) && std::popcount(mask) >= last) return true;
        auto hit = memo.find(key(mask, last));
        if (hit != memo.end()) return hit->second;
        bool ok = false;
        for (std::uint64_t b = mask; b != 0 && !ok; b &= b - 1) {
            int v = std::countr_zero(b);
            std::uint64_t nb = g.adj[static_cast<std::size_t>(v)] & mask;
            int size = std::popcount(nb) + 1;
            if (size < last) continue;
            if (!is_clique(g.adj, nb)) continue;
            ok = peel(mask & ~(std::uint64_t{1} << v), size);
        }
        memo[key(mask, last)] = ok;
        return ok;
    };
    return peel(full_face(n).bits, 1);
}

std::vector<int> free_vertices(const SimplicialComplex& c) {
    std::vector<int> out;
    for (int v = 0; v < c.vertex_count(); ++v) {
        int hits = 0;
        for (Face f : c.facets())
            if (f.contains(v) && ++hits > 1) break;
        if (hits == 1) out.push_back(v);
    }
    return out;
}

std::vector<Face> minimum_facets(const SimplicialComplex& c) {
    std::vector<Face> out;
    if (c.is_void()) return out;
    int least = c.facets().front().cardinality();
    for (Face f : c.facets()) {
        if (f.cardinality() != least) break;
        out.push_back(f);
    }
    return out;
}

bool has_free_vertex_in_minimum_facet(const SimplicialComplex& c) {
    std::vector<int> free = free_vertices(c);
    for (Face f : minimum_facets(c))
        for (int v : free)
            if (f.contains(v)) return true;
    return false;
}

bool bight_equals_maxdeg(const Graph& g) {
    if (g.vertex_count() < 1) throw domain_error("needs at least one vertex");
    SimplicialComplex c = independence_complex(g);
    return g.vertex_count() - c.indim_ring() == g.max_degree();
}

bool pdim_equals_maxdeg(const Graph& g, const FieldSpec& field) {
    if (g.vertex_count() < 1) throw domain_error("needs at least one vertex");
    SimplicialComplex c = independence_complex(g);
    return g.vertex_count() - depth(c, field) == g.max_degree();
}

}  // namespace icmkit
