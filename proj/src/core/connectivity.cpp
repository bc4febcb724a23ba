#include "icmkit/connectivity.hpp"

#include <vector>

namespace icmkit {

bool is_strongly_connected(const SimplicialComplex& c) {
    if (c.is_void()) return false;
    const std::vector<Face>& facets = c.facets();
    int m = static_cast<int>(facets.size());
    if (m == 1) return true;
    int d = c.dim();
    // Facet graph: edges between facets meeting in a face of cardinality d,
    // one less than a top facet. Connectivity by union-find.
    std::vector<int> parent(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) parent[static_cast<std::size_t>(i)] = i;
    auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j)
            if (facets[static_cast<std::size_t>(i)].intersect(facets[static_cast<std::size_t>(j)]).cardinality() == d) {
                int a = find(i), b = find(j);
                if (a != b) parent[static_cast<std::size_t>(a)] = b;
            }
    int root = find(0);
    for (int i = 1; i < m; ++i)
        if (find(i) != root) return false;
    return true;
}

bool is_weakly_connected(const SimplicialComplex& c) {
    if (c.is_void()) return false;
    return is_strongly_connected(c.skeleton(c.indim()));
}

bool is_stably_connected(const SimplicialComplex& c) {
    if (c.is_void()) return false;
    for (int i = -1; i <= c.dim(); ++i)
        if (!is_strongly_connected(c.pure_skeleton(i))) return false;
    return true;
}

}  // namespace icmkit
