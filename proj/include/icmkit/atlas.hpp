#ifndef ICMKIT_ATLAS_HPP
#define ICMKIT_ATLAS_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "icmkit/graph.hpp"
#include "icmkit/types.hpp"

namespace icmkit {

/// Default vertex-count guard for atlas enumeration.
inline constexpr int kAtlasGuard = 7;

/// Edge mask of a graph: bit k set when the k-th pair (i, j), i < j, in
/// lexicographic order is an edge.
std::uint64_t graph_code(const Graph& g);

Graph graph_from_code(int n, std::uint64_t code);

/// Codes of the canonical representatives of all isomorphism classes of
/// simple graphs on n labeled vertices: the least edge mask over all vertex
/// permutations. Sorted ascending.
std::vector<std::uint64_t> canonical_graph_codes(int n);

/// One atlas row: a canonical graph with its classification data.
struct AtlasRow {
    int n = 0;
    std::uint64_t code = 0;
    int edges = 0;
    bool chordal = false;
    int maxdeg = 0;

    int ind_depth = 0;
    int ind_pdim = 0;
    int ind_bight = 0;
    bool ind_pure = false;
    bool ind_cm = false;
    bool ind_icm = false;
    bool ind_scm = false;
    bool ind_weakly = false;
    bool ind_stably = false;
    bool ind_bi_icm = false;
    bool bight_eq_maxdeg = false;
    bool pdim_eq_maxdeg = false;
    bool free_vertex_in_min_facet = false;

    int cliq_depth = 0;
    bool cliq_pure = false;
    bool cliq_cm = false;
    bool cliq_icm = false;
    bool cliq_scm = false;
    bool cliq_weakly = false;
    bool cliq_stably = false;
    bool cliq_bi_icm = false;
    bool dtree = false;
};

AtlasRow atlas_row(int n, std::uint64_t code, const FieldSpec& field);

/// Rows for every isomorphism class on 1..nmax vertices, ordered by
/// (n, code). Refuses nmax above the guard unless the guard itself is
/// raised.
std::vector<AtlasRow> atlas_rows(int nmax, const FieldSpec& field, int guard = kAtlasGuard);

/// CSV (with a header line) or JSON-lines rendering of the atlas.
std::string atlas_text(int nmax, const FieldSpec& field, bool jsonl, int guard = kAtlasGuard);

}  // namespace icmkit

#endif
