#include "icmkit/atlas.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include <json.hpp>

#include "icmkit/connectivity.hpp"
#include "icmkit/invariants.hpp"
#include "icmkit/parallel.hpp"

namespace icmkit {

namespace {

int pair_slot(int n, int i, int j) {
    // Lexicographic index of (i, j), i < j, among all pairs from n vertices.
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

// Permuted-slot tables for every vertex permutation of n elements.
std::vector<std::vector<int>> slot_permutations(int n) {
    int slots = n * (n - 1) / 2;
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        std::vector<int> map(static_cast<std::size_t>(slots));
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) {
                int a = perm[static_cast<std::size_t>(i)], b = perm[static_cast<std::size_t>(j)];
                if (a > b) std::swap(a, b);
                map[static_cast<std::size_t>(pair_slot(n, i, j))] = pair_slot(n, a, b);
            }
        out.push_back(std::move(map));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::uint64_t apply_slots(std::uint64_t code, const std::vector<int>& map) {
    std::uint64_t out = 0;
    while (code != 0) {
        int s = std::countr_zero(code);
        out |= std::uint64_t{1} << map[static_cast<std::size_t>(s)];
        code &= code - 1;
    }
    return out;
}

}  // namespace

std::uint64_t graph_code(const Graph& g) {
    int n = g.vertex_count();
    std::uint64_t code = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (g.has_edge(i, j))
                code |= std::uint64_t{1} << pair_slot(n, i, j);
    return code;
}

Graph graph_from_code(int n, std::uint64_t code) {
    Graph g(VertexSet::numbered(n));
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if ((code >> pair_slot(n, i, j)) & 1u) g.add_edge(i, j);
    return g;
}

std::vector<std::uint64_t> canonical_graph_codes(int n) {
    if (n < 1) throw domain_error("atlas enumeration starts at one vertex");
    int slots = n * (n - 1) / 2;
    std::vector<std::vector<int>> perms = slot_permutations(n);
    std::uint64_t total = std::uint64_t{1} << slots;
    std::vector<std::uint64_t> out;
    for (std::uint64_t code = 0; code < total; ++code) {
        bool canonical = true;
        for (const std::vector<int>& map : perms) {
            if (apply_slots(code, map) < code) { canonical = false; break; }
        }
        if (canonical) out.push_back(code);
    }
    return out;
}

AtlasRow atlas_row(int n, std::uint64_t code, const FieldSpec& field) {
    Graph g = graph_from_code(n, code);
    AtlasRow row;
    row.n = n;
    row.code = code;
    row.edges = g.edge_count();
    row.chordal = is_chordal(g);
    row.maxdeg = g.max_degree();

    InvariantReport ind = report(independence_complex(g), field);
    row.ind_depth = ind.depth;
    row.ind_pdim = ind.pdim;
    row.ind_bight = ind.big_height;
    row.ind_pure = ind.is_pure;
    row.ind_cm = ind.is_cm;
    row.ind_icm = ind.is_icm;
    row.ind_scm = ind.is_scm;
    row.ind_weakly = ind.weakly_connected;
    row.ind_stably = ind.stably_connected;
    row.ind_bi_icm = ind.bi_icm;
    row.bight_eq_maxdeg = (row.ind_bight == row.maxdeg);
    row.pdim_eq_maxdeg = (row.ind_pdim == row.maxdeg);
    row.free_vertex_in_min_facet = has_free_vertex_in_minimum_facet(independence_complex(g));

    InvariantReport cliq = report(clique_complex(g), field);
    row.cliq_depth = cliq.depth;
    row.cliq_pure = cliq.is_pure;
    row.cliq_cm = cliq.is_cm;
    row.cliq_icm = cliq.is_icm;
    row.cliq_scm = cliq.is_scm;
    row.cliq_weakly = cliq.weakly_connected;
    row.cliq_stably = cliq.stably_connected;
    row.cliq_bi_icm = cliq.bi_icm;
    row.dtree = is_dtree(g);
    return row;
}

std::vector<AtlasRow> atlas_rows(int nmax, const FieldSpec& field, int guard) {
    if (nmax < 1) throw domain_error("atlas needs nmax >= 1");
    if (nmax > guard)
        throw guard_error("atlas limited to " + std::to_string(guard) +
                          " vertices (requested " + std::to_string(nmax) +
                          "); raise the guard explicitly to proceed");
    std::vector<AtlasRow> rows;
    for (int n = 1; n <= nmax; ++n) {
        std::vector<std::uint64_t> codes = canonical_graph_codes(n);
        std::vector<AtlasRow> batch(codes.size());
        parallel_for(0, codes.size(), [&](std::size_t k) {
            batch[k] = atlas_row(n, codes[k], field);
        });
        rows.insert(rows.end(), batch.begin(), batch.end());
    }
    return rows;
}

std::string atlas_text(int nmax, const FieldSpec& field, bool jsonl, int guard) {
    std::vector<AtlasRow> rows = atlas_rows(nmax, field, guard);
    std::ostringstream out;
    static const char* columns[] = {
        "n", "code", "edges", "chordal", "maxdeg",
        "ind_depth", "ind_pdim", "ind_bight", "ind_pure", "ind_cm", "ind_icm", "ind_scm",
        "ind_weakly", "ind_stably", "ind_bi_icm",
        "bight_eq_maxdeg", "pdim_eq_maxdeg", "free_vertex_in_min_facet",
        "cliq_depth", "cliq_pure", "cliq_cm", "cliq_icm", "cliq_scm",
        "cliq_weakly", "cliq_stably", "cliq_bi_icm", "dtree"};
    auto values = [](const AtlasRow& r) {
        return std::vector<long long>{
            r.n, static_cast<long long>(r.code), r.edges, r.chordal, r.maxdeg,
            r.ind_depth, r.ind_pdim, r.ind_bight, r.ind_pure, r.ind_cm, r.ind_icm, r.ind_scm,
            r.ind_weakly, r.ind_stably, r.ind_bi_icm,
            r.bight_eq_maxdeg, r.pdim_eq_maxdeg, r.free_vertex_in_min_facet,
            r.cliq_depth, r.cliq_pure, r.cliq_cm, r.cliq_icm, r.cliq_scm,
            r.cliq_weakly, r.cliq_stably, r.cliq_bi_icm, r.dtree};
    };
    constexpr std::size_t ncols = sizeof(columns) / sizeof(columns[0]);
    if (jsonl) {
        for (const AtlasRow& r : rows) {
            nlohmann::ordered_json line;
            std::vector<long long> vals = values(r);
            for (std::size_t c = 0; c < ncols; ++c) line[columns[c]] = vals[c];
            out << line.dump() << '\n';
        }
    } else {
        for (std::size_t c = 0; c < ncols; ++c)
            out << columns[c] << (c + 1 < ncols ? "," : "\n");
        for (const AtlasRow& r : rows) {
            std::vector<long long> vals = values(r);
            for (std::size_t c = 0; c < ncols; ++c)
                out << vals[c] << (c + 1 < ncols ? "," : "\n");
        }
    }
    return out.str();
}

}  // namespace icmkit
