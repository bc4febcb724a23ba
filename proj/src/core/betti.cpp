#include "icmkit/betti.hpp"

#include <algorithm>
#include <vector>

#include "icmkit/homology.hpp"
#include "icmkit/parallel.hpp"

namespace icmkit {

BettiTable hochster_betti(const SimplicialComplex& c, const FieldSpec& field, int guard) {
    int n = c.vertex_count();
    if (n > guard)
        throw guard_error("Betti table limited to " + std::to_string(guard) +
                          " vertices (requested " + std::to_string(n) +
                          "); raise the guard explicitly to proceed");
    BettiTable table;
    table.n = n;
    table.subject = ModuleSide::QuotientRing;
    table.field = field;

    std::size_t total = std::size_t{1} << n;
    std::vector<HomologyProfile> profiles(total);
    parallel_for(0, total, [&](std::size_t w) {
        profiles[w] = reduced_homology_dims(c.induced(Face{w}), field);
    });
    for (std::size_t w = 0; w < total; ++w) {
        int j = Face{w}.cardinality();
        const HomologyProfile& profile = profiles[w];
        for (std::size_t k = 0; k < profile.dims.size(); ++k) {
            int q = profile.min_q + static_cast<int>(k);
            int value = profile.dims[k];
            if (value == 0) continue;
            int i = j - q - 1;
            table.entries[{i, j}] += value;
        }
    }
    return table;
}

BettiTable ideal_table(const BettiTable& ring_table) {
    BettiTable t;
    t.n = ring_table.n;
    t.subject = ModuleSide::Ideal;
    t.field = ring_table.field;
    for (const auto& [key, value] : ring_table.entries) {
        auto [i, j] = key;
        if (i == 0) continue;  // beta_{0,0} = 1 of the quotient has no ideal shadow
        t.entries[{i - 1, j}] = value;
    }
    return t;
}

TableInvariants invariants_from_table(const BettiTable& table) {
    if (table.entries.empty())
        throw domain_error("Betti table is empty; the module is zero");
    TableInvariants out;
    out.pdim = 0;
    out.reg = 0;
    int maxj = 0;
    for (const auto& [key, value] : table.entries) {
        (void)value;
        auto [i, j] = key;
        out.pdim = std::max(out.pdim, i);
        out.reg = std::max(out.reg, j - i);
        maxj = std::max(maxj, j);
    }
    if (table.subject == ModuleSide::Ideal) {
        // Generators sit in homological degree 0; their top degree is deg I.
        int deg = 0;
        for (const auto& [key, value] : table.entries) {
            (void)value;
            auto [i, j] = key;
            if (i == 0) deg = std::max(deg, j);
        }
        out.deg = deg;
    }
    return out;
}

int extremal_betti_count(const BettiTable& table) {
    int count = 0;
    for (const auto& [key, value] : table.entries) {
        (void)value;
        auto [i, j] = key;
        bool extremal = true;
        for (const auto& [other, v2] : table.entries) {
            (void)v2;
            auto [i2, j2] = other;
            if (i2 == i && j2 == j) continue;
            if (i2 >= i && j2 - i2 >= j - i) { extremal = false; break; }
        }
        if (extremal) ++count;
    }
    return count;
}

}  // namespace icmkit
