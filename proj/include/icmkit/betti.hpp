#ifndef ICMKIT_BETTI_HPP
#define ICMKIT_BETTI_HPP

#include <map>
#include <optional>
#include <utility>

#include "icmkit/complex.hpp"
#include "icmkit/types.hpp"

namespace icmkit {

/// Which module a Betti table describes: the face ring K[Delta] or its
/// defining ideal.
enum class ModuleSide { QuotientRing, Ideal };

/// Graded Betti numbers beta_{i,j}, nonzero entries only, keyed (i, j).
struct BettiTable {
    int n = 0;
    ModuleSide subject = ModuleSide::QuotientRing;
    FieldSpec field;
    std::map<std::pair<int, int>, long long> entries;

    long long at(int i, int j) const {
        auto it = entries.find({i, j});
        return it == entries.end() ? 0 : it->second;
    }
};

/// Default vertex-count guard for the full Betti table.
inline constexpr int kBettiGuard = 20;

/// Graded Betti numbers of the face ring by Hochster's formula: beta_{i,j}
/// sums dim H~_{j-i-1} of the restrictions to the j-element vertex subsets.
/// Refuses ground sets above the guard.
BettiTable hochster_betti(const SimplicialComplex& c, const FieldSpec& field,
                          int guard = kBettiGuard);

/// Table of the defining ideal, the quotient table shifted one step:
/// beta_{i,j}(I) = beta_{i+1,j}(K[Delta]). Empty when the ideal is zero.
BettiTable ideal_table(const BettiTable& ring_table);

/// pdim, regularity and (for ideal tables) the top generator degree read off
/// a table. Throws on an empty table.
struct TableInvariants {
    int pdim = 0;
    int reg = 0;
    std::optional<int> deg;
};

TableInvariants invariants_from_table(const BettiTable& table);

/// Number of extremal Betti entries: nonzero beta_{i,j} maximal under the
/// order comparing (i, j - i) componentwise.
int extremal_betti_count(const BettiTable& table);

}  // namespace icmkit

#endif
