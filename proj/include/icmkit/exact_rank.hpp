#ifndef ICMKIT_EXACT_RANK_HPP
#define ICMKIT_EXACT_RANK_HPP

#include <cstdint>
#include <vector>

#include "icmkit/types.hpp"

namespace icmkit::linalg {

/// Dense integer matrix, row major. Entries here are boundary map signs, so
/// they start tiny; only intermediate elimination values can grow.
struct IntMatrix {
    int rows = 0;
    int cols = 0;
    std::vector<long long> data;

    IntMatrix() = default;
    IntMatrix(int r, int c)
        : rows(r), cols(c),
          data(static_cast<std::size_t>(r) * static_cast<std::size_t>(c), 0) {}

    long long& at(int r, int c) {
        return data[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)];
    }
    long long at(int r, int c) const {
        return data[static_cast<std::size_t>(r) * static_cast<std::size_t>(cols) + static_cast<std::size_t>(c)];
    }
};

/// Rank over the rationals. Fraction-free Bareiss elimination in 64-bit
/// machine words, falling back to arbitrary precision integers when an
/// intermediate value would overflow. Exact in all cases.
int rank_rational(const IntMatrix& m);

/// Rank over F_p, p an odd or even prime below 2^31.
int rank_mod_p(const IntMatrix& m, std::uint32_t p);

/// Rank over the given field.
int rank(const IntMatrix& m, const FieldSpec& field);

}  // namespace icmkit::linalg

#endif
