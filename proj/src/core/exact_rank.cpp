#include "icmkit/exact_rank.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <cstdlib>

namespace icmkit::linalg {

namespace {

using big_int = boost::multiprecision::cpp_int;

// Signals that the 64-bit Bareiss pass hit a value too large to keep exact.
struct overflow_signal {};

// Bareiss keeps every intermediate entry equal to a minor of the input, and
// each update is (a*p - b*c)/prev with exact division. Staying below 2^31 in
// absolute value keeps the products inside 64 bits.
constexpr long long kWordLimit = 1ll << 31;

int rank_bareiss_word(IntMatrix m) {
    int r = 0;
    long long prev = 1;
    for (int c = 0; c < m.cols && r < m.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < m.rows; ++i)
            if (m.at(i, c) != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r)
            for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(r, j));
        long long pv = m.at(r, c);
        for (int i = r + 1; i < m.rows; ++i) {
            long long mic = m.at(i, c);
            for (int j = c + 1; j < m.cols; ++j) {
                long long a = m.at(i, j), b = m.at(r, j);
                if (std::llabs(a) >= kWordLimit || std::llabs(b) >= kWordLimit ||
                    std::llabs(pv) >= kWordLimit || std::llabs(mic) >= kWordLimit)
                    throw overflow_signal{};
                m.at(i, j) = (a * pv - mic * b) / prev;
            }
            m.at(i, c) = 0;
        }
        prev = pv;
        ++r;
    }
    return r;
}

int rank_bareiss_big(const IntMatrix& input) {
    std::vector<std::vector<big_int>> m(static_cast<std::size_t>(input.rows),
                                        std::vector<big_int>(static_cast<std::size_t>(input.cols)));
    for (int i = 0; i < input.rows; ++i)
        for (int j = 0; j < input.cols; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = input.at(i, j);
    int r = 0;
    big_int prev = 1;
    for (int c = 0; c < input.cols && r < input.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < input.rows; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r) std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(r)]);
        big_int pv = m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)];
        for (int i = r + 1; i < input.rows; ++i) {
            big_int mic = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)];
            for (int j = c + 1; j < input.cols; ++j) {
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                    (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * pv -
                     mic * m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]) / prev;
            }
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] = 0;
        }
        prev = pv;
        ++r;
    }
    return r;
}

}  // namespace

int rank_rational(const IntMatrix& m) {
    if (m.rows == 0 || m.cols == 0) return 0;
    try {
        return rank_bareiss_word(m);
    } catch (const overflow_signal&) {
        return rank_bareiss_big(m);
    }
}

int rank_mod_p(const IntMatrix& input, std::uint32_t p) {
    if (input.rows == 0 || input.cols == 0) return 0;
    const long long lp = static_cast<long long>(p);
    std::vector<std::vector<long long>> m(static_cast<std::size_t>(input.rows),
                                          std::vector<long long>(static_cast<std::size_t>(input.cols)));
    for (int i = 0; i < input.rows; ++i)
        for (int j = 0; j < input.cols; ++j)
            m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
                ((input.at(i, j) % lp) + lp) % lp;

    // Modular inverse by Fermat: p is prime.
    auto mulmod = [lp](long long a, long long b) { return (a * b) % lp; };
    auto powmod = [&](long long a, long long e) {
        long long r = 1;
        while (e > 0) {
            if (e & 1) r = mulmod(r, a);
            a = mulmod(a, a);
            e >>= 1;
        }
        return r;
    };

    int r = 0;
    for (int c = 0; c < input.cols && r < input.rows; ++c) {
        int pivot = -1;
        for (int i = r; i < input.rows; ++i)
            if (m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)] != 0) { pivot = i; break; }
        if (pivot < 0) continue;
        if (pivot != r) std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(r)]);
        long long inv = powmod(m[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)], lp - 2);
        for (int i = r + 1; i < input.rows; ++i) {
            long long f = mulmod(m[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)], inv);
            if (f == 0) continue;
            for (int j = c; j < input.cols; ++j) {
                long long v = m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] -
                              mulmod(f, m[static_cast<std::size_t>(r)][static_cast<std::size_t>(j)]);
                m[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = v < 0 ? v + lp : v;
            }
        }
        ++r;
    }
    return r;
}

int rank(const IntMatrix& m, const FieldSpec& field) {
    return field.is_rationals() ? rank_rational(m) : rank_mod_p(m, field.p);
}

}  // namespace icmkit::linalg
