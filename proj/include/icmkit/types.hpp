#ifndef ICMKIT_TYPES_HPP
#define ICMKIT_TYPES_HPP

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace icmkit {

/// Dimension of the void complex. Compares below every genuine dimension.
inline constexpr int kNegInfinity = std::numeric_limits<int>::min();

/// Largest ground set a Face bitmask can hold.
inline constexpr int kMaxVertices = 64;

// ---------------------------------------------------------------------------
// Errors
// ---------------------------------------------------------------------------

/// Base class for everything this library throws on purpose.
class error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Malformed textual input. Carries a 1-based line and column when known.
class parse_error : public error {
public:
    parse_error(const std::string& msg, int line = 0, int column = 0)
        : error(format(msg, line, column)), line_(line), column_(column) {}

    int line() const { return line_; }
    int column() const { return column_; }

private:
    static std::string format(const std::string& msg, int line, int column) {
        if (line <= 0) return msg;
        std::string out = "line " + std::to_string(line);
        if (column > 0) out += ", column " + std::to_string(column);
        return out + ": " + msg;
    }
    int line_;
    int column_;
};

/// A size guard refused the computation. The message names the limit.
class guard_error : public error {
public:
    using error::error;
};

/// Domain violation: operation applied outside its stated preconditions.
class domain_error : public error {
public:
    using error::error;
};

/// Two internal routes disagreed on a value that must coincide.
class consistency_error : public error {
public:
    using error::error;
};

// ---------------------------------------------------------------------------
// Vertex sets and faces
// ---------------------------------------------------------------------------

/// Ordered ground set. Vertex i carries names[i]; indices are the identity
/// used everywhere else, names only matter for parsing and printing.
struct VertexSet {
    std::vector<std::string> names;

    VertexSet() = default;
    explicit VertexSet(std::vector<std::string> n) : names(std::move(n)) {
        if (static_cast<int>(names.size()) > kMaxVertices)
            throw domain_error("ground set exceeds " + std::to_string(kMaxVertices) + " vertices");
    }

    /// x1, x2, ..., xn.
    static VertexSet numbered(int n, const std::string& stem = "x") {
        if (n < 0) throw domain_error("vertex count must be nonnegative");
        std::vector<std::string> names;
        names.reserve(static_cast<std::size_t>(n));
        for (int i = 1; i <= n; ++i) names.push_back(stem + std::to_string(i));
        return VertexSet(std::move(names));
    }

    int size() const { return static_cast<int>(names.size()); }

    bool operator==(const VertexSet& other) const = default;
};

/// A face as a bitmask over vertex indices 0..n-1. The empty face is bits==0.
struct Face {
    std::uint64_t bits = 0;

    constexpr Face() = default;
    constexpr explicit Face(std::uint64_t b) : bits(b) {}

    static constexpr Face empty() { return Face{}; }

    static Face of(std::initializer_list<int> verts) {
        Face f;
        for (int v : verts) f = f.with(v);
        return f;
    }

    int cardinality() const { return std::popcount(bits); }
    int dimension() const { return cardinality() - 1; }
    bool is_empty() const { return bits == 0; }

    bool contains(int v) const { return (bits >> v) & 1u; }
    Face with(int v) const { return Face{bits | (std::uint64_t{1} << v)}; }
    Face without(int v) const { return Face{bits & ~(std::uint64_t{1} << v)}; }

    bool subset_of(Face other) const { return (bits & ~other.bits) == 0; }
    Face intersect(Face other) const { return Face{bits & other.bits}; }
    Face unite(Face other) const { return Face{bits | other.bits}; }
    Face minus(Face other) const { return Face{bits & ~other.bits}; }

    /// Member indices in increasing order.
    std::vector<int> members() const {
        std::vector<int> out;
        out.reserve(static_cast<std::size_t>(cardinality()));
        for (std::uint64_t b = bits; b != 0; b &= b - 1)
            out.push_back(std::countr_zero(b));
        return out;
    }

    bool operator==(const Face&) const = default;
};

/// Canonical face order: by cardinality, ties by numeric bitmask value.
inline bool face_less(Face a, Face b) {
    int ca = a.cardinality(), cb = b.cardinality();
    if (ca != cb) return ca < cb;
    return a.bits < b.bits;
}

/// All vertices 0..n-1 as one face.
inline Face full_face(int n) {
    if (n < 0 || n > kMaxVertices) throw domain_error("vertex count out of range");
    return n == 64 ? Face{~std::uint64_t{0}} : Face{(std::uint64_t{1} << n) - 1};
}

// ---------------------------------------------------------------------------
// Coefficient fields
// ---------------------------------------------------------------------------

/// Coefficient field for homology and everything built on it: the rationals,
/// or a prime field F_p with p < 2^31.
struct FieldSpec {
    enum class Kind { Rationals, Prime };

    Kind kind = Kind::Rationals;
    std::uint32_t p = 0;

    static FieldSpec rationals() { return FieldSpec{}; }

    static FieldSpec prime(std::uint32_t p) {
        if (p < 2 || p >= (std::uint32_t{1} << 31) || !is_prime(p))
            throw domain_error("field characteristic must be a prime below 2^31");
        return FieldSpec{Kind::Prime, p};
    }

    bool is_rationals() const { return kind == Kind::Rationals; }

    /// "Q" or "F<p>".
    std::string to_string() const {
        return is_rationals() ? "Q" : "F" + std::to_string(p);
    }

    /// Accepts "Q", "Fp:<p>" and "F<p>".
    static FieldSpec parse(const std::string& text) {
        if (text == "Q" || text == "q") return rationals();
        std::string digits;
        if (text.rfind("Fp:", 0) == 0) digits = text.substr(3);
        else if (text.size() > 1 && (text[0] == 'F' || text[0] == 'f')) digits = text.substr(1);
        else throw parse_error("unrecognized field '" + text + "' (expected Q or Fp:<p>)");
        if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
            throw parse_error("unrecognized field '" + text + "' (expected Q or Fp:<p>)");
        unsigned long long value = 0;
        try {
            value = std::stoull(digits);
        } catch (const std::exception&) {
            throw parse_error("field characteristic '" + digits + "' out of range");
        }
        if (value >= (1ull << 31))
            throw domain_error("field characteristic must be a prime below 2^31");
        return prime(static_cast<std::uint32_t>(value));
    }

    bool operator==(const FieldSpec&) const = default;

private:
    static bool is_prime(std::uint32_t v) {
        if (v < 2) return false;
        for (std::uint32_t d = 2; d * d <= v; ++d)
            if (v % d == 0) return false;
        return true;
    }
};

}  // namespace icmkit

#endif
