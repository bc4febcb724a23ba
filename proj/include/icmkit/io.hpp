#ifndef ICMKIT_IO_HPP
#define ICMKIT_IO_HPP

#include <string>

#include "icmkit/complex.hpp"
#include "icmkit/graph.hpp"

namespace icmkit {

/// Parses the facet file format:
///   - an optional leading "#vertices a b c ..." line fixing the ground set;
///   - otherwise lines starting with '#' are comments, and '#' starts a
///     trailing comment anywhere;
///   - each remaining line lists one facet as whitespace-separated labels;
///   - the literal line "empty-face" denotes the empty facet;
///   - no facet lines at all yield the void complex.
/// Without a header, vertices enter the ground set in order of first use.
SimplicialComplex parse_facets(const std::string& text);

/// Serializes to the same format: a "#vertices" header, then facets in
/// canonical order. Parsing the output reproduces the complex exactly.
std::string serialize_facets(const SimplicialComplex& c);

/// Parses an edge list: same header and comment rules, two labels per line.
Graph parse_edges(const std::string& text);

std::string serialize_edges(const Graph& g);

/// Parses a generator spec: "path:<n>", "cycle:<n>", "complete:<n>" or
/// "dtree:<recipe>". A recipe is '/'-separated steps, each a clique size
/// optionally followed by comma-separated attachment vertex numbers
/// (1-based), e.g. "dtree:3/3,1,2/2,3".
Graph parse_generator(const std::string& spec);

}  // namespace icmkit

#endif
