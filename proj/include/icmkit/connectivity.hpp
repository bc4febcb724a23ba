#ifndef ICMKIT_CONNECTIVITY_HPP
#define ICMKIT_CONNECTIVITY_HPP

#include "icmkit/complex.hpp"

namespace icmkit {

/// Strongly connected: any two facets are joined by a chain of facets in
/// which consecutive ones meet in exactly dim faces... precisely, in a face
/// of cardinality equal to dim of the complex. The void complex is not
/// strongly connected; {{}} and single-facet complexes are.
bool is_strongly_connected(const SimplicialComplex& c);

/// Weakly connected: the skeleton at the initial dimension is strongly
/// connected.
bool is_weakly_connected(const SimplicialComplex& c);

/// Stably connected: every pure skeleton from -1 up to dim is strongly
/// connected.
bool is_stably_connected(const SimplicialComplex& c);

}  // namespace icmkit

#endif
