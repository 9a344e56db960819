#pragma once

#include "igg/graph.hpp"
#include "igg/lattice.hpp"

#include <cstdint>

namespace igg {

// The intersection graph of subgroups: candidate vertices are the
// non-trivial subgroups; a candidate enters iff some other non-trivial
// subgroup meets it trivially, and two vertices are adjacent iff their
// intersection is the identity subgroup. The whole group is a candidate but
// for order > 1 never has a partner, so it drops out. Vertex order follows
// lattice order.
SimpleGraph intersection_subgroup_graph(const SubgroupLattice& l);

// Same graph for the cyclic group of order n without building a table:
// vertices are the divisors 1 < d of n admitting a coprime partner divisor
// > 1, edges join coprime divisors.
SimpleGraph cyclic_intersection_graph(uint64_t n);

// Fragment of the subgroup graph of the integers: vertices are the
// subgroups mZ for 2 <= m <= max_modulus, adjacent iff gcd(m, n) = 1.
struct ZFragmentSpec {
  long max_modulus = 2;
};
SimpleGraph z_fragment_graph(const ZFragmentSpec& spec);

} // namespace igg
