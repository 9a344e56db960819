#pragma once

#include "igg/group_spec.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace igg {

// A finite group as an explicit multiplication table. Element 0 is the
// identity; the element order is the constructor's canonical order (identity
// first, then breadth-first closure over the generator list; direct products
// use lexicographic tuple order). Tables come from permutation actions or
// componentwise products, so associativity holds by construction.
struct GroupTable {
  int n = 1;
  std::vector<uint16_t> mul;   // n*n, row-major
  std::vector<uint16_t> inv;   // n
  std::vector<int> elem_order; // n
  std::vector<std::string> labels;
  std::vector<int> generators; // indices of the constructor's generators
  GroupSpec spec;
  bool abelian = true;

  int at(int a, int b) const { return mul[(size_t)a * n + b]; }
  int inverse(int a) const { return inv[a]; }
  int order_of(int x) const { return elem_order[x]; }
  int power(int x, long e) const;
  int conjugate(int g, int x) const { return at(at(g, x), inv[g]); } // g x g^-1
};

inline constexpr int kDefaultOrderCap = 1024;

GroupTable build_group(const GroupSpec& spec, int order_cap = kDefaultOrderCap);

int element_order(const GroupTable& g, int x);
int exponent(const GroupTable& g);

// Full O(n^3) associativity check; only allowed up to order 256.
bool check_associativity(const GroupTable& g, int cap = 256);

// Extends a generator map H -> G to a homomorphism by breadth-first closure.
// gen_images[i] is the image of h.generators[i]. Returns the element map, or
// nullopt if the images are inconsistent or the map is not injective.
std::optional<std::vector<int>> extend_embedding(const GroupTable& h, const GroupTable& g,
                                                 const std::vector<int>& gen_images);

} // namespace igg
