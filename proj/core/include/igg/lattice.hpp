#pragma once

#include "igg/bitset.hpp"
#include "igg/group.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace igg {

struct Subgroup {
  Bitset members;
  int order = 1;
  std::vector<int> gens; // canonical generator witness (informational)
  uint64_t lattice_id = 0;
};

struct EnumLimits {
  int order_cap = kDefaultOrderCap;
  int subgroup_cap = 100000;
  int jobs = 0; // 0 = hardware default
};

// All subgroups, sorted by (order, lexicographic member list). Closed under
// pairwise intersection; contains the trivial subgroup and the whole group.
class SubgroupLattice {
public:
  std::shared_ptr<const GroupTable> group;
  std::vector<Subgroup> subgroups;
  uint64_t id = 0;

  int size() const { return (int)subgroups.size(); }
  const GroupTable& g() const { return *group; }

  int index_of(const Bitset& members) const;
  int intersect_index(int a, int b) const;
  Subgroup intersect(const Subgroup& a, const Subgroup& b) const; // throws mixed_lattice

  // all subgroups of order p^v_p(|G|)
  std::vector<int> sylow_indices(uint64_t p) const;

  bool is_normal(int idx) const;

  // number of subgroups of each order
  std::unordered_map<int, int> order_histogram() const;

  std::string to_json() const;

private:
  std::unordered_map<Bitset, int, BitsetHash> index_;
  friend SubgroupLattice enumerate_subgroups(std::shared_ptr<const GroupTable>, const EnumLimits&,
                                             const std::vector<int>*);
};

// Join-closure enumeration: seed with all cyclic subgroups, then repeatedly
// join listed subgroups with cyclic subgroups not contained in them until no
// new subgroup appears. `seed_order` permutes the cyclic seed processing
// order (the result must not depend on it; used by tests).
SubgroupLattice enumerate_subgroups(std::shared_ptr<const GroupTable> g, const EnumLimits& limits = {},
                                    const std::vector<int>* seed_order = nullptr);

inline SubgroupLattice enumerate_subgroups(const GroupTable& g, const EnumLimits& limits = {}) {
  return enumerate_subgroups(std::make_shared<GroupTable>(g), limits);
}

// true iff for every 1 <= beta < alpha the number of subgroups of order
// p^beta is congruent to 1 mod p; requires a p-group
bool kulakoff_check(const SubgroupLattice& l);

// Minimal generator count: {value, exact}. Exact via the Frattini quotient
// for p-groups (and Sylow-wise for nilpotent groups); otherwise brute force
// over generating sets of size 1..3, reported as ">3" beyond that.
struct GenCount {
  int value = 0;
  bool exact = true;
  std::string to_string() const { return exact ? std::to_string(value) : ">3"; }
  bool operator==(const GenCount&) const = default;
};

struct SylowInfo {
  uint64_t p = 2;
  int alpha = 1;      // v_p(|G|)
  int order = 1;      // p^alpha
  int count = 1;      // number of Sylow p-subgroups
  int rep = -1;       // lattice index of the canonical representative
  bool cyclic = true;
  bool is_quaternion = false;
  bool splittable = false; // has two subgroups of order p meeting trivially
  bool abelian = true;
  int exponent = 1;
  GenCount d;
  bool has_cpk_cpr = false;   // contains C_{p^k} x C_{p^r} with k, r >= 2
  bool has_cpk_cp_cp = false; // contains C_{p^k} x C_p x C_p with k >= 2
};

struct StructuralProfile {
  uint64_t order = 1;
  std::vector<std::pair<uint64_t, int>> primes;
  bool is_trivial = true;
  bool is_cyclic = true;
  bool is_abelian = true;
  bool is_nilpotent = true;
  bool is_solvable = true;
  bool is_p_group = false;
  bool is_gen_quaternion = false;
  int exponent = 1;
  GenCount d;
  std::vector<SylowInfo> sylows;

  int splittable_count() const {
    int c = 0;
    for (auto& s : sylows) c += s.splittable;
    return c;
  }

  const SylowInfo* sylow(uint64_t p) const {
    for (auto& s : sylows)
      if (s.p == p) return &s;
    return nullptr;
  }
  int num_primes() const { return (int)primes.size(); }
};

StructuralProfile structural_profile(const SubgroupLattice& l);
GenCount min_generators(const SubgroupLattice& l);

} // namespace igg
