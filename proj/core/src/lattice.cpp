#include "igg/lattice.hpp"

#include "igg/arith.hpp"
#include "igg/errors.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <numeric>
#include <sstream>
#include <thread>

namespace igg {

namespace {

std::atomic<uint64_t> next_lattice_id{1};

// <gens> by breadth-first closure from the identity; cost |result| * |gens|
Bitset generated_subgroup(const GroupTable& g, const std::vector<int>& gens) {
  Bitset mem(g.n);
  mem.set(0);
  std::vector<int> queue{0};
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (int gen : gens) {
      int y = g.at(x, gen);
      if (!mem.test(y)) {
        mem.set(y);
        queue.push_back(y);
      }
    }
  }
  return mem;
}

struct WorkingSub {
  Bitset members;
  std::vector<int> gens; // discovery generators, replaced by canonical ones later
};

int thread_count(int jobs) {
  if (jobs > 0) return jobs;
  unsigned hc = std::thread::hardware_concurrency();
  return hc ? (int)hc : 1;
}

} // namespace

SubgroupLattice enumerate_subgroups(std::shared_ptr<const GroupTable> gp, const EnumLimits& limits,
                                    const std::vector<int>* seed_order) {
  const GroupTable& g = *gp;
  if (g.n > limits.order_cap)
    fail(ErrorCode::order_cap_exceeded,
         "lattice: group order " + std::to_string(g.n) + " > cap " + std::to_string(limits.order_cap));

  // cyclic subgroups <x>, deduplicated; remember a generator for each
  std::vector<Bitset> cyclic_members;
  std::vector<int> cyclic_gen;
  std::unordered_map<Bitset, int, BitsetHash> seen;
  std::vector<int> xs(g.n);
  std::iota(xs.begin(), xs.end(), 0);
  if (seed_order) xs = *seed_order;
  for (int x : xs) {
    Bitset mem(g.n);
    int y = 0;
    do {
      mem.set(y);
      y = g.at(y, x);
    } while (y != 0);
    if (seen.emplace(mem, (int)cyclic_members.size()).second) {
      cyclic_members.push_back(mem);
      cyclic_gen.push_back(x);
    }
  }

  std::vector<WorkingSub> all;
  std::unordered_map<Bitset, int, BitsetHash> index;
  for (size_t i = 0; i < cyclic_members.size(); ++i) {
    if (index.emplace(cyclic_members[i], (int)all.size()).second)
      all.push_back({cyclic_members[i], cyclic_gen[i] == 0 ? std::vector<int>{} : std::vector<int>{cyclic_gen[i]}});
  }

  const int nthreads = thread_count(limits.jobs);
  std::vector<int> frontier(all.size());
  std::iota(frontier.begin(), frontier.end(), 0);

  while (!frontier.empty()) {
    // join every frontier subgroup with every cyclic subgroup not inside it
    auto work = [&](size_t lo, size_t hi) {
      std::vector<WorkingSub> found;
      std::vector<int> h_elems;
      for (size_t fi = lo; fi < hi; ++fi) {
        const WorkingSub& h = all[frontier[fi]];
        if (g.abelian) {
          h_elems.clear();
          h.members.for_each([&](int x) { h_elems.push_back(x); });
        }
        for (size_t ci = 0; ci < cyclic_members.size(); ++ci) {
          if (cyclic_gen[ci] == 0) continue;
          if (cyclic_members[ci].subset_of(h.members)) continue;
          std::vector<int> gens = h.gens;
          gens.push_back(cyclic_gen[ci]);
          Bitset j(0);
          if (g.abelian) {
            // the product set H*C is already the join
            j = Bitset(g.n);
            cyclic_members[ci].for_each([&](int c) {
              for (int x : h_elems) j.set(g.at(x, c));
            });
          } else {
            j = generated_subgroup(g, gens);
          }
          if (index.find(j) == index.end()) found.push_back({std::move(j), std::move(gens)});
        }
      }
      return found;
    };

    std::vector<WorkingSub> batch;
    if (nthreads <= 1 || frontier.size() < 8) {
      batch = work(0, frontier.size());
    } else {
      size_t chunk = (frontier.size() + nthreads - 1) / nthreads;
      std::vector<std::future<std::vector<WorkingSub>>> futs;
      for (size_t lo = 0; lo < frontier.size(); lo += chunk)
        futs.push_back(std::async(std::launch::async, work, lo, std::min(lo + chunk, frontier.size())));
      for (auto& f : futs) {
        auto part = f.get();
        batch.insert(batch.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
      }
    }

    frontier.clear();
    for (auto& w : batch) {
      if (index.emplace(w.members, (int)all.size()).second) {
        frontier.push_back((int)all.size());
        all.push_back(std::move(w));
        if ((int)all.size() > limits.subgroup_cap)
          fail(ErrorCode::subgroup_cap_exceeded, "lattice: more than " + std::to_string(limits.subgroup_cap) +
                                                     " subgroups in " + g.spec.to_string());
      }
    }
  }

  SubgroupLattice lat;
  lat.group = std::move(gp);
  lat.id = next_lattice_id.fetch_add(1);
  lat.subgroups.reserve(all.size());
  std::vector<int> order_of(all.size());
  std::vector<int> perm(all.size());
  std::iota(perm.begin(), perm.end(), 0);
  for (size_t i = 0; i < all.size(); ++i) order_of[i] = all[i].members.count();
  std::sort(perm.begin(), perm.end(), [&](int a, int b) {
    if (order_of[a] != order_of[b]) return order_of[a] < order_of[b];
    return all[a].members.lex_less(all[b].members);
  });

  for (int pi : perm) {
    Subgroup s;
    s.members = std::move(all[pi].members);
    s.order = order_of[pi];
    s.lattice_id = lat.id;
    // canonical witness: repeatedly adjoin the smallest element not yet generated
    Bitset have(g.n);
    have.set(0);
    std::vector<int> gens;
    while (true) {
      int x = s.members.lowest_diff(have);
      if (x < 0) break;
      gens.push_back(x);
      have = generated_subgroup(g, gens);
    }
    s.gens = std::move(gens);
    lat.index_.emplace(s.members, (int)lat.subgroups.size());
    lat.subgroups.push_back(std::move(s));
  }
  return lat;
}

int SubgroupLattice::index_of(const Bitset& members) const {
  auto it = index_.find(members);
  return it == index_.end() ? -1 : it->second;
}

int SubgroupLattice::intersect_index(int a, int b) const {
  Bitset m = subgroups[a].members & subgroups[b].members;
  int idx = index_of(m);
  if (idx < 0) fail(ErrorCode::precondition_violated, "lattice not intersection-closed");
  return idx;
}

Subgroup SubgroupLattice::intersect(const Subgroup& a, const Subgroup& b) const {
  if (a.lattice_id != id || b.lattice_id != id)
    fail(ErrorCode::mixed_lattice, "intersect: subgroups from different lattices");
  Bitset m = a.members & b.members;
  int idx = index_of(m);
  if (idx < 0) fail(ErrorCode::precondition_violated, "lattice not intersection-closed");
  return subgroups[idx];
}

std::vector<int> SubgroupLattice::sylow_indices(uint64_t p) const {
  const GroupTable& gt = g();
  if (p < 2 || gt.n % p != 0)
    fail(ErrorCode::prime_does_not_divide_order,
         std::to_string(p) + " does not divide group order " + std::to_string(gt.n));
  int q = 1;
  int m = gt.n;
  while (m % (int)p == 0) {
    m /= (int)p;
    q *= (int)p;
  }
  std::vector<int> out;
  for (int i = 0; i < size(); ++i)
    if (subgroups[i].order == q) out.push_back(i);
  return out;
}

bool SubgroupLattice::is_normal(int idx) const {
  const GroupTable& gt = g();
  const Bitset& m = subgroups[idx].members;
  for (int x = 0; x < gt.n; ++x) {
    bool ok = true;
    m.for_each([&](int s) {
      if (ok && !m.test(gt.conjugate(x, s))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

std::unordered_map<int, int> SubgroupLattice::order_histogram() const {
  std::unordered_map<int, int> h;
  for (auto& s : subgroups) ++h[s.order];
  return h;
}

bool kulakoff_check(const SubgroupLattice& l) {
  Factorization f = factorize(l.g().n);
  if (l.g().n == 1 || f.num_primes() != 1)
    fail(ErrorCode::not_a_p_group, l.g().spec.to_string() + " is not a p-group");
  uint64_t p = f.factors[0].first;
  int alpha = f.factors[0].second;
  auto hist = l.order_histogram();
  uint64_t q = 1;
  for (int beta = 1; beta < alpha; ++beta) {
    q *= p;
    auto it = hist.find((int)q);
    int count = it == hist.end() ? 0 : it->second;
    if (count % (int)p != 1 % (int)p) return false;
  }
  return true;
}

namespace {

// Frattini-quotient generator count of a subgroup treated as a p-group:
// maximal subgroups of S among lattice members, intersect, d = log_p [S : Phi]
GenCount p_group_rank(const SubgroupLattice& l, int idx, uint64_t p) {
  const Subgroup& s = l.subgroups[idx];
  if (s.order == 1) return {0, true};
  Bitset phi = s.members;
  std::vector<int> inside;
  for (int i = 0; i < l.size(); ++i) {
    if (l.subgroups[i].order < s.order && l.subgroups[i].members.subset_of(s.members)) inside.push_back(i);
  }
  // maximal = proper subgroups of S not contained in a larger proper one;
  // in a p-group they are exactly those of index p
  for (int i : inside) {
    if ((uint64_t)l.subgroups[i].order * p == (uint64_t)s.order) phi = phi & l.subgroups[i].members;
  }
  int quotient = s.order / phi.count();
  int d = 0;
  while (quotient > 1) {
    quotient /= (int)p;
    ++d;
  }
  return {d, true};
}

bool subgroup_abelian(const GroupTable& g, const Bitset& m) {
  auto idx = m.to_indices();
  for (size_t i = 0; i < idx.size(); ++i)
    for (size_t j = i + 1; j < idx.size(); ++j)
      if (g.at(idx[i], idx[j]) != g.at(idx[j], idx[i])) return false;
  return true;
}

int subgroup_exponent(const GroupTable& g, const Bitset& m) {
  long e = 1;
  m.for_each([&](int x) { e = std::lcm(e, (long)g.elem_order[x]); });
  return (int)e;
}

bool subgroup_cyclic(const GroupTable& g, const Bitset& m, int order) {
  bool cyc = false;
  m.for_each([&](int x) {
    if (g.elem_order[x] == order) cyc = true;
  });
  return cyc;
}

// abelian rank from the count of order-p subgroups: (p^r - 1)/(p - 1)
int abelian_rank(int order_p_count, int p) {
  int r = 0;
  long long total = 0, pk = 1;
  while (total < order_p_count) {
    total += pk;
    pk *= p;
    ++r;
  }
  return r;
}

// derived series reaches the trivial subgroup
bool solvable(const GroupTable& g) {
  Bitset cur(g.n);
  for (int i = 0; i < g.n; ++i) cur.set(i);
  while (cur.count() > 1) {
    // commutator subgroup of cur
    Bitset comms(g.n);
    auto idx = cur.to_indices();
    for (int x : idx)
      for (int y : idx) comms.set(g.at(g.at(g.at(x, y), g.inv[x]), g.inv[y]));
    Bitset next = generated_subgroup(g, comms.to_indices());
    if (next == cur) return false; // stabilized above the identity
    cur = next;
  }
  return true;
}

// brute-force minimal generating set of the whole group, sizes 1..3
GenCount brute_force_rank(const SubgroupLattice& l) {
  const GroupTable& g = l.g();
  if (g.n == 1) return {0, true};
  for (int x = 1; x < g.n; ++x)
    if (g.elem_order[x] == g.n) return {1, true};
  for (int x = 1; x < g.n; ++x)
    for (int y = x + 1; y < g.n; ++y)
      if (generated_subgroup(g, {x, y}).count() == g.n) return {2, true};
  for (int x = 1; x < g.n; ++x)
    for (int y = x + 1; y < g.n; ++y) {
      Bitset xy = generated_subgroup(g, {x, y});
      if (xy.count() == g.n) continue;
      for (int z = y + 1; z < g.n; ++z) {
        if (xy.test(z)) continue;
        if (generated_subgroup(g, {x, y, z}).count() == g.n) return {3, true};
      }
    }
  return {4, false}; // ">3"
}

} // namespace

StructuralProfile structural_profile(const SubgroupLattice& l) {
  const GroupTable& g = l.g();
  StructuralProfile pr;
  pr.order = (uint64_t)g.n;
  pr.is_trivial = g.n == 1;
  pr.exponent = exponent(g);
  pr.is_cyclic = pr.exponent == g.n;
  pr.is_abelian = g.abelian;
  if (g.n == 1) {
    pr.d = {0, true};
    return pr;
  }
  Factorization f = factorize((uint64_t)g.n);
  pr.primes = f.factors;
  pr.is_p_group = f.num_primes() == 1;

  auto hist = l.order_histogram();
  pr.is_nilpotent = true;
  for (auto& [p, alpha] : f.factors) {
    SylowInfo si;
    si.p = p;
    si.alpha = alpha;
    si.order = 1;
    for (int i = 0; i < alpha; ++i) si.order *= (int)p;
    si.count = hist.count(si.order) ? hist.at(si.order) : 0;
    if (si.count != 1) pr.is_nilpotent = false; // Sylow normal iff unique
    auto sy = l.sylow_indices(p);
    si.rep = sy.front();
    const Subgroup& rep = l.subgroups[si.rep];
    si.cyclic = subgroup_cyclic(g, rep.members, si.order);
    si.abelian = g.abelian || subgroup_abelian(g, rep.members);
    si.exponent = subgroup_exponent(g, rep.members);
    si.d = p_group_rank(l, si.rep, p);
    // number of order-p subgroups inside the representative
    int order_p_inside = 0;
    for (auto& s : l.subgroups)
      if ((uint64_t)s.order == p && s.members.subset_of(rep.members)) ++order_p_inside;
    si.is_quaternion = (p == 2) && alpha >= 3 && !si.cyclic && order_p_inside == 1;
    si.splittable = !si.cyclic && !si.is_quaternion; // >= 2 subgroups of order p

    // abelian subgroups of rank 2 or 3 with repeated square factors
    if (!si.cyclic && si.exponent > (int)p) {
      std::vector<int> order_p_subs;
      for (int i = 0; i < l.size(); ++i)
        if ((uint64_t)l.subgroups[i].order == p && l.subgroups[i].members.subset_of(rep.members))
          order_p_subs.push_back(i);
      for (int i = 0; i < l.size(); ++i) {
        const Subgroup& s = l.subgroups[i];
        if (s.order < (int)(p * p * p * p)) continue; // smallest candidate is p^4
        if (!s.members.subset_of(rep.members)) continue;
        int exp_s = subgroup_exponent(g, s.members);
        if (exp_s < (int)(p * p)) continue;
        if (!(g.abelian || subgroup_abelian(g, s.members))) continue;
        int cnt = 0;
        for (int j : order_p_subs)
          if (l.subgroups[j].members.subset_of(s.members)) ++cnt;
        int rank = abelian_rank(cnt, (int)p);
        if (rank == 2 && (uint64_t)s.order >= (uint64_t)exp_s * p * p) si.has_cpk_cpr = true;
        if (rank == 3 && (uint64_t)s.order == (uint64_t)exp_s * p * p) si.has_cpk_cp_cp = true;
        if (si.has_cpk_cpr && si.has_cpk_cp_cp) break;
      }
    }
    pr.sylows.push_back(si);
  }
  pr.is_solvable = solvable(g);

  pr.is_gen_quaternion = pr.is_p_group && pr.sylows[0].is_quaternion;

  if (pr.is_p_group) {
    pr.d = p_group_rank(l, l.size() - 1, pr.primes[0].first);
  } else if (pr.is_nilpotent) {
    // direct product of its Sylow subgroups, so d = max over Sylow ranks
    GenCount d{1, true};
    for (auto& si : pr.sylows) d.value = std::max(d.value, si.d.value);
    pr.d = d;
  } else {
    pr.d = brute_force_rank(l);
  }
  return pr;
}

GenCount min_generators(const SubgroupLattice& l) { return structural_profile(l).d; }

std::string SubgroupLattice::to_json() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < size(); ++i) {
    const Subgroup& s = subgroups[i];
    if (i) os << ",";
    os << "{\"order\":" << s.order << ",\"members\":[";
    auto idx = s.members.to_indices();
    for (size_t k = 0; k < idx.size(); ++k) os << (k ? "," : "") << idx[k];
    os << "],\"generators\":[";
    for (size_t k = 0; k < s.gens.size(); ++k) os << (k ? "," : "") << s.gens[k];
    os << "]}";
  }
  os << "]";
  return os.str();
}

} // namespace igg
