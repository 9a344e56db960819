#include "igg/theorems.hpp"

#include "igg/arith.hpp"
#include "igg/errors.hpp"
#include "igg/graph_build.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <sstream>
#include <thread>

namespace igg {

namespace {

void require(bool cond, const char* msg) {
  if (!cond) fail(ErrorCode::precondition_violated, msg);
}

const SylowInfo* find_sylow(const StructuralProfile& p, uint64_t q) { return p.sylow(q); }

bool all_sylows_cyclic(const StructuralProfile& p) {
  for (auto& s : p.sylows)
    if (!s.cyclic) return false;
  return true;
}

} // namespace

bool predicate_perfect_nilpotent(const StructuralProfile& p) {
  require(p.is_nilpotent && !p.is_trivial && !p.is_p_group, "perfect classification needs a nilpotent non-p-group");
  int k = p.num_primes();
  if (k >= 5) return false;
  const SylowInfo* s2 = find_sylow(p, 2);
  bool quat2 = s2 && s2->is_quaternion;
  int odd_cyclic = 0, odd_noncyclic = 0;
  for (auto& s : p.sylows) {
    if (s.p == 2) continue;
    (s.cyclic ? odd_cyclic : odd_noncyclic)++;
  }
  if (all_sylows_cyclic(p)) return true;
  if (k == 4) return quat2 && odd_noncyclic == 0;
  if (k == 3) {
    if (quat2 && odd_noncyclic == 0) return true;                   // quaternion x cyclic x cyclic
    if (quat2 && odd_noncyclic == 1 && odd_cyclic == 1) return true; // quaternion x cyclic x non-cyclic
    if (s2 && s2->cyclic && odd_noncyclic == 1 && odd_cyclic == 1) return true; // cyclic-2 x cyclic x non-cyclic
    return false;
  }
  // k == 2
  if (quat2) return true; // quaternion x (cyclic or non-cyclic) odd part
  if (!s2) return true;   // both primes odd: cyclic/non-cyclic combinations all classified perfect
  // prime 2 present and its Sylow not cyclic (all-cyclic handled), not quaternion
  if (s2->cyclic) return true; // cyclic 2-part x non-cyclic odd part
  return false;
}

bool predicate_triangle_free_nilpotent(const StructuralProfile& p) {
  require(p.is_nilpotent, "triangle-free classification needs a nilpotent group");
  if (p.is_trivial) return true;
  if (p.is_p_group) return p.is_cyclic || p.is_gen_quaternion;
  if (p.num_primes() != 2) return false;
  if (all_sylows_cyclic(p)) return true;
  const SylowInfo* s2 = find_sylow(p, 2);
  if (s2 && s2->is_quaternion) {
    for (auto& s : p.sylows)
      if (s.p != 2 && s.cyclic) return true;
  }
  return false;
}

bool predicate_bipartite_nilpotent(const StructuralProfile& p) { return predicate_triangle_free_nilpotent(p); }

bool predicate_cluster_nilpotent(const StructuralProfile& p) {
  require(p.is_nilpotent, "cluster classification needs a nilpotent group");
  if (p.is_trivial) return true;
  if (p.is_p_group) {
    if (p.is_cyclic || p.is_gen_quaternion) return true;
    return p.exponent == (int)p.primes[0].first && p.d == GenCount{2, true};
  }
  if (p.num_primes() != 2) return false;
  for (auto& s : p.sylows)
    if (s.alpha != 1) return false;
  return true; // squarefree two-prime order, nilpotent, hence C_pq
}

bool predicate_clawfree_nilpotent(const StructuralProfile& p) {
  require(p.is_nilpotent, "claw-free classification needs a nilpotent group");
  if (p.is_trivial) return true;
  if (p.is_p_group) {
    if (p.is_cyclic || p.is_gen_quaternion) return true;
    int prime = (int)p.primes[0].first;
    if (p.exponent == prime && p.d.exact && p.d.value <= 3) return true;
    if (p.d == GenCount{2, true} && p.exponent == prime * prime) return true;
    return false;
  }
  if (p.num_primes() == 2) {
    if (all_sylows_cyclic(p)) return true;
    // non-cyclic two-generated prime-exponent part times a prime-order cyclic part
    for (int i = 0; i < 2; ++i) {
      const SylowInfo& a = p.sylows[i];
      const SylowInfo& b = p.sylows[1 - i];
      if (a.splittable && a.exponent == (int)a.p && a.d == GenCount{2, true} && b.cyclic && b.alpha == 1)
        return true;
    }
    return false;
  }
  if (p.num_primes() == 3) {
    for (auto& s : p.sylows)
      if (s.alpha != 1) return false;
    return true; // C_pqr
  }
  return false;
}

bool predicate_cograph(const StructuralProfile& p) {
  require(p.is_nilpotent, "cograph classification needs a nilpotent group");
  if (p.is_trivial) return true;
  if (p.is_p_group) {
    if (p.is_cyclic || p.is_gen_quaternion) return true;
    return p.d == GenCount{2, true};
  }
  if (p.num_primes() != 2) return false;
  if (all_sylows_cyclic(p)) return true;
  const SylowInfo* s2 = find_sylow(p, 2);
  if (s2 && s2->is_quaternion) {
    for (auto& s : p.sylows)
      if (s.p != 2 && s.cyclic) return true;
  }
  return false;
}

ChordalPrediction predicate_chordal(const StructuralProfile& p) {
  if (p.is_trivial) return ChordalPrediction::yes;
  if (!p.is_nilpotent) {
    require(p.is_solvable, "chordal classification covers nilpotent and solvable groups");
    int k = p.num_primes();
    if (k == 3) {
      for (auto& s : p.sylows)
        if (s.alpha != 1) return ChordalPrediction::no;
      return ChordalPrediction::necessary_only;
    }
    if (k == 2) {
      if (p.sylows[0].alpha == 1 || p.sylows[1].alpha == 1) return ChordalPrediction::necessary_only;
      return ChordalPrediction::no;
    }
    return ChordalPrediction::no;
  }
  if (p.is_p_group) {
    int prime = (int)p.primes[0].first;
    if (p.is_cyclic) return ChordalPrediction::yes;
    if (p.is_abelian) {
      if (p.d == GenCount{2, true} && p.order == (uint64_t)p.exponent * prime) return ChordalPrediction::yes;
      if (p.d == GenCount{3, true} && p.exponent == prime && p.order == (uint64_t)prime * prime * prime)
        return ChordalPrediction::yes;
      return ChordalPrediction::no;
    }
    const SylowInfo& s = p.sylows[0];
    if (s.is_quaternion) return ChordalPrediction::necessary_only;
    if (p.d == GenCount{2, true}) return s.has_cpk_cpr ? ChordalPrediction::no : ChordalPrediction::necessary_only;
    if (p.d == GenCount{3, true}) return s.has_cpk_cp_cp ? ChordalPrediction::no : ChordalPrediction::necessary_only;
    return ChordalPrediction::no;
  }
  int k = p.num_primes();
  if (k == 2) {
    const SylowInfo& a = p.sylows[0];
    const SylowInfo& b = p.sylows[1];
    if (a.cyclic && b.cyclic && (a.alpha == 1 || b.alpha == 1)) return ChordalPrediction::yes;
    const SylowInfo* s2 = find_sylow(p, 2);
    if (s2 && s2->is_quaternion) {
      const SylowInfo& other = s2 == &a ? b : a;
      if (other.cyclic && other.alpha == 1) return ChordalPrediction::yes;
    }
    for (int i = 0; i < 2; ++i) {
      const SylowInfo& x = p.sylows[i];
      const SylowInfo& y = p.sylows[1 - i];
      if (x.splittable && x.exponent == (int)x.p && x.d == GenCount{2, true} && y.cyclic && y.alpha == 1)
        return ChordalPrediction::yes;
    }
    return ChordalPrediction::no;
  }
  if (k == 3) {
    for (auto& s : p.sylows)
      if (s.alpha != 1) return ChordalPrediction::no;
    return ChordalPrediction::yes; // C_pqr
  }
  return ChordalPrediction::no;
}

bool predicate_dihedral(long n, GraphClass cls) {
  require(n >= 2, "dihedral classification needs n >= 2");
  require(cls == GraphClass::cograph || cls == GraphClass::chordal, "dihedral classification covers cograph/chordal");
  return is_prime_power((uint64_t)n).has_value();
}

bool predicate_symmetric(long n, GraphClass cls) {
  require(n >= 3, "symmetric classification needs n >= 3");
  require(cls == GraphClass::cograph || cls == GraphClass::chordal, "symmetric classification covers cograph/chordal");
  return n == 3;
}

bool predicate_alternating(long n, GraphClass cls) {
  require(n >= 3, "alternating classification needs n >= 3");
  require(cls == GraphClass::cograph || cls == GraphClass::chordal,
          "alternating classification covers cograph/chordal");
  return n <= 4;
}

namespace {

const GraphClass kClassOrder[] = {GraphClass::triangle_free, GraphClass::cluster,  GraphClass::claw_free,
                                  GraphClass::cograph,       GraphClass::bipartite, GraphClass::chordal,
                                  GraphClass::perfect};

} // namespace

std::vector<ClassificationClaim> claims_for_profile(const GroupSpec& spec, const StructuralProfile& pr) {
  std::vector<ClassificationClaim> out;
  auto add = [&](GraphClass cls, bool predicted, std::string source, ClaimStatus st) {
    out.push_back({spec, cls, predicted, std::move(source), st});
  };
  if (pr.is_trivial) {
    for (GraphClass cls : kClassOrder) add(cls, true, "trivial-group", ClaimStatus::firm);
    return out;
  }
  require(pr.is_nilpotent, "profile claims cover nilpotent groups");

  bool tf = predicate_triangle_free_nilpotent(pr);
  add(GraphClass::triangle_free, tf, "nilpotent-triangle-free", ClaimStatus::firm);
  add(GraphClass::cluster, predicate_cluster_nilpotent(pr), "nilpotent-cluster", ClaimStatus::firm);

  {
    bool claw = predicate_clawfree_nilpotent(pr);
    bool quantifier_reading =
        pr.is_p_group && !pr.is_cyclic && !pr.is_gen_quaternion && pr.d == GenCount{2, true} &&
        (pr.exponent == (int)pr.primes[0].first ||
         pr.exponent == (int)(pr.primes[0].first * pr.primes[0].first));
    if (quantifier_reading)
      add(GraphClass::claw_free, claw, "p-group-claw-free#generator-count-reading", ClaimStatus::ambiguous);
    else
      add(GraphClass::claw_free, claw, "nilpotent-claw-free", ClaimStatus::firm);
  }

  add(GraphClass::cograph, predicate_cograph(pr), pr.is_p_group ? "p-group-cograph" : "nilpotent-cograph",
      ClaimStatus::firm);
  add(GraphClass::bipartite, predicate_bipartite_nilpotent(pr), "nilpotent-bipartite", ClaimStatus::firm);

  {
    ChordalPrediction cp = predicate_chordal(pr);
    std::string src = pr.is_p_group ? (pr.is_abelian ? "chordal-abelian-p-group" : "chordal-p-group#necessary-only")
                                    : "chordal-nilpotent";
    if (cp == ChordalPrediction::necessary_only)
      add(GraphClass::chordal, true, src, ClaimStatus::ambiguous);
    else
      add(GraphClass::chordal, cp == ChordalPrediction::yes, src, ClaimStatus::firm);
  }

  if (!pr.is_p_group) {
    const SylowInfo* s2 = find_sylow(pr, 2);
    bool quat_cyclic_shape = s2 && s2->is_quaternion && pr.num_primes() <= 4;
    if (quat_cyclic_shape) {
      for (auto& s : pr.sylows)
        if (s.p != 2 && !s.cyclic) quat_cyclic_shape = false;
    }
    if (quat_cyclic_shape) {
      // the classification lists these as perfect while the supporting lemma
      // states the opposite of what its own proof concludes
      add(GraphClass::perfect, true, "nilpotent-perfect#quaternion-cyclic-statement-conflict",
          ClaimStatus::ambiguous);
    } else {
      bool pred = predicate_perfect_nilpotent(pr);
      if (pred) {
        add(GraphClass::perfect, true, "nilpotent-perfect", ClaimStatus::firm);
      } else {
        int k = pr.num_primes();
        int s = pr.splittable_count();
        bool certified_false = k >= 5 || (k == 4 && s >= 1) || (k >= 3 && s >= 2);
        add(GraphClass::perfect, false,
            certified_false ? "nilpotent-perfect" : "nilpotent-perfect#case-not-covered",
            certified_false ? ClaimStatus::firm : ClaimStatus::ambiguous);
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// catalog construction from closed-form profiles

namespace {

struct PrimePart {
  std::vector<int> cyclic_exps;              // one entry per cyclic invariant factor
  enum class Special { none, quaternion, heisenberg, dihedral2 } special = Special::none;
  uint64_t special_order = 0;
};

std::optional<StructuralProfile> analytic_profile(const GroupSpec& spec) {
  std::map<uint64_t, PrimePart> parts;
  for (auto& at : spec.atoms) {
    switch (at.kind) {
      case GroupAtom::Kind::cyclic: {
        if (at.a == 1) break;
        for (auto& [p, e] : factorize((uint64_t)at.a).factors) parts[p].cyclic_exps.push_back(e);
        break;
      }
      case GroupAtom::Kind::elem_abelian:
        for (long i = 0; i < at.b; ++i) parts[(uint64_t)at.a].cyclic_exps.push_back(1);
        break;
      case GroupAtom::Kind::gen_quaternion:
        if (parts[2].special != PrimePart::Special::none) return std::nullopt;
        parts[2].special = PrimePart::Special::quaternion;
        parts[2].special_order = (uint64_t)at.a;
        break;
      case GroupAtom::Kind::heisenberg:
        if (parts[(uint64_t)at.a].special != PrimePart::Special::none) return std::nullopt;
        parts[(uint64_t)at.a].special = PrimePart::Special::heisenberg;
        parts[(uint64_t)at.a].special_order = (uint64_t)(at.a * at.a * at.a);
        break;
      case GroupAtom::Kind::dihedral: {
        long n = at.a;
        if (n == 2) {
          parts[2].cyclic_exps.push_back(1);
          parts[2].cyclic_exps.push_back(1);
          break;
        }
        if ((n & (n - 1)) != 0) return std::nullopt; // not nilpotent
        if (parts[2].special != PrimePart::Special::none) return std::nullopt;
        parts[2].special = PrimePart::Special::dihedral2;
        parts[2].special_order = 2 * (uint64_t)n;
        break;
      }
      default:
        return std::nullopt; // symmetric/alternating profiles come from lattices
    }
  }
  // a special part must be the only contribution at its prime
  StructuralProfile pr;
  pr.order = 1;
  for (auto& [p, part] : parts) {
    if (part.special != PrimePart::Special::none && !part.cyclic_exps.empty()) return std::nullopt;
    SylowInfo si;
    si.p = p;
    si.count = 1;
    si.rep = -1;
    if (part.special == PrimePart::Special::quaternion) {
      si.order = (int)part.special_order;
      si.alpha = 0;
      for (uint64_t v = part.special_order; v > 1; v >>= 1) ++si.alpha;
      si.cyclic = false;
      si.is_quaternion = true;
      si.splittable = false;
      si.abelian = false;
      si.exponent = (int)(part.special_order / 2);
      si.d = {2, true};
    } else if (part.special == PrimePart::Special::heisenberg) {
      si.order = (int)part.special_order;
      si.alpha = 3;
      si.cyclic = false;
      si.splittable = true;
      si.abelian = false;
      si.exponent = (int)p;
      si.d = {2, true};
    } else if (part.special == PrimePart::Special::dihedral2) {
      si.order = (int)part.special_order;
      si.alpha = 0;
      for (uint64_t v = part.special_order; v > 1; v >>= 1) ++si.alpha;
      si.cyclic = false;
      si.splittable = true;
      si.abelian = false;
      si.exponent = (int)(part.special_order / 2);
      si.d = {2, true};
    } else {
      std::vector<int> exps = part.cyclic_exps;
      std::sort(exps.rbegin(), exps.rend());
      si.alpha = 0;
      si.order = 1;
      for (int e : exps) {
        si.alpha += e;
        for (int i = 0; i < e; ++i) si.order *= (int)p;
      }
      si.cyclic = exps.size() == 1;
      si.splittable = exps.size() >= 2;
      si.abelian = true;
      si.exponent = 1;
      for (int i = 0; i < exps[0]; ++i) si.exponent *= (int)p;
      si.d = {(int)exps.size(), true};
      si.has_cpk_cpr = exps.size() >= 2 && exps[1] >= 2;
      si.has_cpk_cp_cp = exps.size() >= 3 && exps[0] >= 2;
    }
    pr.order *= (uint64_t)si.order;
    pr.primes.emplace_back(p, si.alpha);
    pr.sylows.push_back(si);
  }
  pr.is_trivial = pr.order == 1;
  if (pr.is_trivial) {
    pr.d = {0, true};
    return pr;
  }
  pr.is_p_group = pr.num_primes() == 1;
  pr.is_nilpotent = true;
  pr.is_solvable = true;
  pr.exponent = 1;
  pr.is_cyclic = true;
  pr.is_abelian = true;
  pr.d = {1, true};
  for (auto& si : pr.sylows) {
    pr.exponent *= si.exponent;
    pr.is_cyclic = pr.is_cyclic && si.cyclic;
    pr.is_abelian = pr.is_abelian && si.abelian;
    pr.d.value = std::max(pr.d.value, si.d.value);
  }
  pr.is_gen_quaternion = pr.is_p_group && pr.sylows[0].is_quaternion;
  return pr;
}

std::vector<ClassificationClaim> family_claims(const GroupSpec& spec) {
  // dihedral/symmetric/alternating cograph + chordal rules
  std::vector<ClassificationClaim> out;
  const GroupAtom& at = spec.atoms[0];
  for (GraphClass cls : {GraphClass::cograph, GraphClass::chordal}) {
    ClassificationClaim c;
    c.spec = spec;
    c.cls = cls;
    c.status = ClaimStatus::firm;
    switch (at.kind) {
      case GroupAtom::Kind::dihedral:
        c.predicted = predicate_dihedral(at.a, cls);
        c.source = "dihedral-prime-power";
        break;
      case GroupAtom::Kind::symmetric:
        c.predicted = predicate_symmetric(at.a, cls);
        c.source = "symmetric-n-eq-3";
        break;
      case GroupAtom::Kind::alternating:
        c.predicted = predicate_alternating(at.a, cls);
        c.source = "alternating-n-le-4";
        break;
      default:
        fail(ErrorCode::precondition_violated, "family claims need D/S/A");
    }
    out.push_back(std::move(c));
  }
  return out;
}

void append_profile_claims(std::vector<ClassificationClaim>& out, const GroupSpec& spec) {
  auto pr = analytic_profile(spec);
  if (!pr) fail(ErrorCode::precondition_violated, "catalog spec without closed-form profile: " + spec.to_string());
  auto cl = claims_for_profile(spec, *pr);
  out.insert(out.end(), cl.begin(), cl.end());
}

std::vector<GroupSpec> sylow_parts_for_prime(uint64_t p, int max_order) {
  std::vector<GroupSpec> parts;
  uint64_t v = p;
  while (v <= (uint64_t)max_order) {
    parts.push_back(GroupSpec::cyclic((long)v));
    if (v > (uint64_t)max_order / p) break;
    v *= p;
  }
  uint64_t e = p * p;
  int k = 2;
  while (e <= (uint64_t)max_order) {
    parts.push_back(GroupSpec::elem_abelian((long)p, k));
    if (e > (uint64_t)max_order / p) break;
    e *= p;
    ++k;
  }
  if (p == 2) {
    for (uint64_t q = 8; q <= (uint64_t)max_order; q *= 2) parts.push_back(GroupSpec::quaternion((long)q));
  } else if (p * p * p <= (uint64_t)max_order) {
    parts.push_back(GroupSpec::heisenberg((long)p));
  }
  return parts;
}

bool spec_all_cyclic(const GroupSpec& s) {
  for (auto& at : s.atoms)
    if (at.kind != GroupAtom::Kind::cyclic) return false;
  return true;
}

} // namespace

std::vector<ClassificationClaim> build_catalog(int max_order) {
  std::vector<ClassificationClaim> out;

  for (long n = 1; n <= max_order; ++n) append_profile_claims(out, GroupSpec::cyclic(n));

  for (long n = 2; 2 * n <= max_order; ++n) {
    GroupSpec spec = GroupSpec::dihedral(n);
    bool two_power = (n & (n - 1)) == 0;
    if (two_power) {
      // nilpotent: the structural rules cover the other classes
      std::vector<ClassificationClaim> cl;
      append_profile_claims(cl, spec);
      for (auto& c : cl)
        if (c.cls != GraphClass::cograph && c.cls != GraphClass::chordal) out.push_back(c);
    }
    auto fam = family_claims(spec);
    out.insert(out.end(), fam.begin(), fam.end());
  }

  for (long q = 8; q <= max_order; q *= 2) append_profile_claims(out, GroupSpec::quaternion(q));

  for (long n = 3; n <= 5; ++n) {
    GroupSpec s = GroupSpec::symmetric(n);
    if ((long)s.order() <= max_order) {
      auto fam = family_claims(s);
      out.insert(out.end(), fam.begin(), fam.end());
    }
    GroupSpec a = GroupSpec::alternating(n);
    if ((long)a.order() <= max_order) {
      auto fam = family_claims(a);
      out.insert(out.end(), fam.begin(), fam.end());
    }
  }

  for (uint64_t p = 2; p * p <= (uint64_t)max_order; ++p) {
    if (!is_prime(p)) continue;
    uint64_t v = p * p;
    int k = 2;
    while (v <= (uint64_t)max_order) {
      append_profile_claims(out, GroupSpec::elem_abelian((long)p, k));
      if (v > (uint64_t)max_order / p) break;
      v *= p;
      ++k;
    }
  }

  for (uint64_t p = 2; p * p * p <= (uint64_t)max_order; ++p) {
    if (!is_prime(p)) continue;
    uint64_t v = p * p * p; // C_{p^k} x C_p starting at k = 2
    while (v <= (uint64_t)max_order) {
      append_profile_claims(
          out, GroupSpec::product({GroupSpec::cyclic((long)(v / p)), GroupSpec::cyclic((long)p)}));
      if (v > (uint64_t)max_order / p) break;
      v *= p;
    }
  }

  for (uint64_t p = 3; p * p * p <= (uint64_t)max_order; p += 2) {
    if (!is_prime(p)) continue;
    append_profile_claims(out, GroupSpec::heisenberg((long)p));
  }

  // nilpotent products of per-prime Sylow parts over >= 2 primes, at least
  // one part non-cyclic (all-cyclic products are the cyclic groups above)
  std::vector<uint64_t> primes;
  for (uint64_t p = 2; 2 * p <= (uint64_t)max_order; ++p)
    if (is_prime(p)) primes.push_back(p);

  std::vector<GroupSpec> products;
  std::vector<GroupSpec> chosen;
  std::function<void(size_t, uint64_t)> rec = [&](size_t pi, uint64_t order) {
    if (pi == primes.size()) {
      if (chosen.size() >= 2) {
        GroupSpec prod = GroupSpec::product(chosen);
        if (!spec_all_cyclic(prod)) products.push_back(prod);
      }
      return;
    }
    rec(pi + 1, order); // skip this prime
    for (auto& part : sylow_parts_for_prime(primes[pi], max_order)) {
      uint64_t po = part.order();
      if (order > (uint64_t)max_order / po) continue;
      chosen.push_back(part);
      rec(pi + 1, order * po);
      chosen.pop_back();
    }
  };
  rec(0, 1);
  std::sort(products.begin(), products.end(), [](const GroupSpec& a, const GroupSpec& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.to_string() < b.to_string();
  });
  for (auto& prod : products) append_profile_claims(out, prod);

  return out;
}

// ---------------------------------------------------------------------------
// verification harness

namespace {

std::string status_name(ClaimStatus s) { return s == ClaimStatus::firm ? "firm" : "ambiguous"; }

struct GroupWork {
  GroupSpec spec;
  std::vector<size_t> claim_rows;
};

// recomputed prediction for a claim, from the lattice-derived profile
bool reference_prediction(const ClassificationClaim& claim, const StructuralProfile& pr, bool* found) {
  *found = true;
  if (claim.source.rfind("dihedral", 0) == 0) return predicate_dihedral(claim.spec.atoms[0].a, claim.cls);
  if (claim.source.rfind("symmetric", 0) == 0) return predicate_symmetric(claim.spec.atoms[0].a, claim.cls);
  if (claim.source.rfind("alternating", 0) == 0) return predicate_alternating(claim.spec.atoms[0].a, claim.cls);
  for (auto& c : claims_for_profile(claim.spec, pr))
    if (c.cls == claim.cls) return c.predicted;
  *found = false;
  return false;
}

} // namespace

VerificationReport run_verification(const std::vector<ClassificationClaim>& catalog, const VerifyOptions& opts) {
  VerificationReport rep;
  rep.rows.resize(catalog.size());

  std::vector<GroupWork> works;
  std::map<std::string, size_t> by_spec;
  for (size_t i = 0; i < catalog.size(); ++i) {
    std::string key = catalog[i].spec.to_string();
    auto it = by_spec.find(key);
    if (it == by_spec.end()) {
      by_spec.emplace(key, works.size());
      works.push_back({catalog[i].spec, {i}});
    } else {
      works[it->second].claim_rows.push_back(i);
    }
  }

  auto process = [&](const GroupWork& w) {
    std::vector<VerificationRow> rows(w.claim_rows.size());
    for (size_t k = 0; k < w.claim_rows.size(); ++k) rows[k].claim = catalog[w.claim_rows[k]];
    try {
      GroupTable gt = build_group(w.spec, opts.limits.order_cap);
      EnumLimits lim = opts.limits;
      lim.jobs = 1; // parallelism lives at the group level here
      SubgroupLattice lat = enumerate_subgroups(std::make_shared<GroupTable>(std::move(gt)), lim);
      StructuralProfile pr = structural_profile(lat);
      SimpleGraph graph = intersection_subgroup_graph(lat);
      for (auto& row : rows) {
        bool found = true;
        bool ref = false;
        try {
          ref = reference_prediction(row.claim, pr, &found);
        } catch (const Error&) {
          found = false;
        }
        row.prediction_consistent = found && ref == row.claim.predicted;
        try {
          ClassCertificate cert = run_recognizer(row.claim.cls, graph, opts.perfect_cap);
          row.computed = cert.verdict;
          row.certificate = std::move(cert);
          row.agree = *row.computed == row.claim.predicted;
        } catch (const Error& e) {
          if (!e.is_cap()) throw;
          row.computed = std::nullopt;
          row.note = std::string("skipped: ") + e.what();
          row.agree = row.claim.status != ClaimStatus::firm;
        }
      }
    } catch (const Error& e) {
      for (auto& row : rows) {
        row.computed = std::nullopt;
        row.note = std::string("error[") + e.tag() + "]: " + e.what();
        row.agree = row.claim.status != ClaimStatus::firm;
      }
    }
    return rows;
  };

  int jobs = opts.jobs > 0 ? opts.jobs : (int)std::max(1u, std::thread::hardware_concurrency());
  std::vector<std::vector<VerificationRow>> results(works.size());
  if (jobs <= 1) {
    for (size_t i = 0; i < works.size(); ++i) results[i] = process(works[i]);
  } else {
    std::atomic<size_t> next{0};
    auto worker = [&] {
      while (true) {
        size_t i = next.fetch_add(1);
        if (i >= works.size()) break;
        results[i] = process(works[i]);
      }
    };
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }

  for (size_t i = 0; i < works.size(); ++i)
    for (size_t k = 0; k < works[i].claim_rows.size(); ++k) rep.rows[works[i].claim_rows[k]] = results[i][k];

  for (size_t i = 0; i < rep.rows.size(); ++i) {
    const VerificationRow& row = rep.rows[i];
    bool firm = row.claim.status == ClaimStatus::firm;
    (firm ? rep.firm_total : rep.ambiguous_total)++;
    if (!row.computed) ++rep.skipped;
    if (!row.agree || (firm && !row.computed)) {
      (firm ? rep.firm_disagreements : rep.ambiguous_disagreements).push_back(i);
    }
  }
  return rep;
}

std::string VerificationReport::to_text() const {
  std::ostringstream os;
  os << "group\tclass\tpredicted\tcomputed\tstatus\tagree\tnote\n";
  for (const auto& row : rows) {
    os << row.claim.spec.to_string() << "\t" << class_name(row.claim.cls) << "\t"
       << (row.claim.predicted ? "true" : "false") << "\t"
       << (row.computed ? (*row.computed ? "true" : "false") : "-") << "\t" << status_name(row.claim.status)
       << "\t" << (row.agree ? "yes" : "NO") << "\t" << (row.note.empty() ? row.claim.source : row.note) << "\n";
  }
  os << "total claims: " << rows.size() << " (firm " << firm_total << ", ambiguous " << ambiguous_total << ")\n";
  os << "firm disagreements: " << firm_disagreements.size() << "\n";
  os << "ambiguous disagreements reported: " << ambiguous_disagreements.size() << "\n";
  os << "skipped: " << skipped << "\n";
  return os.str();
}

std::string VerificationReport::to_json() const {
  std::ostringstream os;
  os << "{\"rows\":[";
  for (size_t i = 0; i < rows.size(); ++i) {
    const auto& row = rows[i];
    if (i) os << ",";
    os << "{\"group\":\"" << row.claim.spec.to_string() << "\",\"class\":\"" << class_name(row.claim.cls)
       << "\",\"predicted\":" << (row.claim.predicted ? "true" : "false") << ",\"status\":\""
       << status_name(row.claim.status) << "\",\"source\":\"" << row.claim.source << "\"";
    if (row.computed) os << ",\"computed\":" << (*row.computed ? "true" : "false");
    if (row.certificate) os << ",\"certificate\":" << row.certificate->to_json();
    os << ",\"agree\":" << (row.agree ? "true" : "false");
    if (!row.note.empty()) os << ",\"note\":\"" << row.note << "\"";
    os << "}";
  }
  os << "],\"summary\":{\"claims\":" << rows.size() << ",\"firm\":" << firm_total
     << ",\"ambiguous\":" << ambiguous_total << ",\"firm_disagreements\":" << firm_disagreements.size()
     << ",\"ambiguous_disagreements\":" << ambiguous_disagreements.size() << ",\"skipped\":" << skipped << "}}";
  return os.str();
}

} // namespace igg
