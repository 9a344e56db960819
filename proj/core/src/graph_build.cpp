#include "igg/graph_build.hpp"

#include "igg/arith.hpp"
#include "igg/errors.hpp"

#include <numeric>
#include <sstream>

namespace igg {

namespace {

std::string subgroup_label(const GroupTable& g, const Subgroup& s) {
  std::ostringstream os;
  os << s.order << "<";
  size_t shown = std::min<size_t>(s.gens.size(), 3);
  for (size_t i = 0; i < shown; ++i) os << (i ? "," : "") << g.labels[s.gens[i]];
  if (s.gens.size() > shown) os << ",..";
  if (s.gens.empty()) os << "e";
  os << ">";
  return os.str();
}

} // namespace

SimpleGraph intersection_subgroup_graph(const SubgroupLattice& l) {
  const GroupTable& g = l.g();
  // candidates: all non-trivial subgroups (the whole group included; it has
  // no trivial partner once |G| > 1 and falls out below)
  std::vector<int> cand;
  for (int i = 0; i < l.size(); ++i)
    if (l.subgroups[i].order > 1) cand.push_back(i);

  const int m = (int)cand.size();
  const int gw = (g.n + 63) / 64; // words per membership vector
  std::vector<uint64_t> mem((size_t)m * gw);
  for (int a = 0; a < m; ++a) {
    const auto& raw = l.subgroups[cand[a]].members.raw();
    std::copy(raw.begin(), raw.end(), mem.begin() + (size_t)a * gw);
  }
  auto trivially_meets = [&](int a, int b) {
    const uint64_t* pa = &mem[(size_t)a * gw];
    const uint64_t* pb = &mem[(size_t)b * gw];
    int c = 0;
    for (int k = 0; k < gw; ++k) c += std::popcount(pa[k] & pb[k]);
    return c == 1;
  };
  // |A||B| <= |G| |A meet B|, so trivial intersection needs |A||B| <= |G|;
  // candidates are sorted by order, so possible partners form a prefix
  auto prefix_end = [&](int a) {
    int o = l.subgroups[cand[a]].order;
    int lo = 0, hi = m;
    while (lo < hi) {
      int mid = (lo + hi) / 2;
      if ((long long)l.subgroups[cand[mid]].order * o <= g.n) lo = mid + 1;
      else hi = mid;
    }
    return lo;
  };

  std::vector<int> verts;
  for (int a = 0; a < m; ++a) {
    int pe = prefix_end(a);
    for (int b = 0; b < pe; ++b) {
      if (a != b && trivially_meets(a, b)) {
        verts.push_back(a);
        break;
      }
    }
  }

  SimpleGraph out((int)verts.size());
  for (size_t i = 0; i < verts.size(); ++i) {
    const Subgroup& s = l.subgroups[cand[verts[i]]];
    out.labels[i] = subgroup_label(g, s);
    out.vorder[i] = s.order;
    // row fill is one-sided per word; the mirror bit appears when j's own
    // row reaches i, and the order prune keeps both sides consistent
    int pe = prefix_end(verts[i]);
    uint64_t* row = &out.adj[(size_t)i * out.words];
    for (int w = 0; w < out.words; ++w) {
      int lo = w * 64;
      if (lo >= (int)verts.size()) break;
      uint64_t acc = 0;
      int hi = std::min<int>(64, (int)verts.size() - lo);
      for (int b = 0; b < hi; ++b) {
        int j = lo + b;
        if (verts[j] >= pe) break; // larger orders cannot meet trivially
        if (j != (int)i && trivially_meets(verts[i], verts[j])) acc |= (uint64_t)1 << b;
      }
      row[w] = acc;
    }
  }
  return out;
}

SimpleGraph cyclic_intersection_graph(uint64_t n) {
  if (n < 2 || n > 1'000'000'000ull)
    fail(ErrorCode::out_of_range, "cyclic graph: n must be in [2, 10^9], got " + std::to_string(n));
  Factorization f = factorize(n);
  std::vector<uint64_t> ds = divisors(n);
  uint64_t rad = f.radical();
  // a divisor d > 1 has a coprime partner divisor > 1 iff d misses some prime of n
  std::vector<uint64_t> verts;
  for (uint64_t d : ds) {
    if (d == 1) continue;
    uint64_t rd = 1;
    for (auto& [p, e] : f.factors)
      if (d % p == 0) rd *= p;
    if (rd != rad) verts.push_back(d);
  }
  SimpleGraph out((int)verts.size());
  for (size_t i = 0; i < verts.size(); ++i) {
    out.labels[i] = std::to_string(verts[i]);
    out.vorder[i] = (long long)verts[i];
    for (size_t j = i + 1; j < verts.size(); ++j)
      if (std::gcd(verts[i], verts[j]) == 1) out.add_edge((int)i, (int)j);
  }
  return out;
}

SimpleGraph z_fragment_graph(const ZFragmentSpec& spec) {
  if (spec.max_modulus < 2)
    fail(ErrorCode::out_of_range, "z fragment: max modulus must be >= 2");
  long n = spec.max_modulus;
  SimpleGraph out((int)(n - 1));
  for (long m = 2; m <= n; ++m) {
    out.labels[m - 2] = std::to_string(m);
    out.vorder[m - 2] = m;
  }
  for (long a = 2; a <= n; ++a)
    for (long b = a + 1; b <= n; ++b)
      if (std::gcd(a, b) == 1) out.add_edge((int)(a - 2), (int)(b - 2));
  return out;
}

} // namespace igg
