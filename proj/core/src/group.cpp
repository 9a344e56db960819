#include "igg/group.hpp"

#include "igg/errors.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <sstream>
#include <unordered_map>

namespace igg {

namespace {

using Perm = std::vector<uint16_t>;

Perm identity_perm(int m) {
  Perm p(m);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm compose(const Perm& a, const Perm& b) { // (a*b)(x) = a(b(x))
  Perm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

std::string cycle_notation(const Perm& p) {
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  bool any = false;
  for (size_t i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    any = true;
    os << "(" << i;
    seen[i] = true;
    for (size_t j = p[i]; j != i; j = p[j]) {
      os << " " << j;
      seen[j] = true;
    }
    os << ")";
  }
  return any ? os.str() : "e";
}

struct PermHash {
  size_t operator()(const Perm& p) const {
    size_t h = 1469598103934665603ull;
    for (uint16_t v : p) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct PermGroup {
  std::vector<Perm> elems;    // BFS order, identity first
  std::vector<int> gen_index; // indices of the generators in elems
};

// Breadth-first closure over the generator list, identity first; right
// multiplication keeps cyclic groups in power order.
PermGroup close_generators(int domain, const std::vector<Perm>& gens, uint64_t expected_order, int order_cap) {
  if (expected_order > (uint64_t)order_cap)
    fail(ErrorCode::order_cap_exceeded,
         "group order " + std::to_string(expected_order) + " exceeds cap " + std::to_string(order_cap));
  PermGroup g;
  std::unordered_map<Perm, int, PermHash> index;
  g.elems.push_back(identity_perm(domain));
  index.emplace(g.elems[0], 0);
  for (size_t head = 0; head < g.elems.size(); ++head) {
    Perm cur = g.elems[head];
    for (const Perm& gen : gens) {
      Perm nxt = compose(cur, gen);
      if (index.emplace(nxt, (int)g.elems.size()).second) g.elems.push_back(nxt);
    }
  }
  if (g.elems.size() != expected_order)
    fail(ErrorCode::invalid_spec, "generator closure produced order " + std::to_string(g.elems.size()) +
                                      ", expected " + std::to_string(expected_order));
  for (const Perm& gen : gens) g.gen_index.push_back(index.at(gen));
  return g;
}

struct AtomTable {
  int n = 1;
  std::vector<uint16_t> mul;
  std::vector<std::string> labels;
  std::vector<int> generators;
  int at(int a, int b) const { return mul[(size_t)a * n + b]; }
};

AtomTable from_perm_group(const PermGroup& pg, const std::vector<std::string>* label_override = nullptr) {
  AtomTable t;
  t.n = (int)pg.elems.size();
  t.mul.resize((size_t)t.n * t.n);
  std::unordered_map<Perm, int, PermHash> index;
  for (int i = 0; i < t.n; ++i) index.emplace(pg.elems[i], i);
  for (int i = 0; i < t.n; ++i)
    for (int j = 0; j < t.n; ++j) t.mul[(size_t)i * t.n + j] = (uint16_t)index.at(compose(pg.elems[i], pg.elems[j]));
  t.labels.resize(t.n);
  for (int i = 0; i < t.n; ++i)
    t.labels[i] = label_override ? (*label_override)[i] : cycle_notation(pg.elems[i]);
  t.generators = pg.gen_index;
  return t;
}

AtomTable build_cyclic(long n) {
  AtomTable t;
  t.n = (int)n;
  t.mul.resize((size_t)n * n);
  for (long i = 0; i < n; ++i)
    for (long j = 0; j < n; ++j) t.mul[i * n + j] = (uint16_t)((i + j) % n);
  t.labels.resize(n);
  for (long i = 0; i < n; ++i) t.labels[i] = std::to_string(i);
  if (n > 1) t.generators.push_back(1);
  return t;
}

AtomTable build_dihedral(long n, int cap) {
  if (n == 2) {
    // the natural degree-2 action is not faithful; use two disjoint swaps
    std::vector<Perm> gens = {{1, 0, 2, 3}, {0, 1, 3, 2}};
    return from_perm_group(close_generators(4, gens, 4, cap));
  }
  Perm r(n), s(n);
  for (long i = 0; i < n; ++i) {
    r[i] = (uint16_t)((i + 1) % n);
    s[i] = (uint16_t)((n - i) % n);
  }
  return from_perm_group(close_generators((int)n, {r, s}, 2 * (uint64_t)n, cap));
}

AtomTable build_symmetric(long n, int cap) {
  if (n == 1) return build_cyclic(1);
  std::vector<Perm> gens;
  Perm t = identity_perm((int)n);
  std::swap(t[0], t[1]);
  gens.push_back(t);
  if (n >= 3) {
    Perm c(n);
    for (long i = 0; i < n; ++i) c[i] = (uint16_t)((i + 1) % n);
    gens.push_back(c);
  }
  uint64_t ord = 1;
  for (long i = 2; i <= n; ++i) ord *= (uint64_t)i;
  return from_perm_group(close_generators((int)n, gens, ord, cap));
}

AtomTable build_alternating(long n, int cap) {
  if (n <= 2) return build_cyclic(1);
  std::vector<Perm> gens;
  for (long i = 0; i + 2 < n; ++i) {
    Perm p = identity_perm((int)n);
    p[i] = (uint16_t)(i + 1);
    p[i + 1] = (uint16_t)(i + 2);
    p[i + 2] = (uint16_t)i;
    gens.push_back(p);
  }
  uint64_t ord = 1;
  for (long i = 2; i <= n; ++i) ord *= (uint64_t)i;
  return from_perm_group(close_generators((int)n, gens, ord / 2, cap));
}

// Q_{2^a} = <x, y | x^(2^(a-1)) = 1, y^2 = x^(2^(a-2)), y x y^-1 = x^-1>,
// realized by the left-regular action on normal forms x^i y^f.
AtomTable build_quaternion(long order, int cap) {
  long m = order / 2; // order of x
  int dom = (int)order;
  auto enc = [&](long i, long f) { return (uint16_t)(((i % m + m) % m) + m * f); };
  Perm px(dom), py(dom);
  for (long i = 0; i < m; ++i) {
    px[enc(i, 0)] = enc(i + 1, 0);
    px[enc(i, 1)] = enc(i + 1, 1); // x * (x^i y) = x^(i+1) y
    py[enc(i, 0)] = enc(-i, 1);    // y * x^i = x^-i y
    py[enc(i, 1)] = enc(m / 2 - i, 0); // y * (x^i y) = x^(m/2 - i)
  }
  PermGroup pg = close_generators(dom, {px, py}, (uint64_t)order, cap);
  // decode labels from the image of the identity point
  std::vector<std::string> labels(pg.elems.size());
  for (size_t k = 0; k < pg.elems.size(); ++k) {
    int pt = pg.elems[k][0];
    long i = pt % m, f = pt / m;
    std::ostringstream os;
    if (i == 0 && f == 0) os << "e";
    else {
      if (i == 1) os << "x";
      else if (i > 1) os << "x^" << i;
      if (f) os << (i ? "*y" : "y");
    }
    labels[k] = os.str();
  }
  return from_perm_group(pg, &labels);
}

AtomTable build_elem_abelian(long p, long k, int cap) {
  uint64_t ord = 1;
  for (long i = 0; i < k; ++i) {
    ord *= (uint64_t)p;
    if (ord > (uint64_t)cap)
      fail(ErrorCode::order_cap_exceeded, "group order exceeds cap " + std::to_string(cap));
  }
  int dom = (int)(p * k);
  std::vector<Perm> gens;
  for (long b = 0; b < k; ++b) {
    Perm g = identity_perm(dom);
    for (long i = 0; i < p; ++i) g[b * p + i] = (uint16_t)(b * p + (i + 1) % p);
    gens.push_back(g);
  }
  PermGroup pg = close_generators(dom, gens, ord, cap);
  std::vector<std::string> labels(pg.elems.size());
  for (size_t e = 0; e < pg.elems.size(); ++e) {
    std::ostringstream os;
    os << "(";
    for (long b = 0; b < k; ++b) os << (b ? "," : "") << (pg.elems[e][b * p] - b * p);
    os << ")";
    labels[e] = os.str();
  }
  return from_perm_group(pg, &labels);
}

// Upper unitriangular 3x3 matrices over F_p, p odd, via the left-regular
// action on triples (a, b, c): (a,b,c)*(a',b',c') = (a+a', b+b', c+c'+a*b').
AtomTable build_heisenberg(long p, int cap) {
  uint64_t ord = (uint64_t)p * p * p;
  if (ord > (uint64_t)cap) fail(ErrorCode::order_cap_exceeded, "group order exceeds cap " + std::to_string(cap));
  int dom = (int)ord;
  auto enc = [&](long a, long b, long c) {
    auto m = [&](long v) { return ((v % p) + p) % p; };
    return (uint16_t)(m(a) * p * p + m(b) * p + m(c));
  };
  Perm gx(dom), gy(dom);
  for (long a = 0; a < p; ++a)
    for (long b = 0; b < p; ++b)
      for (long c = 0; c < p; ++c) {
        gx[enc(a, b, c)] = enc(a + 1, b, c + b); // (1,0,0)*(a,b,c)
        gy[enc(a, b, c)] = enc(a, b + 1, c);     // (0,1,0)*(a,b,c)
      }
  PermGroup pg = close_generators(dom, {gx, gy}, ord, cap);
  std::vector<std::string> labels(pg.elems.size());
  for (size_t e = 0; e < pg.elems.size(); ++e) {
    int pt = pg.elems[e][0];
    std::ostringstream os;
    os << "(" << pt / (p * p) << "," << (pt / p) % p << "," << pt % p << ")";
    labels[e] = os.str();
  }
  return from_perm_group(pg, &labels);
}

AtomTable build_atom(const GroupAtom& at, int cap) {
  uint64_t ord = at.order();
  if (ord > (uint64_t)cap)
    fail(ErrorCode::order_cap_exceeded,
         at.to_string() + " has order " + std::to_string(ord) + " > cap " + std::to_string(cap));
  switch (at.kind) {
    case GroupAtom::Kind::cyclic: return build_cyclic(at.a);
    case GroupAtom::Kind::dihedral: return build_dihedral(at.a, cap);
    case GroupAtom::Kind::gen_quaternion: return build_quaternion(at.a, cap);
    case GroupAtom::Kind::symmetric: return build_symmetric(at.a, cap);
    case GroupAtom::Kind::alternating: return build_alternating(at.a, cap);
    case GroupAtom::Kind::elem_abelian: return build_elem_abelian(at.a, at.b, cap);
    case GroupAtom::Kind::heisenberg: return build_heisenberg(at.a, cap);
  }
  fail(ErrorCode::invalid_spec, "bad atom");
}

AtomTable direct_product(const AtomTable& a, const AtomTable& b) {
  AtomTable t;
  t.n = a.n * b.n;
  t.mul.resize((size_t)t.n * t.n);
  for (int i = 0; i < t.n; ++i) {
    int ia = i / b.n, ib = i % b.n;
    for (int j = 0; j < t.n; ++j) {
      int ja = j / b.n, jb = j % b.n;
      t.mul[(size_t)i * t.n + j] = (uint16_t)(a.at(ia, ja) * b.n + b.at(ib, jb));
    }
  }
  t.labels.resize(t.n);
  for (int i = 0; i < t.n; ++i) {
    t.labels[i] = "(" + a.labels[i / b.n] + "," + b.labels[i % b.n] + ")";
  }
  for (int g : a.generators) t.generators.push_back(g * b.n);
  for (int g : b.generators) t.generators.push_back(g);
  return t;
}

} // namespace

GroupTable build_group(const GroupSpec& spec, int order_cap) {
  spec.validate();
  uint64_t ord = spec.order();
  if (ord > (uint64_t)order_cap)
    fail(ErrorCode::order_cap_exceeded,
         spec.to_string() + " has order " + std::to_string(ord) + " > cap " + std::to_string(order_cap));

  AtomTable acc = build_atom(spec.atoms[0], order_cap);
  for (size_t k = 1; k < spec.atoms.size(); ++k) acc = direct_product(acc, build_atom(spec.atoms[k], order_cap));

  GroupTable g;
  g.n = acc.n;
  g.mul = std::move(acc.mul);
  g.labels = std::move(acc.labels);
  g.generators = std::move(acc.generators);
  g.spec = spec;

  g.inv.resize(g.n);
  for (int i = 0; i < g.n; ++i)
    for (int j = 0; j < g.n; ++j)
      if (g.at(i, j) == 0) {
        g.inv[i] = (uint16_t)j;
        break;
      }

  g.elem_order.resize(g.n);
  for (int i = 0; i < g.n; ++i) {
    int k = 1, x = i;
    while (x != 0) {
      x = g.at(x, i);
      ++k;
    }
    g.elem_order[i] = k;
  }

  g.abelian = true;
  for (int i = 0; i < g.n && g.abelian; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.at(i, j) != g.at(j, i)) {
        g.abelian = false;
        break;
      }
  return g;
}

int GroupTable::power(int x, long e) const {
  int r = 0;
  long k = ((e % elem_order[x]) + elem_order[x]) % elem_order[x];
  while (k-- > 0) r = at(r, x);
  return r;
}

int element_order(const GroupTable& g, int x) {
  if (x < 0 || x >= g.n) fail(ErrorCode::index_out_of_range, "element index " + std::to_string(x));
  return g.elem_order[x];
}

int exponent(const GroupTable& g) {
  long e = 1;
  for (int i = 0; i < g.n; ++i) e = std::lcm(e, (long)g.elem_order[i]);
  return (int)e;
}

bool check_associativity(const GroupTable& g, int cap) {
  if (g.n > cap)
    fail(ErrorCode::order_cap_exceeded,
         "associativity check limited to order " + std::to_string(cap) + ", group has " + std::to_string(g.n));
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b) {
      int ab = g.at(a, b);
      for (int c = 0; c < g.n; ++c)
        if (g.at(ab, c) != g.at(a, g.at(b, c))) return false;
    }
  return true;
}

std::optional<std::vector<int>> extend_embedding(const GroupTable& h, const GroupTable& g,
                                                 const std::vector<int>& gen_images) {
  if (gen_images.size() != h.generators.size()) return std::nullopt;
  std::vector<int> phi(h.n, -1);
  phi[0] = 0;
  std::vector<int> queue{0};
  for (size_t head = 0; head < queue.size(); ++head) {
    int x = queue[head];
    for (size_t k = 0; k < h.generators.size(); ++k) {
      int y = h.at(x, h.generators[k]);
      int img = g.at(phi[x], gen_images[k]);
      if (phi[y] == -1) {
        phi[y] = img;
        queue.push_back(y);
      } else if (phi[y] != img) {
        return std::nullopt; // not a homomorphism
      }
    }
  }
  // trivial H has no generators; the map is just identity->identity
  for (int x = 0; x < h.n; ++x)
    if (phi[x] == -1) return std::nullopt;
  // homomorphism property on all pairs, then injectivity
  for (int a = 0; a < h.n; ++a)
    for (int b = 0; b < h.n; ++b)
      if (phi[h.at(a, b)] != g.at(phi[a], phi[b])) return std::nullopt;
  std::vector<bool> hit(g.n, false);
  for (int x = 0; x < h.n; ++x) {
    if (hit[phi[x]]) return std::nullopt;
    hit[phi[x]] = true;
  }
  return phi;
}

} // namespace igg
