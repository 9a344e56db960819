#include "igg/graph_classes.hpp"

#include <algorithm>

// Definition-level certificate validation. Everything here re-derives the
// claimed pattern from the adjacency relation alone and stays independent of
// the recognizer implementations.

namespace igg {

namespace {

bool all_distinct(const SimpleGraph& g, const std::vector<int>& vs) {
  std::vector<int> s = vs;
  std::sort(s.begin(), s.end());
  if (std::adjacent_find(s.begin(), s.end()) != s.end()) return false;
  return s.empty() || (s.front() >= 0 && s.back() < g.n);
}

bool adj(const SimpleGraph& g, int a, int b, bool in_complement) {
  bool e = g.edge(a, b);
  return in_complement ? (a != b && !e) : e;
}

bool check_triangle(const SimpleGraph& g, const std::vector<int>& w) {
  return w.size() == 3 && all_distinct(g, w) && g.edge(w[0], w[1]) && g.edge(w[1], w[2]) && g.edge(w[0], w[2]);
}

// induced path in the listed order
bool check_path(const SimpleGraph& g, const std::vector<int>& w, size_t len) {
  if (w.size() != len || !all_distinct(g, w)) return false;
  for (size_t i = 0; i < len; ++i)
    for (size_t j = i + 1; j < len; ++j) {
      bool want = (j == i + 1);
      if (g.edge(w[i], w[j]) != want) return false;
    }
  return true;
}

bool check_claw(const SimpleGraph& g, const std::vector<int>& w) {
  if (w.size() != 4 || !all_distinct(g, w)) return false;
  if (!g.edge(w[0], w[1]) || !g.edge(w[0], w[2]) || !g.edge(w[0], w[3])) return false;
  return !g.edge(w[1], w[2]) && !g.edge(w[1], w[3]) && !g.edge(w[2], w[3]);
}

bool check_closed_walk_odd(const SimpleGraph& g, const std::vector<int>& w) {
  if (w.size() < 3 || w.size() % 2 == 0 || !all_distinct(g, w)) return false;
  for (size_t i = 0; i < w.size(); ++i)
    if (!g.edge(w[i], w[(i + 1) % w.size()])) return false;
  return true;
}

bool check_chordless_cycle(const SimpleGraph& g, const std::vector<int>& w, size_t min_len, bool want_odd,
                           bool in_complement) {
  if (w.size() < min_len || !all_distinct(g, w)) return false;
  if (want_odd && w.size() % 2 == 0) return false;
  size_t k = w.size();
  for (size_t i = 0; i < k; ++i)
    for (size_t j = i + 1; j < k; ++j) {
      bool consecutive = (j == i + 1) || (i == 0 && j == k - 1);
      if (adj(g, w[i], w[j], in_complement) != consecutive) return false;
    }
  return true;
}

bool check_coloring(const SimpleGraph& g, const std::vector<int>& color) {
  if ((int)color.size() != g.n) return false;
  for (int v = 0; v < g.n; ++v)
    if (color[v] != 0 && color[v] != 1) return false;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.edge(i, j) && color[i] == color[j]) return false;
  return true;
}

bool check_peo(const SimpleGraph& g, const std::vector<int>& peo) {
  if ((int)peo.size() != g.n || !all_distinct(g, peo)) return false;
  std::vector<int> pos(g.n);
  for (int i = 0; i < g.n; ++i) pos[peo[i]] = i;
  for (int i = 0; i < g.n; ++i) {
    int v = peo[i];
    std::vector<int> later;
    for (int u = 0; u < g.n; ++u)
      if (g.edge(v, u) && pos[u] > i) later.push_back(u);
    for (size_t a = 0; a < later.size(); ++a)
      for (size_t b = a + 1; b < later.size(); ++b)
        if (!g.edge(later[a], later[b])) return false;
  }
  return true;
}

} // namespace

bool verify_certificate(const SimpleGraph& g, const ClassCertificate& cert) {
  if (cert.verdict) {
    if (cert.cls == GraphClass::bipartite) return cert.coloring && check_coloring(g, *cert.coloring);
    if (cert.cls == GraphClass::chordal) return cert.peo && check_peo(g, *cert.peo);
    return true; // no positive evidence defined for the other classes
  }
  switch (cert.cls) {
    case GraphClass::triangle_free:
      return cert.kind == WitnessKind::triangle && check_triangle(g, cert.witness);
    case GraphClass::cluster:
      return cert.kind == WitnessKind::p3 && check_path(g, cert.witness, 3);
    case GraphClass::claw_free:
      return cert.kind == WitnessKind::claw && check_claw(g, cert.witness);
    case GraphClass::cograph:
      return cert.kind == WitnessKind::p4 && check_path(g, cert.witness, 4);
    case GraphClass::bipartite:
      return cert.kind == WitnessKind::odd_cycle && check_closed_walk_odd(g, cert.witness);
    case GraphClass::chordal:
      return cert.kind == WitnessKind::chordless_cycle && check_chordless_cycle(g, cert.witness, 4, false, false);
    case GraphClass::perfect:
      if (cert.kind == WitnessKind::odd_hole) return check_chordless_cycle(g, cert.witness, 5, true, false);
      if (cert.kind == WitnessKind::odd_antihole) return check_chordless_cycle(g, cert.witness, 5, true, true);
      return false;
  }
  return false;
}

} // namespace igg
