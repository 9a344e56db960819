#include "igg/graph.hpp"

#include "igg/errors.hpp"

#include <bit>
#include <sstream>

namespace igg {

int SimpleGraph::degree(int i) const {
  int d = 0;
  for (int w = 0; w < words; ++w) d += std::popcount(adj[(size_t)i * words + w]);
  return d;
}

long long SimpleGraph::edge_count() const {
  long long total = 0;
  for (int i = 0; i < n; ++i) total += degree(i);
  return total / 2;
}

std::vector<int> SimpleGraph::neighbors(int i) const {
  std::vector<int> out;
  for (int w = 0; w < words; ++w) {
    uint64_t x = adj[(size_t)i * words + w];
    while (x) {
      out.push_back(w * 64 + std::countr_zero(x));
      x &= x - 1;
    }
  }
  return out;
}

SimpleGraph complement(const SimpleGraph& g) {
  SimpleGraph c(g.n);
  c.labels = g.labels;
  c.vorder = g.vorder;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (!g.edge(i, j)) c.add_edge(i, j);
  return c;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& vs) {
  std::vector<bool> used(g.n, false);
  for (int v : vs) {
    if (v < 0 || v >= g.n) fail(ErrorCode::index_out_of_range, "vertex " + std::to_string(v));
    if (used[v]) fail(ErrorCode::index_out_of_range, "duplicate vertex " + std::to_string(v));
    used[v] = true;
  }
  SimpleGraph h((int)vs.size());
  for (size_t i = 0; i < vs.size(); ++i) {
    h.labels[i] = g.labels[vs[i]];
    h.vorder[i] = g.vorder[vs[i]];
    for (size_t j = i + 1; j < vs.size(); ++j)
      if (g.edge(vs[i], vs[j])) h.add_edge((int)i, (int)j);
  }
  return h;
}

SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm) {
  SimpleGraph h(g.n);
  for (int i = 0; i < g.n; ++i) {
    h.labels[perm[i]] = g.labels[i];
    h.vorder[perm[i]] = g.vorder[i];
    for (int j = i + 1; j < g.n; ++j)
      if (g.edge(i, j)) h.add_edge(perm[i], perm[j]);
  }
  return h;
}

std::string to_dot(const SimpleGraph& g) {
  std::ostringstream os;
  os << "graph iggraf {\n";
  std::vector<bool> isolated(g.n, true);
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.edge(i, j)) {
        os << "  \"" << g.labels[i] << "\" -- \"" << g.labels[j] << "\";\n";
        isolated[i] = isolated[j] = false;
      }
  for (int i = 0; i < g.n; ++i)
    if (isolated[i]) os << "  \"" << g.labels[i] << "\";\n";
  os << "}\n";
  return os.str();
}

std::string graph_to_json(const SimpleGraph& g) {
  std::ostringstream os;
  os << "{\"vertices\":[";
  for (int i = 0; i < g.n; ++i) {
    if (i) os << ",";
    os << "{\"id\":" << i << ",\"label\":\"" << g.labels[i] << "\",\"order\":" << g.vorder[i] << "}";
  }
  os << "],\"edges\":[";
  bool first = true;
  for (int i = 0; i < g.n; ++i)
    for (int j = i + 1; j < g.n; ++j)
      if (g.edge(i, j)) {
        if (!first) os << ",";
        first = false;
        os << "[" << i << "," << j << "]";
      }
  os << "]}";
  return os.str();
}

} // namespace igg
