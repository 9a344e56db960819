#pragma once

#include "igg/bitset.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace igg {

// Undirected simple graph with full boolean adjacency rows. Recognizers do
// heavy induced-subgraph probing, so rows beat sparse lists here.
struct SimpleGraph {
  int n = 0;
  int words = 0;
  std::vector<uint64_t> adj; // n rows of `words` words
  std::vector<std::string> labels;
  std::vector<long long> vorder; // per-vertex payload: subgroup order / divisor / modulus

  SimpleGraph() = default;
  explicit SimpleGraph(int n_)
      : n(n_), words((n_ + 63) / 64), adj((size_t)n_ * ((n_ + 63) / 64), 0), labels(n_), vorder(n_, 0) {}

  bool edge(int i, int j) const { return (adj[(size_t)i * words + (j >> 6)] >> (j & 63)) & 1; }
  void add_edge(int i, int j) {
    adj[(size_t)i * words + (j >> 6)] |= (uint64_t)1 << (j & 63);
    adj[(size_t)j * words + (i >> 6)] |= (uint64_t)1 << (i & 63);
  }
  const uint64_t* row(int i) const { return &adj[(size_t)i * words]; }

  int degree(int i) const;
  long long edge_count() const;
  std::vector<int> neighbors(int i) const;

  bool operator==(const SimpleGraph& o) const { return n == o.n && adj == o.adj; }
};

SimpleGraph complement(const SimpleGraph& g);
SimpleGraph induced_subgraph(const SimpleGraph& g, const std::vector<int>& vs); // throws index_out_of_range
SimpleGraph relabel(const SimpleGraph& g, const std::vector<int>& perm);        // vertex i -> position perm[i]

std::string to_dot(const SimpleGraph& g);
std::string graph_to_json(const SimpleGraph& g);

} // namespace igg
