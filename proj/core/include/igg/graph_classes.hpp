#pragma once

#include "igg/graph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace igg {

enum class GraphClass { triangle_free, cluster, claw_free, cograph, bipartite, chordal, perfect };

const char* class_name(GraphClass c);
std::optional<GraphClass> class_from_name(const std::string& name);

enum class WitnessKind {
  none,
  triangle,        // 3 pairwise adjacent vertices
  p3,              // induced path a-b-c
  claw,            // [center, leaf, leaf, leaf]
  p4,              // induced path a-b-c-d
  odd_cycle,       // odd closed walk with distinct vertices
  chordless_cycle, // induced cycle, length >= 4
  odd_hole,        // induced odd cycle, length >= 5
  odd_antihole,    // odd hole of the complement, same vertex list
};

struct ClassCertificate {
  GraphClass cls = GraphClass::triangle_free;
  bool verdict = true;
  WitnessKind kind = WitnessKind::none;
  std::vector<int> witness;
  std::optional<std::vector<int>> coloring; // bipartite positive evidence
  std::optional<std::vector<int>> peo;      // chordal positive evidence

  std::string to_json() const;
};

inline constexpr int kDefaultPerfectCap = 80;
inline constexpr int kBruteForcePerfectCap = 12;

ClassCertificate is_triangle_free(const SimpleGraph& g);
ClassCertificate is_cluster(const SimpleGraph& g);
ClassCertificate is_claw_free(const SimpleGraph& g);
ClassCertificate is_cograph(const SimpleGraph& g);
ClassCertificate is_bipartite(const SimpleGraph& g);
ClassCertificate is_chordal(const SimpleGraph& g);

// Induced odd cycle of length >= min_len, if any. Depth-first extension of
// induced paths with canonical-start pruning. Exact but worst-case
// exponential, hence the vertex cap.
std::optional<std::vector<int>> find_odd_hole(const SimpleGraph& g, int min_len = 5,
                                              int vertex_cap = kDefaultPerfectCap);

ClassCertificate is_perfect(const SimpleGraph& g, int vertex_cap = kDefaultPerfectCap);

// Definition-level oracle: clique number equals chromatic number on every
// induced subgraph. Exhaustive, capped at 12 vertices.
bool brute_force_perfect(const SimpleGraph& g, int vertex_cap = kBruteForcePerfectCap);

ClassCertificate run_recognizer(GraphClass c, const SimpleGraph& g, int perfect_cap = kDefaultPerfectCap);

// Re-checks a certificate against the graph by definition alone; shares no
// code with the recognizers.
bool verify_certificate(const SimpleGraph& g, const ClassCertificate& cert);

} // namespace igg
