#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "igg/errors.hpp"
#include "igg/graph_build.hpp"
#include "igg/graph_classes.hpp"

#include <numeric>
#include <random>

using namespace igg;

namespace {

SimpleGraph random_graph(int n, std::mt19937_64& rng, double p = 0.5) {
  SimpleGraph g(n);
  std::bernoulli_distribution coin(p);
  for (int i = 0; i < n; ++i) {
    g.labels[i] = std::to_string(i);
    for (int j = i + 1; j < n; ++j)
      if (coin(rng)) g.add_edge(i, j);
  }
  return g;
}

SimpleGraph cycle_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i) g.add_edge(i, (i + 1) % n);
  return g;
}

SimpleGraph complete_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
  return g;
}

SimpleGraph path_graph(int n) {
  SimpleGraph g(n);
  for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
  return g;
}

// --- subset-level oracles, deliberately naive -----------------------------

bool oracle_triangle_free(const SimpleGraph& g) {
  for (int a = 0; a < g.n; ++a)
    for (int b = a + 1; b < g.n; ++b)
      for (int c = b + 1; c < g.n; ++c)
        if (g.edge(a, b) && g.edge(b, c) && g.edge(a, c)) return false;
  return true;
}

bool oracle_cluster(const SimpleGraph& g) {
  for (int a = 0; a < g.n; ++a)
    for (int b = 0; b < g.n; ++b)
      for (int c = b + 1; c < g.n; ++c) {
        if (a == b || a == c) continue;
        if (g.edge(a, b) && g.edge(a, c) && !g.edge(b, c)) return false;
      }
  return true;
}

bool oracle_claw_free(const SimpleGraph& g) {
  for (int v = 0; v < g.n; ++v)
    for (int a = 0; a < g.n; ++a)
      for (int b = a + 1; b < g.n; ++b)
        for (int c = b + 1; c < g.n; ++c) {
          if (a == v || b == v || c == v) continue;
          if (g.edge(v, a) && g.edge(v, b) && g.edge(v, c) && !g.edge(a, b) && !g.edge(a, c) && !g.edge(b, c))
            return false;
        }
  return true;
}

bool oracle_cograph(const SimpleGraph& g) {
  std::vector<int> p(4);
  for (p[0] = 0; p[0] < g.n; ++p[0])
    for (p[1] = 0; p[1] < g.n; ++p[1])
      for (p[2] = 0; p[2] < g.n; ++p[2])
        for (p[3] = 0; p[3] < g.n; ++p[3]) {
          if (p[0] == p[1] || p[0] == p[2] || p[0] == p[3] || p[1] == p[2] || p[1] == p[3] || p[2] == p[3])
            continue;
          if (g.edge(p[0], p[1]) && g.edge(p[1], p[2]) && g.edge(p[2], p[3]) && !g.edge(p[0], p[2]) &&
              !g.edge(p[0], p[3]) && !g.edge(p[1], p[3]))
            return false;
        }
  return true;
}

bool oracle_bipartite(const SimpleGraph& g) {
  REQUIRE(g.n <= 20);
  for (uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    bool proper = true;
    for (int i = 0; i < g.n && proper; ++i)
      for (int j = i + 1; j < g.n && proper; ++j)
        if (g.edge(i, j) && ((mask >> i & 1) == (mask >> j & 1))) proper = false;
    if (proper) return true;
  }
  return g.n == 0;
}

bool subset_induces_cycle(const SimpleGraph& g, uint32_t mask) {
  std::vector<int> vs;
  for (int i = 0; i < g.n; ++i)
    if (mask >> i & 1) vs.push_back(i);
  for (int v : vs) {
    int deg = 0;
    for (int u : vs)
      if (u != v && g.edge(u, v)) ++deg;
    if (deg != 2) return false;
  }
  // connectivity within the subset
  std::vector<int> seen{vs[0]};
  std::vector<bool> mark(g.n, false);
  mark[vs[0]] = true;
  for (size_t h = 0; h < seen.size(); ++h)
    for (int u : vs)
      if (!mark[u] && g.edge(seen[h], u)) {
        mark[u] = true;
        seen.push_back(u);
      }
  return seen.size() == vs.size();
}

bool oracle_chordal(const SimpleGraph& g) {
  REQUIRE(g.n <= 20);
  for (uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    if (std::popcount(mask) < 4) continue;
    if (subset_induces_cycle(g, mask)) return false;
  }
  return true;
}

bool oracle_has_odd_hole(const SimpleGraph& g) {
  REQUIRE(g.n <= 20);
  for (uint32_t mask = 0; mask < (1u << g.n); ++mask) {
    int k = std::popcount(mask);
    if (k < 5 || k % 2 == 0) continue;
    if (subset_induces_cycle(g, mask)) return true;
  }
  return false;
}

void check_certificate_soundness(const SimpleGraph& g, const ClassCertificate& cert) {
  if (!cert.verdict) {
    CHECK(verify_certificate(g, cert));
  } else if (cert.cls == GraphClass::bipartite || cert.cls == GraphClass::chordal) {
    CHECK(verify_certificate(g, cert));
  }
}

} // namespace

TEST_CASE("recognizers match the subset oracles on random graphs") {
  std::mt19937_64 rng(0xC0FFEE);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + (int)(rng() % 10);
    double dens = 0.2 + 0.6 * (trial % 4) / 3.0;
    SimpleGraph g = random_graph(n, rng, dens);
    CAPTURE(trial);
    CAPTURE(n);

    ClassCertificate tf = is_triangle_free(g);
    CHECK(tf.verdict == oracle_triangle_free(g));
    check_certificate_soundness(g, tf);

    ClassCertificate cl = is_cluster(g);
    CHECK(cl.verdict == oracle_cluster(g));
    check_certificate_soundness(g, cl);

    ClassCertificate cf = is_claw_free(g);
    CHECK(cf.verdict == oracle_claw_free(g));
    check_certificate_soundness(g, cf);

    ClassCertificate co = is_cograph(g);
    CHECK(co.verdict == oracle_cograph(g));
    check_certificate_soundness(g, co);

    ClassCertificate bp = is_bipartite(g);
    CHECK(bp.verdict == oracle_bipartite(g));
    check_certificate_soundness(g, bp);

    ClassCertificate ch = is_chordal(g);
    CHECK(ch.verdict == oracle_chordal(g));
    check_certificate_soundness(g, ch);

    auto hole = find_odd_hole(g);
    CHECK(hole.has_value() == oracle_has_odd_hole(g));
    if (hole) {
      ClassCertificate hc;
      hc.cls = GraphClass::perfect;
      hc.verdict = false;
      hc.kind = WitnessKind::odd_hole;
      hc.witness = *hole;
      CHECK(verify_certificate(g, hc));
    }
  }
}

TEST_CASE("perfection agrees with the definition-level oracle on 500 random graphs") {
  std::mt19937_64 rng(0x5EED);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + (int)(rng() % 9);
    SimpleGraph g = random_graph(n, rng, 0.3 + 0.5 * (trial % 3) / 2.0);
    CAPTURE(trial);
    ClassCertificate p = is_perfect(g);
    CHECK(p.verdict == brute_force_perfect(g));
    check_certificate_soundness(g, p);
  }
}

TEST_CASE("named graphs") {
  SimpleGraph c5 = cycle_graph(5);
  CHECK(is_triangle_free(c5).verdict);
  CHECK_FALSE(is_perfect(c5).verdict);
  CHECK_FALSE(brute_force_perfect(c5));
  auto hole = find_odd_hole(c5);
  REQUIRE(hole.has_value());
  CHECK(hole->size() == 5);

  SimpleGraph c7 = cycle_graph(7);
  CHECK_FALSE(is_perfect(c7).verdict);
  SimpleGraph anti7 = complement(c7);
  ClassCertificate p7 = is_perfect(anti7);
  CHECK_FALSE(p7.verdict);
  CHECK(p7.kind == WitnessKind::odd_antihole);
  CHECK(verify_certificate(anti7, p7));

  SimpleGraph k4 = complete_graph(4);
  CHECK_FALSE(is_triangle_free(k4).verdict);
  CHECK(is_claw_free(k4).verdict);
  CHECK(is_cluster(k4).verdict);
  CHECK(is_chordal(k4).verdict);
  CHECK(is_perfect(k4).verdict);
  CHECK(brute_force_perfect(k4));

  SimpleGraph p3 = path_graph(3);
  CHECK_FALSE(is_cluster(p3).verdict);
  CHECK(is_cograph(p3).verdict);

  SimpleGraph p4 = path_graph(4);
  ClassCertificate co = is_cograph(p4);
  CHECK_FALSE(co.verdict);
  CHECK(co.witness.size() == 4);
  CHECK(verify_certificate(p4, co));

  SimpleGraph claw(4);
  claw.add_edge(0, 1);
  claw.add_edge(0, 2);
  claw.add_edge(0, 3);
  CHECK_FALSE(is_claw_free(claw).verdict);
  CHECK(is_bipartite(claw).verdict);
  CHECK(is_chordal(claw).verdict);

  SimpleGraph c4 = cycle_graph(4);
  ClassCertificate ch = is_chordal(c4);
  CHECK_FALSE(ch.verdict);
  CHECK(ch.witness.size() == 4);
  CHECK(verify_certificate(c4, ch));
  CHECK(is_perfect(c4).verdict);

  // trees are bipartite, triangles are not
  CHECK(is_bipartite(path_graph(7)).verdict);
  ClassCertificate tri = is_bipartite(cycle_graph(3));
  CHECK_FALSE(tri.verdict);
  CHECK(verify_certificate(cycle_graph(3), tri));

  // bipartite graphs carry no odd cycle at all
  CHECK_FALSE(find_odd_hole(cycle_graph(6)).has_value());
  CHECK_FALSE(find_odd_hole(path_graph(9)).has_value());
}

TEST_CASE("subgroup graphs hit the documented witnesses") {
  auto graph_of = [](const char* s) {
    return intersection_subgroup_graph(
        enumerate_subgroups(std::make_shared<GroupTable>(build_group(parse_spec(s)))));
  };

  SimpleGraph d4 = graph_of("D4");
  ClassCertificate tri = is_triangle_free(d4);
  CHECK_FALSE(tri.verdict);
  CHECK(verify_certificate(d4, tri));
  // the triangle is three order-2 subgroups meeting pairwise trivially
  for (int v : tri.witness) CHECK(d4.vorder[v] == 2);
  ClassCertificate d4co = is_cograph(d4);
  CHECK_FALSE(d4co.verdict);
  CHECK(verify_certificate(d4, d4co));

  SimpleGraph s4 = graph_of("S4");
  ClassCertificate s4co = is_cograph(s4);
  CHECK_FALSE(s4co.verdict);
  CHECK(verify_certificate(s4, s4co));
  ClassCertificate s4ch = is_chordal(s4);
  CHECK_FALSE(s4ch.verdict);
  CHECK(verify_certificate(s4, s4ch));

  SimpleGraph a4 = graph_of("A4");
  CHECK(is_cograph(a4).verdict);
  CHECK(is_chordal(a4).verdict);
  CHECK(verify_certificate(a4, is_chordal(a4)));

  SimpleGraph q8c3 = graph_of("Q8xC3");
  ClassCertificate bp = is_bipartite(q8c3);
  CHECK(bp.verdict);
  REQUIRE(bp.coloring.has_value());
  CHECK(verify_certificate(q8c3, bp));

  SimpleGraph c210 = cyclic_intersection_graph(210);
  CHECK(is_perfect(c210).verdict);
  SimpleGraph c2310 = cyclic_intersection_graph(2310);
  ClassCertificate pf = is_perfect(c2310);
  CHECK_FALSE(pf.verdict);
  CHECK(pf.kind == WitnessKind::odd_hole);
  CHECK(pf.witness.size() == 5);
  CHECK(verify_certificate(c2310, pf));
}

TEST_CASE("verdicts are invariant under relabeling") {
  std::mt19937_64 rng(99);
  std::vector<SimpleGraph> corpus{cycle_graph(5), cycle_graph(6), path_graph(4), complete_graph(5),
                                  z_fragment_graph({10})};
  for (int t = 0; t < 6; ++t) corpus.push_back(random_graph(8, rng));
  for (auto& g : corpus) {
    bool tf = is_triangle_free(g).verdict, cl = is_cluster(g).verdict, cf = is_claw_free(g).verdict,
         co = is_cograph(g).verdict, bp = is_bipartite(g).verdict, ch = is_chordal(g).verdict,
         pf = is_perfect(g).verdict;
    std::vector<int> perm(g.n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int round = 0; round < 10; ++round) {
      std::shuffle(perm.begin(), perm.end(), rng);
      SimpleGraph h = relabel(g, perm);
      CHECK(is_triangle_free(h).verdict == tf);
      CHECK(is_cluster(h).verdict == cl);
      CHECK(is_claw_free(h).verdict == cf);
      CHECK(is_cograph(h).verdict == co);
      CHECK(is_bipartite(h).verdict == bp);
      CHECK(is_chordal(h).verdict == ch);
      CHECK(is_perfect(h).verdict == pf);
    }
  }
}

TEST_CASE("class implications and complement closure") {
  std::mt19937_64 rng(123);
  std::vector<SimpleGraph> corpus{cycle_graph(4),    cycle_graph(5),  cycle_graph(7),    path_graph(6),
                                  complete_graph(6), path_graph(2),   z_fragment_graph({12}),
                                  cyclic_intersection_graph(210),     cyclic_intersection_graph(36)};
  for (int t = 0; t < 40; ++t) corpus.push_back(random_graph(3 + (int)(rng() % 8), rng));
  for (auto& g : corpus) {
    bool cluster = is_cluster(g).verdict;
    bool cograph = is_cograph(g).verdict;
    bool chordal = is_chordal(g).verdict;
    bool bipartite = is_bipartite(g).verdict;
    bool tf = is_triangle_free(g).verdict;
    bool perfect = is_perfect(g).verdict;
    if (cluster) CHECK(cograph);
    if (cograph) CHECK(perfect);
    if (chordal) CHECK(perfect);
    if (bipartite) CHECK(perfect);
    if (bipartite) CHECK(tf);
    CHECK(is_cograph(complement(g)).verdict == cograph);
  }
}

TEST_CASE("verify_certificate rejects malformed certificates") {
  SimpleGraph k4 = complete_graph(4);
  ClassCertificate bad;
  bad.cls = GraphClass::triangle_free;
  bad.verdict = false;
  bad.kind = WitnessKind::triangle;
  bad.witness = {0, 1, 1};
  CHECK_FALSE(verify_certificate(k4, bad)); // repeated vertex
  bad.witness = {0, 1, 99};
  CHECK_FALSE(verify_certificate(k4, bad)); // out of range

  SimpleGraph p4g = path_graph(4);
  ClassCertificate tri;
  tri.cls = GraphClass::triangle_free;
  tri.verdict = false;
  tri.kind = WitnessKind::triangle;
  tri.witness = {0, 1, 2};
  CHECK_FALSE(verify_certificate(p4g, tri)); // missing edge

  ClassCertificate notp4;
  notp4.cls = GraphClass::cograph;
  notp4.verdict = false;
  notp4.kind = WitnessKind::p4;
  notp4.witness = {0, 1, 2, 3};
  CHECK(verify_certificate(p4g, notp4));
  notp4.witness = {1, 0, 2, 3};
  CHECK_FALSE(verify_certificate(p4g, notp4)); // wrong path order

  ClassCertificate color;
  color.cls = GraphClass::bipartite;
  color.verdict = true;
  color.coloring = std::vector<int>{0, 0, 1, 0};
  CHECK_FALSE(verify_certificate(p4g, *&color)); // edge 0-1 monochromatic
  color.coloring = std::vector<int>{0, 1, 0, 1};
  CHECK(verify_certificate(p4g, color));

  ClassCertificate peo;
  peo.cls = GraphClass::chordal;
  peo.verdict = true;
  peo.peo = std::vector<int>{0, 1, 2, 3};
  CHECK(verify_certificate(complete_graph(4), peo));
  SimpleGraph c4 = cycle_graph(4);
  CHECK_FALSE(verify_certificate(c4, peo)); // no order works on a 4-cycle

  ClassCertificate wrongkind;
  wrongkind.cls = GraphClass::cluster;
  wrongkind.verdict = false;
  wrongkind.kind = WitnessKind::triangle;
  wrongkind.witness = {0, 1, 2};
  CHECK_FALSE(verify_certificate(complete_graph(3), wrongkind));
}

TEST_CASE("vertex caps raise explicit errors") {
  SimpleGraph big(81);
  CHECK_THROWS_AS(is_perfect(big, 80), Error);
  CHECK_THROWS_AS(find_odd_hole(big, 5, 80), Error);
  CHECK(is_perfect(big, 81).verdict); // edgeless graph is perfect
  SimpleGraph g13 = complete_graph(13);
  CHECK_THROWS_AS(brute_force_perfect(g13), Error);
  try {
    is_perfect(big, 80);
    FAIL("expected cap error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::vertex_cap_exceeded);
  }
}

TEST_CASE("chordal evidence is a perfect elimination ordering") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 40) {
    SimpleGraph g = random_graph(9, rng, 0.7);
    ClassCertificate c = is_chordal(g);
    if (!c.verdict) continue;
    REQUIRE(c.peo.has_value());
    CHECK(verify_certificate(g, c));
    ++checked;
  }
}
