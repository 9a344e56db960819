#include <benchmark/benchmark.h>

#include "igg/arith.hpp"
#include "igg/graph_build.hpp"
#include "igg/graph_classes.hpp"
#include "igg/theorems.hpp"

using namespace igg;

namespace {

SubgroupLattice lattice_of(const char* spec, int cap = kDefaultOrderCap) {
  EnumLimits lim;
  lim.order_cap = cap;
  return enumerate_subgroups(std::make_shared<GroupTable>(build_group(parse_spec(spec), cap)), lim);
}

void bm_build_group(benchmark::State& state, const char* spec) {
  GroupSpec s = parse_spec(spec);
  for (auto _ : state) {
    GroupTable g = build_group(s);
    benchmark::DoNotOptimize(g.mul.data());
  }
}

void bm_enumerate(benchmark::State& state, const char* spec) {
  auto g = std::make_shared<GroupTable>(build_group(parse_spec(spec)));
  for (auto _ : state) {
    SubgroupLattice l = enumerate_subgroups(g, {});
    benchmark::DoNotOptimize(l.size());
  }
}

void bm_graph(benchmark::State& state, const char* spec) {
  SubgroupLattice l = lattice_of(spec);
  for (auto _ : state) {
    SimpleGraph gr = intersection_subgroup_graph(l);
    benchmark::DoNotOptimize(gr.n);
  }
}

} // namespace

BENCHMARK_CAPTURE(bm_build_group, s5, "S5");
BENCHMARK_CAPTURE(bm_build_group, heis5, "Heis5");
BENCHMARK_CAPTURE(bm_enumerate, s5, "S5");
BENCHMARK_CAPTURE(bm_enumerate, d60, "D60");
BENCHMARK_CAPTURE(bm_enumerate, e2_6, "E2^6");
BENCHMARK_CAPTURE(bm_graph, s5, "S5");
BENCHMARK_CAPTURE(bm_graph, e2_5, "E2^5");

static void bm_cyclic_fast_path(benchmark::State& state) {
  for (auto _ : state) {
    SimpleGraph g = cyclic_intersection_graph(720720); // 2^4*3^2*5*7*11*13
    benchmark::DoNotOptimize(g.n);
  }
}
BENCHMARK(bm_cyclic_fast_path);

static void bm_perfect_c210(benchmark::State& state) {
  SimpleGraph g = cyclic_intersection_graph(210);
  for (auto _ : state) {
    ClassCertificate c = is_perfect(g);
    benchmark::DoNotOptimize(c.verdict);
  }
}
BENCHMARK(bm_perfect_c210);

static void bm_cograph_s5(benchmark::State& state) {
  SimpleGraph g = intersection_subgroup_graph(lattice_of("S5"));
  for (auto _ : state) {
    ClassCertificate c = is_cograph(g);
    benchmark::DoNotOptimize(c.verdict);
  }
}
BENCHMARK(bm_cograph_s5);

static void bm_chordal_lexbfs(benchmark::State& state) {
  SimpleGraph g = intersection_subgroup_graph(lattice_of("E2^5"));
  for (auto _ : state) {
    ClassCertificate c = is_chordal(g);
    benchmark::DoNotOptimize(c.verdict);
  }
}
BENCHMARK(bm_chordal_lexbfs);

static void bm_factorize(benchmark::State& state) {
  uint64_t n = 999'962'000'357ull; // product of two six-digit primes
  for (auto _ : state) {
    Factorization f = factorize(n);
    benchmark::DoNotOptimize(f.factors.data());
  }
}
BENCHMARK(bm_factorize);

static void bm_verify_catalog_24(benchmark::State& state) {
  auto catalog = build_catalog(24);
  for (auto _ : state) {
    VerificationReport rep = run_verification(catalog, {});
    benchmark::DoNotOptimize(rep.rows.size());
  }
}
BENCHMARK(bm_verify_catalog_24);

BENCHMARK_MAIN();
