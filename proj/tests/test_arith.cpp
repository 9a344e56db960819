#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "igg/arith.hpp"
#include "igg/errors.hpp"

#include <random>

using namespace igg;

namespace {

// plain trial division, independent of the library path
std::vector<std::pair<uint64_t, int>> naive_factor(uint64_t n) {
  std::vector<std::pair<uint64_t, int>> out;
  for (uint64_t p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
    if (n % p) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    out.emplace_back(p, e);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

uint64_t reconstruct(const Factorization& f) {
  uint64_t r = 1;
  for (auto& [p, e] : f.factors)
    for (int i = 0; i < e; ++i) r *= p;
  return r;
}

} // namespace

TEST_CASE("factorize reconstructs every n up to 1e5") {
  for (uint64_t n = 2; n <= 100000; ++n) {
    Factorization f = factorize(n);
    REQUIRE(reconstruct(f) == n);
    for (size_t i = 1; i < f.factors.size(); ++i) REQUIRE(f.factors[i - 1].first < f.factors[i].first);
  }
}

TEST_CASE("factorize agrees with naive trial division on random inputs up to 1e12") {
  std::mt19937_64 rng(20240817);
  std::uniform_int_distribution<uint64_t> dist(2, 1'000'000'000'000ull);
  for (int i = 0; i < 10000; ++i) {
    uint64_t n = dist(rng);
    CAPTURE(n);
    REQUIRE(factorize(n).factors == naive_factor(n));
  }
}

TEST_CASE("factorize named values") {
  CHECK(factorize(2310).to_string() == "2*3*5*7*11");
  CHECK(factorize(2047).to_string() == "23*89");
  CHECK(factorize(8191).to_string() == "8191");
  CHECK(factorize(1985).to_string() == "5*397");
  CHECK(is_prime(2113));
  CHECK_THROWS_AS(factorize(1), Error);
  CHECK_THROWS_AS(factorize(2'000'000'000'000ull), Error);
}

TEST_CASE("prime power and two-prime classification") {
  auto pp = is_prime_power(25);
  REQUIRE(pp);
  CHECK(pp->first == 5);
  CHECK(pp->second == 2);
  CHECK(is_prime_power(7));
  CHECK_FALSE(is_prime_power(145));
  auto tp = is_two_prime_form(145);
  REQUIRE(tp);
  CHECK(tp->first == std::make_pair(uint64_t(5), 1));
  CHECK(tp->second == std::make_pair(uint64_t(29), 1));
  CHECK_FALSE(is_two_prime_form(30));
  CHECK_FALSE(is_two_prime_form(25));
}

TEST_CASE("divisors") {
  CHECK(divisors(12) == std::vector<uint64_t>{1, 2, 3, 4, 6, 12});
  CHECK(divisors(7) == std::vector<uint64_t>{1, 7});
  CHECK(divisors(2310).size() == 32);
}

TEST_CASE("suzuki condition values") {
  SuzukiVerdict v8 = suzuki_cograph_condition(8);
  CHECK(v8.q_minus_1.value == 7);
  CHECK(v8.q_minus_root.value == 5);
  CHECK(v8.q_plus_root.value == 13);
  CHECK(v8.condition);
  CHECK(v8.q_eq_8_flag);

  SuzukiVerdict v32 = suzuki_cograph_condition(32);
  CHECK(v32.q_minus_1.value == 31);
  CHECK(v32.q_minus_root.value == 25);
  CHECK(v32.q_plus_root.value == 41);
  CHECK(v32.q_minus_root.fact.to_string() == "5^2");
  CHECK(v32.condition);
  CHECK_FALSE(v32.q_eq_8_flag);

  SuzukiVerdict v128 = suzuki_cograph_condition(128);
  CHECK(v128.q_minus_1.value == 127);
  CHECK(v128.q_minus_root.value == 113);
  CHECK(v128.q_plus_root.value == 145);
  CHECK(v128.condition);

  SuzukiVerdict v2048 = suzuki_cograph_condition(2048);
  CHECK(v2048.q_minus_1.fact.to_string() == "23*89");
  CHECK(v2048.q_minus_root.fact.to_string() == "5*397");
  CHECK(v2048.q_plus_root.value == 2113);
  CHECK(v2048.q_plus_root.prime_power);
  CHECK(v2048.condition);

  CHECK_THROWS_AS(suzuki_cograph_condition(16), Error);
  CHECK_THROWS_AS(suzuki_cograph_condition(9), Error);
  CHECK_THROWS_AS(suzuki_cograph_condition(7), Error);
  CHECK_THROWS_AS(suzuki_cograph_condition(2), Error);
}

TEST_CASE("suzuki values are pairwise coprime and odd") {
  for (uint64_t q : {8ull, 32ull, 128ull, 512ull, 2048ull}) {
    SuzukiVerdict v = suzuki_cograph_condition(q);
    uint64_t a = v.q_minus_1.value, b = v.q_minus_root.value, c = v.q_plus_root.value;
    CHECK(a % 2 == 1);
    CHECK(b % 2 == 1);
    CHECK(c % 2 == 1);
    CHECK(std::gcd(a, b) == 1);
    CHECK(std::gcd(a, c) == 1);
    CHECK(std::gcd(b, c) == 1);
  }
}

TEST_CASE("catalan solutions") {
  auto sols = catalan_solutions(1'000'000);
  REQUIRE(sols.size() == 1);
  CHECK(sols[0].x == 3);
  CHECK(sols[0].a == 2);
  CHECK(sols[0].y == 2);
  CHECK(sols[0].b == 3);
  CHECK(catalan_solutions(5).empty());
  CHECK(catalan_solutions(9).size() == 1);
  CHECK(catalan_solutions(8).empty());
  CHECK_THROWS_AS(catalan_solutions(2'000'000), Error);
}
