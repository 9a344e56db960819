#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace igg {

struct Factorization {
  uint64_t n = 1;
  std::vector<std::pair<uint64_t, int>> factors; // (prime, exponent), primes ascending

  int num_primes() const { return (int)factors.size(); }
  uint64_t radical() const {
    uint64_t r = 1;
    for (auto& [p, e] : factors) r *= p;
    return r;
  }
  int valuation(uint64_t p) const {
    for (auto& [q, e] : factors)
      if (q == p) return e;
    return 0;
  }
  bool squarefree() const {
    for (auto& [p, e] : factors)
      if (e > 1) return false;
    return true;
  }
  std::string to_string() const; // "2^3*5*7"
};

bool is_prime(uint64_t n);

// Complete factorization, 2 <= n <= 10^12. Trial division up to 10^6, then a
// deterministic Brent-rho fallback for the remaining <= 2-prime cofactor.
Factorization factorize(uint64_t n);

// All divisors of n, ascending.
std::vector<uint64_t> divisors(uint64_t n);

std::optional<std::pair<uint64_t, int>> is_prime_power(uint64_t n);
std::optional<std::pair<std::pair<uint64_t, int>, std::pair<uint64_t, int>>> is_two_prime_form(uint64_t n);

struct SuzukiValue {
  uint64_t value = 0;
  Factorization fact;
  bool prime_power = false;
  bool two_prime_form = false;
  bool ok() const { return prime_power || two_prime_form; }
};

// Arithmetic cograph condition for the simple groups of type 2B2(q),
// q = 2^(2e+1) >= 8: q-1 and q +- sqrt(2q) + 1 must each be a prime power or
// a product of exactly two prime powers. sqrt(2q) = 2^(e+1) is computed
// exactly from the exponent. q = 8 is flagged separately: the order-form
// condition holds there but the Sylow 2-subgroup argument fails it.
struct SuzukiVerdict {
  uint64_t q = 0;
  int e = 0;
  SuzukiValue q_minus_1, q_minus_root, q_plus_root;
  bool condition = false;
  bool q_eq_8_flag = false;
};

SuzukiVerdict suzuki_cograph_condition(uint64_t q);

struct CatalanSolution {
  uint64_t x;
  int a;
  uint64_t y;
  int b; // x^a - y^b = 1, a,b > 1, minimal bases
};

// All consecutive perfect-power pairs up to `limit` (limit <= 10^6).
std::vector<CatalanSolution> catalan_solutions(uint64_t limit);

} // namespace igg
