#include "igg/arith.hpp"

#include "igg/errors.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace igg {

namespace {

constexpr uint64_t kMaxFactorInput = 1'000'000'000'000ull;
constexpr uint64_t kTrialBound = 1'000'000;

uint64_t mulmod(uint64_t a, uint64_t b, uint64_t m) {
  return (uint64_t)((__uint128_t)a * b % m);
}

uint64_t powmod(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod(r, a, m);
    a = mulmod(a, a, m);
    e >>= 1;
  }
  return r;
}

// Brent's cycle variant of Pollard rho with a fixed increment sequence, so
// the factor found for a given n never varies between runs.
uint64_t brent_rho(uint64_t n) {
  if (n % 2 == 0) return 2;
  for (uint64_t c = 1;; ++c) {
    uint64_t x = 2, ys = 2, y = 2, d = 1, q = 1;
    uint64_t r = 1;
    const uint64_t m = 128;
    while (d == 1) {
      x = y;
      for (uint64_t i = 0; i < r; ++i) y = (mulmod(y, y, n) + c) % n;
      for (uint64_t k = 0; k < r && d == 1; k += m) {
        ys = y;
        uint64_t lim = std::min(m, r - k);
        for (uint64_t i = 0; i < lim; ++i) {
          y = (mulmod(y, y, n) + c) % n;
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (d == n) {
      d = 1;
      do {
        ys = (mulmod(ys, ys, n) + c) % n;
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (d == 1);
    }
    if (d != n) return d;
  }
}

} // namespace

bool is_prime(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull}) {
    if (n % p == 0) return n == p;
  }
  // deterministic Miller-Rabin for n < 3.3e14 with these bases
  uint64_t d = n - 1;
  int s = 0;
  while (d % 2 == 0) d /= 2, ++s;
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull}) {
    uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

Factorization factorize(uint64_t n) {
  if (n < 2 || n > kMaxFactorInput)
    fail(ErrorCode::out_of_range, "factorize: n must be in [2, 10^12], got " + std::to_string(n));
  Factorization f;
  f.n = n;
  std::map<uint64_t, int> acc;
  uint64_t m = n;
  for (uint64_t p = 2; p <= kTrialBound && p * p <= m; p += (p == 2 ? 1 : 2)) {
    while (m % p == 0) {
      ++acc[p];
      m /= p;
    }
  }
  // remaining cofactor has no prime factor <= 10^6, so it is 1, a prime, a
  // prime square, or a product of two distinct primes
  std::vector<uint64_t> rest;
  if (m > 1) rest.push_back(m);
  while (!rest.empty()) {
    uint64_t v = rest.back();
    rest.pop_back();
    if (is_prime(v)) {
      ++acc[v];
      continue;
    }
    uint64_t d = brent_rho(v);
    rest.push_back(d);
    rest.push_back(v / d);
  }
  f.factors.assign(acc.begin(), acc.end());
  return f;
}

std::vector<uint64_t> divisors(uint64_t n) {
  Factorization f = factorize(n);
  std::vector<uint64_t> ds{1};
  for (auto& [p, e] : f.factors) {
    size_t sz = ds.size();
    uint64_t pk = 1;
    for (int i = 1; i <= e; ++i) {
      pk *= p;
      for (size_t j = 0; j < sz; ++j) ds.push_back(ds[j] * pk);
    }
  }
  std::sort(ds.begin(), ds.end());
  return ds;
}

std::optional<std::pair<uint64_t, int>> is_prime_power(uint64_t n) {
  if (n < 2) return std::nullopt;
  Factorization f = factorize(n);
  if (f.num_primes() != 1) return std::nullopt;
  return f.factors[0];
}

std::optional<std::pair<std::pair<uint64_t, int>, std::pair<uint64_t, int>>> is_two_prime_form(uint64_t n) {
  if (n < 2) return std::nullopt;
  Factorization f = factorize(n);
  if (f.num_primes() != 2) return std::nullopt;
  return std::make_pair(f.factors[0], f.factors[1]);
}

std::string Factorization::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (auto& [p, e] : factors) {
    if (!first) os << "*";
    first = false;
    os << p;
    if (e > 1) os << "^" << e;
  }
  return os.str();
}

SuzukiVerdict suzuki_cograph_condition(uint64_t q) {
  // q must be 2^(2e+1) with e >= 1
  if (q < 8 || (q & (q - 1)) != 0)
    fail(ErrorCode::not_odd_power_of_two, "suzuki: q must be 2^(2e+1) with e >= 1, got " + std::to_string(q));
  int log2q = 0;
  for (uint64_t v = q; v > 1; v >>= 1) ++log2q;
  if (log2q % 2 == 0)
    fail(ErrorCode::not_odd_power_of_two, "suzuki: q must be an odd power of 2, got 2^" + std::to_string(log2q));
  SuzukiVerdict v;
  v.q = q;
  v.e = (log2q - 1) / 2;
  uint64_t root = 1ull << (v.e + 1); // sqrt(2q), exact

  auto classify = [](uint64_t value) {
    SuzukiValue sv;
    sv.value = value;
    sv.fact = factorize(value);
    sv.prime_power = sv.fact.num_primes() == 1;
    sv.two_prime_form = sv.fact.num_primes() == 2;
    return sv;
  };
  v.q_minus_1 = classify(q - 1);
  v.q_minus_root = classify(q - root + 1);
  v.q_plus_root = classify(q + root + 1);
  v.condition = v.q_minus_1.ok() && v.q_minus_root.ok() && v.q_plus_root.ok();
  v.q_eq_8_flag = (q == 8);
  return v;
}

std::vector<CatalanSolution> catalan_solutions(uint64_t limit) {
  if (limit > 1'000'000)
    fail(ErrorCode::out_of_range, "catalan: limit must be <= 10^6, got " + std::to_string(limit));
  // perfect powers <= limit with minimal base representation
  std::map<uint64_t, std::pair<uint64_t, int>> powers;
  for (uint64_t x = 2; x * x <= limit; ++x) {
    uint64_t v = x * x;
    int a = 2;
    while (v <= limit) {
      powers.emplace(v, std::make_pair(x, a)); // first writer has minimal base
      if (v > limit / x) break;
      v *= x;
      ++a;
    }
  }
  std::vector<CatalanSolution> out;
  for (auto it = powers.begin(); it != powers.end(); ++it) {
    auto next = std::next(it);
    if (next != powers.end() && next->first == it->first + 1) {
      out.push_back({next->second.first, next->second.second, it->second.first, it->second.second});
    }
  }
  return out;
}

} // namespace igg
