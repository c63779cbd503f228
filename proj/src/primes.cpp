#include "eisenkit/primes.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>

#include "eisenkit/errors.hpp"

namespace eisenkit {

std::vector<uint64_t> primes_up_to(uint64_t bound) {
  std::vector<uint64_t> out;
  if (bound < 2) return out;
  const uint64_t segment = 1u << 18;
  // Base primes up to sqrt(bound).
  uint64_t root = 1;
  while (root * root <= bound) ++root;
  std::vector<char> base(root + 1, 1);
  std::vector<uint64_t> base_primes;
  for (uint64_t i = 2; i <= root; ++i) {
    if (!base[i]) continue;
    base_primes.push_back(i);
    for (uint64_t j = i * i; j <= root; j += i) base[j] = 0;
  }
  for (uint64_t lo = 2; lo <= bound; lo += segment) {
    uint64_t hi = std::min(bound, lo + segment - 1);
    std::vector<char> seg(hi - lo + 1, 1);
    for (uint64_t p : base_primes) {
      if (p * p > hi) break;
      uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
      for (uint64_t j = start; j <= hi; j += p) seg[j - lo] = 0;
    }
    for (uint64_t i = lo; i <= hi; ++i)
      if (seg[i - lo] && i >= 2) out.push_back(i);
  }
  return out;
}

namespace {

uint64_t mulmod_u64(uint64_t a, uint64_t b, uint64_t m) {
  return (uint64_t)((__uint128_t)a * b % m);
}

uint64_t powmod_u64(uint64_t a, uint64_t e, uint64_t m) {
  uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_u64(r, a, m);
    a = mulmod_u64(a, a, m);
    e >>= 1;
  }
  return r;
}

// Deterministic for all n < 2^64 with this base set.
bool miller_rabin_u64(uint64_t n) {
  if (n < 2) return false;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  for (uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull, 23ull,
                     29ull, 31ull, 37ull}) {
    uint64_t x = powmod_u64(a % n, d, n);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_u64(x, x, n);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

// Brent-cycle Pollard rho; returns a nontrivial factor of composite odd n.
Integer rho_factor(const Integer& n) {
  for (unsigned long c = 1;; ++c) {
    Integer y = 2, ys, q = 1, x, d = 1;
    unsigned long r = 1, m = 128;
    auto step = [&](Integer& v) {
      v = (v * v + c) % n;
    };
    while (d == 1) {
      x = y;
      for (unsigned long i = 0; i < r; ++i) step(y);
      unsigned long k = 0;
      while (k < r && d == 1) {
        ys = y;
        unsigned long lim = std::min(m, r - k);
        for (unsigned long i = 0; i < lim; ++i) {
          step(y);
          Integer diff = x - y;
          if (diff < 0) diff = -diff;
          q = q * diff % n;
        }
        d = gcd(q, n);
        k += lim;
      }
      r <<= 1;
      if (r > (1ul << 24)) break;  // stuck cycle; retry with next c
    }
    if (d == n || d == 1) {
      // backtracking pass
      d = 1;
      while (d == 1) {
        step(ys);
        Integer diff = x - ys;
        if (diff < 0) diff = -diff;
        d = gcd(diff, n);
        if (ys == x) break;
      }
    }
    if (d != 1 && d != n) return d;
  }
}

void factor_into(const Integer& n, std::map<Integer, int>& acc) {
  if (n == 1) return;
  if (is_prime(n)) {
    acc[n] += 1;
    return;
  }
  Integer d = rho_factor(n);
  factor_into(d, acc);
  factor_into(n / d, acc);
}

}  // namespace

bool is_prime(const Integer& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t()) && sizeof(unsigned long) == 8)
    return miller_rabin_u64(n.get_ui());
  return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

std::vector<std::pair<Integer, int>> factor(const Integer& n_in) {
  if (n_in == 0) throw DomainError("factor: zero input");
  Integer n = abs(n_in);
  std::map<Integer, int> acc;
  for (uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull}) {
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      acc[Integer((unsigned long)p)] += 1;
      n /= (unsigned long)p;
    }
  }
  // wheel over 17, 19, ... up to 10^6
  for (uint64_t p = 17; p <= 1000000 && n > 1; p += 2) {
    if (Integer((unsigned long)p) * (unsigned long)p > n) break;
    while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
      acc[Integer((unsigned long)p)] += 1;
      n /= (unsigned long)p;
    }
  }
  if (n > 1) factor_into(n, acc);
  return {acc.begin(), acc.end()};
}

uint64_t prime_bound_from_env() {
  const char* s = std::getenv("EISENKIT_PRIME_BOUND");
  if (!s || !*s) return 1000000;
  char* end = nullptr;
  unsigned long long v = std::strtoull(s, &end, 10);
  if (end == s || v < 2) return 1000000;
  return (uint64_t)v;
}

}  // namespace eisenkit
