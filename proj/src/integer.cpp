#include "hyptwist/integer.hpp"

#include "hyptwist/errors.hpp"

#include <algorithm>
#include <array>
#include <map>

namespace hyptwist {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t m) {
  // extended Euclid on signed 128-bit to dodge overflow
  __int128 old_r = a % m, r = m, old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) throw InvalidInput("invmod: value not invertible");
  old_s %= static_cast<__int128>(m);
  if (old_s < 0) old_s += m;
  return static_cast<std::uint64_t>(old_s);
}

namespace {

constexpr std::array<std::uint64_t, 13> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41};

bool miller_rabin_u64(std::uint64_t n, std::uint64_t a) {
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return true;
  for (unsigned i = 1; i < s; ++i) {
    x = mulmod(x, x, n);
    if (x == n - 1) return true;
  }
  return false;
}

bool miller_rabin_big(const BigInt& n, unsigned long a) {
  BigInt d = n - 1;
  unsigned long s = mpz_scan1(d.get_mpz_t(), 0);
  mpz_fdiv_q_2exp(d.get_mpz_t(), d.get_mpz_t(), s);
  BigInt x;
  BigInt base = a;
  mpz_powm(x.get_mpz_t(), base.get_mpz_t(), d.get_mpz_t(), n.get_mpz_t());
  BigInt nm1 = n - 1;
  if (x == 1 || x == nm1) return true;
  for (unsigned long i = 1; i < s; ++i) {
    x = (x * x) % n;
    if (x == nm1) return true;
  }
  return false;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  for (std::uint64_t a : kWitnesses) {
    if (!miller_rabin_u64(n, a)) return false;
  }
  return true;
}

bool is_prime(const BigInt& n) {
  if (n < 2) return false;
  if (mpz_fits_ulong_p(n.get_mpz_t())) return is_prime(static_cast<std::uint64_t>(n.get_ui()));
  for (std::uint64_t p : kWitnesses) {
    if (mpz_divisible_ui_p(n.get_mpz_t(), p)) return false;
  }
  static const BigInt kDeterministicBound("3317044064679887385961981");
  if (n >= kDeterministicBound) return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
  for (std::uint64_t a : kWitnesses) {
    if (!miller_rabin_big(n, a)) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  if (limit > (std::uint64_t{1} << 32)) throw ResourceLimit("sieve limit above 2^32");
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

std::uint64_t next_prime(std::uint64_t n) {
  std::uint64_t c = n + 1;
  while (!is_prime(c)) ++c;
  return c;
}

namespace {

// Brent's cycle-finding variant of Pollard rho; n odd composite.
BigInt pollard_brent(const BigInt& n, unsigned long seed) {
  BigInt c = seed;
  BigInt y = 2 + seed, x, g = 1, q = 1, ys;
  const unsigned long m = 128;
  unsigned long r = 1;
  auto step = [&](const BigInt& v) { return BigInt((v * v + c) % n); };
  do {
    x = y;
    for (unsigned long i = 0; i < r; ++i) y = step(y);
    unsigned long k = 0;
    do {
      ys = y;
      for (unsigned long i = 0; i < std::min(m, r - k); ++i) {
        y = step(y);
        BigInt diff = abs(x - y);
        q = (q * diff) % n;
      }
      mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
      k += m;
    } while (k < r && g == 1);
    r *= 2;
  } while (g == 1);
  if (g == n) {
    do {
      ys = step(ys);
      BigInt diff = abs(x - ys);
      mpz_gcd(g.get_mpz_t(), diff.get_mpz_t(), n.get_mpz_t());
    } while (g == 1);
  }
  return g;
}

void split_composite(const BigInt& n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  if (mpz_perfect_square_p(n.get_mpz_t())) {
    BigInt r;
    mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
    split_composite(r, out);
    split_composite(r, out);
    return;
  }
  for (unsigned long seed = 1;; ++seed) {
    BigInt d = pollard_brent(n, seed);
    if (d != n && d != 1) {
      split_composite(d, out);
      split_composite(BigInt(n / d), out);
      return;
    }
  }
}

}  // namespace

std::vector<PrimePower> factor_integer(const BigInt& n) {
  if (n == 0) throw InvalidInput("factor_integer: zero has no factorization");
  BigInt m = abs(n);
  std::map<BigInt, unsigned> found;
  constexpr unsigned long kTrialBound = 100000;
  for (unsigned long p = 2; p <= kTrialBound && m > 1; p += (p == 2 ? 1 : 2)) {
    if (BigInt(p) * p > m) break;
    while (mpz_divisible_ui_p(m.get_mpz_t(), p)) {
      ++found[BigInt(p)];
      mpz_divexact_ui(m.get_mpz_t(), m.get_mpz_t(), p);
    }
  }
  if (m > 1) split_composite(m, found);
  std::vector<PrimePower> result;
  result.reserve(found.size());
  for (const auto& [p, e] : found) result.push_back({p, e});
  return result;
}

bool is_square(const BigInt& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t()) != 0;
}

bool is_rational_square(const BigRational& q) {
  return is_square(q.get_num()) && is_square(q.get_den());
}

unsigned valuation(BigInt n, std::uint64_t p) {
  if (n == 0) throw InvalidInput("valuation of zero");
  unsigned v = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
    ++v;
  }
  return v;
}

std::uint64_t mod_u64(const BigInt& n, std::uint64_t m) {
  return mpz_fdiv_ui(n.get_mpz_t(), m);
}

}  // namespace hyptwist
