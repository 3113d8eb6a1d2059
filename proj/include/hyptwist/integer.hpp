#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <utility>
#include <vector>

namespace hyptwist {

using BigInt = mpz_class;
using BigRational = mpq_class;

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);
std::uint64_t invmod(std::uint64_t a, std::uint64_t m);

/// Deterministic Miller-Rabin for all 64-bit inputs.
bool is_prime(std::uint64_t n);

/// Deterministic Miller-Rabin (bases 2..41) below 3.3e24; above that bound the
/// answer is probabilistic with 40 rounds.
bool is_prime(const BigInt& n);

/// ResourceLimit above 2^32.
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);
std::uint64_t next_prime(std::uint64_t n);

struct PrimePower {
  BigInt prime;
  unsigned exponent;
};

/// Factorization of |n| by trial division and Pollard rho, primes ascending.
/// n = 0 is rejected with InvalidInput; |n| = 1 gives an empty list.
std::vector<PrimePower> factor_integer(const BigInt& n);

bool is_square(const BigInt& n);
bool is_rational_square(const BigRational& q);

/// p-adic valuation; n != 0.
unsigned valuation(BigInt n, std::uint64_t p);

std::uint64_t mod_u64(const BigInt& n, std::uint64_t m);

}  // namespace hyptwist
