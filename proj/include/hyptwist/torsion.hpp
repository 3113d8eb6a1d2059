#pragma once

#include "hyptwist/curve.hpp"
#include "hyptwist/galois.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace hyptwist {

/// A bijection of {0, ..., n-1}.
class Permutation {
public:
  explicit Permutation(std::vector<unsigned> images);
  static Permutation identity(unsigned n);
  /// From 1-based disjoint cycles, e.g. {{1,2},{3,4,5}} for (12)(345).
  static Permutation from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles);
  static Permutation random(unsigned n, std::mt19937_64& rng);

  unsigned size() const noexcept { return static_cast<unsigned>(images_.size()); }
  unsigned operator()(unsigned i) const { return images_.at(i); }
  Permutation inverse() const;
  /// (a * b)(i) = a(b(i))
  friend Permutation operator*(const Permutation& a, const Permutation& b);

  CycleType cycle_type() const;

private:
  std::vector<unsigned> images_;
};

/// Rank of an integer matrix over F_p by Gaussian elimination.
unsigned rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::uint64_t p);

/// Dimension over F_p of the sigma-fixed subspace of F_p^n / <(1,...,1)>,
/// computed by row reduction (never from the cycle count). Requires p prime, p
/// not dividing n.
unsigned fixed_space_dim(const Permutation& sigma, std::uint64_t p);

/// True iff no orbit length is divisible by p.
bool orbit_lengths_prime_to(const CycleType& type, std::uint64_t p);

/// Irreducible factors of f over Q, when they can be certified: from the
/// declared factorization or from rational-root extraction plus cycle-type
/// degree certificates at good primes up to `certificate_bound`.
/// Throws UnknownFactorization otherwise.
std::vector<RatPoly> certified_irreducible_factors(const CurveSpec& curve, std::uint64_t certificate_bound = 2000);

/// True when the factor-degree data of g mod good primes <= bound rules out
/// every proper factorization over Q.
bool certify_irreducible(const RatPoly& g, std::uint64_t bound);

/// dim_F2 J(Q)[2] = (number of irreducible factors of f over Q) - 1.
unsigned rational_two_torsion_dim(const CurveSpec& curve, std::uint64_t certificate_bound = 2000);

}  // namespace hyptwist
