#pragma once

#include "hyptwist/rat_poly.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace hyptwist {

/// Polynomial over F_l for an odd or even prime l < 2^63, ascending coefficients.
class FpPoly {
public:
  explicit FpPoly(std::uint64_t modulus) : mod_(modulus) {}
  FpPoly(std::uint64_t modulus, std::vector<std::uint64_t> coefficients);

  /// Reduction of an integral-at-l rational polynomial; throws BadPrime if l
  /// divides a coefficient denominator.
  static FpPoly reduce(const RatPoly& f, std::uint64_t modulus);
  static FpPoly x(std::uint64_t modulus);
  static FpPoly constant(std::uint64_t modulus, std::uint64_t c);

  std::uint64_t modulus() const noexcept { return mod_; }
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  bool is_one() const noexcept { return c_.size() == 1 && c_[0] == 1; }
  const std::vector<std::uint64_t>& coefficients() const noexcept { return c_; }
  std::uint64_t lead() const { return c_.back(); }

  FpPoly monic() const;
  FpPoly derivative() const;

  FpPoly operator+(const FpPoly& rhs) const;
  FpPoly operator-(const FpPoly& rhs) const;
  FpPoly operator*(const FpPoly& rhs) const;
  friend bool operator==(const FpPoly& a, const FpPoly& b) { return a.mod_ == b.mod_ && a.c_ == b.c_; }

private:
  void trim();
  std::uint64_t mod_;
  std::vector<std::uint64_t> c_;
};

struct FpDivision {
  FpPoly quotient;
  FpPoly remainder;
};

FpDivision divmod(const FpPoly& a, const FpPoly& b);
FpPoly operator%(const FpPoly& a, const FpPoly& b);
/// Monic gcd.
FpPoly gcd(const FpPoly& a, const FpPoly& b);
/// base^e mod m.
FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m);

struct FpFactor {
  FpPoly factor;  // monic irreducible
  unsigned multiplicity;
};

/// Monic factors of nonzero f: square-free decomposition, distinct-degree
/// factorization, then randomized equal-degree splitting with the given RNG.
std::vector<FpFactor> factor_mod(const FpPoly& f, std::mt19937_64& rng);

/// (degree d, product of all irreducible factors of degree d) for square-free monic f.
std::vector<std::pair<unsigned, FpPoly>> distinct_degree_factorization(const FpPoly& f);

/// Degrees of the irreducible factors of f mod l, ascending. Requires l odd and
/// of good reduction (l does not divide lead(f), any denominator, or Delta_f);
/// otherwise BadPrime.
std::vector<unsigned> factor_degrees(const RatPoly& f, std::uint64_t ell);

}  // namespace hyptwist
