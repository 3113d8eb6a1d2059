#pragma once

#include "hyptwist/curve.hpp"
#include "hyptwist/symbols.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hyptwist {

class PrimeCache;

/// Bad places of a curve: the real place, 2, and every prime dividing the
/// leading coefficient, a denominator, or Delta_f.
struct SigmaSet {
  std::vector<std::uint64_t> finite_primes;  // ascending, always contains 2

  bool contains(std::uint64_t ell) const;
  /// Real place first, then the finite primes ascending.
  std::vector<Place> places() const;
  std::vector<std::uint64_t> odd_primes() const;
  std::string to_string() const;
};

SigmaSet sigma_set(const CurveSpec& curve);

/// Frobenius orbit lengths at a good prime, kept sorted ascending.
struct CycleType {
  std::vector<unsigned> lengths;

  CycleType() = default;
  explicit CycleType(std::vector<unsigned> l);

  unsigned orbit_count() const noexcept { return static_cast<unsigned>(lengths.size()); }
  unsigned degree() const noexcept;
  bool all_odd() const noexcept;
  /// Sign of a permutation with these cycle lengths.
  int permutation_sign() const noexcept;
  std::string to_string() const;

  friend auto operator<=>(const CycleType&, const CycleType&) = default;
};

struct PrimeClass {
  std::uint64_t ell;
  CycleType cycle_type;
  unsigned index;  // i = b - 1: ell lies in P_i
};

/// Throws BadPrime for ell in Sigma (or ell = 2).
PrimeClass classify_prime(const CurveSpec& curve, std::uint64_t ell, PrimeCache* cache = nullptr);

enum class GaloisLabel { sn_certified, an_certified, inside_an, unknown };
std::string to_string(GaloisLabel label);

struct GaloisVerdict {
  GaloisLabel label = GaloisLabel::unknown;
  bool discriminant_is_square = false;
  bool known_reducible = false;
  std::map<CycleType, std::uint64_t> observed;
  std::vector<std::string> evidence;
};

/// Certificates only from standard sufficient criteria; never claims a group it
/// cannot certify.
GaloisVerdict galois_classify(const CurveSpec& curve, std::uint64_t sample_bound);

using PrimePredicate = std::function<bool(const PrimeClass&)>;

/// Resumable stream over the good primes in [lo, hi] accepted by a predicate.
class PrimeScanner {
public:
  PrimeScanner(const CurveSpec& curve, PrimePredicate predicate, std::uint64_t lo, std::uint64_t hi,
               PrimeCache* cache = nullptr);

  std::optional<PrimeClass> next();
  /// Every prime below cursor() has been examined; pass it as `lo` to resume.
  std::uint64_t cursor() const noexcept { return cursor_; }

private:
  const CurveSpec& curve_;
  PrimePredicate predicate_;
  std::uint64_t cursor_;
  std::uint64_t hi_;
  PrimeCache* cache_;
};

/// All good primes in [lo, hi] satisfying the predicate, ascending; the range is
/// partitioned across `threads` workers and merged in order.
std::vector<PrimeClass> prime_scan(const CurveSpec& curve, const PrimePredicate& predicate, std::uint64_t lo,
                                   std::uint64_t hi, unsigned threads = 1, PrimeCache* cache = nullptr);

}  // namespace hyptwist
