#pragma once

#include "hyptwist/galois.hpp"
#include "hyptwist/integer.hpp"
#include "hyptwist/symbols.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hyptwist {

/// A quadratic character of Q, identified with the squarefree integer d
/// (chi_d cuts out Q(sqrt d)). Stored factored: a sign and the ascending list
/// of primes dividing d. d = 1 is the trivial character.
class QuadTwist {
public:
  QuadTwist() = default;
  /// Squarefree kernel of a nonzero integer.
  static QuadTwist from_integer(const BigInt& n);
  static QuadTwist from_integer(long long n) { return from_integer(BigInt(static_cast<long>(n))); }
  /// From a sign and distinct primes (validated).
  static QuadTwist from_primes(int sign, std::vector<std::uint64_t> primes);

  int sign() const noexcept { return sign_; }
  const std::vector<std::uint64_t>& primes() const noexcept { return primes_; }
  bool is_trivial() const noexcept { return sign_ > 0 && primes_.empty(); }
  bool divisible_by(std::uint64_t q) const;
  BigInt value() const;
  /// d mod m in [0, m).
  std::uint64_t residue(std::uint64_t m) const;
  std::string to_string() const;

  /// Group law: squarefree kernel of the product.
  friend QuadTwist operator*(const QuadTwist& a, const QuadTwist& b);
  friend bool operator==(const QuadTwist&, const QuadTwist&) = default;

private:
  int sign_ = 1;
  std::vector<std::uint64_t> primes_;
};

enum class LocalBehavior { trivial, unramified_nontrivial, ramified, sign };
std::string to_string(LocalBehavior b);

LocalBehavior local_behavior(const QuadTwist& d, Place v);

/// Largest finite prime at which d ramifies (2 counts when d is not 1 mod 4);
/// 1 when there is none. The real place never contributes.
std::uint64_t twist_norm(const QuadTwist& d);

/// X(Q, X) = characters of norm < X: the group generated by -1, 2 and the odd
/// primes below X (just {1} for X <= 2). ResourceLimit beyond `cap` elements.
std::vector<QuadTwist> enumerate_characters(std::uint64_t bound, std::uint64_t cap = 1ULL << 22);

/// Generators of X(Q, X) in the order used by enumerate_characters.
std::vector<QuadTwist> character_generators(std::uint64_t bound);

/// True iff d is a local square at every place of Sigma.
bool sigma_trivial(const QuadTwist& d, const SigmaSet& sigma);

/// Smallest positive quadratic non-residue modulo an odd prime.
std::uint64_t smallest_nonresidue(std::uint64_t q);

/// Canonical representatives of the local square classes Q_v^x / (Q_v^x)^2:
///   odd q: {1, u_q, q, u_q*q} with u_q the smallest non-residue
///   2:     {1, 5, -1, -5, 2, 10, -2, -10}
///   inf:   {1, -1}
std::vector<long long> local_labels(Place v);
/// Position of d's local class in local_labels(v); the position bits are the
/// F_2-coordinates of the class, so the map d -> index is a homomorphism into
/// (Z/2)^k under XOR.
unsigned local_class_index(const QuadTwist& d, Place v);
long long local_class_label(const QuadTwist& d, Place v);
/// Inverse of local_labels; InvalidInput for a non-canonical label.
unsigned label_index(long long label, Place v);

}  // namespace hyptwist
