#pragma once

#include "hyptwist/integer.hpp"

#include <compare>
#include <cstdint>
#include <string>

namespace hyptwist {

/// A place of Q: the real place or a finite prime.
class Place {
public:
  static Place infinity() { return Place(0); }
  static Place prime(std::uint64_t q);

  bool is_infinite() const noexcept { return q_ == 0; }
  /// The prime q of a finite place; 0 for the real place.
  std::uint64_t prime() const noexcept { return q_; }
  std::string to_string() const;

  friend auto operator<=>(const Place&, const Place&) = default;

private:
  explicit Place(std::uint64_t q) : q_(q) {}
  std::uint64_t q_;
};

/// Kronecker symbol (a|m), m != 0.
int kronecker_symbol(const BigInt& a, const BigInt& m);
int kronecker_symbol(long long a, long long m);
/// Legendre symbol for an odd prime q.
int legendre_symbol(std::uint64_t a, std::uint64_t q);

/// Hilbert symbol (a, b)_v for nonzero rationals.
int hilbert_symbol(const BigRational& a, const BigRational& b, Place v);

}  // namespace hyptwist
