#pragma once

#include <cstdint>
#include <vector>

namespace hyptwist {

/// Vectors of F_2^k (k <= 32) as bitmasks, bit i = coordinate i.
using F2Vec = std::uint32_t;

/// Quadratic form q(x) = sum_i a_i x_i + sum_{i<j} b_ij x_i x_j on F_2^dim.
class QuadraticSpace {
public:
  /// `upper[i]` holds b_ij in bit j (only j > i is read).
  QuadraticSpace(unsigned dim, F2Vec linear, std::vector<F2Vec> upper);

  /// Orthogonal sum of m hyperbolic planes <e_k, f_k> with q(e_k) = q(f_k) = 0,
  /// (e_k, f_k) = 1; e_k is coordinate 2k, f_k is 2k+1.
  static QuadraticSpace hyperbolic(unsigned m);
  /// Orthogonal sum of the two spaces (coordinates of `b` shifted up).
  static QuadraticSpace orthogonal_sum(const QuadraticSpace& a, const QuadraticSpace& b);

  unsigned dim() const noexcept { return dim_; }
  unsigned q(F2Vec v) const;
  /// (v, w)_q = q(v + w) + q(v) + q(w).
  unsigned pairing(F2Vec v, F2Vec w) const;
  bool is_nondegenerate() const;

private:
  unsigned dim_;
  F2Vec linear_;
  std::vector<F2Vec> upper_;
};

/// A subspace of F_2^k kept in reduced row-echelon form, so equal subspaces
/// have equal representations.
class Subspace {
public:
  Subspace() = default;
  static Subspace span(const std::vector<F2Vec>& vectors);

  unsigned dim() const noexcept { return static_cast<unsigned>(basis_.size()); }
  const std::vector<F2Vec>& basis() const noexcept { return basis_; }
  bool contains(F2Vec v) const;
  /// Every element (2^dim of them).
  std::vector<F2Vec> elements() const;
  bool intersects_trivially(const Subspace& other) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;
  friend auto operator<=>(const Subspace&, const Subspace&) = default;

private:
  F2Vec reduce(F2Vec v) const;
  std::vector<F2Vec> basis_;  // descending pivots
};

/// q vanishes on X, dim X = dim V / 2 and X is self-orthogonal. Throws
/// InvalidInput if X has a vector outside V.
bool is_lagrangian(const QuadraticSpace& space, const Subspace& x);

/// All Lagrangian subspaces, by isotropic-flag extension with echelon dedup.
/// ResourceLimit above dim 10.
std::vector<Subspace> enumerate_lagrangians(const QuadraticSpace& space);

/// Number of Lagrangians Y with Y ∩ X = 0; X must be Lagrangian.
std::uint64_t count_disjoint_lagrangians(const QuadraticSpace& space, const Subspace& x);

}  // namespace hyptwist
