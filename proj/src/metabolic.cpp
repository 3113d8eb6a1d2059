#include "hyptwist/metabolic.hpp"

#include "hyptwist/errors.hpp"

#include <algorithm>
#include <bit>
#include <set>

namespace hyptwist {

namespace {

F2Vec mask_of(unsigned dim) { return dim >= 32 ? ~F2Vec{0} : ((F2Vec{1} << dim) - 1); }

}  // namespace

QuadraticSpace::QuadraticSpace(unsigned dim, F2Vec linear, std::vector<F2Vec> upper)
    : dim_(dim), linear_(linear & mask_of(dim)), upper_(std::move(upper)) {
  if (dim_ == 0 || dim_ > 32) throw InvalidInput("quadratic space dimension must be in 1..32");
  upper_.resize(dim_, 0);
  for (unsigned i = 0; i < dim_; ++i) {
    // keep only the strictly upper part
    upper_[i] &= mask_of(dim_) & ~mask_of(i + 1);
  }
}

QuadraticSpace QuadraticSpace::hyperbolic(unsigned m) {
  if (m == 0) throw InvalidInput("hyperbolic space needs m >= 1");
  std::vector<F2Vec> upper(2 * m, 0);
  for (unsigned k = 0; k < m; ++k) upper[2 * k] = F2Vec{1} << (2 * k + 1);
  return QuadraticSpace(2 * m, 0, std::move(upper));
}

QuadraticSpace QuadraticSpace::orthogonal_sum(const QuadraticSpace& a, const QuadraticSpace& b) {
  const unsigned shift = a.dim_;
  std::vector<F2Vec> upper = a.upper_;
  for (F2Vec row : b.upper_) upper.push_back(row << shift);
  return QuadraticSpace(a.dim_ + b.dim_, a.linear_ | (b.linear_ << shift), std::move(upper));
}

unsigned QuadraticSpace::q(F2Vec v) const {
  unsigned acc = static_cast<unsigned>(std::popcount(v & linear_));
  for (unsigned i = 0; i < dim_; ++i) {
    if ((v >> i) & 1) acc += static_cast<unsigned>(std::popcount(v & upper_[i]));
  }
  return acc & 1;
}

unsigned QuadraticSpace::pairing(F2Vec v, F2Vec w) const { return q(v ^ w) ^ q(v) ^ q(w); }

bool QuadraticSpace::is_nondegenerate() const {
  std::vector<F2Vec> gram(dim_, 0);
  for (unsigned i = 0; i < dim_; ++i) {
    for (unsigned j = 0; j < dim_; ++j) {
      if (pairing(F2Vec{1} << i, F2Vec{1} << j)) gram[i] |= F2Vec{1} << j;
    }
  }
  return Subspace::span(gram).dim() == dim_;
}

Subspace Subspace::span(const std::vector<F2Vec>& vectors) {
  Subspace s;
  for (F2Vec v : vectors) {
    v = s.reduce(v);
    if (v == 0) continue;
    const unsigned pivot = 31u - static_cast<unsigned>(std::countl_zero(v));
    for (auto& row : s.basis_) {
      if ((row >> pivot) & 1) row ^= v;
    }
    s.basis_.push_back(v);
    std::sort(s.basis_.begin(), s.basis_.end(), std::greater<>());
  }
  return s;
}

F2Vec Subspace::reduce(F2Vec v) const {
  for (F2Vec row : basis_) {
    const unsigned pivot = 31u - static_cast<unsigned>(std::countl_zero(row));
    if ((v >> pivot) & 1) v ^= row;
  }
  return v;
}

bool Subspace::contains(F2Vec v) const { return reduce(v) == 0; }

std::vector<F2Vec> Subspace::elements() const {
  std::vector<F2Vec> out{0};
  for (F2Vec row : basis_) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] ^ row);
  }
  return out;
}

bool Subspace::intersects_trivially(const Subspace& other) const {
  std::vector<F2Vec> all = basis_;
  all.insert(all.end(), other.basis_.begin(), other.basis_.end());
  return span(all).dim() == dim() + other.dim();
}

bool is_lagrangian(const QuadraticSpace& space, const Subspace& x) {
  for (F2Vec b : x.basis()) {
    if (b & ~mask_of(space.dim())) throw InvalidInput("subspace is not contained in the quadratic space");
  }
  if (2 * x.dim() != space.dim()) return false;
  for (F2Vec v : x.elements()) {
    if (space.q(v)) return false;
  }
  const auto& basis = x.basis();
  for (std::size_t i = 0; i < basis.size(); ++i) {
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      if (space.pairing(basis[i], basis[j])) return false;
    }
  }
  return true;
}

std::vector<Subspace> enumerate_lagrangians(const QuadraticSpace& space) {
  if (space.dim() > 10) throw ResourceLimit("Lagrangian enumeration is limited to dimension <= 10");
  if (space.dim() % 2) return {};
  const unsigned half = space.dim() / 2;
  const F2Vec top = F2Vec{1} << space.dim();
  std::vector<F2Vec> singular;
  for (F2Vec v = 1; v < top; ++v) {
    if (space.q(v) == 0) singular.push_back(v);
  }
  // level k holds every totally singular subspace of dimension k
  std::set<Subspace> level{Subspace{}};
  for (unsigned k = 0; k < half; ++k) {
    std::set<Subspace> next;
    for (const auto& s : level) {
      for (F2Vec v : singular) {
        if (s.contains(v)) continue;
        const bool orthogonal = std::all_of(s.basis().begin(), s.basis().end(),
                                            [&](F2Vec b) { return space.pairing(b, v) == 0; });
        if (!orthogonal) continue;
        std::vector<F2Vec> gens = s.basis();
        gens.push_back(v);
        next.insert(Subspace::span(gens));
      }
    }
    level = std::move(next);
  }
  return {level.begin(), level.end()};
}

std::uint64_t count_disjoint_lagrangians(const QuadraticSpace& space, const Subspace& x) {
  if (!is_lagrangian(space, x)) throw InvalidInput("reference subspace is not Lagrangian");
  std::uint64_t count = 0;
  for (const auto& y : enumerate_lagrangians(space)) {
    if (y.intersects_trivially(x)) ++count;
  }
  return count;
}

}  // namespace hyptwist
