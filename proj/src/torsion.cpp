#include "hyptwist/torsion.hpp"

#include "hyptwist/errors.hpp"
#include "hyptwist/fp_poly.hpp"

#include <algorithm>
#include <numeric>

namespace hyptwist {

Permutation::Permutation(std::vector<unsigned> images) : images_(std::move(images)) {
  std::vector<bool> seen(images_.size(), false);
  for (unsigned v : images_) {
    if (v >= images_.size() || seen[v]) throw InvalidInput("permutation images are not a bijection");
    seen[v] = true;
  }
}

Permutation Permutation::identity(unsigned n) {
  std::vector<unsigned> id(n);
  std::iota(id.begin(), id.end(), 0u);
  return Permutation(std::move(id));
}

Permutation Permutation::from_cycles(unsigned n, const std::vector<std::vector<unsigned>>& cycles) {
  std::vector<unsigned> img(n);
  std::iota(img.begin(), img.end(), 0u);
  for (const auto& cycle : cycles) {
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      const unsigned from = cycle[i], to = cycle[(i + 1) % cycle.size()];
      if (from < 1 || from > n || to < 1 || to > n) throw InvalidInput("cycle entry out of range");
      img[from - 1] = to - 1;
    }
  }
  return Permutation(std::move(img));
}

Permutation Permutation::random(unsigned n, std::mt19937_64& rng) {
  std::vector<unsigned> img(n);
  std::iota(img.begin(), img.end(), 0u);
  std::shuffle(img.begin(), img.end(), rng);
  return Permutation(std::move(img));
}

Permutation Permutation::inverse() const {
  std::vector<unsigned> inv(images_.size());
  for (unsigned i = 0; i < images_.size(); ++i) inv[images_[i]] = i;
  return Permutation(std::move(inv));
}

Permutation operator*(const Permutation& a, const Permutation& b) {
  if (a.size() != b.size()) throw InvalidInput("composing permutations of different sizes");
  std::vector<unsigned> img(a.size());
  for (unsigned i = 0; i < a.size(); ++i) img[i] = a(b(i));
  return Permutation(std::move(img));
}

CycleType Permutation::cycle_type() const {
  std::vector<bool> seen(images_.size(), false);
  std::vector<unsigned> lengths;
  for (unsigned i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    unsigned len = 0;
    for (unsigned j = i; !seen[j]; j = images_[j]) {
      seen[j] = true;
      ++len;
    }
    lengths.push_back(len);
  }
  return CycleType(std::move(lengths));
}

unsigned rank_mod_p(std::vector<std::vector<std::int64_t>> rows, std::uint64_t p) {
  if (rows.empty()) return 0;
  const auto mod = static_cast<std::int64_t>(p);
  for (auto& row : rows) {
    for (auto& x : row) x = ((x % mod) + mod) % mod;
  }
  const std::size_t cols = rows.front().size();
  unsigned rank = 0;
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < rows.size() && rows[pivot][c] == 0) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[pivot], rows[rank]);
    const auto inv = static_cast<std::int64_t>(invmod(static_cast<std::uint64_t>(rows[rank][c]), p));
    for (auto& x : rows[rank]) x = (x * inv) % mod;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == rank || rows[r][c] == 0) continue;
      const std::int64_t factor = rows[r][c];
      for (std::size_t k = 0; k < cols; ++k) {
        rows[r][k] = ((rows[r][k] - factor * rows[rank][k]) % mod + mod) % mod;
      }
    }
    ++rank;
  }
  return rank;
}

unsigned fixed_space_dim(const Permutation& sigma, std::uint64_t p) {
  const unsigned n = sigma.size();
  if (n == 0) throw InvalidInput("empty permutation");
  if (!is_prime(p)) throw InvalidInput("p must be prime");
  if (n % p == 0) throw InvalidInput("p divides n: the all-ones line is not a direct summand");
  // W = {v : sigma(v) - v in <1>} contains <1>; the fixed space of the quotient is W / <1>.
  // Coordinates of (sigma - 1)v modulo <1>: w_i - w_{n-1} for i < n-1, with (sigma v)_{sigma(j)} = v_j.
  std::vector<std::vector<std::int64_t>> m(n > 1 ? n - 1 : 0, std::vector<std::int64_t>(n, 0));
  auto entry = [&](unsigned i, unsigned j) -> std::int64_t {
    // coefficient of v_j in ((sigma - 1) v)_i
    std::int64_t c = (sigma(j) == i) ? 1 : 0;
    if (i == j) c -= 1;
    return c;
  };
  for (unsigned i = 0; i + 1 < n; ++i) {
    for (unsigned j = 0; j < n; ++j) m[i][j] = entry(i, j) - entry(n - 1, j);
  }
  const unsigned dim_w = n - rank_mod_p(std::move(m), p);
  return dim_w - 1;
}

bool orbit_lengths_prime_to(const CycleType& type, std::uint64_t p) {
  return std::none_of(type.lengths.begin(), type.lengths.end(), [p](unsigned l) { return l % p == 0; });
}

bool certify_irreducible(const RatPoly& g, std::uint64_t bound) {
  const int d = g.degree();
  if (d <= 1) return d == 1;
  const bool has_root = !rational_roots(g).empty();
  if (has_root) return false;
  if (d <= 3) return true;
  // degrees a proper factor could still have
  std::vector<bool> possible(static_cast<std::size_t>(d) + 1, true);
  for (auto ell : primes_up_to(bound)) {
    if (ell < 3) continue;
    std::vector<unsigned> degs;
    try {
      degs = factor_degrees(g, ell);
    } catch (const BadPrime&) {
      continue;
    }
    std::vector<bool> sums(static_cast<std::size_t>(d) + 1, false);
    sums[0] = true;
    for (unsigned k : degs) {
      for (int s = d; s >= static_cast<int>(k); --s) {
        if (sums[static_cast<std::size_t>(s) - k]) sums[static_cast<std::size_t>(s)] = true;
      }
    }
    bool any_proper = false;
    for (int s = 1; s < d; ++s) {
      possible[static_cast<std::size_t>(s)] = possible[static_cast<std::size_t>(s)] && sums[static_cast<std::size_t>(s)];
      any_proper = any_proper || possible[static_cast<std::size_t>(s)];
    }
    if (!any_proper) return true;
  }
  return false;
}

std::vector<RatPoly> certified_irreducible_factors(const CurveSpec& curve, std::uint64_t certificate_bound) {
  std::vector<RatPoly> factors;
  if (curve.declared_factors()) {
    for (const auto& g : *curve.declared_factors()) {
      if (!certify_irreducible(g, certificate_bound)) {
        throw UnknownFactorization("cannot certify declared factor " + g.to_string() + " as irreducible");
      }
      factors.push_back(g);
    }
    return factors;
  }
  RatPoly rest = curve.f();
  for (const auto& r : rational_roots(curve.f())) {
    RatPoly lin = RatPoly::linear(1, -r);
    factors.push_back(lin);
    rest = divmod(rest, lin).quotient;
  }
  if (rest.degree() >= 1) {
    if (!certify_irreducible(rest, certificate_bound)) {
      throw UnknownFactorization("cannot certify the factorization of f over Q");
    }
    factors.push_back(rest);
  }
  return factors;
}

unsigned rational_two_torsion_dim(const CurveSpec& curve, std::uint64_t certificate_bound) {
  return static_cast<unsigned>(certified_irreducible_factors(curve, certificate_bound).size()) - 1;
}

}  // namespace hyptwist
