#include "hyptwist/twist.hpp"

#include "hyptwist/errors.hpp"

#include <algorithm>
#include <sstream>

namespace hyptwist {

QuadTwist QuadTwist::from_integer(const BigInt& n) {
  if (n == 0) throw InvalidInput("quadratic twist by zero");
  QuadTwist d;
  d.sign_ = n < 0 ? -1 : 1;
  for (const auto& pp : factor_integer(n)) {
    if (pp.exponent % 2 == 0) continue;
    if (!mpz_fits_ulong_p(pp.prime.get_mpz_t())) throw ResourceLimit("twist prime exceeds 64 bits");
    d.primes_.push_back(pp.prime.get_ui());
  }
  return d;
}

QuadTwist QuadTwist::from_primes(int sign, std::vector<std::uint64_t> primes) {
  if (sign != 1 && sign != -1) throw InvalidInput("twist sign must be +1 or -1");
  std::sort(primes.begin(), primes.end());
  if (std::adjacent_find(primes.begin(), primes.end()) != primes.end()) {
    throw InvalidInput("twist primes must be distinct");
  }
  for (auto p : primes) {
    if (!is_prime(p)) throw InvalidInput(std::to_string(p) + " is not prime");
  }
  QuadTwist d;
  d.sign_ = sign;
  d.primes_ = std::move(primes);
  return d;
}

bool QuadTwist::divisible_by(std::uint64_t q) const {
  return std::binary_search(primes_.begin(), primes_.end(), q);
}

BigInt QuadTwist::value() const {
  BigInt v = sign_;
  for (auto p : primes_) v *= static_cast<unsigned long>(p);
  return v;
}

std::uint64_t QuadTwist::residue(std::uint64_t m) const {
  std::uint64_t r = 1 % m;
  for (auto p : primes_) r = mulmod(r, p % m, m);
  if (sign_ < 0 && r != 0) r = m - r;
  return r;
}

std::string QuadTwist::to_string() const { return value().get_str(); }

QuadTwist operator*(const QuadTwist& a, const QuadTwist& b) {
  QuadTwist d;
  d.sign_ = a.sign_ * b.sign_;
  std::set_symmetric_difference(a.primes_.begin(), a.primes_.end(), b.primes_.begin(), b.primes_.end(),
                                std::back_inserter(d.primes_));
  return d;
}

std::string to_string(LocalBehavior b) {
  switch (b) {
    case LocalBehavior::trivial: return "trivial";
    case LocalBehavior::unramified_nontrivial: return "unramified_nontrivial";
    case LocalBehavior::ramified: return "ramified";
    case LocalBehavior::sign: return "sign";
  }
  return "trivial";
}

LocalBehavior local_behavior(const QuadTwist& d, Place v) {
  if (v.is_infinite()) return d.sign() < 0 ? LocalBehavior::sign : LocalBehavior::trivial;
  const std::uint64_t q = v.prime();
  if (q == 2) {
    if (d.divisible_by(2)) return LocalBehavior::ramified;
    switch (d.residue(8)) {
      case 1: return LocalBehavior::trivial;
      case 5: return LocalBehavior::unramified_nontrivial;
      default: return LocalBehavior::ramified;
    }
  }
  if (d.divisible_by(q)) return LocalBehavior::ramified;
  return legendre_symbol(d.residue(q), q) == 1 ? LocalBehavior::trivial : LocalBehavior::unramified_nontrivial;
}

std::uint64_t twist_norm(const QuadTwist& d) {
  std::uint64_t norm = 1;
  for (auto p : d.primes()) {
    if (p != 2) norm = std::max(norm, p);
  }
  if (local_behavior(d, Place::prime(2)) == LocalBehavior::ramified) norm = std::max<std::uint64_t>(norm, 2);
  return norm;
}

std::vector<QuadTwist> character_generators(std::uint64_t bound) {
  std::vector<QuadTwist> gens;
  if (bound <= 2) return gens;
  gens.push_back(QuadTwist::from_primes(-1, {}));
  gens.push_back(QuadTwist::from_primes(1, {2}));
  for (auto p : primes_up_to(bound - 1)) {
    if (p != 2) gens.push_back(QuadTwist::from_primes(1, {p}));
  }
  return gens;
}

std::vector<QuadTwist> enumerate_characters(std::uint64_t bound, std::uint64_t cap) {
  const auto gens = character_generators(bound);
  if (gens.size() >= 63 || (std::uint64_t{1} << gens.size()) > cap) {
    throw ResourceLimit("X(Q, " + std::to_string(bound) + ") has 2^" + std::to_string(gens.size()) +
                        " elements, above the enumeration cap");
  }
  std::vector<QuadTwist> out{QuadTwist{}};
  for (const auto& g : gens) {
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) out.push_back(out[i] * g);
  }
  return out;
}

bool sigma_trivial(const QuadTwist& d, const SigmaSet& sigma) {
  if (d.sign() < 0) return false;
  for (auto q : sigma.finite_primes) {
    if (local_behavior(d, Place::prime(q)) != LocalBehavior::trivial) return false;
  }
  return true;
}

std::uint64_t smallest_nonresidue(std::uint64_t q) {
  if (q < 3 || !is_prime(q)) throw InvalidInput("smallest_nonresidue needs an odd prime");
  for (std::uint64_t u = 2;; ++u) {
    if (legendre_symbol(u, q) == -1) return u;
  }
}

std::vector<long long> local_labels(Place v) {
  if (v.is_infinite()) return {1, -1};
  const std::uint64_t q = v.prime();
  if (q == 2) return {1, 5, -1, -5, 2, 10, -2, -10};
  const auto u = static_cast<long long>(smallest_nonresidue(q));
  const auto qq = static_cast<long long>(q);
  return {1, u, qq, u * qq};
}

unsigned local_class_index(const QuadTwist& d, Place v) {
  if (v.is_infinite()) return d.sign() < 0 ? 1 : 0;
  const std::uint64_t q = v.prime();
  const bool at_q = d.divisible_by(q);
  if (q == 2) {
    // unit part mod 8: 1 -> 0, 5 -> bit0, 7 (= -1) -> bit1, 3 (= -5) -> both
    std::uint64_t u = d.residue(16);
    if (at_q) {
      // d = 2u' with u' odd; recover u' mod 8 from d mod 16
      u = (u / 2) % 8;
    } else {
      u %= 8;
    }
    const unsigned b0 = (u == 5 || u == 3) ? 1 : 0;
    const unsigned b1 = (u == 7 || u == 3) ? 1 : 0;
    return (at_q ? 4u : 0u) + 2 * b1 + b0;
  }
  std::uint64_t unit = d.residue(q);
  if (at_q) {
    // unit = (d / q) mod q, computed from the other factors
    QuadTwist rest = d * QuadTwist::from_primes(1, {q});
    unit = rest.residue(q);
  }
  const unsigned nonresidue = legendre_symbol(unit, q) == -1 ? 1 : 0;
  return (at_q ? 2u : 0u) + nonresidue;
}

long long local_class_label(const QuadTwist& d, Place v) { return local_labels(v)[local_class_index(d, v)]; }

unsigned label_index(long long label, Place v) {
  const auto labels = local_labels(v);
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end()) {
    throw InvalidInput("label " + std::to_string(label) + " is not a canonical square-class representative at " +
                       v.to_string());
  }
  return static_cast<unsigned>(it - labels.begin());
}

}  // namespace hyptwist
