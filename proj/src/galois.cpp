#include "hyptwist/galois.hpp"

#include "hyptwist/errors.hpp"
#include "hyptwist/fp_poly.hpp"
#include "hyptwist/prime_cache.hpp"

#include <algorithm>
#include <future>
#include <set>
#include <sstream>

namespace hyptwist {

bool SigmaSet::contains(std::uint64_t ell) const {
  return std::binary_search(finite_primes.begin(), finite_primes.end(), ell);
}

std::vector<Place> SigmaSet::places() const {
  std::vector<Place> out{Place::infinity()};
  for (auto q : finite_primes) out.push_back(Place::prime(q));
  return out;
}

std::vector<std::uint64_t> SigmaSet::odd_primes() const {
  std::vector<std::uint64_t> out;
  for (auto q : finite_primes) {
    if (q != 2) out.push_back(q);
  }
  return out;
}

std::string SigmaSet::to_string() const {
  std::ostringstream os;
  os << "{inf";
  for (auto q : finite_primes) os << ", " << q;
  os << '}';
  return os.str();
}

SigmaSet sigma_set(const CurveSpec& curve) {
  std::set<BigInt> primes{BigInt(2)};
  auto absorb = [&](const BigInt& n) {
    if (n == 0) return;
    for (const auto& pp : factor_integer(n)) primes.insert(pp.prime);
  };
  absorb(curve.f().lead().get_num());
  for (const auto& c : curve.f().coefficients()) absorb(c.get_den());
  absorb(curve.discriminant().get_num());
  absorb(curve.discriminant().get_den());
  SigmaSet sigma;
  for (const auto& p : primes) {
    if (!mpz_fits_ulong_p(p.get_mpz_t()) || p.get_ui() >= (1ULL << 63)) {
      throw ResourceLimit("bad prime " + p.get_str() + " exceeds the 63-bit place range");
    }
    sigma.finite_primes.push_back(p.get_ui());
  }
  return sigma;
}

CycleType::CycleType(std::vector<unsigned> l) : lengths(std::move(l)) {
  std::sort(lengths.begin(), lengths.end());
}

unsigned CycleType::degree() const noexcept {
  unsigned n = 0;
  for (unsigned l : lengths) n += l;
  return n;
}

bool CycleType::all_odd() const noexcept {
  return std::all_of(lengths.begin(), lengths.end(), [](unsigned l) { return l % 2 == 1; });
}

int CycleType::permutation_sign() const noexcept {
  return (degree() - orbit_count()) % 2 == 0 ? 1 : -1;
}

std::string CycleType::to_string() const {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < lengths.size(); ++i) os << (i ? "," : "") << lengths[i];
  os << '}';
  return os.str();
}

PrimeClass classify_prime(const CurveSpec& curve, std::uint64_t ell, PrimeCache* cache) {
  if (ell == 2 || curve.sigma().contains(ell)) {
    throw BadPrime(std::to_string(ell) + " lies in the bad set " + curve.sigma().to_string());
  }
  std::optional<CycleType> type;
  if (cache) type = cache->lookup(curve.hash(), ell);
  if (!type) {
    type = CycleType(factor_degrees(curve.f(), ell));
    if (cache) cache->insert(curve.hash(), ell, *type);
  }
  const unsigned index = type->orbit_count() - 1;
  return {ell, std::move(*type), index};
}

std::string to_string(GaloisLabel label) {
  switch (label) {
    case GaloisLabel::sn_certified: return "Sn_certified";
    case GaloisLabel::an_certified: return "An_certified";
    case GaloisLabel::inside_an: return "inside_An";
    case GaloisLabel::unknown: return "unknown";
  }
  return "unknown";
}

namespace {

bool is_small_prime(unsigned q) { return is_prime(static_cast<std::uint64_t>(q)); }

// Some power of the element is a transposition: exactly one 2-cycle, every other cycle odd.
bool yields_transposition(const CycleType& t) {
  unsigned twos = 0;
  for (unsigned l : t.lengths) {
    if (l == 2) ++twos;
    else if (l % 2 == 0) return false;
  }
  return twos == 1;
}

// A single prime-length cycle q with n - q fixed points.
std::optional<unsigned> single_prime_cycle(const CycleType& t) {
  unsigned nontrivial = 0, q = 0;
  for (unsigned l : t.lengths) {
    if (l > 1) {
      ++nontrivial;
      q = l;
    }
  }
  if (nontrivial == 1 && is_small_prime(q)) return q;
  return std::nullopt;
}

}  // namespace

GaloisVerdict galois_classify(const CurveSpec& curve, std::uint64_t sample_bound) {
  GaloisVerdict v;
  const unsigned n = static_cast<unsigned>(curve.degree());
  v.discriminant_is_square = is_rational_square(curve.discriminant());
  v.evidence.push_back(v.discriminant_is_square ? "discriminant is a rational square"
                                                : "discriminant is not a rational square");
  if (curve.declared_factors() && curve.declared_factors()->size() > 1) {
    v.known_reducible = true;
  } else if (!rational_roots(curve.f()).empty()) {
    v.known_reducible = true;
  }
  for (auto ell : primes_up_to(sample_bound)) {
    if (ell == 2 || curve.sigma().contains(ell)) continue;
    ++v.observed[classify_prime(curve, ell).cycle_type];
  }
  if (v.known_reducible) {
    v.evidence.push_back("f reducible over Q");
    v.label = GaloisLabel::unknown;
    return v;
  }
  bool n_cycle = false, n_minus_one = false, transposition = false;
  std::optional<unsigned> prime_cycle;
  for (const auto& [type, count] : v.observed) {
    if (type.lengths == std::vector<unsigned>{n}) n_cycle = true;
    if (type.lengths == std::vector<unsigned>{1, n - 1}) n_minus_one = true;
    if (yields_transposition(type)) transposition = true;
    if (auto q = single_prime_cycle(type)) {
      if (!prime_cycle || *q < *prime_cycle) prime_cycle = q;
    }
  }
  if (n_cycle) v.evidence.push_back("n-cycle observed: f irreducible, group transitive");
  const bool primitive = n_cycle && (n_minus_one || is_small_prime(n));
  if (n_minus_one) v.evidence.push_back("(n-1)-cycle observed: group 2-transitive");
  if (!v.discriminant_is_square) {
    if (transposition) v.evidence.push_back("transposition power observed");
    if (primitive && transposition) {
      v.label = GaloisLabel::sn_certified;
      v.evidence.push_back("primitive group containing a transposition is S_n");
    }
    return v;
  }
  bool an = false;
  if (n_cycle && n == 3) {
    an = true;
    v.evidence.push_back("transitive subgroup of A_3");
  } else if (primitive && prime_cycle) {
    if (*prime_cycle + 3 <= n) {
      an = true;
      v.evidence.push_back("primitive group with a " + std::to_string(*prime_cycle) + "-cycle (Jordan)");
    } else if (n == 5 && *prime_cycle == 3) {
      an = true;
      v.evidence.push_back("transitive subgroup of A_5 of order divisible by 3");
    }
  }
  v.label = an ? GaloisLabel::an_certified : GaloisLabel::inside_an;
  return v;
}

PrimeScanner::PrimeScanner(const CurveSpec& curve, PrimePredicate predicate, std::uint64_t lo, std::uint64_t hi,
                           PrimeCache* cache)
    : curve_(curve), predicate_(std::move(predicate)), cursor_(lo), hi_(hi), cache_(cache) {}

std::optional<PrimeClass> PrimeScanner::next() {
  while (cursor_ <= hi_) {
    const std::uint64_t ell = cursor_++;
    if (ell < 3 || !is_prime(ell) || curve_.sigma().contains(ell)) continue;
    PrimeClass pc = classify_prime(curve_, ell, cache_);
    if (!predicate_ || predicate_(pc)) return pc;
  }
  return std::nullopt;
}

std::vector<PrimeClass> prime_scan(const CurveSpec& curve, const PrimePredicate& predicate, std::uint64_t lo,
                                   std::uint64_t hi, unsigned threads, PrimeCache* cache) {
  std::vector<PrimeClass> out;
  if (hi < lo) return out;
  curve.sigma();  // materialize before fanning out
  threads = std::max(1u, threads);
  const std::uint64_t span = hi - lo + 1;
  const std::uint64_t chunk = std::max<std::uint64_t>(1, (span + threads - 1) / threads);
  std::vector<std::future<std::vector<PrimeClass>>> parts;
  for (std::uint64_t start = lo; start <= hi; start += chunk) {
    const std::uint64_t stop = std::min(hi, start + chunk - 1);
    parts.push_back(std::async(threads > 1 ? std::launch::async : std::launch::deferred, [&, start, stop] {
      std::vector<PrimeClass> found;
      PrimeScanner scanner(curve, predicate, start, stop, cache);
      while (auto pc = scanner.next()) found.push_back(std::move(*pc));
      return found;
    }));
    if (stop == hi) break;
  }
  for (auto& part : parts) {
    auto found = part.get();
    out.insert(out.end(), std::make_move_iterator(found.begin()), std::make_move_iterator(found.end()));
  }
  return out;
}

}  // namespace hyptwist
