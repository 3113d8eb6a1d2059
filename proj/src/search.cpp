#include "hyptwist/search.hpp"

#include "hyptwist/errors.hpp"

#include <algorithm>

namespace hyptwist {

std::string to_string(ShiftDirection d) {
  switch (d) {
    case ShiftDirection::raise2: return "up";
    case ShiftDirection::lower2: return "down";
    case ShiftDirection::abstract_p: return "abstract_p";
  }
  return "up";
}

namespace {

bool three_odd_orbits(const CycleType& t) { return t.orbit_count() == 3 && t.all_odd(); }

bool splits_at_odd_sigma(const SigmaSet& sigma, std::uint64_t ell) {
  for (auto q : sigma.odd_primes()) {
    if (legendre_symbol(ell % q, q) != 1) return false;
  }
  return true;
}

}  // namespace

std::vector<RecipeCondition> recipe_conditions(const CurveSpec& curve, std::uint64_t ell, ShiftDirection direction) {
  if (direction == ShiftDirection::abstract_p) throw InvalidInput("abstract_p recipes carry no twist conditions");
  std::vector<RecipeCondition> out;
  const bool good = is_prime(ell) && ell != 2 && !curve.sigma().contains(ell);
  out.push_back({"ell good prime", true, good});
  if (!good) return out;
  const PrimeClass pc = classify_prime(curve, ell);
  out.push_back({"ell in P_2", true, pc.index == 2});
  if (direction == ShiftDirection::raise2) out.push_back({"three odd orbits", true, three_odd_orbits(pc.cycle_type)});
  out.push_back({"ell = 1 mod 8", true, ell % 8 == 1});
  out.push_back({"(ell|q) = +1 for odd q in Sigma", true, splits_at_odd_sigma(curve.sigma(), ell)});
  const QuadTwist d = QuadTwist::from_primes(1, {ell});
  out.push_back({"d Sigma-trivial", true, sigma_trivial(d, curve.sigma())});
  out.push_back({direction == ShiftDirection::raise2 ? "Im loc_ell = 0" : "dim Im loc_ell = 2", false, false});
  return out;
}

std::vector<TwistRecipe> find_shift_primes(const CurveSpec& curve, ShiftDirection direction, std::uint64_t limit,
                                           unsigned threads, PrimeCache* cache) {
  if (direction == ShiftDirection::abstract_p) throw InvalidInput("find_shift_primes needs direction up or down");
  std::vector<TwistRecipe> out;
  if (limit < 3) return out;
  const SigmaSet& sigma = curve.sigma();
  auto predicate = [&](const PrimeClass& pc) {
    if (pc.ell % 8 != 1 || pc.index != 2) return false;
    if (direction == ShiftDirection::raise2 && !three_odd_orbits(pc.cycle_type)) return false;
    return splits_at_odd_sigma(sigma, pc.ell);
  };
  for (const auto& pc : prime_scan(curve, predicate, 3, limit, threads, cache)) {
    TwistRecipe r;
    r.ell = pc.ell;
    r.d = QuadTwist::from_primes(1, {pc.ell});
    r.direction = direction;
    r.cycle_type = pc.cycle_type;
    r.checked_conditions = recipe_conditions(curve, pc.ell, direction);
    out.push_back(std::move(r));
  }
  return out;
}

bool verify_recipe(const CurveSpec& curve, const TwistRecipe& recipe) {
  if (!(recipe.d == QuadTwist::from_primes(1, {recipe.ell}))) return false;
  const auto fresh = recipe_conditions(curve, recipe.ell, recipe.direction);
  return std::all_of(fresh.begin(), fresh.end(), [](const RecipeCondition& c) { return !c.checkable || c.holds; });
}

bool odd_p_orbit_predicate(const CycleType& type, std::uint64_t p) {
  if (type.orbit_count() != 2) return false;
  return std::none_of(type.lengths.begin(), type.lengths.end(), [p](unsigned l) { return l % p == 0; });
}

}  // namespace hyptwist
