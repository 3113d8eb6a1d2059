#pragma once

#include "hyptwist/curve.hpp"
#include "hyptwist/galois.hpp"
#include "hyptwist/twist.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace hyptwist {

class PrimeCache;

/// raise2 / lower2: +-2 shifts driven by a P_2 prime; abstract_p: the odd-p
/// cycle-type predicate only.
enum class ShiftDirection { raise2, lower2, abstract_p };
std::string to_string(ShiftDirection d);

struct RecipeCondition {
  std::string name;
  bool checkable;  // false: needs cocycle data, never evaluated
  bool holds;
};

/// A candidate twist: all locally checkable conditions hold, the Selmer
/// localization conditions are listed as unverified.
struct TwistRecipe {
  std::uint64_t ell = 0;
  QuadTwist d;
  ShiftDirection direction = ShiftDirection::raise2;
  CycleType cycle_type;
  std::vector<RecipeCondition> checked_conditions;
};

/// Recomputes every checkable condition for d = ell from scratch.
std::vector<RecipeCondition> recipe_conditions(const CurveSpec& curve, std::uint64_t ell, ShiftDirection direction);

/// Good primes ell <= limit carrying a Sigma-trivial twist d = ell: ell in P_2
/// (for raise2 additionally with three odd orbits), ell = 1 mod 8 and
/// (ell | q) = +1 for every odd q in Sigma. Ascending.
std::vector<TwistRecipe> find_shift_primes(const CurveSpec& curve, ShiftDirection direction, std::uint64_t limit,
                                           unsigned threads = 1, PrimeCache* cache = nullptr);

/// True iff the recipe's checkable conditions all hold on recomputation.
bool verify_recipe(const CurveSpec& curve, const TwistRecipe& recipe);

/// Exactly two orbits, neither of length divisible by p.
bool odd_p_orbit_predicate(const CycleType& type, std::uint64_t p);

}  // namespace hyptwist
