#pragma once

#include "hyptwist/curve.hpp"
#include "hyptwist/harness.hpp"
#include "hyptwist/rat_poly.hpp"

#include <filesystem>
#include <random>
#include <string>

namespace testing {

inline std::filesystem::path golden_path(const std::string& file) {
  return std::filesystem::path(HYPTWIST_GOLDEN_DIR) / file;
}

inline hyptwist::CurveSpec golden(const std::string& name) { return hyptwist::golden_curve(name); }

inline hyptwist::RatPoly random_poly(std::mt19937_64& rng, int degree, long range) {
  std::uniform_int_distribution<long> coef(-range, range);
  std::vector<hyptwist::BigRational> c;
  for (int i = 0; i < degree; ++i) c.emplace_back(coef(rng));
  long lead = 0;
  while (lead == 0) lead = coef(rng);
  c.emplace_back(lead);
  return hyptwist::RatPoly(std::move(c));
}

inline hyptwist::RatPoly random_separable(std::mt19937_64& rng, int degree, long range) {
  for (;;) {
    auto f = random_poly(rng, degree, range);
    if (hyptwist::is_separable(f)) return f;
  }
}

inline long long random_squarefree(std::mt19937_64& rng, long long bound) {
  std::uniform_int_distribution<long long> draw(-bound, bound);
  for (;;) {
    const long long v = draw(rng);
    if (v == 0) continue;
    bool sf = true;
    for (const auto& pp : hyptwist::factor_integer(hyptwist::BigInt(static_cast<long>(v)))) sf = sf && pp.exponent == 1;
    if (sf) return v;
  }
}

}  // namespace testing
