#pragma once

#include "hyptwist/curve.hpp"
#include "hyptwist/parity.hpp"
#include "hyptwist/search.hpp"

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace hyptwist {

using Json = nlohmann::ordered_json;

inline constexpr const char* tool_version = "0.1.0";
inline constexpr int report_schema_version = 1;

struct GoldenCurve {
  std::string name;
  std::string text;  // curve file contents
};

/// Golden curves: x3_minus_2, ef, h, g, x5_minus_x_minus_1.
const std::vector<GoldenCurve>& golden_curve_texts();
CurveSpec golden_curve(const std::string& name);
/// All golden curves, in golden_curve_texts order.
std::vector<CurveSpec> test_curves();

/// Common report preamble: schema, tool version, command, seed.
Json report_header(const std::string& command, std::uint64_t seed);
Json curve_inputs(const CurveSpec& curve);

Json analyze_report(const CurveSpec& curve, std::uint64_t galois_bound);
Json parity_report(const CurveSpec& curve, const QuadTwist& d, const ProfileSet& profiles, unsigned r1_parity,
                   bool profiles_given);
Json density_report(const DensityResult& result);
Json recipes_report(const std::vector<TwistRecipe>& recipes);

/// Flip of a Sigma-trivial twist recomputed place by place: omega_v at Sigma
/// (all trivial classes) times omega_l = (-1)^{b-1} (d, Delta)_l at every good
/// l | d. InvalidInput if d is not Sigma-trivial.
int sigma_trivial_flip(const CurveSpec& curve, const QuadTwist& d);

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string outcome;  // "pass", "fail" or "flagged_mismatch"
  Json details;
};

CheckResult check_torsion_dims();
CheckResult check_transformation();
CheckResult check_sigma_trivial_flips(std::uint64_t seed, unsigned count = 200);
CheckResult check_fixed_space_sweep(std::uint64_t seed, unsigned trials = 1000);
CheckResult check_lagrangian_counts(unsigned max_m = 3);
CheckResult check_consistency_sweep(std::uint64_t seed, unsigned per_curve = 100);

struct VerifyReport {
  Json json;
  bool all_pass = false;
};

VerifyReport verify_paper(std::uint64_t seed);

/// Indented `key: value` rendering of a report for text mode.
std::string render_text(const Json& report);

}  // namespace hyptwist
