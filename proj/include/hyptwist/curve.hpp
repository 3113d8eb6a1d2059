#pragma once

#include "hyptwist/rat_poly.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace hyptwist {

struct SigmaSet;

/// The hyperelliptic curve y^2 = f(x): f odd degree >= 3, separable, with an
/// optional declared factorization checked on construction.
class CurveSpec {
public:
  CurveSpec(RatPoly f, unsigned p = 2, std::optional<std::vector<RatPoly>> declared_factors = std::nullopt);

  const RatPoly& f() const noexcept { return f_; }
  unsigned p() const noexcept { return p_; }
  int degree() const noexcept { return f_.degree(); }
  const std::optional<std::vector<RatPoly>>& declared_factors() const noexcept { return factors_; }

  const BigRational& discriminant() const noexcept { return disc_; }
  /// Delta scaled by den^2 into an integer of the same square class.
  const BigInt& discriminant_integer() const noexcept { return disc_int_; }

  /// FNV-1a over the canonical coefficient text; stable across runs.
  std::uint64_t hash() const noexcept { return hash_; }
  std::string hash_hex() const;

  /// Lazily computed (requires factoring Delta).
  const SigmaSet& sigma() const;

private:
  RatPoly f_;
  unsigned p_;
  std::optional<std::vector<RatPoly>> factors_;
  BigRational disc_;
  BigInt disc_int_;
  std::uint64_t hash_;
  struct Lazy;
  std::shared_ptr<Lazy> lazy_;
};

/// Parses the line-based curve format:
///   p = 2
///   f = [c0, c1, ..., cn]
///   factor = [..]        (optional, repeated)
/// with '#' comments; coefficients are integers or num/den.
CurveSpec parse_curve(std::istream& in);
CurveSpec parse_curve_text(const std::string& text);
CurveSpec load_curve_file(const std::filesystem::path& path);

/// Parses "[c0, c1, ...]"; throws InvalidInput on malformed input.
std::vector<BigRational> parse_coefficient_list(const std::string& text);

std::string format_curve(const CurveSpec& curve);

}  // namespace hyptwist
