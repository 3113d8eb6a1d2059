#pragma once

#include "hyptwist/curve.hpp"
#include "hyptwist/galois.hpp"
#include "hyptwist/twist.hpp"

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace hyptwist {

/// h_v over the local characters at one bad place, keyed by canonical
/// square-class label (see local_labels). Missing or `unknown` entries are
/// unknown, except the trivial character where h is always 0.
struct LocalProfile {
  Place place = Place::infinity();
  std::map<long long, std::optional<unsigned>> entries;

  std::optional<unsigned> h(long long label) const;
  /// Labels with no known value (never includes the trivial label).
  std::vector<long long> unknown_labels() const;
};

/// Profile text format: `place = 2` / `place = q` / `place = inf` opens a
/// section; `h[label] = value` or `h[label] = unknown` fills it; `#` comments.
std::vector<LocalProfile> parse_profiles(std::istream& in);
std::vector<LocalProfile> parse_profiles_text(const std::string& text);
std::vector<LocalProfile> load_profiles(const std::filesystem::path& path);

/// The profiles a computation consults. The real place is always filled from
/// the curve (h(sign) = k1 - 1), finite places come from user data.
class ProfileSet {
public:
  ProfileSet() = default;
  explicit ProfileSet(std::vector<LocalProfile> profiles);

  void add(LocalProfile profile);
  const LocalProfile* find(Place v) const;
  /// h_v at the class with this label, or nullopt when unknown.
  std::optional<unsigned> h(const CurveSpec& curve, Place v, long long label) const;

private:
  std::map<Place, LocalProfile> profiles_;
};

/// A fully specified profile at v with the given values in local_labels order.
LocalProfile make_profile(Place v, const std::vector<unsigned>& h_values);

/// h_l at a good prime: 0 for unramified characters, b - 1 for ramified ones.
unsigned good_prime_h(const CurveSpec& curve, std::uint64_t ell, LocalBehavior behavior);

/// omega_v = (-1)^{h_v} * (label, Delta_f)_v; nullopt if h_v is unknown.
std::optional<int> omega_v(const CurveSpec& curve, Place v, long long label, const ProfileSet& profiles);

enum class ParityStatus { exact, relative_only, unknown };
std::string to_string(ParityStatus s);

struct PlaceContribution {
  Place place;
  long long label;
  std::optional<unsigned> h;
  int hilbert;
  std::optional<int> omega;
};

struct ParityVerdict {
  /// +1: r(chi) = r(1) mod 2 (product of the known omega_v when status is unknown).
  int flip = 1;
  ParityStatus status = ParityStatus::exact;
  std::vector<Place> missing;
  std::vector<PlaceContribution> contributions;
};

ParityVerdict parity_flip(const CurveSpec& curve, const QuadTwist& d, const ProfileSet& profiles);

struct ConsistencyCheck {
  int good_prime_side;  // (-1)^{sum of h_l over l | d, l outside Sigma}
  int sigma_side;       // prod_{v in Sigma} (d, Delta_f)_v
  bool holds() const noexcept { return good_prime_side == sigma_side; }
};

ConsistencyCheck consistency_sides(const CurveSpec& curve, const QuadTwist& d);
bool global_consistency_check(const CurveSpec& curve, const QuadTwist& d);

/// Average of omega_v over the local characters at v; UnknownProfile if any
/// entry is missing.
BigRational delta_v(const CurveSpec& curve, Place v, const ProfileSet& profiles);
/// 1 if n = 1 mod 4, 0 if n = 3 mod 4.
BigRational delta_infinity_closed_form(int degree);

struct DisparityReport {
  std::vector<std::pair<Place, BigRational>> per_place;
  BigRational delta;
  BigRational even_density;  // (1 + delta) / 2
  unsigned r1_parity = 0;
};

DisparityReport delta(const CurveSpec& curve, const ProfileSet& profiles, unsigned r1_parity);

struct DensityOptions {
  std::uint64_t max_norm = 0;          // exhaustive over X(Q, max_norm) when nonzero
  std::uint64_t sample_size = 0;       // Monte Carlo draws
  std::uint64_t sample_bound = 0;      // |d| <= sample_bound
  std::uint64_t seed = 0;
  std::uint64_t enumeration_cap = 1ULL << 24;
  unsigned r1_parity = 0;
  unsigned threads = 1;
};

enum class DensityMode { exhaustive, monte_carlo };

struct DensityResult {
  DensityMode mode = DensityMode::exhaustive;
  std::uint64_t total = 0;
  std::uint64_t even = 0;
  BigRational fraction;
  bool restricted_to_sigma_trivial = false;
  /// The restriction X(Q, X) -> prod_{v in Sigma} X(Q_v) is onto; then the
  /// group average of prod omega_v equals prod delta_v exactly.
  bool restriction_surjective = false;
  std::optional<BigRational> predicted;  // (1 + delta) / 2 when all of Sigma is known
  std::uint64_t seed = 0;
  std::uint64_t sample_size = 0;
  std::vector<std::string> warnings;
};

/// Even-parity fraction over X(Q, X) (or a seeded uniform sample of squarefree
/// d). Falls back to sampling when the exhaustive group exceeds the cap, and to
/// the Sigma-trivial subgroup when a profile entry is unknown.
DensityResult density_scan(const CurveSpec& curve, const ProfileSet& profiles, const DensityOptions& options);

}  // namespace hyptwist
