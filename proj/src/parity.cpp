#include "hyptwist/parity.hpp"

#include "hyptwist/errors.hpp"

#include <algorithm>
#include <fstream>
#include <future>
#include <random>
#include <sstream>

namespace hyptwist {

std::optional<unsigned> LocalProfile::h(long long label) const {
  if (label == 1) return 0u;
  auto it = entries.find(label);
  if (it == entries.end()) return std::nullopt;
  return it->second;
}

std::vector<long long> LocalProfile::unknown_labels() const {
  std::vector<long long> out;
  for (long long label : local_labels(place)) {
    if (!h(label)) out.push_back(label);
  }
  return out;
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

long long parse_integer(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '+') t.erase(0, 1);
  std::size_t used = 0;
  long long v = std::stoll(t, &used);
  if (used != t.size()) throw InvalidInput("expected an integer, got '" + text + "'");
  return v;
}

void validate_profile(const LocalProfile& p) {
  for (const auto& [label, value] : p.entries) {
    label_index(label, p.place);
    if (label == 1 && value && *value != 0) throw InvalidInput("h at the trivial character must be 0");
  }
}

}  // namespace

std::vector<LocalProfile> parse_profiles(std::istream& in) {
  std::vector<LocalProfile> out;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError(lineno, "expected 'key = value'");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    try {
      if (key == "place") {
        LocalProfile p;
        if (value == "inf" || value == "infinity") {
          p.place = Place::infinity();
        } else {
          const long long q = parse_integer(value);
          if (q < 2) throw InvalidInput("place must be a prime or inf");
          p.place = Place::prime(static_cast<std::uint64_t>(q));
        }
        for (const auto& existing : out) {
          if (existing.place == p.place) throw InvalidInput("duplicate place " + value);
        }
        out.push_back(std::move(p));
      } else if (key.size() > 3 && key.rfind("h[", 0) == 0 && key.back() == ']') {
        if (out.empty()) throw InvalidInput("h[...] before any 'place =' line");
        const long long label = parse_integer(key.substr(2, key.size() - 3));
        label_index(label, out.back().place);
        std::optional<unsigned> h;
        if (value != "unknown") {
          const long long v = parse_integer(value);
          if (v < 0) throw InvalidInput("h must be a nonnegative count");
          h = static_cast<unsigned>(v);
        }
        if (out.back().entries.count(label)) throw InvalidInput("duplicate entry for label " + std::to_string(label));
        out.back().entries[label] = h;
      } else {
        throw InvalidInput("unknown key '" + key + "'");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(lineno, e.what());
    }
  }
  for (const auto& p : out) validate_profile(p);
  return out;
}

std::vector<LocalProfile> parse_profiles_text(const std::string& text) {
  std::istringstream in(text);
  return parse_profiles(in);
}

std::vector<LocalProfile> load_profiles(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidInput("cannot open profile file " + path.string());
  return parse_profiles(in);
}

ProfileSet::ProfileSet(std::vector<LocalProfile> profiles) {
  for (auto& p : profiles) add(std::move(p));
}

void ProfileSet::add(LocalProfile profile) {
  validate_profile(profile);
  const Place v = profile.place;
  profiles_[v] = std::move(profile);
}

const LocalProfile* ProfileSet::find(Place v) const {
  auto it = profiles_.find(v);
  return it == profiles_.end() ? nullptr : &it->second;
}

std::optional<unsigned> ProfileSet::h(const CurveSpec& curve, Place v, long long label) const {
  if (label == 1) return 0u;
  if (v.is_infinite()) {
    const unsigned auto_h = real_root_signature(curve.f()).k1 - 1;
    if (const auto* p = find(v)) {
      if (auto given = p->h(label); given && *given != auto_h) {
        throw InvalidInput("profile at inf contradicts h(sign) = k1 - 1 = " + std::to_string(auto_h));
      }
    }
    return auto_h;
  }
  const auto* p = find(v);
  if (!p) return std::nullopt;
  return p->h(label);
}

LocalProfile make_profile(Place v, const std::vector<unsigned>& h_values) {
  const auto labels = local_labels(v);
  if (h_values.size() != labels.size()) throw InvalidInput("profile needs one value per local character");
  LocalProfile p;
  p.place = v;
  for (std::size_t i = 0; i < labels.size(); ++i) p.entries[labels[i]] = h_values[i];
  validate_profile(p);
  return p;
}

unsigned good_prime_h(const CurveSpec& curve, std::uint64_t ell, LocalBehavior behavior) {
  if (ell == 2 || curve.sigma().contains(ell)) throw BadPrime(std::to_string(ell) + " lies in the bad set");
  switch (behavior) {
    case LocalBehavior::trivial:
    case LocalBehavior::unramified_nontrivial:
      return 0;
    case LocalBehavior::ramified:
      return classify_prime(curve, ell).index;
    case LocalBehavior::sign:
      break;
  }
  throw InvalidInput("the sign behavior only occurs at the real place");
}

std::optional<int> omega_v(const CurveSpec& curve, Place v, long long label, const ProfileSet& profiles) {
  label_index(label, v);
  const auto h = profiles.h(curve, v, label);
  if (!h) return std::nullopt;
  const int chi_of_delta = hilbert_symbol(BigRational(static_cast<long>(label)), curve.discriminant(), v);
  return (*h % 2 ? -1 : 1) * chi_of_delta;
}

std::string to_string(ParityStatus s) {
  switch (s) {
    case ParityStatus::exact: return "exact";
    case ParityStatus::relative_only: return "relative_only";
    case ParityStatus::unknown: return "unknown";
  }
  return "unknown";
}

ParityVerdict parity_flip(const CurveSpec& curve, const QuadTwist& d, const ProfileSet& profiles) {
  ParityVerdict verdict;
  for (const Place v : curve.sigma().places()) {
    PlaceContribution c{v, local_class_label(d, v), std::nullopt, 1, std::nullopt};
    c.h = profiles.h(curve, v, c.label);
    c.hilbert = hilbert_symbol(BigRational(static_cast<long>(c.label)), curve.discriminant(), v);
    if (c.h) {
      c.omega = (*c.h % 2 ? -1 : 1) * c.hilbert;
      verdict.flip *= *c.omega;
    } else {
      verdict.missing.push_back(v);
    }
    verdict.contributions.push_back(c);
  }
  if (d.is_trivial()) {
    verdict.status = ParityStatus::exact;
  } else if (sigma_trivial(d, curve.sigma())) {
    verdict.status = ParityStatus::relative_only;
  } else {
    verdict.status = verdict.missing.empty() ? ParityStatus::exact : ParityStatus::unknown;
  }
  return verdict;
}

ConsistencyCheck consistency_sides(const CurveSpec& curve, const QuadTwist& d) {
  unsigned h_sum = 0;
  for (auto ell : d.primes()) {
    if (ell == 2 || curve.sigma().contains(ell)) continue;
    h_sum += good_prime_h(curve, ell, LocalBehavior::ramified);
  }
  int sigma_side = 1;
  const BigRational dval(d.value());
  for (const Place v : curve.sigma().places()) sigma_side *= hilbert_symbol(dval, curve.discriminant(), v);
  return {h_sum % 2 ? -1 : 1, sigma_side};
}

bool global_consistency_check(const CurveSpec& curve, const QuadTwist& d) { return consistency_sides(curve, d).holds(); }

BigRational delta_v(const CurveSpec& curve, Place v, const ProfileSet& profiles) {
  const auto labels = local_labels(v);
  long sum = 0;
  std::vector<std::string> missing;
  for (long long label : labels) {
    auto w = omega_v(curve, v, label, profiles);
    if (!w) {
      missing.push_back(std::to_string(label));
      continue;
    }
    sum += *w;
  }
  if (!missing.empty()) {
    std::string list;
    for (const auto& m : missing) list += (list.empty() ? "" : ", ") + m;
    throw UnknownProfile("unknown h at place " + v.to_string() + " for labels {" + list + "}");
  }
  BigRational r(sum, static_cast<long>(labels.size()));
  r.canonicalize();
  return r;
}

BigRational delta_infinity_closed_form(int degree) {
  if (degree % 2 == 0) throw InvalidInput("closed form for delta_inf needs odd degree");
  return degree % 4 == 1 ? BigRational(1) : BigRational(0);
}

DisparityReport delta(const CurveSpec& curve, const ProfileSet& profiles, unsigned r1_parity) {
  DisparityReport report;
  report.r1_parity = r1_parity % 2;
  BigRational product = 1;
  std::vector<std::string> problems;
  for (const Place v : curve.sigma().places()) {
    try {
      BigRational dv = delta_v(curve, v, profiles);
      product *= dv;
      report.per_place.emplace_back(v, dv);
    } catch (const UnknownProfile& e) {
      problems.push_back(e.what());
    }
  }
  if (!problems.empty()) {
    std::string msg;
    for (const auto& p : problems) msg += (msg.empty() ? "" : "; ") + p;
    throw UnknownProfile(msg);
  }
  report.delta = report.r1_parity ? BigRational(-product) : product;
  report.even_density = (1 + report.delta) / 2;
  return report;
}

namespace {

struct PlaceTable {
  Place place;
  unsigned bits;  // log2 of |X(Q_v)|
  std::vector<std::optional<int>> omega;  // by class index
};

std::vector<PlaceTable> omega_tables(const CurveSpec& curve, const ProfileSet& profiles) {
  std::vector<PlaceTable> tables;
  for (const Place v : curve.sigma().places()) {
    PlaceTable t{v, v.is_infinite() ? 1u : (v.prime() == 2 ? 3u : 2u), {}};
    for (long long label : local_labels(v)) t.omega.push_back(omega_v(curve, v, label, profiles));
    tables.push_back(std::move(t));
  }
  return tables;
}

// Rank over F_2 of the generators' local class vectors, packed place by place.
bool restriction_onto(const std::vector<std::vector<unsigned>>& gen_classes, const std::vector<PlaceTable>& tables) {
  unsigned total_bits = 0;
  for (const auto& t : tables) total_bits += t.bits;
  if (total_bits > 64) return false;
  std::vector<std::uint64_t> rows;
  for (const auto& classes : gen_classes) {
    std::uint64_t packed = 0;
    unsigned shift = 0;
    for (std::size_t i = 0; i < tables.size(); ++i) {
      packed |= static_cast<std::uint64_t>(classes[i]) << shift;
      shift += tables[i].bits;
    }
    rows.push_back(packed);
  }
  unsigned rank = 0;
  for (int bit = static_cast<int>(total_bits) - 1; bit >= 0; --bit) {
    auto it = std::find_if(rows.begin() + rank, rows.end(), [bit](std::uint64_t r) { return (r >> bit) & 1; });
    if (it == rows.end()) continue;
    std::iter_swap(rows.begin() + rank, it);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != rank && ((rows[r] >> bit) & 1)) rows[r] ^= rows[rank];
    }
    ++rank;
  }
  return rank == total_bits;
}

bool is_even(int flip, unsigned r1_parity) { return ((flip < 0 ? 1u : 0u) + r1_parity) % 2 == 0; }

BigRational ratio(std::uint64_t a, std::uint64_t b) {
  if (b == 0) return 0;
  BigRational r{BigInt(static_cast<unsigned long>(a)), BigInt(static_cast<unsigned long>(b))};
  r.canonicalize();
  return r;
}

}  // namespace

DensityResult density_scan(const CurveSpec& curve, const ProfileSet& profiles, const DensityOptions& options) {
  DensityResult result;
  result.seed = options.seed;
  const unsigned r1 = options.r1_parity % 2;
  const auto tables = omega_tables(curve, profiles);
  bool all_known = true;
  for (const auto& t : tables) {
    all_known = all_known && std::all_of(t.omega.begin(), t.omega.end(), [](const auto& w) { return w.has_value(); });
  }
  if (!all_known) {
    result.restricted_to_sigma_trivial = true;
    result.warnings.push_back("profiles incomplete on Sigma: restricted to the Sigma-trivial subgroup");
  } else {
    BigRational product = 1;
    for (const Place v : curve.sigma().places()) product *= delta_v(curve, v, profiles);
    result.predicted = (1 + (r1 ? BigRational(-product) : product)) / 2;
  }

  std::vector<QuadTwist> gens;
  bool exhaustive = options.max_norm > 0;
  if (exhaustive) {
    gens = character_generators(options.max_norm);
    if (gens.size() >= 63 || (std::uint64_t{1} << gens.size()) > options.enumeration_cap) {
      exhaustive = false;
      result.warnings.push_back("X(Q, " + std::to_string(options.max_norm) + ") exceeds the enumeration cap; sampling");
    }
  }

  if (exhaustive) {
    result.mode = DensityMode::exhaustive;
    std::vector<std::vector<unsigned>> gen_classes;
    for (const auto& g : gens) {
      std::vector<unsigned> classes;
      for (const auto& t : tables) classes.push_back(local_class_index(g, t.place));
      gen_classes.push_back(std::move(classes));
    }
    result.restriction_surjective = restriction_onto(gen_classes, tables);
    const std::size_t g = gens.size();
    // Split the subsets by their top bits; each worker walks its block in Gray-code order.
    const unsigned top_bits =
        std::min<unsigned>(static_cast<unsigned>(g), options.threads > 1 ? 4u : 0u);
    const std::size_t low = g - top_bits;
    auto walk_block = [&](std::uint64_t block) {
      std::vector<unsigned> cls(tables.size(), 0);
      for (std::size_t j = 0; j < top_bits; ++j) {
        if ((block >> j) & 1) {
          for (std::size_t i = 0; i < tables.size(); ++i) cls[i] ^= gen_classes[low + j][i];
        }
      }
      std::uint64_t even = 0, total = 0;
      const std::uint64_t count = std::uint64_t{1} << low;
      for (std::uint64_t k = 0; k < count; ++k) {
        if (k > 0) {
          const auto flip_bit = static_cast<std::size_t>(__builtin_ctzll(k));
          for (std::size_t i = 0; i < tables.size(); ++i) cls[i] ^= gen_classes[flip_bit][i];
        }
        bool trivial_on_sigma = true;
        int flip = 1;
        for (std::size_t i = 0; i < tables.size(); ++i) {
          if (cls[i] != 0) trivial_on_sigma = false;
          const auto& w = tables[i].omega[cls[i]];
          if (w) flip *= *w;
        }
        if (result.restricted_to_sigma_trivial) {
          if (!trivial_on_sigma) continue;
          flip = 1;
        }
        ++total;
        if (is_even(flip, r1)) ++even;
      }
      return std::make_pair(even, total);
    };
    std::vector<std::future<std::pair<std::uint64_t, std::uint64_t>>> parts;
    for (std::uint64_t block = 0; block < (std::uint64_t{1} << top_bits); ++block) {
      parts.push_back(std::async(options.threads > 1 ? std::launch::async : std::launch::deferred, walk_block, block));
    }
    for (auto& part : parts) {
      auto [e, t] = part.get();
      result.even += e;
      result.total += t;
    }
    result.fraction = ratio(result.even, result.total);
    return result;
  }

  result.mode = DensityMode::monte_carlo;
  result.sample_size = options.sample_size ? options.sample_size : 100000;
  std::uint64_t bound = options.sample_bound ? options.sample_bound : (options.max_norm > 1 ? options.max_norm - 1 : 0);
  if (bound < 1) throw InvalidInput("density_scan needs --max-norm or a positive sample bound");
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long long> draw(-static_cast<long long>(bound), static_cast<long long>(bound));
  std::uint64_t accepted = 0;
  while (accepted < result.sample_size) {
    const long long value = draw(rng);
    if (value == 0) continue;
    bool squarefree = true;
    for (const auto& pp : factor_integer(BigInt(static_cast<long>(value)))) {
      if (pp.exponent > 1) squarefree = false;
    }
    if (!squarefree) continue;
    ++accepted;
    const QuadTwist d = QuadTwist::from_integer(value);
    int flip = 1;
    bool trivial_on_sigma = true;
    for (const auto& t : tables) {
      const unsigned c = local_class_index(d, t.place);
      if (c != 0) trivial_on_sigma = false;
      if (t.omega[c]) flip *= *t.omega[c];
    }
    if (result.restricted_to_sigma_trivial) {
      if (!trivial_on_sigma) continue;
      flip = 1;
    }
    ++result.total;
    if (is_even(flip, r1)) ++result.even;
  }
  result.fraction = ratio(result.even, result.total);
  return result;
}

}  // namespace hyptwist
