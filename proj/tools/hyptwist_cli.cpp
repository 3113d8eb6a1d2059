#include "hyptwist/errors.hpp"
#include "hyptwist/harness.hpp"
#include "hyptwist/prime_cache.hpp"

#include <CLI11.hpp>

#include <iostream>
#include <memory>
#include <optional>
#include <thread>

using namespace hyptwist;

namespace {

enum Exit { ok = 0, usage = 1, verification = 2, resource = 3 };

struct Globals {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::uint64_t seed = 0;
  std::string cache;
  std::string format = "text";
};

void emit(const Globals& g, const Json& report) {
  if (g.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else {
    std::cout << render_text(report);
  }
}

std::unique_ptr<PrimeCache> open_cache(const Globals& g, const std::string& curve_file) {
  if (g.cache == "none") return std::make_unique<PrimeCache>();
  const std::string path = g.cache.empty() ? curve_file + ".primecache" : g.cache;
  auto cache = std::make_unique<PrimeCache>(path);
  if (cache->truncated_bytes() > 0) {
    std::cerr << "warning: dropped " << cache->truncated_bytes() << " bytes of a torn record in " << path << "\n";
  }
  return cache;
}

ProfileSet profiles_from(const std::string& file) {
  if (file.empty()) return ProfileSet{};
  return ProfileSet(load_profiles(file));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Selmer parity of quadratic twists of hyperelliptic Jacobians"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--threads", g.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--seed", g.seed, "random seed");
  app.add_option("--cache", g.cache, "prime cache file ('none' disables; default next to the curve file)");
  app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));

  std::string curve_file, profile_file, d_text, direction;
  std::uint64_t limit = 0, max_norm = 0, sample = 0, bound = 0;
  unsigned r1 = 0;
  std::optional<unsigned> klass;
  bool emit_json = false;

  auto* analyze = app.add_subcommand("analyze", "invariants of a curve");
  analyze->add_option("--curve", curve_file)->required()->check(CLI::ExistingFile);
  analyze->add_option("--limit", limit, "prime bound for Galois evidence")->default_val(2000);

  auto* classify = app.add_subcommand("classify-primes", "Frobenius cycle types at good primes");
  classify->add_option("--curve", curve_file)->required()->check(CLI::ExistingFile);
  classify->add_option("--limit", limit)->required();
  classify->add_option("--class", klass, "only primes in P_i");

  auto* character = app.add_subcommand("character", "local behaviour of a quadratic character");
  character->add_option("--d", d_text)->required();
  character->add_option("--curve", curve_file, "also report the classes at the curve's bad places")
      ->check(CLI::ExistingFile);

  auto* parity = app.add_subcommand("parity", "Selmer parity change under a twist");
  parity->add_option("--curve", curve_file)->required()->check(CLI::ExistingFile);
  parity->add_option("--d", d_text)->required();
  parity->add_option("--profiles", profile_file)->check(CLI::ExistingFile);
  parity->add_option("--r1", r1, "parity of the untwisted Selmer rank")->check(CLI::Range(0, 1));

  auto* scan = app.add_subcommand("scan", "even-parity density over twists");
  scan->add_option("--curve", curve_file)->required()->check(CLI::ExistingFile);
  auto* norm_opt = scan->add_option("--max-norm", max_norm, "exhaustive over characters of norm < X");
  auto* sample_opt = scan->add_option("--sample", sample, "Monte Carlo sample size");
  scan->add_option("--bound", bound, "Monte Carlo |d| bound")->needs(sample_opt);
  norm_opt->excludes(sample_opt);
  scan->add_option("--profiles", profile_file)->check(CLI::ExistingFile);
  scan->add_option("--r1", r1)->check(CLI::Range(0, 1));

  auto* find = app.add_subcommand("find-twist", "candidate primes for +-2 Selmer shifts");
  find->add_option("--curve", curve_file)->required()->check(CLI::ExistingFile);
  find->add_option("--direction", direction)->required()->check(CLI::IsMember({"up", "down"}));
  find->add_option("--limit", limit)->required();
  find->add_flag("--emit-json", emit_json);

  auto* verify = app.add_subcommand("verify-paper", "run the golden verification suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? ok : usage;
  }

  try {
    if (*analyze) {
      emit(g, analyze_report(load_curve_file(curve_file), limit));
    } else if (*classify) {
      const CurveSpec curve = load_curve_file(curve_file);
      auto cache = open_cache(g, curve_file);
      PrimePredicate pred = [&](const PrimeClass& pc) { return !klass || pc.index == *klass; };
      Json r = report_header("classify-primes", g.seed);
      r["inputs"] = curve_inputs(curve);
      r["inputs"]["limit"] = limit;
      if (klass) r["inputs"]["class"] = *klass;
      Json primes = Json::array();
      for (const auto& pc : prime_scan(curve, pred, 3, limit, g.threads, cache.get())) {
        primes.push_back({{"ell", pc.ell}, {"cycle_type", pc.cycle_type.to_string()}, {"class", pc.index}});
      }
      r["outputs"] = {{"count", primes.size()}, {"primes", primes}};
      emit(g, r);
    } else if (*character) {
      const QuadTwist d = QuadTwist::from_integer(BigInt(d_text));
      Json r = report_header("character", g.seed);
      r["inputs"] = {{"d", d_text}};
      std::vector<Place> places{Place::infinity(), Place::prime(2)};
      for (auto p : d.primes()) {
        if (p != 2) places.push_back(Place::prime(p));
      }
      Json out{{"squarefree_kernel", d.to_string()}, {"norm", twist_norm(d)}};
      std::optional<CurveSpec> curve;
      if (!curve_file.empty()) {
        curve = load_curve_file(curve_file);
        for (const Place v : curve->sigma().places()) {
          if (std::find(places.begin(), places.end(), v) == places.end()) places.push_back(v);
        }
        std::sort(places.begin(), places.end());
        out["sigma_trivial"] = sigma_trivial(d, curve->sigma());
      }
      Json local = Json::array();
      for (const Place v : places) {
        local.push_back({{"place", v.to_string()},
                         {"behavior", to_string(local_behavior(d, v))},
                         {"class_label", local_class_label(d, v)}});
      }
      out["local"] = local;
      r["outputs"] = out;
      emit(g, r);
    } else if (*parity) {
      const CurveSpec curve = load_curve_file(curve_file);
      const QuadTwist d = QuadTwist::from_integer(BigInt(d_text));
      emit(g, parity_report(curve, d, profiles_from(profile_file), r1, !profile_file.empty()));
    } else if (*scan) {
      if (max_norm == 0 && sample == 0) throw InvalidInput("scan needs --max-norm or --sample");
      const CurveSpec curve = load_curve_file(curve_file);
      DensityOptions opt;
      opt.max_norm = max_norm;
      opt.sample_size = sample;
      opt.sample_bound = bound ? bound : 1000000;
      opt.seed = g.seed;
      opt.r1_parity = r1;
      opt.threads = g.threads;
      Json r = report_header("scan", g.seed);
      r["inputs"] = curve_inputs(curve);
      r["inputs"]["profiles"] = profile_file.empty() ? "none" : "user-supplied";
      if (max_norm) r["inputs"]["max_norm"] = max_norm;
      if (sample) {
        r["inputs"]["sample"] = sample;
        r["inputs"]["bound"] = opt.sample_bound;
      }
      r["outputs"] = density_report(density_scan(curve, profiles_from(profile_file), opt));
      emit(g, r);
    } else if (*find) {
      const CurveSpec curve = load_curve_file(curve_file);
      auto cache = open_cache(g, curve_file);
      const ShiftDirection dir = direction == "up" ? ShiftDirection::raise2 : ShiftDirection::lower2;
      Json r = report_header("find-twist", g.seed);
      r["inputs"] = curve_inputs(curve);
      r["inputs"]["direction"] = direction;
      r["inputs"]["limit"] = limit;
      r["outputs"] = recipes_report(find_shift_primes(curve, dir, limit, g.threads, cache.get()));
      if (emit_json) g.format = "json";
      emit(g, r);
    } else if (*verify) {
      const VerifyReport rep = verify_paper(g.seed);
      emit(g, rep.json);
      return rep.all_pass ? ok : verification;
    }
  } catch (const ResourceLimit& e) {
    std::cerr << "resource limit: " << e.what() << "\n";
    return resource;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return usage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return usage;
  }
  return ok;
}
