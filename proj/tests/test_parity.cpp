#include "support.hpp"

#include "hyptwist/errors.hpp"
#include "hyptwist/parity.hpp"

#include <doctest.h>

#include <bit>

using namespace hyptwist;
using namespace testing;

namespace {

ProfileSet x3_profiles(const std::vector<unsigned>& at2, const std::vector<unsigned>& at3) {
  ProfileSet s;
  s.add(make_profile(Place::prime(2), at2));
  s.add(make_profile(Place::prime(3), at3));
  return s;
}

// h mod 2 linear in the class-index bits, so omega_v is a character
LocalProfile linear_profile(Place v, unsigned functional) {
  std::vector<unsigned> h;
  for (std::size_t i = 0; i < local_labels(v).size(); ++i) h.push_back(std::popcount(i & functional) % 2);
  return make_profile(v, h);
}

BigRational brute_even_fraction(const CurveSpec& c, const ProfileSet& s, std::uint64_t x, unsigned r1) {
  std::uint64_t even = 0, total = 0;
  for (const auto& d : enumerate_characters(x)) {
    const int flip = parity_flip(c, d, s).flip;
    ++total;
    if (((flip < 0 ? 1u : 0u) + r1) % 2 == 0) ++even;
  }
  BigRational r(BigInt(static_cast<unsigned long>(even)), BigInt(static_cast<unsigned long>(total)));
  r.canonicalize();
  return r;
}

}  // namespace

TEST_SUITE("parity-engine") {
  TEST_CASE("local weights at the real place") {
    const ProfileSet none;
    CHECK(omega_v(golden("x3_minus_2"), Place::infinity(), -1, none) == -1);
    CHECK(omega_v(golden("h"), Place::infinity(), -1, none) == 1);
    CHECK(omega_v(golden("h"), Place::infinity(), 1, none) == 1);
    CHECK_FALSE(omega_v(golden("x3_minus_2"), Place::prime(3), 2, none).has_value());
    CHECK(omega_v(golden("x3_minus_2"), Place::prime(3), 1, none) == 1);
  }

  TEST_CASE("good prime invariants") {
    const CurveSpec c = golden("x3_minus_2");
    CHECK(good_prime_h(c, 5, LocalBehavior::ramified) == 1);
    CHECK(good_prime_h(c, 7, LocalBehavior::ramified) == 0);
    CHECK(good_prime_h(c, 31, LocalBehavior::ramified) == 2);
    CHECK(good_prime_h(c, 5, LocalBehavior::unramified_nontrivial) == 0);
    CHECK(good_prime_h(c, 31, LocalBehavior::trivial) == 0);
    CHECK_THROWS_AS(good_prime_h(c, 3, LocalBehavior::ramified), BadPrime);
  }

  TEST_CASE("flip verdicts") {
    const CurveSpec c = golden("x3_minus_2");
    const auto v73 = parity_flip(c, QuadTwist::from_integer(73), ProfileSet{});
    CHECK(v73.flip == 1);
    CHECK(v73.status == ParityStatus::relative_only);
    const auto v1 = parity_flip(c, QuadTwist::from_integer(1), ProfileSet{});
    CHECK(v1.flip == 1);
    CHECK(v1.status == ParityStatus::exact);
    const auto vm = parity_flip(c, QuadTwist::from_integer(-2), ProfileSet{});
    CHECK(vm.status == ParityStatus::unknown);
    REQUIRE(vm.missing.size() == 1);
    CHECK(vm.missing[0] == Place::prime(2));
    const auto full = parity_flip(c, QuadTwist::from_integer(-2), x3_profiles({0, 0, 0, 0, 0, 0, 1, 0}, {0, 0, 0, 0}));
    CHECK(full.status == ParityStatus::exact);
    CHECK(to_string(ParityStatus::relative_only) == "relative_only");
  }

  TEST_CASE("consistency identity by two routes") {
    const CurveSpec c = golden("x3_minus_2");
    const auto sides = consistency_sides(c, QuadTwist::from_integer(5));
    CHECK(sides.good_prime_side == -1);
    CHECK(sides.sigma_side == -1);
    for (const auto& gc : golden_curve_texts()) {
      CHECK(global_consistency_check(parse_curve_text(gc.text), QuadTwist::from_integer(1)));
    }
    std::mt19937_64 rng(61);
    for (int t = 0; t < 200; ++t) {
      REQUIRE(global_consistency_check(golden("h"), QuadTwist::from_integer(testing::random_squarefree(rng, 1000000))));
    }
  }

  TEST_CASE("sigma-trivial twists never flip") {
    for (const auto& gc : golden_curve_texts()) {
      const CurveSpec c = parse_curve_text(gc.text);
      for (long long v = 2; v <= 20000; ++v) {
        const QuadTwist d = QuadTwist::from_integer(v);
        if (!sigma_trivial(d, c.sigma()) || d.is_trivial()) continue;
        REQUIRE(parity_flip(c, d, ProfileSet{}).flip == 1);
        REQUIRE(sigma_trivial_flip(c, d) == 1);
      }
    }
  }

  TEST_CASE("flip is multiplicative when the local weights are characters") {
    const CurveSpec c = golden("x3_minus_2");
    std::mt19937_64 rng(62);
    for (unsigned f2 = 0; f2 < 8; ++f2) {
      for (unsigned f3 = 0; f3 < 4; ++f3) {
        ProfileSet s;
        s.add(linear_profile(Place::prime(2), f2));
        s.add(linear_profile(Place::prime(3), f3));
        for (int t = 0; t < 40; ++t) {
          const QuadTwist a = QuadTwist::from_integer(testing::random_squarefree(rng, 5000));
          const QuadTwist b = QuadTwist::from_integer(testing::random_squarefree(rng, 5000));
          const int fa = parity_flip(c, a, s).flip, fb = parity_flip(c, b, s).flip;
          REQUIRE(fa * fb == parity_flip(c, a * b, s).flip);
        }
      }
    }
  }

  TEST_CASE("flip depends only on the local classes at the bad places") {
    const CurveSpec c = golden("x3_minus_2");
    const ProfileSet s = x3_profiles({0, 1, 1, 0, 2, 1, 0, 1}, {0, 1, 0, 1});
    std::mt19937_64 rng(63);
    std::map<std::pair<unsigned, unsigned>, int> seen;
    for (int t = 0; t < 3000; ++t) {
      const long long v = testing::random_squarefree(rng, 100000);
      const QuadTwist d = QuadTwist::from_integer(v);
      const int flip = parity_flip(c, d, s).flip;
      REQUIRE(parity_flip(c, QuadTwist::from_integer(v * 121), s).flip == flip);
      const auto key = std::make_pair(local_class_index(d, Place::prime(2)) * 2 + local_class_index(d, Place::infinity()),
                                      local_class_index(d, Place::prime(3)));
      auto [it, fresh] = seen.emplace(key, flip);
      if (!fresh) REQUIRE(it->second == flip);
    }
    CHECK(seen.size() == 64);
  }

  TEST_CASE("real place average matches the closed form") {
    std::mt19937_64 rng(64);
    std::uniform_int_distribution<long> draw(-30, 30);
    for (int t = 0; t < 40; ++t) {
      const int n = 3 + 2 * static_cast<int>(rng() % 5);
      const int pairs = static_cast<int>(rng() % ((n - 1) / 2 + 1));
      RatPoly f{1};
      std::vector<long> used;
      for (int i = 0; i < n - 2 * pairs; ++i) {
        long r;
        do r = draw(rng);
        while (std::find(used.begin(), used.end(), r) != used.end());
        used.push_back(r);
        f *= RatPoly{-r, 1};
      }
      for (int j = 0; j < pairs; ++j) f *= RatPoly{static_cast<long>(j + 1) * (j + 1), 2 * static_cast<long>(j), 1};
      const CurveSpec c(f);
      REQUIRE(real_root_signature(f).k2 == static_cast<unsigned>(pairs));
      REQUIRE(delta_v(c, Place::infinity(), ProfileSet{}) == delta_infinity_closed_form(n));
    }
    CHECK(delta_infinity_closed_form(3) == 0);
    CHECK(delta_infinity_closed_form(5) == 1);
    CHECK(delta_v(golden("h"), Place::infinity(), ProfileSet{}) == 1);
    CHECK_THROWS_AS(delta_infinity_closed_form(4), InvalidInput);
  }

  TEST_CASE("disparity needs complete profiles") {
    const CurveSpec c = golden("x3_minus_2");
    CHECK_THROWS_AS(delta(c, ProfileSet{}, 0), UnknownProfile);
    const auto rep = delta(c, x3_profiles({0, 0, 0, 0, 0, 0, 0, 0}, {0, 0, 0, 0}), 0);
    CHECK(rep.delta == 0);
    CHECK(rep.even_density == BigRational(1, 2));
  }

  TEST_CASE("profile files") {
    const auto profiles = load_profiles(testing::golden_path("x3_minus_2.profiles"));
    REQUIRE(profiles.size() == 2);
    CHECK(profiles[0].place == Place::prime(3));
    CHECK(profiles[1].h(-1) == 1u);
    CHECK_FALSE(profiles[1].h(-2).has_value());
    CHECK(profiles[1].unknown_labels() == std::vector<long long>{-2, -10});
    try {
      parse_profiles_text("place = 3\nh[1] = 0\nh[5] = 1\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_profiles_text("h[1] = 0\n"), ParseError);
    CHECK_THROWS_AS(parse_profiles_text("place = 3\nh[2] = -1\n"), ParseError);
    CHECK_THROWS_AS(parse_profiles_text("place = 3\nh[1] = 1\n"), InvalidInput);
    CHECK_THROWS_AS(parse_profiles_text("place = 3\nplace = 3\n"), ParseError);
    CHECK_THROWS_AS(parse_profiles_text("place = 4\n"), ParseError);
    const ProfileSet bad(parse_profiles_text("place = inf\nh[-1] = 1\n"));
    CHECK_THROWS_AS(bad.h(golden("x3_minus_2"), Place::infinity(), -1), InvalidInput);
    CHECK_THROWS_AS(make_profile(Place::prime(3), {0, 1}), InvalidInput);
  }
}

TEST_SUITE("density") {
  TEST_CASE("balanced place gives exactly one half") {
    const CurveSpec c = golden("x3_minus_2");
    const ProfileSet s = x3_profiles({0, 1, 1, 0, 0, 1, 2, 3}, {0, 0, 1, 1});
    DensityOptions opt;
    opt.max_norm = 50;
    const auto r = density_scan(c, s, opt);
    CHECK(r.mode == DensityMode::exhaustive);
    CHECK(r.total == 65536);
    CHECK(r.restriction_surjective);
    CHECK(r.fraction == BigRational(1, 2));
    REQUIRE(r.predicted);
    CHECK(*r.predicted == BigRational(1, 2));
    CHECK(brute_even_fraction(c, s, 50, 0) == r.fraction);
  }

  TEST_CASE("nonzero disparity is matched exactly on a surjective group") {
    const CurveSpec c = golden("g");
    ProfileSet s;
    s.add(make_profile(Place::prime(2), {0, 1, 0, 1, 0, 0, 0, 1}));
    s.add(make_profile(Place::prime(3), {0, 1, 1, 1}));
    const auto rep = delta(c, s, 0);
    CHECK(rep.delta == BigRational(-1, 8));
    for (unsigned r1 : {0u, 1u}) {
      DensityOptions opt;
      opt.max_norm = 50;
      opt.r1_parity = r1;
      opt.threads = 4;
      const auto r = density_scan(c, s, opt);
      CHECK(r.restriction_surjective);
      CHECK(r.fraction == delta(c, s, r1).even_density);
      CHECK(r.fraction == *r.predicted);
      CHECK(r.fraction == brute_even_fraction(c, s, 50, r1));
    }
  }

  TEST_CASE("threads do not change the count") {
    const CurveSpec c = golden("x3_minus_2");
    const ProfileSet s = x3_profiles({0, 1, 1, 0, 0, 1, 0, 1}, {0, 1, 0, 1});
    DensityOptions a, b;
    a.max_norm = b.max_norm = 60;
    b.threads = 8;
    const auto ra = density_scan(c, s, a), rb = density_scan(c, s, b);
    CHECK(ra.even == rb.even);
    CHECK(ra.total == rb.total);
  }

  TEST_CASE("non-surjective restriction is reported") {
    const CurveSpec c = golden("x5_minus_x_minus_1");
    ProfileSet s;
    s.add(make_profile(Place::prime(2), {0, 0, 0, 0, 0, 0, 0, 0}));
    s.add(make_profile(Place::prime(19), {0, 1, 0, 1}));
    s.add(make_profile(Place::prime(151), {0, 0, 0, 0}));
    DensityOptions opt;
    opt.max_norm = 30;
    CHECK_FALSE(density_scan(c, s, opt).restriction_surjective);
  }

  TEST_CASE("unknown profiles restrict to the sigma-trivial subgroup") {
    DensityOptions opt;
    opt.max_norm = 50;
    const auto r = density_scan(golden("x3_minus_2"), ProfileSet{}, opt);
    CHECK(r.restricted_to_sigma_trivial);
    CHECK(r.total == 65536 / 64);
    CHECK(r.fraction == 1);
    CHECK_FALSE(r.warnings.empty());
  }

  TEST_CASE("sampling is reproducible and falls back above the cap") {
    const CurveSpec c = golden("x3_minus_2");
    const ProfileSet s = x3_profiles({0, 1, 1, 0, 0, 1, 0, 1}, {0, 0, 1, 1});
    DensityOptions opt;
    opt.sample_size = 3000;
    opt.sample_bound = 1000000;
    opt.seed = 9;
    const auto a = density_scan(c, s, opt), b = density_scan(c, s, opt);
    CHECK(a.mode == DensityMode::monte_carlo);
    CHECK(a.even == b.even);
    CHECK(a.total == 3000);
    CHECK(std::abs(a.fraction.get_d() - 0.5) < 0.05);
    DensityOptions big;
    big.max_norm = 1000;
    big.sample_size = 500;
    const auto r = density_scan(c, s, big);
    CHECK(r.mode == DensityMode::monte_carlo);
    CHECK_FALSE(r.warnings.empty());
  }
}
