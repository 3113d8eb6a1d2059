#include "support.hpp"

#include "hyptwist/errors.hpp"
#include "hyptwist/search.hpp"
#include "hyptwist/torsion.hpp"

#include <doctest.h>

using namespace hyptwist;
using namespace testing;

TEST_SUITE("pi-torsion-oracle") {
  TEST_CASE("fixed space dimensions") {
    CHECK(fixed_space_dim(Permutation::identity(3), 2) == 2);
    CHECK(fixed_space_dim(Permutation::from_cycles(3, {{1, 2, 3}}), 2) == 0);
    CHECK(fixed_space_dim(Permutation::from_cycles(5, {{1, 2}, {3, 4, 5}}), 2) == 1);
    CHECK_THROWS_AS(fixed_space_dim(Permutation::identity(4), 2), InvalidInput);
    CHECK_THROWS_AS(fixed_space_dim(Permutation::identity(5), 4), InvalidInput);
  }

  TEST_CASE("permutations") {
    const Permutation s = Permutation::from_cycles(4, {{1, 2, 3}});
    CHECK((s * s.inverse()).cycle_type() == Permutation::identity(4).cycle_type());
    CHECK(s.cycle_type().to_string() == "{1,3}");
    CHECK_THROWS_AS(Permutation({0, 0, 1}), InvalidInput);
    CHECK_THROWS_AS(Permutation::from_cycles(3, {{1, 4}}), InvalidInput);
  }

  TEST_CASE("row reduction agrees with the cycle count") {
    std::mt19937_64 rng(31);
    const std::uint64_t ps[] = {2, 3, 5};
    int done = 0;
    while (done < 1000) {
      const unsigned n = 1 + static_cast<unsigned>(rng() % 9);
      const std::uint64_t p = ps[rng() % 3];
      if (n % p == 0) continue;
      const Permutation s = Permutation::random(n, rng);
      REQUIRE(fixed_space_dim(s, p) == s.cycle_type().orbit_count() - 1);
      ++done;
    }
  }

  TEST_CASE("fixed space dimension is a conjugation invariant") {
    std::mt19937_64 rng(32);
    for (int t = 0; t < 300; ++t) {
      const unsigned n = 3 + 2 * static_cast<unsigned>(rng() % 3);
      const Permutation s = Permutation::random(n, rng);
      const Permutation tau = Permutation::random(n, rng);
      for (std::uint64_t p : {2, 3, 5, 7}) {
        if (n % p == 0) continue;
        REQUIRE(fixed_space_dim(tau * s * tau.inverse(), p) == fixed_space_dim(s, p));
      }
    }
  }

  TEST_CASE("orbit length predicate") {
    std::mt19937_64 rng(33);
    for (int t = 0; t < 500; ++t) {
      const CycleType type = Permutation::random(1 + static_cast<unsigned>(rng() % 9), rng).cycle_type();
      for (std::uint64_t p : {2, 3, 5}) {
        bool none = true;
        for (unsigned l : type.lengths) none = none && l % p != 0;
        REQUIRE(orbit_lengths_prime_to(type, p) == none);
      }
      if (type.all_odd()) REQUIRE(orbit_lengths_prime_to(type, 2));
      REQUIRE(odd_p_orbit_predicate(type, 3) == (type.orbit_count() == 2 && orbit_lengths_prime_to(type, 3)));
    }
  }

  TEST_CASE("rational two-torsion dimensions") {
    CHECK(rational_two_torsion_dim(golden("h")) == 2);
    CHECK(rational_two_torsion_dim(golden("g")) == 2);
    CHECK(rational_two_torsion_dim(golden("ef")) == 2);
    CHECK(rational_two_torsion_dim(golden("x3_minus_2")) == 0);
    CHECK(rational_two_torsion_dim(golden("x5_minus_x_minus_1")) == 0);
    // without declared factors: a rational root plus a certified quartic
    CHECK(rational_two_torsion_dim(CurveSpec(RatPoly{-1, 1} * RatPoly{-1, -1, 0, 0, 1})) == 1);
    CHECK(rational_two_torsion_dim(CurveSpec(RatPoly{0, -1, 0, 1})) == 2);
  }

  TEST_CASE("uncertifiable factorization is reported") {
    // (x^2 + 1)(x^2 + 2) x  with no declared factors: no good prime certifies the quartic
    const CurveSpec c(RatPoly{0, 1} * RatPoly{1, 0, 1} * RatPoly{2, 0, 1});
    CHECK_THROWS_AS(certified_irreducible_factors(c), UnknownFactorization);
    CHECK(certify_irreducible(RatPoly{-2, 0, 0, 1}, 100));
    CHECK_FALSE(certify_irreducible(RatPoly{1, 0, 1} * RatPoly{2, 0, 1}, 2000));
  }
}
