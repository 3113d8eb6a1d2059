#include "hyptwist/errors.hpp"
#include "hyptwist/metabolic.hpp"

#include <doctest.h>

#include <bit>
#include <random>

using namespace hyptwist;

namespace {

QuadraticSpace random_space(std::mt19937_64& rng, unsigned dim) {
  std::vector<F2Vec> upper(dim);
  for (auto& r : upper) r = static_cast<F2Vec>(rng());
  return QuadraticSpace(dim, static_cast<F2Vec>(rng()), upper);
}

Subspace e_span(unsigned m) {
  std::vector<F2Vec> e;
  for (unsigned k = 0; k < m; ++k) e.push_back(F2Vec{1} << (2 * k));
  return Subspace::span(e);
}

}  // namespace

TEST_SUITE("metabolic-f2") {
  TEST_CASE("lagrangian checks in hyperbolic spaces") {
    const QuadraticSpace h = QuadraticSpace::hyperbolic(1);
    CHECK(h.q(0b01) == 0);
    CHECK(h.q(0b10) == 0);
    CHECK(h.pairing(0b01, 0b10) == 1);
    CHECK(is_lagrangian(h, Subspace::span({0b01})));
    CHECK_FALSE(is_lagrangian(h, Subspace::span({0b11})));
    const QuadraticSpace hh = QuadraticSpace::orthogonal_sum(h, h);
    CHECK(is_lagrangian(hh, Subspace::span({0b0001, 0b0100})));
    CHECK_FALSE(is_lagrangian(hh, Subspace::span({0b0001})));
    CHECK(hh.is_nondegenerate());
    CHECK_THROWS_AS(is_lagrangian(h, Subspace::span({0b100})), InvalidInput);
  }

  TEST_CASE("disjoint lagrangian counts") {
    const std::uint64_t expected[] = {1, 2, 8, 64};
    for (unsigned m = 1; m <= 4; ++m) {
      const QuadraticSpace space = QuadraticSpace::hyperbolic(m);
      CHECK(count_disjoint_lagrangians(space, e_span(m)) == expected[m - 1]);
    }
  }

  TEST_CASE("count is the same for every lagrangian of a metabolic space") {
    for (unsigned m = 1; m <= 3; ++m) {
      const QuadraticSpace space = QuadraticSpace::hyperbolic(m);
      for (const auto& x : enumerate_lagrangians(space)) {
        REQUIRE(count_disjoint_lagrangians(space, x) == (std::uint64_t{1} << (m * (m - 1) / 2)));
      }
    }
  }

  TEST_CASE("count after a change of basis") {
    // symplectic transvection v -> v + (v, w) w keeps q when q(w) = 1; use a random product of isometries
    std::mt19937_64 rng(41);
    const QuadraticSpace space = QuadraticSpace::hyperbolic(4);
    std::vector<F2Vec> image;
    for (unsigned k = 0; k < 4; ++k) image.push_back(F2Vec{1} << (2 * k));
    for (int step = 0; step < 30; ++step) {
      const F2Vec w = static_cast<F2Vec>(rng() & 0xff);
      if (space.q(w) != 1) continue;
      for (auto& v : image) {
        if (space.pairing(v, w)) v ^= w;
      }
    }
    const Subspace x = Subspace::span(image);
    REQUIRE(is_lagrangian(space, x));
    CHECK(count_disjoint_lagrangians(space, x) == 64);
  }

  TEST_CASE("pairing is symmetric and bilinear") {
    std::mt19937_64 rng(42);
    for (int t = 0; t < 1000; ++t) {
      const unsigned dim = 1 + static_cast<unsigned>(rng() % 12);
      const QuadraticSpace s = random_space(rng, dim);
      const F2Vec mask = (F2Vec{1} << dim) - 1;
      const F2Vec u = static_cast<F2Vec>(rng()) & mask, v = static_cast<F2Vec>(rng()) & mask,
                  w = static_cast<F2Vec>(rng()) & mask;
      REQUIRE(s.pairing(u, v) == s.pairing(v, u));
      REQUIRE(s.pairing(u ^ v, w) == (s.pairing(u, w) ^ s.pairing(v, w)));
      REQUIRE(s.pairing(u, u) == 0);
    }
  }

  TEST_CASE("subspace canonical form") {
    const Subspace a = Subspace::span({0b110, 0b011});
    const Subspace b = Subspace::span({0b101, 0b110, 0b011});
    CHECK(a == b);
    CHECK(a.dim() == 2);
    CHECK(a.contains(0b101));
    CHECK_FALSE(a.contains(0b100));
    CHECK(a.elements().size() == 4);
    CHECK(Subspace::span({0b001}).intersects_trivially(a));
    CHECK_FALSE(Subspace::span({0b101}).intersects_trivially(a));
  }

  TEST_CASE("relaxed minus strict is half the local dimension") {
    // global space G with a surjection onto a metabolic V; relaxed = preimage of a lagrangian, strict = kernel
    std::mt19937_64 rng(43);
    for (unsigned m = 1; m <= 4; ++m) {
      const QuadraticSpace v = QuadraticSpace::hyperbolic(m);
      const auto lagrangians = enumerate_lagrangians(v);
      for (int t = 0; t < 20; ++t) {
        const unsigned g = 2 * m + static_cast<unsigned>(rng() % 4);
        std::vector<F2Vec> images(g);
        Subspace span_images;
        do {
          for (auto& x : images) x = static_cast<F2Vec>(rng()) & ((F2Vec{1} << (2 * m)) - 1);
          span_images = Subspace::span(images);
        } while (span_images.dim() != 2 * m);
        const Subspace& lag = lagrangians[rng() % lagrangians.size()];
        unsigned relaxed = 0, strict = 0;
        for (F2Vec x = 0; x < (F2Vec{1} << g); ++x) {
          F2Vec img = 0;
          for (unsigned i = 0; i < g; ++i) {
            if ((x >> i) & 1) img ^= images[i];
          }
          if (lag.contains(img)) ++relaxed;
          if (img == 0) ++strict;
        }
        REQUIRE(std::countr_zero(relaxed) - std::countr_zero(strict) == static_cast<int>(m));
      }
    }
  }

  TEST_CASE("enumeration limits") {
    CHECK_THROWS_AS(enumerate_lagrangians(QuadraticSpace::hyperbolic(6)), ResourceLimit);
    CHECK(enumerate_lagrangians(QuadraticSpace(3, 0, {})).empty());
  }
}
