#include "support.hpp"

#include "hyptwist/errors.hpp"

#include <doctest.h>

using namespace hyptwist;
using namespace testing;

namespace {

// sign variations of the coefficients of (x + 1)^n f((a x + b) / (x + 1)), a bound on roots in (a, b)
unsigned descartes_bound(const RatPoly& f, const BigRational& a, const BigRational& b) {
  const RatPoly g =
      poly_compose_rational(f, RatPoly::linear(a, b), RatPoly{1, 1}, static_cast<unsigned>(f.degree()));
  unsigned v = 0;
  int prev = 0;
  for (const auto& c : g.coefficients()) {
    const int s = sgn(c);
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

// real roots in the open interval (a, b) by Descartes bisection
unsigned isolate(const RatPoly& f, const BigRational& a, const BigRational& b) {
  const unsigned v = descartes_bound(f, a, b);
  if (v <= 1) return v;
  BigRational m = (a + b) / 2;
  m.canonicalize();
  return isolate(f, a, m) + (f.sign_at(m) == 0 ? 1u : 0u) + isolate(f, m, b);
}

unsigned bisection_root_count(const RatPoly& f) {
  BigRational bound = 1;
  for (const auto& c : f.coefficients()) {
    BigRational r = abs(c / f.lead());
    if (r + 1 > bound) bound = r + 1;
  }
  return isolate(f, -bound, bound);
}

}  // namespace

TEST_SUITE("exact-algebra") {
  TEST_CASE("arithmetic and printing") {
    const RatPoly f{-2, 0, 0, 1};
    CHECK(f.degree() == 3);
    CHECK(f.to_string() == "[-2, 0, 0, 1]");
    CHECK((f - f).is_zero());
    CHECK((f - f).degree() == -1);
    CHECK(f.derivative() == RatPoly{0, 0, 3});
    CHECK(f(BigRational(3, 2)) == BigRational(11, 8));
    const auto qr = divmod(f, RatPoly{-1, 1});
    CHECK(qr.quotient == RatPoly{1, 1, 1});
    CHECK(qr.remainder == RatPoly{-1});
    CHECK(gcd(RatPoly{-1, 0, 1}, RatPoly{1, 1}) == RatPoly{1, 1});
    CHECK(RatPoly({BigRational(1, 2), BigRational(3, 4)}).primitive_part() == RatPoly{2, 3});
    CHECK_THROWS_AS(RatPoly().lead(), InvalidInput);
    CHECK_THROWS_AS(divmod(f, RatPoly()), InvalidInput);
  }

  TEST_CASE("discriminant values") {
    CHECK(discriminant(RatPoly{1672, -273, 0, 1}) == 5904900);
    CHECK(discriminant(RatPoly{-2, 0, 0, 1}) == -108);
    CHECK(discriminant(RatPoly{-1, 0, 1}) == 4);
    CHECK(discriminant(golden("h").f()) == BigRational(BigInt("-6902218100383414514082687924754023668908032000")));
    CHECK(discriminant(golden("g").f()) == 419904);
    CHECK(discriminant(golden("x5_minus_x_minus_1").f()) == 2869);
    CHECK_THROWS_AS(discriminant(RatPoly{1, 1}), InvalidInput);
  }

  TEST_CASE("discriminant against the product of root differences") {
    std::mt19937_64 rng(3);
    std::uniform_int_distribution<long> draw(-20, 20);
    for (int t = 0; t < 100; ++t) {
      std::vector<long> roots;
      while (roots.size() < 4) {
        long r = draw(rng);
        if (std::find(roots.begin(), roots.end(), r) == roots.end()) roots.push_back(r);
      }
      RatPoly f{1};
      BigRational expected = 1;
      for (std::size_t i = 0; i < roots.size(); ++i) {
        f *= RatPoly{-roots[i], 1};
        for (std::size_t j = i + 1; j < roots.size(); ++j) expected *= BigRational((roots[i] - roots[j]) * (roots[i] - roots[j]));
      }
      REQUIRE(discriminant(f) == expected);
    }
  }

  TEST_CASE("separability") {
    CHECK(is_separable(RatPoly{-2, 0, 0, 1}));
    CHECK_FALSE(is_separable(RatPoly{0, 0, 1}));
    CHECK_FALSE(is_separable(RatPoly{-1, 1} * RatPoly{-1, 1} * RatPoly{1, 1}));
  }

  TEST_CASE("discriminant is translation invariant") {
    std::mt19937_64 rng(4);
    for (int t = 0; t < 60; ++t) {
      const RatPoly f = testing::random_poly(rng, 2 + static_cast<int>(rng() % 5), 9);
      const BigRational a(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 5));
      const RatPoly shifted = poly_compose_rational(f, RatPoly::linear(1, a), RatPoly{1}, 0);
      REQUIRE(discriminant(shifted) == discriminant(f));
    }
  }

  TEST_CASE("factor discriminant nonzero iff coprime separable factors") {
    std::mt19937_64 rng(5);
    for (int t = 0; t < 80; ++t) {
      const RatPoly a = testing::random_poly(rng, 1 + static_cast<int>(rng() % 2), 3);
      const RatPoly b = testing::random_poly(rng, 1 + static_cast<int>(rng() % 2), 3);
      const bool coprime = gcd(a, b).degree() == 0;
      const bool sep = (a.degree() < 2 || is_separable(a)) && (b.degree() < 2 || is_separable(b));
      REQUIRE((discriminant(a * b) != 0) == (coprime && sep));
    }
  }

  TEST_CASE("real root signatures") {
    CHECK(real_root_signature(RatPoly{1672, -273, 0, 1}) == RealRootSignature{3, 2, 0});
    CHECK(real_root_signature(golden("h").f()) == RealRootSignature{3, 2, 1});
    CHECK(real_root_signature(RatPoly{-2, 0, 0, 1}) == RealRootSignature{1, 1, 1});
    CHECK_THROWS_AS(real_root_signature(RatPoly{-1, 0, 1}), InvalidInput);
    CHECK_THROWS_AS(real_root_signature(RatPoly{0, 0, 1, 1}), InvalidInput);
  }

  TEST_CASE("sturm count matches Descartes bisection") {
    std::mt19937_64 rng(6);
    for (int t = 0; t < 200; ++t) {
      const RatPoly f = testing::random_separable(rng, 1 + static_cast<int>(rng() % 7), 12);
      REQUIRE(count_real_roots(f) == bisection_root_count(f));
    }
  }

  TEST_CASE("sign of the discriminant is (-1)^k2") {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 150; ++t) {
      const int n = 3 + 2 * static_cast<int>(rng() % 3);
      const RatPoly f = testing::random_separable(rng, n, 15);
      const auto sig = real_root_signature(f);
      REQUIRE(sgn(discriminant(f)) == (sig.k2 % 2 ? -1 : 1));
      REQUIRE(sig.real_roots + 2 * sig.k2 == static_cast<unsigned>(n));
    }
  }

  TEST_CASE("composition with a rational function") {
    const RatPoly x2{0, 0, 1};
    CHECK(poly_compose_rational(x2, RatPoly{1, 3}, RatPoly{0, 1}, 2) == RatPoly{1, 6, 9});
    CHECK(poly_compose_rational(RatPoly{-2, 0, 0, 1}, RatPoly{1, 1}, RatPoly{1}, 0) == pow(RatPoly{1, 1}, 3) - RatPoly{2});
    CHECK_THROWS_AS(poly_compose_rational(x2, RatPoly{1, 3}, RatPoly{0, 1}, 1), InvalidInput);
  }

  TEST_CASE("substitution of the sextic yields -273 c^2 times a product of three factors") {
    const BigRational A = 1990170, B = -A;
    const RatPoly x2 = RatPoly::monomial(1, 2);
    const RatPoly h0 = -((x2 * (-810 * A) + RatPoly::constant(81 * B)) * (x2 * (81 * A) + RatPoly::constant(-90 * B)) *
                         (x2 * (-90 * A) + RatPoly::constant(-810 * B)));
    const RatPoly got = poly_compose_rational(h0, RatPoly{1, 3}, RatPoly{0, 1}, 6);
    const BigInt c = BigInt(4) * 4782969 * 25 * 7 * 13;  // 3^14 = 4782969
    const RatPoly expected = RatPoly{1, 6} * RatPoly{9, 54, 91} * RatPoly{10, 60, 91} * BigRational(-273 * c * c);
    CHECK(got == expected);
    CHECK_FALSE(got == golden("h").f() * BigRational(c * c));
  }

  TEST_CASE("rational roots") {
    const auto roots = rational_roots(RatPoly{1672, -273, 0, 1});
    REQUIRE(roots.size() == 3);
    CHECK(roots[0] == -19);
    CHECK(roots[1] == 8);
    CHECK(roots[2] == 11);
    const auto h_roots = rational_roots(golden("h").f());
    REQUIRE(h_roots.size() == 1);
    CHECK(h_roots[0] == BigRational(-1, 6));
    CHECK(rational_roots(RatPoly{-2, 0, 0, 1}).empty());
  }
}

TEST_SUITE("curve-files") {
  TEST_CASE("golden files match the embedded curves") {
    for (const auto& gc : golden_curve_texts()) {
      const CurveSpec from_file = load_curve_file(testing::golden_path(gc.name + ".curve"));
      const CurveSpec embedded = parse_curve_text(gc.text);
      CHECK(from_file.hash() == embedded.hash());
      CHECK(from_file.f() == embedded.f());
    }
  }

  TEST_CASE("validation") {
    CHECK_THROWS_AS(CurveSpec(RatPoly{-1, 0, 1}), InvalidInput);
    CHECK_THROWS_AS(CurveSpec(RatPoly{0, 0, 1, 1}), InvalidInput);
    CHECK_THROWS_AS(CurveSpec(RatPoly{-2, 0, 0, 1}, 4), InvalidInput);
    CHECK_THROWS_AS(CurveSpec(RatPoly{-2, 0, 0, 1}, 2, std::vector<RatPoly>{RatPoly{1, 1}, RatPoly{1, 1, 1}}), InvalidInput);
    const CurveSpec c(RatPoly{-2, 0, 0, 1});
    CHECK(c.discriminant() == -108);
    CHECK(c.discriminant_integer() == -108);
    CHECK(c.hash_hex().size() == 16);
  }

  TEST_CASE("parse errors carry line numbers") {
    try {
      parse_curve_text("p = 2\n# comment\nf = [1, 2, oops]\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    try {
      parse_curve_text("p = 2\n\nf = [0, 0, 1]\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
    CHECK_THROWS_AS(parse_curve_text("p = 2\n"), ParseError);
    CHECK_THROWS_AS(parse_curve_text("q = 2\nf = [-2, 0, 0, 1]\n"), ParseError);
    CHECK_THROWS_AS(parse_curve_text("f = [-2, 0, 0, 1]\nf = [-2, 0, 0, 1]\n"), ParseError);
  }

  TEST_CASE("rational coefficients round trip") {
    const CurveSpec c = parse_curve_text("f = [1/2, +3, 0, -5/3]\n");
    CHECK(c.f().coeff(0) == BigRational(1, 2));
    CHECK(c.f().coeff(3) == BigRational(-5, 3));
    CHECK(parse_curve_text(format_curve(c)).hash() == c.hash());
  }
}
