#include "hyptwist/fp_poly.hpp"

#include "hyptwist/errors.hpp"

#include <algorithm>

namespace hyptwist {

FpPoly::FpPoly(std::uint64_t modulus, std::vector<std::uint64_t> coefficients)
    : mod_(modulus), c_(std::move(coefficients)) {
  for (auto& c : c_) c %= mod_;
  trim();
}

FpPoly FpPoly::reduce(const RatPoly& f, std::uint64_t modulus) {
  std::vector<std::uint64_t> c;
  c.reserve(f.coefficients().size());
  for (const auto& q : f.coefficients()) {
    const std::uint64_t den = mod_u64(q.get_den(), modulus);
    if (den == 0) throw BadPrime("prime divides a coefficient denominator");
    c.push_back(mulmod(mod_u64(q.get_num(), modulus), invmod(den, modulus), modulus));
  }
  return FpPoly(modulus, std::move(c));
}

FpPoly FpPoly::x(std::uint64_t modulus) { return FpPoly(modulus, {0, 1}); }

FpPoly FpPoly::constant(std::uint64_t modulus, std::uint64_t c) { return FpPoly(modulus, {c}); }

void FpPoly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

FpPoly FpPoly::monic() const {
  if (is_zero()) return *this;
  const std::uint64_t inv = invmod(lead(), mod_);
  FpPoly r = *this;
  for (auto& c : r.c_) c = mulmod(c, inv, mod_);
  return r;
}

FpPoly FpPoly::derivative() const {
  if (c_.size() < 2) return FpPoly(mod_);
  std::vector<std::uint64_t> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = mulmod(c_[i], i % mod_, mod_);
  return FpPoly(mod_, std::move(d));
}

FpPoly FpPoly::operator+(const FpPoly& rhs) const {
  std::vector<std::uint64_t> out(std::max(c_.size(), rhs.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t a = i < c_.size() ? c_[i] : 0, b = i < rhs.c_.size() ? rhs.c_[i] : 0;
    out[i] = a >= mod_ - b ? a - (mod_ - b) : a + b;
  }
  return FpPoly(mod_, std::move(out));
}

FpPoly FpPoly::operator-(const FpPoly& rhs) const {
  std::vector<std::uint64_t> out(std::max(c_.size(), rhs.c_.size()), 0);
  for (std::size_t i = 0; i < out.size(); ++i) {
    std::uint64_t a = i < c_.size() ? c_[i] : 0, b = i < rhs.c_.size() ? rhs.c_[i] : 0;
    out[i] = a >= b ? a - b : a + (mod_ - b);
  }
  return FpPoly(mod_, std::move(out));
}

FpPoly FpPoly::operator*(const FpPoly& rhs) const {
  if (is_zero() || rhs.is_zero()) return FpPoly(mod_);
  std::vector<std::uint64_t> out(c_.size() + rhs.c_.size() - 1, 0);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    for (std::size_t j = 0; j < rhs.c_.size(); ++j) {
      out[i + j] = (out[i + j] + mulmod(c_[i], rhs.c_[j], mod_)) % mod_;
    }
  }
  return FpPoly(mod_, std::move(out));
}

FpDivision divmod(const FpPoly& a, const FpPoly& b) {
  if (b.is_zero()) throw InvalidInput("FpPoly division by zero");
  const std::uint64_t m = a.modulus();
  if (a.degree() < b.degree()) return {FpPoly(m), a};
  std::vector<std::uint64_t> rem = a.coefficients();
  const auto& bc = b.coefficients();
  std::vector<std::uint64_t> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1), 0);
  const std::uint64_t inv = invmod(b.lead(), m);
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    const std::uint64_t q = mulmod(rem[static_cast<std::size_t>(k + b.degree())], inv, m);
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) {
      auto& r = rem[static_cast<std::size_t>(k + j)];
      const std::uint64_t t = mulmod(q, bc[static_cast<std::size_t>(j)], m);
      r = r >= t ? r - t : r + (m - t);
    }
  }
  rem.resize(static_cast<std::size_t>(b.degree()));
  return {FpPoly(m, std::move(quot)), FpPoly(m, std::move(rem))};
}

FpPoly operator%(const FpPoly& a, const FpPoly& b) { return divmod(a, b).remainder; }

FpPoly gcd(const FpPoly& a, const FpPoly& b) {
  FpPoly x = a, y = b;
  while (!y.is_zero()) {
    FpPoly r = x % y;
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

FpPoly powmod(const FpPoly& base, std::uint64_t e, const FpPoly& m) {
  FpPoly result = FpPoly::constant(m.modulus(), 1) % m;
  FpPoly b = base % m;
  while (e) {
    if (e & 1) result = (result * b) % m;
    e >>= 1;
    if (e) b = (b * b) % m;
  }
  return result;
}

namespace {

// p-th root of a polynomial whose derivative vanishes (only exponents divisible by p).
FpPoly pth_root(const FpPoly& f) {
  const std::uint64_t p = f.modulus();
  std::vector<std::uint64_t> c;
  for (std::size_t i = 0; i < f.coefficients().size(); i += p) c.push_back(f.coefficients()[i]);
  // a -> a^{1/p} is the identity on F_p
  return FpPoly(p, std::move(c));
}

void squarefree_decompose(const FpPoly& f, unsigned mult, std::vector<std::pair<FpPoly, unsigned>>& out) {
  if (f.degree() < 1) return;
  FpPoly d = f.derivative();
  if (d.is_zero()) {
    squarefree_decompose(pth_root(f), mult * static_cast<unsigned>(f.modulus()), out);
    return;
  }
  // Yun's algorithm, with the characteristic-p fix-up for the leftover p-th power
  FpPoly c = gcd(f, d);
  FpPoly w = divmod(f, c).quotient;
  unsigned i = 1;
  while (w.degree() > 0) {
    FpPoly y = gcd(w, c);
    FpPoly z = divmod(w, y).quotient;
    if (z.degree() > 0) out.emplace_back(z.monic(), i * mult);
    ++i;
    w = y;
    c = divmod(c, y).quotient;
  }
  if (c.degree() > 0) squarefree_decompose(pth_root(c), mult * static_cast<unsigned>(f.modulus()), out);
}

void equal_degree_split(const FpPoly& f, unsigned d, std::mt19937_64& rng, std::vector<FpPoly>& out) {
  if (static_cast<unsigned>(f.degree()) == d) {
    out.push_back(f.monic());
    return;
  }
  const std::uint64_t p = f.modulus();
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  while (true) {
    std::vector<std::uint64_t> c(static_cast<std::size_t>(f.degree()));
    for (auto& v : c) v = coeff(rng);
    FpPoly a(p, std::move(c));
    if (a.degree() < 1) continue;
    FpPoly g = gcd(a, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(divmod(f, g).quotient, d, rng, out);
      return;
    }
    FpPoly b(p);
    if (p == 2) {
      // trace map a + a^2 + ... + a^{2^{d-1}} plays the role of a^{(q-1)/2}
      FpPoly t = a % f;
      b = t;
      for (unsigned i = 1; i < d; ++i) {
        t = (t * t) % f;
        b = b + t;
      }
    } else {
      // (p^d - 1)/2 via repeated powering to avoid overflow
      FpPoly t = a % f;
      FpPoly acc = FpPoly::constant(p, 1);
      // a^{(p^d-1)/2} = prod_{i<d} (a^{p^i})^{(p-1)/2}
      for (unsigned i = 0; i < d; ++i) {
        acc = (acc * powmod(t, (p - 1) / 2, f)) % f;
        if (i + 1 < d) t = powmod(t, p, f);
      }
      b = acc - FpPoly::constant(p, 1);
    }
    g = gcd(b, f);
    if (g.degree() > 0 && g.degree() < f.degree()) {
      equal_degree_split(g, d, rng, out);
      equal_degree_split(divmod(f, g).quotient, d, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<std::pair<unsigned, FpPoly>> distinct_degree_factorization(const FpPoly& f) {
  std::vector<std::pair<unsigned, FpPoly>> parts;
  const std::uint64_t p = f.modulus();
  FpPoly rest = f.monic();
  FpPoly xp = FpPoly::x(p);
  FpPoly h = xp % rest;
  unsigned d = 0;
  while (rest.degree() >= 2 * static_cast<int>(d + 1)) {
    ++d;
    h = powmod(h, p, rest);
    FpPoly g = gcd(h - xp, rest);
    if (g.degree() > 0) {
      parts.emplace_back(d, g);
      rest = divmod(rest, g).quotient;
      h = h % rest;
    }
  }
  if (rest.degree() > 0) parts.emplace_back(static_cast<unsigned>(rest.degree()), rest);
  return parts;
}

std::vector<FpFactor> factor_mod(const FpPoly& f, std::mt19937_64& rng) {
  if (f.is_zero()) throw InvalidInput("factor_mod of the zero polynomial");
  std::vector<std::pair<FpPoly, unsigned>> sqf;
  squarefree_decompose(f.monic(), 1, sqf);
  std::vector<FpFactor> out;
  for (const auto& [g, mult] : sqf) {
    for (const auto& [d, part] : distinct_degree_factorization(g)) {
      std::vector<FpPoly> pieces;
      equal_degree_split(part, d, rng, pieces);
      for (auto& piece : pieces) out.push_back({std::move(piece), mult});
    }
  }
  std::sort(out.begin(), out.end(), [](const FpFactor& a, const FpFactor& b) {
    if (a.factor.degree() != b.factor.degree()) return a.factor.degree() < b.factor.degree();
    return a.factor.coefficients() < b.factor.coefficients();
  });
  return out;
}

std::vector<unsigned> factor_degrees(const RatPoly& f, std::uint64_t ell) {
  if (ell < 3 || !is_prime(ell)) throw BadPrime("factor_degrees needs an odd prime");
  FpPoly fl = FpPoly::reduce(f, ell);
  if (fl.degree() != f.degree()) throw BadPrime("prime divides the leading coefficient");
  if (gcd(fl, fl.derivative()).degree() > 0) throw BadPrime("prime divides the discriminant");
  std::vector<unsigned> degrees;
  for (const auto& [d, part] : distinct_degree_factorization(fl)) {
    for (int k = 0; k < part.degree() / static_cast<int>(d); ++k) degrees.push_back(d);
  }
  std::sort(degrees.begin(), degrees.end());
  return degrees;
}

}  // namespace hyptwist
