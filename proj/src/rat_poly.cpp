#include "hyptwist/rat_poly.hpp"

#include "hyptwist/errors.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace hyptwist {

RatPoly::RatPoly(std::vector<BigRational> coefficients) : coeffs_(std::move(coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  trim();
}

RatPoly::RatPoly(std::initializer_list<long> coefficients) {
  coeffs_.reserve(coefficients.size());
  for (long c : coefficients) coeffs_.emplace_back(c);
  trim();
}

RatPoly RatPoly::constant(const BigRational& c) { return RatPoly(std::vector<BigRational>{c}); }

RatPoly RatPoly::monomial(const BigRational& c, int degree) {
  std::vector<BigRational> v(static_cast<std::size_t>(degree) + 1);
  v.back() = c;
  return RatPoly(std::move(v));
}

RatPoly RatPoly::linear(const BigRational& a, const BigRational& b) {
  return RatPoly(std::vector<BigRational>{b, a});
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

BigRational RatPoly::coeff(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

const BigRational& RatPoly::lead() const {
  if (is_zero()) throw InvalidInput("leading coefficient of the zero polynomial");
  return coeffs_.back();
}

BigRational RatPoly::operator()(const BigRational& x) const {
  BigRational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

int RatPoly::sign_at(const BigRational& x) const { return sgn((*this)(x)); }

RatPoly RatPoly::derivative() const {
  if (degree() < 1) return {};
  std::vector<BigRational> d(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<long>(i);
  return RatPoly(std::move(d));
}

RatPoly RatPoly::monic() const {
  if (is_zero()) return {};
  return *this * BigRational(1 / lead());
}

RatPoly RatPoly::primitive_part() const {
  if (is_zero()) return {};
  BigInt den_lcm = 1, num_gcd = 0;
  for (const auto& c : coeffs_) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
  }
  std::vector<BigRational> scaled;
  scaled.reserve(coeffs_.size());
  for (const auto& c : coeffs_) {
    BigInt v = c.get_num() * (den_lcm / c.get_den());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
    scaled.emplace_back(v);
  }
  for (auto& c : scaled) c /= num_gcd;
  return RatPoly(std::move(scaled));
}

RatPoly& RatPoly::operator+=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator-=(const RatPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const RatPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<BigRational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RatPoly& RatPoly::operator*=(const BigRational& rhs) {
  for (auto& c : coeffs_) c *= rhs;
  trim();
  return *this;
}

RatPoly RatPoly::operator-() const {
  RatPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

std::string RatPoly::to_string() const {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) os << ", ";
    os << coeffs_[i].get_str();
  }
  os << ']';
  return os.str();
}

PolyDivision divmod(const RatPoly& a, const RatPoly& b) {
  if (b.is_zero()) throw InvalidInput("polynomial division by zero");
  if (a.degree() < b.degree()) return {RatPoly{}, a};
  std::vector<BigRational> rem = a.coefficients();
  std::vector<BigRational> quot(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coefficients();
  const BigRational inv_lead = 1 / b.lead();
  for (int k = a.degree() - b.degree(); k >= 0; --k) {
    BigRational q = rem[static_cast<std::size_t>(k + b.degree())] * inv_lead;
    quot[static_cast<std::size_t>(k)] = q;
    if (q == 0) continue;
    for (int j = 0; j <= b.degree(); ++j) rem[static_cast<std::size_t>(k + j)] -= q * bc[static_cast<std::size_t>(j)];
  }
  rem.resize(static_cast<std::size_t>(std::max(b.degree(), 0)));
  return {RatPoly(std::move(quot)), RatPoly(std::move(rem))};
}

RatPoly pow(const RatPoly& p, unsigned e) {
  RatPoly result = RatPoly::constant(1);
  RatPoly base = p;
  while (e) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return result;
}

RatPoly gcd(const RatPoly& a, const RatPoly& b) {
  RatPoly x = a.primitive_part(), y = b.primitive_part();
  while (!y.is_zero()) {
    RatPoly r = divmod(x, y).remainder.primitive_part();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

BigRational resultant(const RatPoly& f, const RatPoly& g) {
  if (f.is_zero() || g.is_zero()) return 0;
  BigRational scale = 1;
  RatPoly a = f, b = g;
  // Res(a, b) = (-1)^{mn} lead(b)^{m - deg r} Res(b, r), r = a mod b
  while (true) {
    const int m = a.degree(), n = b.degree();
    if (n == 0) {
      BigRational c = b.lead();
      BigRational p = 1;
      for (int i = 0; i < m; ++i) p *= c;
      return scale * p;
    }
    if (m == 0) {
      BigRational c = a.lead();
      BigRational p = 1;
      for (int i = 0; i < n; ++i) p *= c;
      return scale * p;
    }
    RatPoly r = divmod(a, b).remainder;
    if (r.is_zero()) return 0;
    if ((static_cast<long>(m) * n) % 2 == 1) scale = -scale;
    const BigRational& lb = b.lead();
    for (int i = 0; i < m - r.degree(); ++i) scale *= lb;
    a = std::move(b);
    b = std::move(r);
  }
}

BigRational discriminant(const RatPoly& f) {
  const int n = f.degree();
  if (n < 2) throw InvalidInput("discriminant requires degree >= 2");
  BigRational res = resultant(f, f.derivative());
  if ((static_cast<long>(n) * (n - 1) / 2) % 2 == 1) res = -res;
  return res / f.lead();
}

bool is_separable(const RatPoly& f) {
  if (f.is_zero()) throw InvalidInput("separability of the zero polynomial");
  if (f.degree() == 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

std::vector<RatPoly> sturm_sequence(const RatPoly& f) {
  std::vector<RatPoly> seq;
  if (f.is_zero()) return seq;
  seq.push_back(f.primitive_part());
  RatPoly d = f.derivative();
  if (d.is_zero()) return seq;
  seq.push_back(d.primitive_part());
  while (true) {
    RatPoly r = divmod(seq[seq.size() - 2], seq.back()).remainder;
    if (r.is_zero()) break;
    seq.push_back((-r).primitive_part());
  }
  return seq;
}

namespace {

unsigned sign_changes(const std::vector<int>& signs) {
  unsigned changes = 0;
  int last = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

}  // namespace

unsigned count_real_roots(const RatPoly& f) {
  if (f.is_zero()) throw InvalidInput("real roots of the zero polynomial");
  auto seq = sturm_sequence(f);
  std::vector<int> at_neg, at_pos;
  for (const auto& p : seq) {
    int s = sgn(p.lead());
    at_pos.push_back(s);
    at_neg.push_back(p.degree() % 2 == 0 ? s : -s);
  }
  return sign_changes(at_neg) - sign_changes(at_pos);
}

RealRootSignature real_root_signature(const RatPoly& f) {
  if (f.is_zero() || f.degree() % 2 == 0) throw InvalidInput("real_root_signature requires odd degree");
  if (!is_separable(f)) throw InvalidInput("real_root_signature requires a separable polynomial");
  const unsigned r = count_real_roots(f);
  return {r, (r + 1) / 2, (static_cast<unsigned>(f.degree()) - r) / 2};
}

RatPoly poly_compose_rational(const RatPoly& f, const RatPoly& num, const RatPoly& den,
                              unsigned clear_degree) {
  if (den.is_zero()) throw InvalidInput("poly_compose_rational: zero denominator");
  const unsigned full = std::max<unsigned>(clear_degree, static_cast<unsigned>(std::max(f.degree(), 0)));
  // den^full * f(num/den) is always a polynomial; divide out the surplus power afterwards.
  RatPoly acc;
  for (int i = 0; i <= f.degree(); ++i) {
    if (f.coeff(i) == 0) continue;
    acc += f.coeff(i) * (pow(num, static_cast<unsigned>(i)) * pow(den, full - static_cast<unsigned>(i)));
  }
  if (full == clear_degree) return acc;
  auto [q, r] = divmod(acc, pow(den, full - clear_degree));
  if (!r.is_zero()) throw InvalidInput("poly_compose_rational: result is not a polynomial");
  return q;
}

namespace {

std::vector<BigInt> divisors_of(const BigInt& n) {
  std::vector<BigInt> divs{1};
  for (const auto& [p, e] : factor_integer(n)) {
    const std::size_t base = divs.size();
    BigInt pk = 1;
    for (unsigned k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  return divs;
}

}  // namespace

std::vector<BigRational> rational_roots(const RatPoly& f) {
  if (f.is_zero()) throw InvalidInput("rational roots of the zero polynomial");
  std::set<BigRational> roots;
  RatPoly g = f.primitive_part();
  // strip x^k so the constant term is nonzero
  int shift = 0;
  while (g.coeff(shift) == 0) ++shift;
  if (shift > 0) {
    roots.insert(BigRational(0));
    std::vector<BigRational> c(g.coefficients().begin() + shift, g.coefficients().end());
    g = RatPoly(std::move(c));
  }
  if (g.degree() >= 1) {
    const BigInt a0 = g.coeff(0).get_num();
    const BigInt an = g.lead().get_num();
    const auto ps = divisors_of(a0);
    const auto qs = divisors_of(an);
    for (const auto& p : ps) {
      for (const auto& q : qs) {
        for (int s : {1, -1}) {
          BigRational cand(s * p, q);
          cand.canonicalize();
          if (g(cand) == 0) roots.insert(cand);
        }
      }
    }
  }
  return {roots.begin(), roots.end()};
}

}  // namespace hyptwist
