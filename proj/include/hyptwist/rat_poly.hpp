#pragma once

#include "hyptwist/integer.hpp"

#include <initializer_list>
#include <string>
#include <vector>

namespace hyptwist {

/// Univariate polynomial over Q, coefficients stored in ascending degree.
/// The zero polynomial has no coefficients and degree -1.
class RatPoly {
public:
  RatPoly() = default;
  explicit RatPoly(std::vector<BigRational> coefficients);
  RatPoly(std::initializer_list<long> coefficients);

  static RatPoly constant(const BigRational& c);
  static RatPoly monomial(const BigRational& c, int degree);
  /// The polynomial a*x + b.
  static RatPoly linear(const BigRational& a, const BigRational& b);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<BigRational>& coefficients() const noexcept { return coeffs_; }
  BigRational coeff(int i) const;
  const BigRational& lead() const;

  BigRational operator()(const BigRational& x) const;
  int sign_at(const BigRational& x) const;

  RatPoly derivative() const;
  RatPoly monic() const;
  /// Positive rational multiple with coprime integer coefficients.
  RatPoly primitive_part() const;

  RatPoly& operator+=(const RatPoly& rhs);
  RatPoly& operator-=(const RatPoly& rhs);
  RatPoly& operator*=(const RatPoly& rhs);
  RatPoly& operator*=(const BigRational& rhs);

  friend RatPoly operator+(RatPoly a, const RatPoly& b) { return a += b; }
  friend RatPoly operator-(RatPoly a, const RatPoly& b) { return a -= b; }
  friend RatPoly operator*(RatPoly a, const RatPoly& b) { return a *= b; }
  friend RatPoly operator*(RatPoly a, const BigRational& b) { return a *= b; }
  friend RatPoly operator*(const BigRational& b, RatPoly a) { return a *= b; }
  RatPoly operator-() const;

  friend bool operator==(const RatPoly& a, const RatPoly& b) { return a.coeffs_ == b.coeffs_; }

  std::string to_string() const;

private:
  void trim();
  std::vector<BigRational> coeffs_;
};

struct PolyDivision {
  RatPoly quotient;
  RatPoly remainder;
};

PolyDivision divmod(const RatPoly& a, const RatPoly& b);
RatPoly pow(const RatPoly& p, unsigned e);
/// Monic gcd (zero if both inputs are zero).
RatPoly gcd(const RatPoly& a, const RatPoly& b);

BigRational resultant(const RatPoly& f, const RatPoly& g);

/// Delta_f = (-1)^{n(n-1)/2} Res(f, f') / lead(f), which equals
/// lead(f)^{2n-2} * prod_{i<j} (a_i - a_j)^2.
BigRational discriminant(const RatPoly& f);

bool is_separable(const RatPoly& f);

/// Sturm chain of f with positive primitive-part scaling at each step.
std::vector<RatPoly> sturm_sequence(const RatPoly& f);
/// Distinct real roots of a nonzero polynomial.
unsigned count_real_roots(const RatPoly& f);

struct RealRootSignature {
  unsigned real_roots;
  unsigned k1;  // real_roots = 2*k1 - 1
  unsigned k2;  // number of complex-conjugate pairs
  friend bool operator==(const RealRootSignature&, const RealRootSignature&) = default;
};

RealRootSignature real_root_signature(const RatPoly& f);

/// den^clear_degree * f(num/den) as an exact polynomial.
RatPoly poly_compose_rational(const RatPoly& f, const RatPoly& num, const RatPoly& den,
                              unsigned clear_degree);

/// Distinct rational roots, ascending.
std::vector<BigRational> rational_roots(const RatPoly& f);

}  // namespace hyptwist
