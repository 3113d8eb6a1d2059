#include "hyptwist/symbols.hpp"

#include "hyptwist/errors.hpp"

namespace hyptwist {

Place Place::prime(std::uint64_t q) {
  if (!is_prime(q)) throw InvalidInput("place: " + std::to_string(q) + " is not prime");
  return Place(q);
}

std::string Place::to_string() const { return is_infinite() ? "inf" : std::to_string(q_); }

int kronecker_symbol(const BigInt& a_in, const BigInt& m_in) {
  if (m_in == 0) throw InvalidInput("kronecker symbol with m = 0");
  BigInt a = a_in, m = m_in;
  int result = 1;
  if (m < 0) {
    m = -m;
    if (a < 0) result = -result;
  }
  // factor out powers of two from m using (a|2)
  const unsigned long twos = mpz_scan1(m.get_mpz_t(), 0);
  if (twos > 0) {
    if (mpz_even_p(a.get_mpz_t())) return 0;
    mpz_fdiv_q_2exp(m.get_mpz_t(), m.get_mpz_t(), twos);
    const unsigned long a8 = mpz_fdiv_ui(a.get_mpz_t(), 8);
    if ((twos & 1) && (a8 == 3 || a8 == 5)) result = -result;
  }
  // Jacobi symbol (a|m) with m odd positive
  a %= m;
  if (a < 0) a += m;
  while (a != 0) {
    const unsigned long z = mpz_scan1(a.get_mpz_t(), 0);
    mpz_fdiv_q_2exp(a.get_mpz_t(), a.get_mpz_t(), z);
    const unsigned long m8 = mpz_fdiv_ui(m.get_mpz_t(), 8);
    if ((z & 1) && (m8 == 3 || m8 == 5)) result = -result;
    if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && m8 % 4 == 3) result = -result;
    std::swap(a, m);
    a %= m;
  }
  return m == 1 ? result : 0;
}

int kronecker_symbol(long long a, long long m) { return kronecker_symbol(BigInt(static_cast<long>(a)), BigInt(static_cast<long>(m))); }

int legendre_symbol(std::uint64_t a, std::uint64_t q) {
  a %= q;
  if (a == 0) return 0;
  return powmod(a, (q - 1) / 2, q) == 1 ? 1 : -1;
}

namespace {

struct Split {
  unsigned exponent;
  BigInt unit;
};

Split split_at(BigInt n, std::uint64_t q) {
  unsigned e = 0;
  while (mpz_divisible_ui_p(n.get_mpz_t(), q)) {
    mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), q);
    ++e;
  }
  return {e, n};
}

int hilbert_integers(const BigInt& a, const BigInt& b, Place v) {
  if (v.is_infinite()) return (a < 0 && b < 0) ? -1 : 1;
  const std::uint64_t q = v.prime();
  const Split sa = split_at(a, q), sb = split_at(b, q);
  if (q == 2) {
    const unsigned long u = mpz_fdiv_ui(sa.unit.get_mpz_t(), 8);
    const unsigned long w = mpz_fdiv_ui(sb.unit.get_mpz_t(), 8);
    const unsigned long eps_u = ((u - 1) / 2) & 1, eps_w = ((w - 1) / 2) & 1;
    const unsigned long om_u = ((u * u - 1) / 8) & 1, om_w = ((w * w - 1) / 8) & 1;
    const unsigned long e = eps_u * eps_w + (sa.exponent & 1) * om_w + (sb.exponent & 1) * om_u;
    return (e & 1) ? -1 : 1;
  }
  int s = 1;
  if ((sa.exponent & 1) && (sb.exponent & 1) && q % 4 == 3) s = -s;
  if (sb.exponent & 1) s *= legendre_symbol(mod_u64(sa.unit, q), q);
  if (sa.exponent & 1) s *= legendre_symbol(mod_u64(sb.unit, q), q);
  return s;
}

}  // namespace

int hilbert_symbol(const BigRational& a, const BigRational& b, Place v) {
  if (a == 0 || b == 0) throw InvalidInput("hilbert symbol of zero");
  // n/d and n*d differ by the square d^2
  return hilbert_integers(a.get_num() * a.get_den(), b.get_num() * b.get_den(), v);
}

}  // namespace hyptwist
