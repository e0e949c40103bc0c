#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace plocal {

long gcd_l(long a, long b);
long lcm_l(long a, long b);
long euler_phi(long m);
long ipow(long b, int e);
mpq_class qpow(const mpq_class& b, long e);

// Element of Q(zeta_M), stored as a polynomial in zeta_M of degree < phi(M)
// reduced modulo the M-th cyclotomic polynomial. Rational values use M = 1.
class CycNum {
 public:
  CycNum();
  CycNum(long v);  // NOLINT
  CycNum(const mpq_class& v);  // NOLINT

  // zeta_M^a with zeta_M = exp(2 pi i / M)
  static CycNum root(long order, long exponent);
  // sum_a counts[a] * zeta_M^a, counts indexed 0..M-1
  static CycNum from_counts(long order, const std::vector<mpq_class>& counts);

  long order() const { return m_; }
  const std::vector<mpq_class>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const;
  mpq_class rational() const;  // throws unless is_rational()

  CycNum lifted(long order) const;
  CycNum conj() const;
  CycNum inverse() const;

  CycNum operator-() const;
  CycNum& operator+=(const CycNum& o);
  CycNum& operator-=(const CycNum& o);
  CycNum& operator*=(const CycNum& o);
  friend CycNum operator+(CycNum a, const CycNum& b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum& b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum& b) { return a *= b; }
  friend bool operator==(const CycNum& a, const CycNum& b);

  // strict weak order on the stored representation, used for canonical sorting
  bool repr_less(const CycNum& o) const;

  std::string str() const;

 private:
  void canonicalize();
  long m_ = 1;
  std::vector<mpq_class> c_;
};

// cyclotomic polynomial coefficients, low degree first
const std::vector<long>& cyclotomic_poly(long m);

}  // namespace plocal
