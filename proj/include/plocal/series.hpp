#pragma once

#include <gmpxx.h>

#include <memory>
#include <string>
#include <vector>

namespace plocal {

// Z/p^M [T_0, ..., T_{k-1}] modulo monomials of total degree >= D. Immutable;
// series built over the same context share it.
class SeriesCtx {
 public:
  static std::shared_ptr<const SeriesCtx> make(long p, int precision, int degree, int nvars);

  long prime() const { return p_; }
  int precision() const { return m_; }
  int degree() const { return d_; }
  int nvars() const { return k_; }
  const mpz_class& modulus() const { return mod_; }
  // precision needed for exponents fed to binomial_power
  int log_precision() const { return m_ + d_; }
  size_t size() const { return monos_.size(); }
  const std::vector<int>& mono(size_t i) const { return monos_[i]; }
  // index of the product monomial, or -1 when truncated
  long mul_index(size_t a, size_t b) const { return mul_[a * monos_.size() + b]; }
  long index_of(const std::vector<int>& e) const;

 private:
  SeriesCtx() = default;
  long p_ = 0;
  int m_ = 0, d_ = 0, k_ = 0;
  mpz_class mod_;
  std::vector<std::vector<int>> monos_;
  std::vector<long> mul_;
};

using SeriesCtxPtr = std::shared_ptr<const SeriesCtx>;

class Series {
 public:
  explicit Series(SeriesCtxPtr ctx);
  static Series constant(SeriesCtxPtr ctx, const mpz_class& c);
  // c must be p-integral
  static Series constant(SeriesCtxPtr ctx, const mpq_class& c);
  static Series variable(SeriesCtxPtr ctx, int v);
  // (1 + T_v)^e for e in Z_p given mod p^log_precision
  static Series binomial_power(SeriesCtxPtr ctx, int v, const mpz_class& e);

  const SeriesCtxPtr& ctx() const { return ctx_; }
  const mpz_class& coeff(size_t i) const { return c_[i]; }
  mpz_class coeff(const std::vector<int>& e) const;

  Series& operator+=(const Series& o);
  Series& operator-=(const Series& o);
  Series& operator*=(const Series& o);
  Series& operator*=(const mpz_class& s);
  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(Series a, const Series& b) { return a *= b; }
  friend Series operator*(Series a, const mpz_class& s) { return a *= s; }
  bool operator==(const Series& o) const;

  bool is_zero() const;
  // value at T_v = t[v]; the t[v] must lie in pZ_p for the result to be
  // meaningful beyond the truncation
  mpz_class evaluate(const std::vector<mpz_class>& t) const;
  std::string str() const;

 private:
  void reduce();
  SeriesCtxPtr ctx_;
  std::vector<mpz_class> c_;
};

// x mod p^k for a p-adic unit x given as a rational
mpz_class unit_residue(const mpq_class& x, long p, long k);
// Teichmuller representative omega(x) mod p^k (p = 2: the sign of x mod 4)
mpz_class teichmuller(const mpq_class& x, long p, long k);
// topological generator of the 1-units: 1 + p, or 5 when p = 2
long one_unit_generator(long p);
// l with <x> = gamma^l, mod p^k, where <x> = x / omega(x)
mpz_class one_unit_log(const mpq_class& x, long p, long k);

}  // namespace plocal
