#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "plocal/cyclo.hpp"

namespace plocal {

// Generators of the symbolic ring. Y is a formal square root of p with
// Y^2 = p; S stands for p^s; E for the central Satake value eta; U for a
// formal volume factor; X1..X8 for Satake parameters theta_1..theta_8.
enum Gen : int { kY = 0, kS = 1, kE = 2, kU = 3, kX1 = 4 };
constexpr int kNumGens = 12;
constexpr int kMaxX = kNumGens - kX1;

inline int gen_x(int i) { return kX1 + i - 1; }  // 1-based theta index
std::string gen_name(int g);

struct Mono {
  std::array<int16_t, kNumGens> e{};
  auto operator<=>(const Mono&) const = default;
  bool is_one() const;
  std::string str() const;
};

struct Term {
  CycNum coef;
  Mono mono;
};

bool term_less(const Term& a, const Term& b);
bool term_equal(const Term& a, const Term& b);

using Poly = std::map<Mono, CycNum>;

struct DivisionByZero : std::domain_error {
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};
struct NotDivisible : std::domain_error {
  explicit NotDivisible(const std::string& what) : std::domain_error(what) {}
};

// Rational function N / prod (1 - t_k) with N a Laurent polynomial over
// cyclotomic fields and each t_k a single nonconstant term.
class SymElem {
 public:
  SymElem() = default;
  SymElem(long v);  // NOLINT
  SymElem(const mpq_class& v);  // NOLINT
  SymElem(const CycNum& v);  // NOLINT

  static SymElem gen(Gen g, long p = 0);
  static SymElem x(int i) { return gen(static_cast<Gen>(gen_x(i))); }
  static SymElem y(long p) { return gen(kY, p); }
  static SymElem term(const CycNum& c, const Mono& m, long p = 0);
  // p^{k/2} written through Y
  static SymElem p_half_power(long p, long k);

  long prime() const { return p_; }
  SymElem with_prime(long p) const;

  const Poly& numerator() const { return num_; }
  const std::vector<Term>& denominator() const { return den_; }

  bool is_zero() const { return num_.empty(); }
  bool is_single_term() const { return den_.empty() && num_.size() == 1; }
  bool is_unit_monomial() const;  // single nonzero term after simplification
  Term single_term() const;

  SymElem simplified() const;
  SymElem inverse() const;
  SymElem pow(long k) const;

  SymElem operator-() const;
  SymElem& operator+=(const SymElem& o);
  SymElem& operator-=(const SymElem& o);
  SymElem& operator*=(const SymElem& o);
  SymElem& operator/=(const SymElem& o);
  friend SymElem operator+(SymElem a, const SymElem& b) { return a += b; }
  friend SymElem operator-(SymElem a, const SymElem& b) { return a -= b; }
  friend SymElem operator*(SymElem a, const SymElem& b) { return a *= b; }
  friend SymElem operator/(SymElem a, const SymElem& b) { return a /= b; }
  friend bool operator==(const SymElem& a, const SymElem& b);

  std::string str() const;

 private:
  friend SymElem sym_eval(const SymElem&, const std::map<int, SymElem>&);
  friend SymElem geometric_tail(const SymElem&, const SymElem&);
  void add_den_factor(Term t);
  void normalize();

  long p_ = 0;
  Poly num_;
  std::vector<Term> den_;  // sorted multiset of t with factor (1 - t)
};

// Apply a substitution of generators; generators not in the map stay formal.
SymElem sym_eval(const SymElem& e, const std::map<int, SymElem>& subst);

// first / (1 - ratio), the closed form of first * sum_k ratio^k
SymElem geometric_tail(const SymElem& first, const SymElem& ratio);

// Exact Laurent division a = q * b; throws NotDivisible.
Poly poly_divide_exact(const Poly& a, const Poly& b, long p);
Poly poly_mul(const Poly& a, const Poly& b, long p);

long combine_prime(long a, long b);

}  // namespace plocal
