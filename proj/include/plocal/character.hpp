#pragma once

#include <gmpxx.h>

#include <vector>

#include "plocal/cyclo.hpp"

namespace plocal {

// Dirichlet character of (Z/p^b)^x, extended to Q_p^x by chi(p) = 1.
class TwistCharacter {
 public:
  static TwistCharacter trivial(long p);
  // values[c] for c in 0..p^b - 1, zero at non-units
  TwistCharacter(long p, int conductor_exp, std::vector<CycNum> values);

  long prime() const { return p_; }
  int conductor_exp() const { return b_; }
  long modulus() const { return mod_; }
  bool is_trivial() const { return b_ == 0; }

  CycNum operator()(long c) const;  // c prime to p, any sign
  CycNum at(const mpq_class& x) const;  // x in Q_p^x, via x = p^v u
  TwistCharacter conj() const;
  bool operator==(const TwistCharacter& o) const;

 private:
  long p_;
  int b_;
  long mod_;
  std::vector<CycNum> vals_;
};

// every primitive character of conductor exactly p^b, in a fixed order;
// empty for p = 2, b = 1
std::vector<TwistCharacter> primitive_characters(long p, int b);

// tau(chi) = sum over units c mod p^b of chi(c) zeta_{p^b}^c; throws for b = 0
CycNum gauss_sum(const TwistCharacter& chi);

// (1/p^b) sum_{u mod p^b} zeta_{p^b}^{m u}, the volume of O against psi(p^-b m u)
CycNum additive_char_average(long p, int b, long m);

}  // namespace plocal
