#pragma once

// Hand-rolled generators for the property tests.

#include "plocal/padic.hpp"
#include "plocal/rng.hpp"
#include "plocal/sym.hpp"

namespace plocal::testgen {

inline mpq_class small_rational(Rng& r, long span = 5) {
  long num = r.uniform(-span, span);
  long den = r.uniform(1, span);
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

inline CycNum cyc(Rng& r) {
  static const long orders[] = {1, 3, 4, 5, 6, 8, 9};
  long m = orders[r.uniform(0, 6)];
  std::vector<mpq_class> counts(m, 0);
  for (long a = 0; a < m; ++a)
    if (r.uniform(0, 2) == 0) counts[a] = small_rational(r);
  return CycNum::from_counts(m, counts);
}

inline Mono mono(Rng& r, int gens = 3) {
  Mono m;
  for (int g = 0; g < gens; ++g) m.e[g == 0 ? kY : (g == 1 ? kS : gen_x(g - 1))] = static_cast<int16_t>(r.uniform(-2, 2));
  return m;
}

inline SymElem poly(Rng& r, long p, int terms = 3) {
  SymElem s;
  for (int i = 0; i < terms; ++i) s += SymElem::term(cyc(r), mono(r), p);
  return s.with_prime(p);
}

inline SymElem rational_function(Rng& r, long p) {
  SymElem s = poly(r, p, static_cast<int>(r.uniform(1, 3)));
  int dens = static_cast<int>(r.uniform(0, 2));
  for (int i = 0; i < dens; ++i) {
    Mono m = mono(r);
    if (m.is_one()) m.e[kS] = 1;
    s = geometric_tail(s, SymElem::term(CycNum(small_rational(r) + 7), m, p));
  }
  return s;
}

// integral p-adic matrix with entries in [0, p^k)
inline Mat integral_matrix(Rng& r, int n, long p, int k = 3) {
  Mat g(n, n);
  long bound = ipow(p, k);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g(i, j) = mpq_class(r.uniform(0, bound - 1));
  return g;
}

}  // namespace plocal::testgen
