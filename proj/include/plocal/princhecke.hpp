#pragma once

#include <map>

#include "plocal/padic.hpp"
#include "plocal/refine.hpp"
#include "plocal/sym.hpp"

namespace plocal {

// f = sum_w c_w f_w^sigma, where f_w^sigma is the Iw-invariant vector in
// Ind_B^G theta^sigma supported on B w Iw with f_w^sigma(w) = 1.
struct PSVector {
  Satake satake;
  Perm sigma;
  std::map<Perm, SymElem> coeffs;  // absent means 0

  SymElem coeff(const Perm& w) const;
  friend PSVector operator+(const PSVector& a, const PSVector& b);
  PSVector scaled(const SymElem& s) const;
  bool operator==(const PSVector& o) const;
};

PSVector ps_basis(const Satake& s, const Perm& sigma, const Perm& w);
PSVector ps_fsigma(const Satake& s, const Perm& sigma);  // f_{w_2n}^sigma

// delta_B^{1/2} theta^sigma at a torus element with the given diagonal valuations
SymElem torus_character(const Satake& s, const Perm& sigma, const std::vector<long>& vals);
SymElem ps_evaluate(const PSVector& f, const Mat& g);

Mat t_pr(int size, int r, long p);  // diag(p,..,p,1,..,1) with r entries p

// U_{p,r} by coset sums at every Weyl point; the parallel and serial drivers
// produce identical results.
PSVector hecke_apply(const PSVector& f, int r);
PSVector hecke_apply_serial(const PSVector& f, int r);

}  // namespace plocal
