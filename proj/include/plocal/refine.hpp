#pragma once

#include <map>
#include <optional>
#include <vector>

#include "plocal/perm.hpp"
#include "plocal/rootspin.hpp"
#include "plocal/sym.hpp"

namespace plocal {

struct Satake {
  int n = 1;
  long p = 2;
  std::vector<SymElem> theta;  // theta_1..theta_2n, stored 0-based
  SymElem eta;
  bool ag = false;  // theta_i theta_{n+i} = eta imposed
};

// independent formal symbols theta_i = X_i, eta = E
Satake satake_free(int n, long p);
// theta_i = X_i and theta_{n+i} = E / X_i for i <= n
Satake satake_ag(int n, long p);

struct Refinement {
  Satake satake;
  Perm sigma;  // Weyl element on {1..2n}, 0-based
};

Perm tau_perm(int n);  // diag(1, w_n)
Perm delta_perm(const Perm& sigma);  // tau o sigma

// alpha_{p,r} = prod_{j<=r} p^{(2n-2j+1)/2} theta_{sigma(2n+1-j)}
SymElem hecke_eigenvalue(const Refinement& ref, int r);
SymElem up_eigenvalue(const Refinement& ref);  // alpha_p = prod_r alpha_{p,r}
SymElem integral_eigenvalue(const Refinement& ref, int r, const std::vector<long>& lambda);

bool is_regular(const Satake& s);
bool is_spin(const Refinement& ref);
// pairs {sigma(i), sigma(2n+1-i)} are the pairs {k, n+k}
bool spin_by_pairs(const Perm& sigma);

struct GSpinEigen {
  std::vector<SymElem> u;  // eigenvalue of U^GSpin_{p,r}, r = 1..n
  SymElem v;               // eigenvalue of V_p
};
// nullopt when the refinement is not spin; throws if the two routes disagree
std::optional<GSpinEigen> gspin_factorization(const Refinement& ref);
// second route: through the Weyl transfer of the dual group
GSpinEigen gspin_eigen_transfer(const Refinement& ref);

std::optional<std::vector<int>> shalika_admissible(const std::vector<SymElem>& theta, const SymElem& eta);

struct Normalized {
  Satake satake;    // theta'
  Perm conjugator;  // theta'_i = theta_{c(i)}
};
Normalized normalize_satake(const Refinement& ref);

// valuation of a single-term element; vals gives v(g) per generator, v(Y) = 1/2
mpq_class sym_valuation(const SymElem& e, const std::map<int, mpq_class>& vals);
bool noncritical_slope(const Refinement& ref, const std::vector<long>& lambda,
                       const std::map<int, mpq_class>& vals);

}  // namespace plocal
