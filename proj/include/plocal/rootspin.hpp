#pragma once

#include <vector>

#include "plocal/perm.hpp"
#include "plocal/sym.hpp"

namespace plocal {

// Element sgn^eps o pi of the GSpin_{2n+1} Weyl group W = S_n semidirect (Z/2)^n.
// pi acts on indices 1..n (stored 0-based); sign[i] = 1 means sgn_{i+1} is applied.
struct GSpinWeyl {
  Perm pi;
  std::vector<int> sign;
  bool operator==(const GSpinWeyl&) const = default;
};

using Weight = std::vector<long>;  // GSpin: coefficients of f_0..f_n; GL_2n: of e_1..e_2n

std::vector<GSpinWeyl> all_gspin_weyl(int n);
GSpinWeyl gspin_identity(int n);
GSpinWeyl gspin_compose(const GSpinWeyl& a, const GSpinWeyl& b);  // a o b
GSpinWeyl gspin_sign(int n, int i);                                // sgn_i, 1-based
GSpinWeyl gspin_perm(const Perm& pi);

// left actions on characters and cocharacters of the GSpin torus
Weight gspin_act_weight(const GSpinWeyl& w, const Weight& mu);
Weight gspin_act_coweight(const GSpinWeyl& w, const Weight& nu);
// same actions computed by applying generators one at a time
Weight gspin_act_weight_generators(const GSpinWeyl& w, const Weight& mu);

// e_i -> e_{sigma(i)} on GL_2n characters / cocharacters
Weight gl_act(const Perm& sigma, const Weight& v);

// the transfer maps
Weight jmath_weight(const Weight& mu);        // X*(T_GSpin) -> X*(T_GL)
Weight jmath_vee(const Weight& nu);           // X_*(T_GL) -> X_*(T_GSpin)
Perm jmath_weyl(const GSpinWeyl& w);          // W_GSpin -> W_GL
GSpinWeyl jmath_weyl_inverse(const Perm& s);  // on the image; throws otherwise

long pair(const Weight& a, const Weight& b);

// Weyl elements of GL_2n preserving purity of weights, by brute force.
std::vector<Perm> wg0_members(int n);
bool preserves_purity(const Perm& sigma);

Weight rho_gl_doubled(int n);     // 2 rho_G on e-basis
Weight rho_gspin_doubled(int n);  // 2 rho_GSpin on f-basis
Weight nu_r(int r, int size);     // (1^r, 0^{size-r})

// delta_B and its square root at a torus element with diagonal valuations v
SymElem delta_b(const std::vector<long>& v, long p);
SymElem delta_b_half(const std::vector<long>& v, long p);

}  // namespace plocal
