#pragma once

#include <stdexcept>
#include <utility>
#include <vector>

#include "plocal/character.hpp"
#include "plocal/padic.hpp"
#include "plocal/princhecke.hpp"
#include "plocal/refine.hpp"
#include "plocal/sym.hpp"
#include "plocal/weight.hpp"

namespace plocal {

struct TruncationError : std::runtime_error {
  explicit TruncationError(const std::string& what) : std::runtime_error(what) {}
};

struct ZetaResult {
  enum class Source { kClosedForm, kOracle };
  SymElem value;
  Source source;
};

// z = diag(p^{n-1}, ..., p, 1)
Mat z_matrix(int n, long p);
// (0 1; 1 0)(1 X; 0 1)(k, k)(w_n z^{2 beta}, 1)
Mat shalika_integrand_point(const Mat& k, const Mat& x, int beta, long p);
// the 2n x 2n Weyl element (0 w_n; delta w_n 0)
Perm shalika_cell_label(const Perm& delta);

// delta = w_n, k in B_n(Z_p) w_n Iw_n, k^-1 X in w_n z^{2 beta} M_n(Z_p)
bool shalika_support_predicate(const Perm& delta, const Mat& k, const Mat& x, int beta, long p);
// the same condition read off the Bruhat cell of the assembled matrix
bool shalika_cell_membership(const Perm& delta, const Mat& k, const Mat& x, int beta, long p);

// Theta(B) for the decomposition B (0 w_n; 1 0) I of the assembled matrix;
// theta holds Theta(p) on the 2n diagonal slots. Checked against
// Theta(diag(1, z^{2 beta})).
SymElem borel_part_character(const std::vector<SymElem>& theta, const Mat& k, const Mat& x, int beta,
                             long p);

// Ash-Ginzburg intertwining at n = 1:
//   W(g) = int_{Z_p^x} int_{Q_p} f[(0 1; 1 0)(1 X; 0 1)(k, k) g] psi^-1(X) eta^-1(k) dX dk
// summed exactly over X-shells v(X) >= -shells. Throws TruncationError when
// shells < ag_required_shells(g) or the outermost shell does not vanish.
long ag_required_shells(const Mat& g, long p);
SymElem ag_intertwine_value(const PSVector& f, const Mat& g, int shells);
SymElem ag_intertwine_value_serial(const PSVector& f, const Mat& g, int shells);

// W_{w_n}(diag(w_n z^{2 beta}, 1)) for a spin refinement, through the
// Hecke eigenvalues of its normalized form
SymElem w_value_closed(const Refinement& ref, int beta);
// same value from (delta_B^{1/2} theta')(diag(1, z^{2 beta})) times the volumes
SymElem w_value_direct(const Refinement& ref, int beta);

// Iwahori-level zeta integral of (u^-1 t_p^beta) W for ramified chi, in
// terms of w_base = W(diag(w_n z^{2 beta}, 1)).
ZetaResult zeta_iwahori_closed(const SymElem& w_base, const TwistCharacter& chi, int n, const SymElem& eta);

// W(diag(p^m c, 1) u^-1 t_p^beta) for m in [-beta-1, 1] and units c mod p^beta;
// each point uses at least the shells it requires
struct IwahoriShellTable {
  long p = 2;
  int beta = 1;
  int m_lo = 0, m_hi = 0;
  std::vector<long> units;                // c
  std::vector<std::vector<SymElem>> w;    // w[m - m_lo][index of c]
};
IwahoriShellTable iwahori_shell_table(const PSVector& f, int beta, int shells);
IwahoriShellTable iwahori_shell_table_serial(const PSVector& f, int beta, int shells);
ZetaResult zeta_iwahori_oracle(const IwahoriShellTable& table, const TwistCharacter& chi);
ZetaResult zeta_iwahori_oracle(const PSVector& f, const TwistCharacter& chi, int shells);

// Parahoric-level zeta integral of the new vector; delta_f is the different
// exponent of the base field (0 over Q_p).
ZetaResult zeta_parahoric_closed(const Satake& s, const TwistCharacter& chi, int delta_f);
// n = 1, delta_f = 0: the reduced one-variable integral summed over shells
ZetaResult zeta_parahoric_oracle(const Satake& s, const TwistCharacter& chi, int shells);

// modified Euler factor at p and the factor Q'
SymElem ep_factor(const Refinement& ref, const TwistCharacter& chi, long j, const PureWeight& w);
SymElem qprime_factor(const TwistCharacter& chi, long j, int n);

// substitute p^s = p^{j + 1/2}
SymElem at_critical_point(const SymElem& e, long j);

struct InterpolationPair {
  TwistCharacter chi;
  long j;
};
// Iwahori-route over parahoric-route interpolation value, required to be the
// same for every pair; the volume constant of the Iwahori route is kept as
// the formal unit U. Throws std::runtime_error naming two witnesses otherwise.
SymElem comparison_constant(const Refinement& ref, const PureWeight& w, const std::vector<InterpolationPair>& pairs);
SymElem iwahori_route_value(const Refinement& ref, const PureWeight& w, const TwistCharacter& chi, long j);
SymElem parahoric_route_value(const Refinement& ref, const TwistCharacter& chi, long j);

}  // namespace plocal
