#include "plocal/refine.hpp"

#include <functional>
#include <stdexcept>

#include "plocal/padic.hpp"

namespace plocal {

Satake satake_free(int n, long p) {
  if (2 * n > kMaxX) throw std::invalid_argument("too many Satake symbols");
  Satake s;
  s.n = n;
  s.p = p;
  for (int i = 1; i <= 2 * n; ++i) s.theta.push_back(SymElem::x(i).with_prime(p));
  s.eta = SymElem::gen(kE, p);
  return s;
}

Satake satake_ag(int n, long p) {
  Satake s;
  s.n = n;
  s.p = p;
  s.eta = SymElem::gen(kE, p);
  s.theta.resize(2 * n);
  for (int i = 1; i <= n; ++i) {
    s.theta[i - 1] = SymElem::x(i).with_prime(p);
    s.theta[n + i - 1] = s.eta / SymElem::x(i);
  }
  s.ag = true;
  return s;
}

Perm tau_perm(int n) {
  Perm t(2 * n);
  for (int k = 0; k < n; ++k) {
    t[k] = k;
    t[n + k] = 2 * n - 1 - k;
  }
  return t;
}

Perm delta_perm(const Perm& sigma) {
  return perm_compose(tau_perm(static_cast<int>(sigma.size()) / 2), sigma);
}

SymElem hecke_eigenvalue(const Refinement& ref, int r) {
  int n = ref.satake.n;
  long p = ref.satake.p;
  SymElem a = SymElem(1).with_prime(p);
  long yexp = 0;
  for (int j = 1; j <= r; ++j) {
    yexp += 2 * n - 2 * j + 1;
    a *= ref.satake.theta[ref.sigma[2 * n - j]];
  }
  return a * SymElem::p_half_power(p, yexp);
}

SymElem up_eigenvalue(const Refinement& ref) {
  SymElem a(1);
  for (int r = 1; r < 2 * ref.satake.n; ++r) a *= hecke_eigenvalue(ref, r);
  return a;
}

SymElem integral_eigenvalue(const Refinement& ref, int r, const std::vector<long>& lambda) {
  long s = 0;
  for (int i = 0; i < r; ++i) s += lambda[i];
  return SymElem(qpow(mpq_class(ref.satake.p), s)) * hecke_eigenvalue(ref, r);
}

bool is_regular(const Satake& s) {
  for (size_t i = 0; i < s.theta.size(); ++i)
    for (size_t j = i + 1; j < s.theta.size(); ++j)
      if (s.theta[i] == s.theta[j]) return false;
  return true;
}

bool is_spin(const Refinement& ref) {
  if (!is_regular(ref.satake)) throw std::domain_error("Satake parameter is not regular");
  int n = ref.satake.n;
  for (int s = 0; s < n; ++s) {
    if (!(hecke_eigenvalue(ref, n + s) == ref.satake.eta.pow(s) * hecke_eigenvalue(ref, n - s)))
      return false;
  }
  return true;
}

bool spin_by_pairs(const Perm& sigma) {
  int n = static_cast<int>(sigma.size()) / 2;
  for (int i = 0; i < n; ++i) {
    int a = std::min(sigma[i], sigma[2 * n - 1 - i]), b = std::max(sigma[i], sigma[2 * n - 1 - i]);
    if (a >= n || b != a + n) return false;
  }
  return true;
}

GSpinEigen gspin_eigen_transfer(const Refinement& ref) {
  int n = ref.satake.n;
  long p = ref.satake.p;
  Perm sp = perm_compose(delta_perm(ref.sigma), perm_longest(2 * n));
  GSpinWeyl omega = jmath_weyl_inverse(sp);
  // the GSpin Satake character: f_0* -> eta, f_k* -> theta^tau_k = theta_k
  auto character = [&](const Weight& mu) {
    SymElem v = ref.satake.eta.pow(mu[0]);
    for (int k = 1; k <= n; ++k) v *= ref.satake.theta[k - 1].pow(mu[k]);
    return v;
  };
  Weight rho2 = rho_gspin_doubled(n);
  GSpinEigen out;
  for (int r = 1; r <= n; ++r) {
    Weight jn = jmath_vee(nu_r(r, 2 * n));
    Weight mu = gspin_act_coweight(omega, jn);
    out.u.push_back(SymElem::p_half_power(p, pair(rho2, jn)) * character(mu));
  }
  Weight f0(n + 1, 0);
  f0[0] = 1;
  out.v = character(gspin_act_coweight(omega, f0));
  return out;
}

std::optional<GSpinEigen> gspin_factorization(const Refinement& ref) {
  if (!is_spin(ref)) return std::nullopt;
  int n = ref.satake.n;
  GSpinEigen direct;
  for (int r = 1; r <= n; ++r) direct.u.push_back(hecke_eigenvalue(ref, r));
  direct.v = ref.satake.eta;
  for (int s = 0; s < n; ++s)
    if (!(hecke_eigenvalue(ref, n + s) == direct.v.pow(s) * direct.u[n - s - 1]))
      throw std::logic_error("GSpin factorization inconsistent");
  if (!(hecke_eigenvalue(ref, 2 * n) == direct.v.pow(n)))
    throw std::logic_error("central character check failed");
  GSpinEigen t = gspin_eigen_transfer(ref);
  for (int r = 0; r < n; ++r)
    if (!(t.u[r] == direct.u[r])) throw std::logic_error("Weyl transfer route disagrees");
  if (!(t.v == direct.v)) throw std::logic_error("Weyl transfer route disagrees on V_p");
  return direct;
}

std::optional<std::vector<int>> shalika_admissible(const std::vector<SymElem>& theta,
                                                   const SymElem& eta) {
  int m = static_cast<int>(theta.size());
  std::vector<int> nu(m, -1);
  std::function<bool()> rec = [&]() {
    int i = 0;
    while (i < m && nu[i] >= 0) ++i;
    if (i == m) return true;
    for (int j = i + 1; j < m; ++j) {
      if (nu[j] >= 0 || !(theta[i] * theta[j] == eta)) continue;
      nu[i] = j;
      nu[j] = i;
      if (rec()) return true;
      nu[i] = nu[j] = -1;
    }
    return false;
  };
  if (rec()) return nu;
  return std::nullopt;
}

Normalized normalize_satake(const Refinement& ref) {
  if (!is_spin(ref)) throw std::domain_error("normalization needs a spin refinement");
  int n = ref.satake.n;
  Perm tau = tau_perm(n);
  Normalized out;
  out.conjugator = perm_compose(ref.sigma, tau);
  out.satake = ref.satake;
  out.satake.ag = true;
  for (int i = 0; i < 2 * n; ++i) out.satake.theta[i] = ref.satake.theta[out.conjugator[i]];
  for (int i = 0; i < n; ++i)
    if (!(out.satake.theta[i] * out.satake.theta[n + i] == ref.satake.eta))
      throw std::logic_error("normalized Satake parameter breaks the pairing");
  Refinement check{out.satake, tau};
  for (int r = 1; r < 2 * n; ++r)
    if (!(hecke_eigenvalue(check, r) == hecke_eigenvalue(ref, r)))
      throw std::logic_error("normalized Satake parameter changes eigenvalues");
  return out;
}

mpq_class sym_valuation(const SymElem& e, const std::map<int, mpq_class>& vals) {
  Term t = e.simplified().single_term();
  if (!t.coef.is_rational()) throw std::domain_error("valuation of a non-rational coefficient");
  long p = e.prime();
  mpq_class v = vp(t.coef.rational(), p);
  for (int g = 0; g < kNumGens; ++g) {
    if (t.mono.e[g] == 0) continue;
    if (g == kY) {
      v += mpq_class(t.mono.e[g], 2);
      continue;
    }
    auto it = vals.find(g);
    if (it == vals.end()) throw std::domain_error("no valuation for " + gen_name(g));
    v += t.mono.e[g] * it->second;
  }
  v.canonicalize();
  return v;
}

bool noncritical_slope(const Refinement& ref, const std::vector<long>& lambda,
                       const std::map<int, mpq_class>& vals) {
  int n = ref.satake.n;
  for (int r = 1; r < 2 * n; ++r) {
    mpq_class v = sym_valuation(integral_eigenvalue(ref, r, lambda), vals);
    if (!(v < lambda[r - 1] - lambda[r] + 1)) return false;
  }
  return true;
}

}  // namespace plocal
