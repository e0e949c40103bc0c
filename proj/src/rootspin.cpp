#include "plocal/rootspin.hpp"

#include <algorithm>
#include <stdexcept>

namespace plocal {

GSpinWeyl gspin_identity(int n) { return GSpinWeyl{perm_identity(n), std::vector<int>(n, 0)}; }

GSpinWeyl gspin_perm(const Perm& pi) {
  return GSpinWeyl{pi, std::vector<int>(pi.size(), 0)};
}

GSpinWeyl gspin_sign(int n, int i) {
  GSpinWeyl w = gspin_identity(n);
  w.sign[i - 1] = 1;
  return w;
}

std::vector<GSpinWeyl> all_gspin_weyl(int n) {
  std::vector<GSpinWeyl> out;
  for (const Perm& pi : all_perms(n))
    for (int mask = 0; mask < (1 << n); ++mask) {
      GSpinWeyl w{pi, std::vector<int>(n)};
      for (int i = 0; i < n; ++i) w.sign[i] = (mask >> i) & 1;
      out.push_back(w);
    }
  return out;
}

// pi o sgn^e o pi^{-1} = sgn^{e o pi^{-1}}
GSpinWeyl gspin_compose(const GSpinWeyl& a, const GSpinWeyl& b) {
  int n = static_cast<int>(a.pi.size());
  GSpinWeyl c{perm_compose(a.pi, b.pi), a.sign};
  for (int i = 0; i < n; ++i) c.sign[a.pi[i]] ^= b.sign[i];
  return c;
}

Weight gspin_act_weight(const GSpinWeyl& w, const Weight& mu) {
  int n = static_cast<int>(w.pi.size());
  Weight r(n + 1, 0);
  r[0] = mu[0];
  for (int i = 0; i < n; ++i) r[w.pi[i] + 1] = mu[i + 1];
  for (int i = 0; i < n; ++i)
    if (w.sign[i]) r[i + 1] = r[0] - r[i + 1];
  return r;
}

Weight gspin_act_weight_generators(const GSpinWeyl& w, const Weight& mu) {
  int n = static_cast<int>(w.pi.size());
  // permutation first: f_i -> f_{pi(i)}, f_0 fixed
  Weight cur(n + 1, 0);
  cur[0] = mu[0];
  for (int i = 0; i < n; ++i) cur[w.pi[i] + 1] += mu[i + 1];
  for (int i = 0; i < n; ++i) {
    if (!w.sign[i]) continue;
    // sgn_i: f_0 -> f_0 + f_i, f_i -> -f_i
    Weight nxt(n + 1, 0);
    nxt[0] += cur[0];
    nxt[i + 1] += cur[0];
    for (int k = 1; k <= n; ++k) nxt[k] += (k == i + 1 ? -cur[k] : cur[k]);
    cur = nxt;
  }
  return cur;
}

Weight gspin_act_coweight(const GSpinWeyl& w, const Weight& nu) {
  int n = static_cast<int>(w.pi.size());
  Weight cur(n + 1, 0);
  cur[0] = nu[0];
  for (int i = 0; i < n; ++i) cur[w.pi[i] + 1] += nu[i + 1];
  for (int i = 0; i < n; ++i) {
    if (!w.sign[i]) continue;
    // sgn_i: f_0* fixed, f_i* -> f_0* - f_i*
    Weight nxt = cur;
    nxt[0] += cur[i + 1];
    nxt[i + 1] = -cur[i + 1];
    cur = nxt;
  }
  return cur;
}

Weight gl_act(const Perm& sigma, const Weight& v) {
  Weight r(v.size(), 0);
  for (size_t i = 0; i < v.size(); ++i) r[sigma[i]] = v[i];
  return r;
}

Weight jmath_weight(const Weight& mu) {
  int n = static_cast<int>(mu.size()) - 1;
  Weight r(2 * n, 0);
  for (int i = 1; i <= n; ++i) {
    r[i - 1] += mu[i];
    r[2 * n - i] -= mu[i];
  }
  for (int k = n; k < 2 * n; ++k) r[k] += mu[0];
  return r;
}

Weight jmath_vee(const Weight& nu) {
  int n = static_cast<int>(nu.size()) / 2;
  Weight r(n + 1, 0);
  for (int k = 0; k <= n; ++k) {
    Weight f(n + 1, 0);
    f[k] = 1;
    r[k] = pair(jmath_weight(f), nu);
  }
  return r;
}

Perm jmath_weyl(const GSpinWeyl& w) {
  int n = static_cast<int>(w.pi.size());
  Perm s(2 * n);
  for (int i = 0; i < n; ++i) {
    s[i] = w.pi[i];
    s[2 * n - 1 - i] = 2 * n - 1 - w.pi[i];
  }
  // apply sign transpositions after the permutation
  for (int i = 0; i < n; ++i) {
    if (!w.sign[i]) continue;
    for (int j = 0; j < 2 * n; ++j) {
      if (s[j] == i)
        s[j] = 2 * n - 1 - i;
      else if (s[j] == 2 * n - 1 - i)
        s[j] = i;
    }
  }
  return s;
}

GSpinWeyl jmath_weyl_inverse(const Perm& s) {
  int n = static_cast<int>(s.size()) / 2;
  GSpinWeyl w = gspin_identity(n);
  for (int i = 0; i < n; ++i) {
    int a = s[i];
    if (a < n) {
      w.pi[i] = a;
    } else {
      w.pi[i] = 2 * n - 1 - a;
    }
  }
  for (int k = 0; k < n; ++k) {
    // sgn_k applied iff the pair slot k receives the image of the low index
    int src = -1;
    for (int i = 0; i < n; ++i)
      if (w.pi[i] == k) src = i;
    if (src < 0) throw std::invalid_argument("permutation is not in the image of the Weyl transfer");
    w.sign[k] = s[src] >= n ? 1 : 0;
  }
  if (jmath_weyl(w) != s)
    throw std::invalid_argument("permutation is not in the image of the Weyl transfer");
  return w;
}

long pair(const Weight& a, const Weight& b) {
  long s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

bool preserves_purity(const Perm& sigma) {
  int m = static_cast<int>(sigma.size());
  Weight lam(m);
  for (int i = 0; i < m; ++i) lam[i] = m - 1 - 2 * i;
  Weight t = gl_act(sigma, lam);
  for (int i = 0; i < m; ++i)
    if (t[i] + t[m - 1 - i] != t[0] + t[m - 1]) return false;
  return true;
}

std::vector<Perm> wg0_members(int n) {
  std::vector<Perm> out;
  for (const Perm& s : all_perms(2 * n))
    if (preserves_purity(s)) out.push_back(s);
  return out;
}

Weight rho_gl_doubled(int n) {
  Weight r(2 * n);
  for (int i = 1; i <= 2 * n; ++i) r[i - 1] = 2 * n - 2 * i + 1;
  return r;
}

Weight rho_gspin_doubled(int n) {
  Weight r(n + 1, 0);
  for (int i = 1; i <= n; ++i) r[i] = 2 * n - 2 * i + 1;
  return r;
}

Weight nu_r(int r, int size) {
  Weight v(size, 0);
  for (int i = 0; i < r; ++i) v[i] = 1;
  return v;
}

SymElem delta_b(const std::vector<long>& v, long p) {
  long m = static_cast<long>(v.size()), e = 0;
  for (long i = 1; i <= m; ++i) e -= v[i - 1] * (m - 2 * i + 1);
  return SymElem(qpow(mpq_class(p), e)).with_prime(p);
}

SymElem delta_b_half(const std::vector<long>& v, long p) {
  long m = static_cast<long>(v.size()), e = 0;
  for (long i = 1; i <= m; ++i) e -= v[i - 1] * (m - 2 * i + 1);
  return SymElem::p_half_power(p, e);
}

}  // namespace plocal
