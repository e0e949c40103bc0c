#include "plocal/shalikazeta.hpp"

#include <map>
#include <sstream>

#include "plocal/rootspin.hpp"

namespace plocal {

namespace {

SymElem s_y_power(long p, long s_exp, long y_exp) {
  Mono m;
  m.e[kS] = static_cast<int16_t>(s_exp);
  m.e[kY] = static_cast<int16_t>(y_exp);
  return SymElem::term(CycNum(1), m, p);
}

SymElem rat(long p, const mpq_class& q) { return SymElem(q).with_prime(p); }

long sign_det_minus_wn(int n) {
  long e = n + static_cast<long>(n) * (n - 1) / 2;
  return e % 2 ? -1 : 1;
}

Perm perm_of(const Mat& w) {
  Perm pi(w.cols(), -1);
  for (int j = 0; j < w.cols(); ++j)
    for (int i = 0; i < w.rows(); ++i)
      if (w(i, j) != 0) pi[j] = i;
  return pi;
}

using CellKey = std::pair<Perm, std::vector<long>>;
using Hist = std::map<CellKey, std::vector<long>>;

void merge(Hist& into, const Hist& from) {
  for (const auto& [k, v] : from) {
    auto& dst = into[k];
    if (dst.empty()) dst.assign(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i) dst[i] += v[i];
  }
}

// smallest V >= 0 with g^-1 (1 + p^V Z_p e) g inside Iw, e = E_12 or E_21
long conj_depth(const Mat& g, long p, bool upper) {
  auto gi = g.inverse();
  if (!gi) throw std::invalid_argument("singular matrix");
  Mat e(2, 2);
  e(upper ? 0 : 1, upper ? 1 : 0) = 1;
  Mat m = *gi * e * g;
  long v = 0;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      if (m(i, j) != 0) v = std::max(v, -vp(m(i, j), p));
  if (m(1, 0) != 0) v = std::max(v, 1 - vp(m(1, 0), p));
  return v;
}

// classes X = p^v c, c a unit in [lo, hi) mod p^{depth - v}; psi^-1(X) is
// recorded as an exponent of zeta_{p^shells}
void shell_hist(const PSVector& f, const Mat& g, long v, int shells, long lo, long hi, Hist& h) {
  long p = f.satake.p;
  long big = ipow(p, shells);
  Mat j = Mat::perm({1, 0});
  mpq_class pv = qpow(mpq_class(p), v);
  long small = v < 0 ? ipow(p, -v) : 1;
  long scale = v < 0 ? ipow(p, shells + v) : 0;
  for (long c = lo; c < hi; ++c) {
    if (c % p == 0) continue;
    Mat u = Mat::identity(2);
    u(0, 1) = pv * c;
    BruhatCell cell = bruhat_cell(j * u * g, p);
    if (!f.coeffs.count(cell.w)) continue;
    long e = v < 0 ? ((small - c % small) % small) * scale % big : 0;
    auto& dst = h[{cell.w, cell.torus_val}];
    if (dst.empty()) dst.assign(big, 0);
    ++dst[e];
  }
}

SymElem hist_value(const PSVector& f, const Hist& h, long big, const mpq_class& weight) {
  long p = f.satake.p;
  SymElem v = rat(p, 0);
  for (const auto& [key, counts] : h) {
    std::vector<mpq_class> c(counts.size());
    for (size_t i = 0; i < counts.size(); ++i) c[i] = weight * counts[i];
    v += f.coeff(key.first) * torus_character(f.satake, f.sigma, key.second) *
         SymElem(CycNum::from_counts(big, c));
  }
  return v;
}

SymElem ag_value(const PSVector& f, const Mat& g, int shells, bool parallel) {
  if (f.satake.n != 1) throw std::invalid_argument("intertwining oracle is implemented for n = 1");
  long p = f.satake.p;
  long depth = conj_depth(g, p, true);
  // for v(X) <= -ag_required_shells the integrand on the shell only sees v(X),
  // so the shell integrates psi^-1 over a full unit class and vanishes
  if (shells < ag_required_shells(g, p))
    throw TruncationError("increase shells: need at least " + std::to_string(ag_required_shells(g, p)));
  long big = ipow(p, shells);
  mpq_class weight = qpow(mpq_class(p), -depth);
  // The unit scalar (k, k) acts trivially: the central character and eta are
  // unramified and d^x k has total mass 1.
  SymElem total = rat(p, 0);
  for (long v = -shells; v < depth; ++v) {
    long count = ipow(p, depth - v);
    Hist h;
    if (parallel) {
#pragma omp parallel
      {
        Hist local;
#pragma omp for schedule(static)
        for (long blk = 0; blk < count; blk += p) shell_hist(f, g, v, shells, blk, blk + p, local);
#pragma omp critical
        merge(h, local);
      }
    } else {
      shell_hist(f, g, v, shells, 0, count, h);
    }
    SymElem sv = hist_value(f, h, big, weight);
    if (v == -shells && !sv.is_zero())
      throw TruncationError("increase shells: outermost X-shell v = " + std::to_string(v) + " is nonzero");
    total += sv;
  }
  // X in p^depth Z_p: the integrand is constant, psi is trivial
  SymElem f0 = ps_evaluate(f, Mat::perm({1, 0}) * g);
  mpq_class inv_p(1, p);
  total += geometric_tail(f0 * rat(p, weight * (1 - inv_p)), rat(p, inv_p));
  return total;
}

Mat iwahori_point(long p, long m, long c, int beta) {
  Mat g(2, 2);
  mpq_class x = qpow(mpq_class(p), m) * c;
  g(0, 0) = x * qpow(mpq_class(p), beta);
  g(0, 1) = -x;
  g(1, 1) = 1;
  return g;
}

SymElem table_entry(const PSVector& f, const IwahoriShellTable& t, long row, long c, int shells) {
  Mat g = iwahori_point(t.p, t.m_lo + row, c, t.beta);
  return ag_value(f, g, std::max<long>(shells, ag_required_shells(g, t.p)), false);
}

IwahoriShellTable shell_table(const PSVector& f, int beta, int shells, bool parallel) {
  if (f.satake.n != 1) throw std::invalid_argument("Iwahori zeta oracle is implemented for n = 1");
  if (beta < 1) throw std::invalid_argument("beta must be positive");
  IwahoriShellTable t;
  t.p = f.satake.p;
  t.beta = beta;
  t.m_lo = -beta - 1;
  t.m_hi = 1;
  long mod = ipow(t.p, beta);
  for (long c = 1; c < mod; ++c)
    if (c % t.p) t.units.push_back(c);
  long rows = t.m_hi - t.m_lo + 1, cols = static_cast<long>(t.units.size());
  t.w.assign(rows, std::vector<SymElem>(cols));
  if (parallel) {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < rows * cols; ++k)
      t.w[k / cols][k % cols] = table_entry(f, t, k / cols, t.units[k % cols], shells);
  } else {
    for (long k = 0; k < rows * cols; ++k)
      t.w[k / cols][k % cols] = table_entry(f, t, k / cols, t.units[k % cols], shells);
  }
  return t;
}

}  // namespace

long ag_required_shells(const Mat& g, long p) { return std::max(2L, conj_depth(g, p, false)); }

Mat z_matrix(int n, long p) {
  std::vector<mpq_class> d(n);
  for (int i = 0; i < n; ++i) d[i] = qpow(mpq_class(p), n - 1 - i);
  return Mat::diag(d);
}

Mat shalika_integrand_point(const Mat& k, const Mat& x, int beta, long p) {
  int n = k.rows();
  Mat one = Mat::identity(n), zero(n, n);
  Mat zb = z_matrix(n, p);
  Mat z2b = Mat::identity(n);
  for (int i = 0; i < 2 * beta; ++i) z2b = z2b * zb;
  return Mat::block(zero, one, one, zero) * Mat::block(one, x, zero, one) * Mat::block(k, zero, zero, k) *
         Mat::block(Mat::antidiag(n) * z2b, zero, zero, one);
}

Perm shalika_cell_label(const Perm& delta) {
  int n = static_cast<int>(delta.size());
  Mat wn = Mat::antidiag(n), zero(n, n);
  return perm_of(Mat::block(zero, wn, Mat::perm(delta) * wn, zero));
}

bool shalika_support_predicate(const Perm& delta, const Mat& k, const Mat& x, int beta, long p) {
  int n = k.rows();
  if (!in_gl_zp(k, p)) throw std::invalid_argument("k must lie in GL_n(Z_p)");
  if (beta < 1) throw std::invalid_argument("beta must be positive");
  if (delta != perm_longest(n)) return false;
  if (bruhat_cell(k, p).w != perm_longest(n)) return false;
  Mat z = z_matrix(n, p);
  Mat zinv2b = Mat::identity(n);
  Mat zi = *z.inverse();
  for (int i = 0; i < 2 * beta; ++i) zinv2b = zinv2b * zi;
  return mat_integral(zinv2b * Mat::antidiag(n) * *k.inverse() * x, p);
}

bool shalika_cell_membership(const Perm& delta, const Mat& k, const Mat& x, int beta, long p) {
  return bruhat_cell(shalika_integrand_point(k, x, beta, p), p).w == shalika_cell_label(delta);
}

SymElem borel_part_character(const std::vector<SymElem>& theta, const Mat& k, const Mat& x, int beta, long p) {
  int n = k.rows();
  if (static_cast<int>(theta.size()) != 2 * n) throw std::invalid_argument("character needs 2n values");
  BruhatDecomp d = iwahori_bruhat_decompose(shalika_integrand_point(k, x, beta, p), p);
  if (d.cell.w != shalika_cell_label(perm_longest(n)))
    throw std::invalid_argument("point lies outside B (0 w_n; 1 0) Iw");
  SymElem v = rat(p, 1);
  for (int i = 0; i < 2 * n; ++i)
    if (d.cell.torus_val[i]) v *= theta[i].pow(d.cell.torus_val[i]);
  SymElem expect = rat(p, 1);
  for (int i = 0; i < n; ++i) expect *= theta[n + i].pow(2L * beta * (n - 1 - i));
  if (!(v == expect)) throw std::logic_error("Borel part differs from Theta(diag(1, z^{2 beta}))");
  return v;
}

SymElem ag_intertwine_value(const PSVector& f, const Mat& g, int shells) { return ag_value(f, g, shells, true); }

SymElem ag_intertwine_value_serial(const PSVector& f, const Mat& g, int shells) {
  return ag_value(f, g, shells, false);
}

SymElem w_value_closed(const Refinement& ref, int beta) {
  int n = ref.satake.n;
  long p = ref.satake.p;
  Normalized norm = normalize_satake(ref);
  Refinement r{norm.satake, tau_perm(n)};
  std::vector<long> tp(2 * n);
  for (int i = 0; i < 2 * n; ++i) tp[i] = 2 * n - 1 - i;
  SymElem ratio = up_eigenvalue(r) / hecke_eigenvalue(r, n);
  return rat(p, upsilon_dprime(n, p) * qpow(mpq_class(p), static_cast<long>(beta) * n * n)) *
         delta_b(tp, p).pow(beta) * ref.satake.eta.pow(-static_cast<long>(beta) * n * (n - 1) / 2) *
         ratio.pow(beta);
}

SymElem w_value_direct(const Refinement& ref, int beta) {
  int n = ref.satake.n;
  long p = ref.satake.p;
  Normalized norm = normalize_satake(ref);
  std::vector<long> vals(2 * n, 0);
  for (int i = 0; i < n; ++i) vals[n + i] = 2L * beta * (n - 1 - i);
  long vol_exp = -static_cast<long>(beta) * n * n * (n - 1);
  return torus_character(norm.satake, perm_identity(2 * n), vals) *
         rat(p, upsilon_dprime(n, p) * qpow(mpq_class(p), vol_exp));
}

ZetaResult zeta_iwahori_closed(const SymElem& w_base, const TwistCharacter& chi, int n, const SymElem& eta) {
  int beta = chi.conductor_exp();
  if (beta < 1) throw std::domain_error("Iwahori closed form needs a ramified character");
  long p = chi.prime();
  SymElem tau = SymElem(gauss_sum(chi)).with_prime(p);
  SymElem v = rat(p, upsilon_prime(n, p) * qpow(mpq_class(p), -static_cast<long>(beta) * (n * n + n) / 2)) *
              eta.pow(static_cast<long>(beta) * n * (n - 1) / 2) * s_y_power(p, beta * n, -beta * n) * tau.pow(n) *
              SymElem(chi(sign_det_minus_wn(n))) * w_base;
  return {v, ZetaResult::Source::kClosedForm};
}

IwahoriShellTable iwahori_shell_table(const PSVector& f, int beta, int shells) {
  return shell_table(f, beta, shells, true);
}

IwahoriShellTable iwahori_shell_table_serial(const PSVector& f, int beta, int shells) {
  return shell_table(f, beta, shells, false);
}

ZetaResult zeta_iwahori_oracle(const IwahoriShellTable& t, const TwistCharacter& chi) {
  if (chi.conductor_exp() != t.beta || chi.prime() != t.p)
    throw std::invalid_argument("character does not match the shell table");
  for (const auto& w : t.w.front())
    if (!w.is_zero()) throw TruncationError("increase shells: x-shell below the support bound is nonzero");
  // For v(x) >= 0 the Shalika translation by (1 x; 0 1) makes the integrand
  // independent of the unit part of x, so primitive chi averages it to 0.
  const auto& last = t.w.back();
  for (const auto& w : last)
    if (!(w == last.front())) throw TruncationError("increase shells: top x-shell still depends on the unit part");
  mpq_class inv_phi(1, static_cast<long>(t.units.size()));
  SymElem total = rat(t.p, 0);
  for (int m = t.m_lo; m <= t.m_hi; ++m) {
    SymElem shell = rat(t.p, 0);
    for (size_t i = 0; i < t.units.size(); ++i) shell += SymElem(chi(t.units[i])) * t.w[m - t.m_lo][i];
    total += shell * rat(t.p, inv_phi) * s_y_power(t.p, -m, m);
  }
  return {total, ZetaResult::Source::kOracle};
}

ZetaResult zeta_iwahori_oracle(const PSVector& f, const TwistCharacter& chi, int shells) {
  return zeta_iwahori_oracle(iwahori_shell_table(f, chi.conductor_exp(), shells), chi);
}

ZetaResult zeta_parahoric_closed(const Satake& s, const TwistCharacter& chi, int delta_f) {
  int n = s.n;
  long p = s.p;
  if (chi.prime() != p) throw std::invalid_argument("character and Satake parameter use different primes");
  long beta = std::max(1, chi.conductor_exp());
  long d = delta_f;
  SymElem pre = s_y_power(p, beta * n + d * n, -beta * n * n - d * n * n - 2 * d * n) *
                SymElem(chi(sign_det_minus_wn(n)));
  SymElem q;
  if (!chi.is_trivial()) {
    q = rat(p, qpow(mpq_class(p), -beta * n + n) / qpow(mpq_class(p - 1), n)) *
        SymElem(gauss_sum(chi)).with_prime(p).pow(n);
  } else {
    q = rat(p, qpow(mpq_class(1 - p), -n));
    SymElem s_inv = s_y_power(p, -1, 0);
    for (int i = n; i < 2 * n; ++i) {
      SymElem t = s.theta[i] * s_inv;
      q *= geometric_tail(SymElem(1) - rat(p, p) * t, t);
    }
  }
  return {pre * q, ZetaResult::Source::kClosedForm};
}

ZetaResult zeta_parahoric_oracle(const Satake& s, const TwistCharacter& chi, int shells) {
  if (s.n != 1) throw std::invalid_argument("parahoric zeta oracle is implemented for n = 1");
  long p = s.p;
  int beta = std::max(1, chi.conductor_exp());
  if (shells < beta) throw TruncationError("increase shells: psi is not yet trivial on the last t-shell");
  long mod = ipow(p, beta);
  long phi = euler_phi(mod);
  // I(k) = int_{O^x} chi(u) psi(-p^{k - beta} u) d^x u
  auto shell_integral = [&](long k) {
    CycNum acc;
    for (long u = 1; u < mod; ++u) {
      if (u % p == 0) continue;
      CycNum psi = k < beta ? CycNum::root(ipow(p, beta - k), -u) : CycNum(1);
      acc += chi(u) * psi;
    }
    return SymElem(acc * CycNum(mpq_class(1, phi))).with_prime(p);
  };
  SymElem r = s.theta[1] * s_y_power(p, -1, 0);
  SymElem total = rat(p, 0);
  for (long k = 0; k < shells; ++k) total += r.pow(k) * shell_integral(k);
  total += geometric_tail(r.pow(shells) * shell_integral(shells), r);
  SymElem pre = s_y_power(p, beta, -beta) * SymElem(chi(1));  // chi(det w_1)
  return {pre * total, ZetaResult::Source::kOracle};
}

SymElem ep_factor(const Refinement& ref, const TwistCharacter& chi, long j, const PureWeight& w) {
  if (!in_crit(w, j)) throw std::invalid_argument("j is not critical for the weight");
  int n = ref.satake.n;
  long p = ref.satake.p;
  if (!chi.is_trivial()) {
    long beta = chi.conductor_exp();
    SymElem base = rat(p, qpow(mpq_class(p), n * j + (static_cast<long>(n) * n - n) / 2)) / hecke_eigenvalue(ref, n);
    return base.pow(beta) * SymElem(gauss_sum(chi)).with_prime(p).pow(n);
  }
  Normalized norm = normalize_satake(ref);
  SymElem e = rat(p, 1);
  for (int i = n; i < 2 * n; ++i) {
    SymElem a = norm.satake.theta[i] * rat(p, qpow(mpq_class(p), -j)) * SymElem::p_half_power(p, -1);
    SymElem den = SymElem(1) - a;
    if (den.simplified().is_zero())
      throw DivisionByZero("pole of the Euler factor: alpha_{" + std::to_string(i + 1) + "," + std::to_string(j) + "} = 1");
    e *= (SymElem(1) - rat(p, mpq_class(1, p)) * a.inverse()) * geometric_tail(SymElem(1), a);
  }
  return e;
}

SymElem qprime_factor(const TwistCharacter& chi, long j, int n) {
  long beta = chi.conductor_exp();
  if (beta < 1) throw std::domain_error("Q' needs a ramified character");
  long p = chi.prime();
  return rat(p, qpow(mpq_class(p), beta * (n * j + (static_cast<long>(n) * n - n) / 2))) *
         SymElem(gauss_sum(chi)).with_prime(p).pow(n);
}

SymElem at_critical_point(const SymElem& e, long j) {
  long p = e.prime();
  if (p == 0) throw std::invalid_argument("element carries no prime");
  return sym_eval(e, {{kS, rat(p, qpow(mpq_class(p), j)) * SymElem::y(p)}});
}

SymElem iwahori_route_value(const Refinement& ref, const PureWeight& w, const TwistCharacter& chi, long j) {
  if (!in_crit(w, j)) throw std::invalid_argument("j is not critical for the weight");
  int n = ref.satake.n;
  long p = ref.satake.p;
  SymElem u = SymElem::gen(kU, p);
  if (chi.is_trivial()) {
    SymElem gamma = u * rat(p, upsilon_prime(n, p) * upsilon_dprime(n, p));
    return gamma * ep_factor(ref, chi, j, w);
  }
  int beta = chi.conductor_exp();
  SymElem circ = rat(p, 1);
  for (int r = 1; r < 2 * n; ++r) circ *= integral_eigenvalue(ref, r, w.lambda);
  SymElem lam_tp = circ / up_eigenvalue(ref);
  std::vector<long> tp(2 * n);
  for (int i = 0; i < 2 * n; ++i) tp[i] = 2 * n - 1 - i;
  SymElem zeta = zeta_iwahori_closed(w_value_closed(ref, beta), chi, n, ref.satake.eta).value;
  SymElem v = circ.pow(-beta) * delta_b(tp, p).pow(-beta) * u * lam_tp.pow(beta) * zeta;
  return at_critical_point(v, j);
}

SymElem parahoric_route_value(const Refinement& ref, const TwistCharacter& chi, long j) {
  int n = ref.satake.n;
  long p = ref.satake.p;
  long beta = std::max(1, chi.conductor_exp());
  Normalized norm = normalize_satake(ref);
  SymElem base = rat(p, qpow(mpq_class(p), static_cast<long>(n) * n)) / hecke_eigenvalue(ref, n);
  return at_critical_point(base.pow(beta) * zeta_parahoric_closed(norm.satake, chi, 0).value, j);
}

SymElem comparison_constant(const Refinement& ref, const PureWeight& w, const std::vector<InterpolationPair>& pairs) {
  if (pairs.empty()) throw std::invalid_argument("comparison needs at least one pair");
  SymElem first;
  for (size_t k = 0; k < pairs.size(); ++k) {
    SymElem r = (iwahori_route_value(ref, w, pairs[k].chi, pairs[k].j) /
                 parahoric_route_value(ref, pairs[k].chi, pairs[k].j))
                    .simplified();
    if (k == 0) {
      first = r;
    } else if (!(r == first)) {
      std::ostringstream os;
      os << "interpolation ratio varies: pair 0 (j=" << pairs[0].j << ") gives " << first.str() << ", pair " << k
         << " (j=" << pairs[k].j << ") gives " << r.str();
      throw std::runtime_error(os.str());
    }
  }
  return first;
}

}  // namespace plocal
