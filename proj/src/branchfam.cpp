#include "plocal/branchfam.hpp"

#include <stdexcept>

namespace plocal {

namespace {

PureWeight alpha_weight(int n, int i) {
  PureWeight w;
  w.lambda.assign(2 * n, 0);
  if (i == 0) {
    w.lambda.assign(2 * n, 1);
    w.sw = 2;
  } else if (i == n) {
    for (int k = 0; k < n; ++k) w.lambda[k] = 1;
    w.sw = 1;
  } else {
    for (int k = 0; k < i; ++k) {
      w.lambda[k] = 1;
      w.lambda[2 * n - 1 - k] = -1;
    }
  }
  return w;
}

mpq_class torus_value(const std::vector<mpq_class>& t, const std::vector<long>& lambda) {
  mpq_class r = 1;
  for (size_t i = 0; i < t.size(); ++i) r *= qpow(t[i], lambda[i]);
  return r;
}

void require_iwahori(const Mat& g, long p) {
  if (!in_iwahori(g, p)) throw std::domain_error("Dirac base point outside the Iwahori subgroup");
}

}  // namespace

Mat u_matrix(int n) {
  return Mat::block(Mat::identity(n), Mat::antidiag(n), Mat(n, n), Mat::identity(n));
}

std::optional<BranchData> branch_data(const Mat& g) {
  auto oc = open_cell_factorize(g);
  if (!oc) return std::nullopt;
  BranchData b;
  for (int i = 0; i < oc->bbar.rows(); ++i) b.bdiag.push_back(oc->bbar(i, i));
  b.d1 = oc->h1.det();
  b.d2 = oc->h2.det();
  return b;
}

mpq_class v_lambda_j(const BranchData& b, const PureWeight& w, long j) {
  if (!in_crit(w, j)) throw std::invalid_argument("j outside the critical range");
  if (w.lambda.size() != b.bdiag.size()) throw std::invalid_argument("weight rank mismatch");
  return torus_value(b.bdiag, w.lambda) * qpow(b.d1, -j) * qpow(b.d2, w.sw + j);
}

mpq_class v_lambda_j(const Mat& g, const PureWeight& w, long j) {
  if (!in_crit(w, j)) throw std::invalid_argument("j outside the critical range");
  auto b = branch_data(g);
  return b ? v_lambda_j(*b, w, j) : mpq_class(0);
}

BasicVectors basic_vectors(const BranchData& b) {
  int n = static_cast<int>(b.bdiag.size() / 2);
  BasicVectors v;
  v.v0 = v_lambda_j(b, alpha_weight(n, 0), -1);
  for (int i = 1; i < n; ++i) v.vi.push_back(v_lambda_j(b, alpha_weight(n, i), 0));
  v.vn1 = v_lambda_j(b, alpha_weight(n, n), -1);
  v.vn2 = v_lambda_j(b, alpha_weight(n, n), 0);
  return v;
}

bool in_Nbeta(const Mat& g, long p, int beta) { return in_n_beta(g, p, beta); }

std::optional<Iw1Factor> iw1_factor(const Mat& g, long p) {
  if (!in_iwahori(g, p)) return std::nullopt;
  auto f = ldu(g);
  if (!f || !in_n_beta(f->n, p, 1)) return std::nullopt;
  Iw1Factor out;
  for (int i = 0; i < g.rows(); ++i) out.t.push_back(f->t(i, i));
  out.n = f->n;
  return out;
}

std::optional<Iw1Point> iw1_point(const Mat& g, long p) {
  auto f = iw1_factor(g, p);
  if (!f) return std::nullopt;
  auto bd = branch_data(f->n);
  if (!bd) throw std::logic_error("element of N^1 off the open cell");
  BasicVectors bv = basic_vectors(*bd);
  mpq_class z = bv.vn2 / bv.vn1;
  return Iw1Point{*f, bv, z};
}

bool in_Iwbeta(const Mat& g, long p, int beta) {
  if (!in_iwahori(g, p)) return false;
  auto f = ldu(g);
  return f && in_n_beta(f->n, p, beta);
}

bool in_IwHbeta(const Mat& h, long p, int beta) {
  int n2 = h.rows();
  if (n2 % 2 || h.cols() != n2) return false;
  int n = n2 / 2;
  for (int i = 0; i < n2; ++i)
    for (int j = 0; j < n2; ++j)
      if ((i < n) != (j < n) && sgn(h(i, j)) != 0) return false;
  return in_gl_zp(h, p) && in_Iwbeta(u_matrix(n) * h, p, beta);
}

mpq_class w_chi(const Mat& g, const PureWeight& w, long p) {
  auto e = iw1_point(g, p);
  if (!e) throw std::invalid_argument("w_chi: argument outside Iw^1");
  return w_chi(*e, w);
}

mpq_class w_chi(const Iw1Point& x, const PureWeight& w) {
  const Iw1Point* e = &x;
  int n = static_cast<int>(w.lambda.size() / 2);
  const auto& l = w.lambda;
  mpq_class r = torus_value(e->fac.t, l) * qpow(e->bv.v0, l[n]);
  for (int i = 1; i < n; ++i) r *= qpow(e->bv.vi[i - 1], l[i - 1] - l[i]);
  return r * qpow(e->bv.vn1, -l[n]) * qpow(e->bv.vn2, l[n - 1]);
}

FamChar FamChar::operator+(const FamChar& o) const {
  FamChar r{base + o.base, coeff};
  for (size_t v = 0; v < r.coeff.size(); ++v) r.coeff[v] += o.coeff.at(v);
  return r;
}

FamChar FamChar::operator-(const FamChar& o) const { return *this + o.scaled(-1); }

FamChar FamChar::scaled(long k) const {
  FamChar r{base * k, coeff};
  for (auto& c : r.coeff) c *= k;
  return r;
}

FamChar FamilyWeight::coordinate(int i) const {
  int m = n();
  if (i < 1 || i > 2 * m) throw std::out_of_range("family coordinate");
  FamChar c{base.lambda[i - 1], std::vector<long>(m + 1, 0)};
  if (i <= m) {
    c.coeff[i - 1] = 1;
  } else {
    c.coeff[m] = 1;
    c.coeff[2 * m - i] = -1;
  }
  return c;
}

FamChar FamilyWeight::sw() const {
  FamChar c{base.sw, std::vector<long>(n() + 1, 0)};
  c.coeff[n()] = 1;
  return c;
}

bool FamilyWeight::contains(const PureWeight& w) const {
  if (w.lambda.size() != base.lambda.size()) return false;
  try {
    pure_weight(w.lambda);
  } catch (const std::invalid_argument&) {
    return false;
  }
  for (int i = 0; i < n(); ++i)
    if ((w.lambda[i] - base.lambda[i]) % step() != 0) return false;
  return (w.sw - base.sw) % step() == 0;
}

FamilyWeight family_weight(long p, const PureWeight& base, int precision, int degree) {
  FamilyWeight f;
  f.p = p;
  f.base = pure_weight(base.lambda);
  f.ctx = SeriesCtx::make(p, precision, degree, f.n() + 1);
  return f;
}

Series char_value(const FamilyWeight& fam, const FamChar& chi, const mpq_class& x) {
  const auto& ctx = fam.ctx;
  Series r = Series::constant(ctx, unit_residue(qpow(x, chi.base), fam.p, ctx->precision()));
  mpz_class l = one_unit_log(x, fam.p, ctx->log_precision());
  for (size_t v = 0; v < chi.coeff.size(); ++v)
    if (chi.coeff[v] != 0) r *= Series::binomial_power(ctx, static_cast<int>(v), l * chi.coeff[v]);
  return r;
}

Series w_chi(const Mat& g, const FamilyWeight& fam) {
  auto e = iw1_point(g, fam.p);
  if (!e) throw std::invalid_argument("w_chi: argument outside Iw^1");
  int n = fam.n();
  Series r = Series::constant(fam.ctx, mpz_class(1));
  for (int i = 1; i <= 2 * n; ++i) r *= char_value(fam, fam.coordinate(i), e->fac.t[i - 1]);
  r *= char_value(fam, fam.coordinate(n + 1), e->bv.v0);
  for (int i = 1; i < n; ++i) r *= char_value(fam, fam.coordinate(i) - fam.coordinate(i + 1), e->bv.vi[i - 1]);
  r *= char_value(fam, fam.coordinate(n + 1).scaled(-1), e->bv.vn1);
  r *= char_value(fam, fam.coordinate(n), e->bv.vn2);
  return r;
}

mpz_class specialize_weight(const Series& x, const FamilyWeight& fam, const PureWeight& w) {
  if (!fam.contains(w)) throw std::invalid_argument("weight is not a classical point of the family");
  int n = fam.n();
  const mpz_class& mod = fam.ctx->modulus();
  mpz_class g = one_unit_generator(fam.p);
  std::vector<mpz_class> t;
  for (int v = 0; v <= n; ++v) {
    long d = v < n ? w.lambda[v] - fam.base.lambda[v] : w.sw - fam.base.sw;
    mpz_class gd, e = d;
    mpz_powm(gd.get_mpz_t(), g.get_mpz_t(), e.get_mpz_t(), mod.get_mpz_t());
    t.push_back(gd - 1);
  }
  return x.evaluate(t);
}

LocPoly LocPoly::monomial(long p, long k) {
  LocPoly f;
  f.p = p;
  f.level = 1;
  for (long a = 1; a < p; ++a) f.pieces[a][k] = 1;
  return f;
}

LocPoly LocPoly::indicator(long p, int level, long a) {
  LocPoly f;
  f.p = p;
  f.level = level;
  long m = ipow(p, level);
  long r = ((a % m) + m) % m;
  if (r % p == 0) throw std::invalid_argument("indicator class is not a unit class");
  f.pieces[r][0] = 1;
  return f;
}

mpq_class LocPoly::operator()(const mpq_class& z) const {
  long cls = unit_residue(z, p, level).get_si();
  auto it = pieces.find(cls);
  if (it == pieces.end()) return 0;
  mpq_class r = 0;
  for (const auto& [k, c] : it->second) r += c * qpow(z, k);
  return r;
}

LocPoly LocPoly::dilate(const mpq_class& d) const {
  LocPoly f;
  f.p = p;
  f.level = level;
  long m = ipow(p, level);
  long dr = unit_residue(d, p, level).get_si();
  for (long a = 1; a < m; ++a) {
    if (a % p == 0) continue;
    auto it = pieces.find(dr * a % m);
    if (it == pieces.end()) continue;
    for (const auto& [k, c] : it->second) f.pieces[a][k] = c * qpow(d, k);
  }
  return f;
}

Series v_family(const LocPoly& f, const Mat& g, const FamilyWeight& fam) {
  auto e = iw1_point(g, fam.p);
  if (!e) return Series(fam.ctx);
  return w_chi(g, fam) * Series::constant(fam.ctx, f(e->z));
}

mpq_class v_lambda(const LocPoly& f, const Mat& g, const PureWeight& w, long p) {
  auto e = iw1_point(g, p);
  if (!e) return 0;
  return w_chi(g, w, p) * f(e->z);
}

Series h_act_scalar(const Mat& h, const FamilyWeight& fam) {
  int n = fam.n();
  return char_value(fam, fam.sw(), h.sub(n, n, n, n).det());
}

LocPoly h_act_poly(const Mat& h, const LocPoly& f) {
  int n = h.rows() / 2;
  return f.dilate(h.sub(n, n, n, n).det() / h.sub(0, 0, n, n).det());
}

bool FiniteDistribution::supported_on(int beta) const {
  for (const auto& [c, g] : terms)
    if (sgn(c) != 0 && !in_Iwbeta(g, p, beta)) return false;
  return true;
}

long FiniteDistribution::mass_valuation() const {
  long v = kInfVal;
  for (const auto& [c, g] : terms) v = std::min(v, vp(c, p));
  return v;
}

FiniteDistribution FiniteDistribution::operator+(const FiniteDistribution& o) const {
  FiniteDistribution r = *this;
  r.terms.insert(r.terms.end(), o.terms.begin(), o.terms.end());
  return r;
}

FiniteDistribution FiniteDistribution::scaled(const mpq_class& s) const {
  FiniteDistribution r = *this;
  for (auto& t : r.terms) t.first *= s;
  return r;
}

mpq_class PointMeasure::integrate(const LocPoly& f) const {
  mpq_class r = 0;
  for (const auto& [m, z] : atoms) r += m * f(z);
  return r;
}

Series FamilyPointMeasure::integrate(const LocPoly& f, const SeriesCtxPtr& ctx) const {
  Series r(ctx);
  for (const auto& [m, z] : atoms) r += m * Series::constant(ctx, f(z));
  return r;
}

PointMeasure kappa_lambda(const FiniteDistribution& mu, const PureWeight& w) {
  PointMeasure out;
  for (const auto& [c, g] : mu.terms) {
    require_iwahori(g, mu.p);
    auto e = iw1_point(g, mu.p);
    if (!e) continue;
    out.atoms.emplace_back(c * w_chi(g, w, mu.p), e->z);
  }
  return out;
}

FamilyPointMeasure kappa_family(const FiniteDistribution& mu, const FamilyWeight& fam) {
  FamilyPointMeasure out;
  for (const auto& [c, g] : mu.terms) {
    require_iwahori(g, mu.p);
    auto e = iw1_point(g, mu.p);
    if (!e) continue;
    out.atoms.emplace_back(Series::constant(fam.ctx, c) * w_chi(g, fam), e->z);
  }
  return out;
}

Series kappa_family(const FiniteDistribution& mu, const LocPoly& f, const FamilyWeight& fam) {
  return kappa_family(mu, fam).integrate(f, fam.ctx);
}

mpq_class kappa_lambda_j(const FiniteDistribution& mu, const PureWeight& w, long j) {
  return r_lambda_pair(mu, [&](const Mat& g) { return v_lambda_j(g, w, j); });
}

CycNum moment(const PointMeasure& m, const TwistCharacter& chi, long j) {
  CycNum r;
  for (const auto& [mass, z] : m.atoms) r += CycNum(mass * qpow(z, j)) * chi.at(z);
  return r;
}

}  // namespace plocal
