#include "plocal/padic.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace plocal {

long vp(const mpz_class& x, long p) {
  if (sgn(x) == 0) return kInfVal;
  mpz_class t;
  mpz_class pz(p);
  return static_cast<long>(mpz_remove(t.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t()));
}

long vp(const mpq_class& x, long p) {
  if (sgn(x) == 0) return kInfVal;
  return vp(mpz_class(x.get_num()), p) - vp(mpz_class(x.get_den()), p);
}

bool is_integral(const mpq_class& x, long p) { return vp(x, p) >= 0; }

mpz_class residue(const mpq_class& x, long p, long k) {
  if (!is_integral(x, p)) throw std::domain_error("residue of a non-integral p-adic number");
  mpz_class mod;
  mpz_ui_pow_ui(mod.get_mpz_t(), p, k);
  mpz_class inv;
  mpz_class den = x.get_den();
  mpz_invert(inv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  mpz_class r = (x.get_num() * inv) % mod;
  if (r < 0) r += mod;
  return r;
}

Mat Mat::identity(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Mat Mat::diag(const std::vector<mpq_class>& d) {
  int n = static_cast<int>(d.size());
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = d[i];
  return m;
}

Mat Mat::perm(const std::vector<int>& pi) {
  int n = static_cast<int>(pi.size());
  Mat m(n, n);
  for (int j = 0; j < n; ++j) m(pi[j], j) = 1;
  return m;
}

Mat Mat::antidiag(int n) {
  Mat m(n, n);
  for (int i = 0; i < n; ++i) m(i, n - 1 - i) = 1;
  return m;
}

Mat Mat::block(const Mat& a, const Mat& b, const Mat& c, const Mat& d) {
  int n1 = a.rows(), m1 = a.cols(), n2 = c.rows(), m2 = b.cols();
  Mat g(n1 + n2, m1 + m2);
  for (int i = 0; i < n1; ++i) {
    for (int j = 0; j < m1; ++j) g(i, j) = a(i, j);
    for (int j = 0; j < m2; ++j) g(i, m1 + j) = b(i, j);
  }
  for (int i = 0; i < n2; ++i) {
    for (int j = 0; j < m1; ++j) g(n1 + i, j) = c(i, j);
    for (int j = 0; j < m2; ++j) g(n1 + i, m1 + j) = d(i, j);
  }
  return g;
}

Mat Mat::sub(int r0, int c0, int nr, int nc) const {
  Mat m(nr, nc);
  for (int i = 0; i < nr; ++i)
    for (int j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
  return m;
}

Mat Mat::operator*(const Mat& o) const {
  if (c_ != o.r_) throw std::invalid_argument("matrix shape mismatch");
  Mat m(r_, o.c_);
  for (int i = 0; i < r_; ++i)
    for (int k = 0; k < c_; ++k) {
      const mpq_class& x = (*this)(i, k);
      if (sgn(x) == 0) continue;
      for (int j = 0; j < o.c_; ++j)
        if (sgn(o(k, j)) != 0) m(i, j) += x * o(k, j);
    }
  return m;
}

Mat Mat::operator+(const Mat& o) const {
  Mat m = *this;
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] += o.a_[k];
  return m;
}

Mat Mat::operator-(const Mat& o) const {
  Mat m = *this;
  for (size_t k = 0; k < a_.size(); ++k) m.a_[k] -= o.a_[k];
  return m;
}

Mat Mat::scaled(const mpq_class& s) const {
  Mat m = *this;
  for (auto& x : m.a_) x *= s;
  return m;
}

std::optional<Mat> Mat::inverse() const {
  int n = r_;
  Mat a = *this, inv = identity(n);
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && sgn(a(piv, c)) == 0) ++piv;
    if (piv == n) return std::nullopt;
    if (piv != c)
      for (int j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    mpq_class d = a(c, c);
    for (int j = 0; j < n; ++j) {
      a(c, j) /= d;
      inv(c, j) /= d;
    }
    for (int r = 0; r < n; ++r) {
      if (r == c || sgn(a(r, c)) == 0) continue;
      mpq_class f = a(r, c);
      for (int j = 0; j < n; ++j) {
        a(r, j) -= f * a(c, j);
        inv(r, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

mpq_class Mat::det() const {
  int n = r_;
  Mat a = *this;
  mpq_class d = 1;
  for (int c = 0; c < n; ++c) {
    int piv = c;
    while (piv < n && sgn(a(piv, c)) == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(c, j));
      d = -d;
    }
    d *= a(c, c);
    for (int r = c + 1; r < n; ++r) {
      if (sgn(a(r, c)) == 0) continue;
      mpq_class f = a(r, c) / a(c, c);
      for (int j = c; j < n; ++j) a(r, j) -= f * a(c, j);
    }
  }
  return d;
}

bool Mat::is_upper() const {
  for (int i = 0; i < r_; ++i)
    for (int j = 0; j < i && j < c_; ++j)
      if (sgn((*this)(i, j)) != 0) return false;
  return true;
}

bool Mat::is_lower() const {
  for (int i = 0; i < r_; ++i)
    for (int j = i + 1; j < c_; ++j)
      if (sgn((*this)(i, j)) != 0) return false;
  return true;
}

bool Mat::is_diagonal() const { return is_upper() && is_lower(); }

std::string Mat::str() const {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < r_; ++i) {
    if (i) os << "; ";
    for (int j = 0; j < c_; ++j) os << (j ? " " : "") << (*this)(i, j).get_str();
  }
  os << "]";
  return os.str();
}

bool mat_integral(const Mat& g, long p) {
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      if (!is_integral(g(i, j), p)) return false;
  return true;
}

bool in_gl_zp(const Mat& g, long p) { return mat_integral(g, p) && vp(g.det(), p) == 0; }

bool in_iwahori(const Mat& g, long p) {
  if (!in_gl_zp(g, p)) return false;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < i; ++j)
      if (vp(g(i, j), p) < 1) return false;
  return true;
}

bool in_opposite_iwahori(const Mat& g, long p) {
  if (!in_gl_zp(g, p)) return false;
  for (int i = 0; i < g.rows(); ++i)
    for (int j = i + 1; j < g.cols(); ++j)
      if (vp(g(i, j), p) < 1) return false;
  return true;
}

bool congruent_identity(const Mat& g, long p, int beta) {
  for (int i = 0; i < g.rows(); ++i)
    for (int j = 0; j < g.cols(); ++j)
      if (vp(g(i, j) - (i == j ? 1 : 0), p) < beta) return false;
  return true;
}

bool in_n_beta(const Mat& g, long p, int beta) {
  int n2 = g.rows();
  if (n2 % 2 || !g.is_upper() || !mat_integral(g, p)) return false;
  int n = n2 / 2;
  for (int i = 0; i < n2; ++i) {
    if (g(i, i) != 1) return false;
    for (int j = i + 1; j < n2; ++j) {
      int uij = (i < n && j == n2 - 1 - i) ? 1 : 0;
      if (vp(g(i, j) - uij, p) < beta) return false;
    }
  }
  return true;
}

namespace {

template <bool Full>
void bruhat_impl(const Mat& g0, long p, BruhatCell& cell, Mat* lacc, Mat* racc, Mat* mono) {
  int n = g0.rows();
  Mat g = g0;
  std::vector<bool> used(n, false);
  std::vector<int> pivot(n, -1);
  for (int i = n - 1; i >= 0; --i) {
    int c = -1;
    long best = kInfVal;
    for (int k = 0; k < n; ++k) {
      if (used[k]) continue;
      long v = vp(g(i, k), p);
      if (v < best) best = v, c = k;
    }
    if (c < 0) throw std::domain_error("singular matrix in Bruhat decomposition");
    for (int k = 0; k < n; ++k) {
      if (used[k] || k == c || sgn(g(i, k)) == 0) continue;
      mpq_class x = -g(i, k) / g(i, c);
      for (int r = 0; r <= i; ++r)
        if (sgn(g(r, c)) != 0) g(r, k) += x * g(r, c);
      if constexpr (Full)
        for (int r = 0; r < n; ++r)
          if (sgn((*racc)(r, c)) != 0) (*racc)(r, k) += x * (*racc)(r, c);
    }
    for (int r = 0; r < i; ++r) {
      if (sgn(g(r, c)) == 0) continue;
      mpq_class y = g(r, c) / g(i, c);
      g(r, c) = 0;
      if constexpr (Full)
        for (int j = 0; j < n; ++j)
          if (sgn((*lacc)(i, j)) != 0) (*lacc)(r, j) -= y * (*lacc)(i, j);
    }
    used[c] = true;
    pivot[i] = c;
  }
  cell.w.assign(n, 0);
  cell.torus_val.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    cell.w[pivot[i]] = i;
    cell.torus_val[i] = vp(g(i, pivot[i]), p);
  }
  if constexpr (Full) *mono = g;
}

}  // namespace

BruhatCell bruhat_cell(const Mat& g, long p) {
  BruhatCell cell;
  bruhat_impl<false>(g, p, cell, nullptr, nullptr, nullptr);
  return cell;
}

BruhatDecomp iwahori_bruhat_decompose(const Mat& g, long p) {
  int n = g.rows();
  BruhatDecomp d;
  Mat l = Mat::identity(n), r = Mat::identity(n), m;
  bruhat_impl<true>(g, p, d.cell, &l, &r, &m);
  std::vector<mpq_class> diag(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (sgn(m(i, j)) != 0) diag[i] = m(i, j);
  d.b = *l.inverse() * Mat::diag(diag);
  d.w = Mat::perm(d.cell.w);
  d.i = *r.inverse();
  return d;
}

std::vector<int> opposite_parahoric_cell(const Mat& g, int r, long p) {
  int n = g.rows();
  BruhatCell c = bruhat_cell(g * Mat::antidiag(n), p);
  std::vector<int> label;
  for (int j = 0; j < r; ++j) label.push_back(c.w[n - 1 - j]);
  std::sort(label.begin(), label.end());
  return label;
}

std::optional<Ldu> ldu(const Mat& g) {
  int n = g.rows();
  Mat l = Mat::identity(n), u = g;
  for (int c = 0; c < n; ++c) {
    if (sgn(u(c, c)) == 0) return std::nullopt;
    for (int r = c + 1; r < n; ++r) {
      if (sgn(u(r, c)) == 0) continue;
      mpq_class f = u(r, c) / u(c, c);
      l(r, c) = f;
      for (int j = c; j < n; ++j) u(r, j) -= f * u(c, j);
    }
  }
  Ldu out;
  out.nbar = l;
  std::vector<mpq_class> d(n);
  for (int i = 0; i < n; ++i) d[i] = u(i, i);
  out.t = Mat::diag(d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) u(i, j) /= d[i];
  out.n = u;
  return out;
}

std::pair<Mat, Mat> iwahori_factorize_unit(const Mat& x, int beta, long p) {
  int n = x.rows();
  Mat w = Mat::antidiag(n);
  mpq_class pb = qpow(mpq_class(p), beta);
  Mat m = Mat::identity(n) + (w * x).scaled(pb);
  auto f = ldu(w * m * w);
  if (!f) throw std::domain_error("unit factorization failed");
  Mat lo = f->nbar, up = f->t * f->n;
  return {w * lo * w, w * up * w};
}

std::optional<OpenCell> open_cell_factorize(const Mat& g) {
  int n = g.rows() / 2;
  Mat a = g.sub(0, 0, n, n), b = g.sub(0, n, n, n), c = g.sub(n, 0, n, n), d = g.sub(n, n, n, n);
  auto ai = a.inverse(), bi = b.inverse();
  if (!ai || !bi) return std::nullopt;
  Mat w = Mat::antidiag(n);
  Mat m = d * *bi - c * *ai;
  auto f = ldu(m * w);
  if (!f) return std::nullopt;
  Mat rl = f->nbar, uu = f->t * f->n;
  auto uinv = uu.inverse();
  if (!uinv) return std::nullopt;
  Mat pl = w * *uinv * w;
  Mat pinv = *pl.inverse();
  OpenCell out;
  out.h1 = pinv * a;
  out.h2 = w * pinv * b;  // w_n^{-1} = w_n
  Mat q = c * *out.h1.inverse();
  out.bbar = Mat::block(pl, Mat(n, n), q, rl);
  Mat u = Mat::block(Mat::identity(n), w, Mat(n, n), Mat::identity(n));
  Mat h = Mat::block(out.h1, Mat(n, n), Mat(n, n), out.h2);
  if (!(out.bbar * u * h == g) || !out.bbar.is_lower()) return std::nullopt;
  return out;
}

mpz_class gl_order(int n, long p) {
  mpz_class r = 1, pn;
  mpz_ui_pow_ui(pn.get_mpz_t(), p, n);
  for (int k = 0; k < n; ++k) {
    mpz_class pk;
    mpz_ui_pow_ui(pk.get_mpz_t(), p, k);
    r *= pn - pk;
  }
  return r;
}

mpz_class borel_order(int n, long p) {
  mpz_class r, q;
  mpz_ui_pow_ui(r.get_mpz_t(), p - 1, n);
  mpz_ui_pow_ui(q.get_mpz_t(), p, n * (n - 1) / 2);
  return r * q;
}

mpq_class vol_iwahori(int n, long p) {
  mpq_class v(borel_order(n, p), gl_order(n, p));
  v.canonicalize();
  return v;
}

mpq_class upsilon_prime(int n, long p) {
  return vol_iwahori(n, p) * qpow(mpq_class(p - 1, p), -n) * qpow(mpq_class(p), n * (n - 1) / 2);
}

mpq_class upsilon_dprime(int n, long p) {
  return vol_iwahori(n, p) * qpow(mpq_class(p), n * (n - 1) / 2);
}

}  // namespace plocal
