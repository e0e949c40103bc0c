#include "plocal/samplers.hpp"

#include <algorithm>

namespace plocal {

namespace {

Mat z_pow(int n, long p, long e) {
  std::vector<mpq_class> d(n);
  for (int i = 0; i < n; ++i) d[i] = qpow(mpq_class(p), e * (n - 1 - i));
  return Mat::diag(d);
}

// k w_n z^{2 beta} m with m integral: the X of a supported point
Mat supported_x(Rng& r, const Mat& k, int beta, long p) {
  int n = k.rows();
  return k * Mat::antidiag(n) * z_pow(n, p, 2L * beta) * random_integral(r, n, n, p, 2);
}

}  // namespace

Mat random_integral(Rng& r, int rows, int cols, long p, int k) {
  Mat g(rows, cols);
  long bound = ipow(p, k);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) g(i, j) = mpq_class(r.uniform(0, bound - 1));
  return g;
}

Mat random_gl_zp(Rng& r, int n, long p) {
  for (;;) {
    Mat g = random_integral(r, n, n, p, 2);
    if (in_gl_zp(g, p)) return g;
  }
}

Mat random_iwahori(Rng& r, int n, long p) {
  for (;;) {
    Mat g = random_integral(r, n, n, p, 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) g(i, j) *= p;
    if (in_iwahori(g, p)) return g;
  }
}

Mat random_borel_zp(Rng& r, int n, long p) {
  Mat g = random_integral(r, n, n, p, 2);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) g(i, j) = 0;
    long u;
    do u = r.uniform(1, p * p - 1);
    while (u % p == 0);
    g(i, i) = u;
  }
  return g;
}

Mat random_upper_unipotent(Rng& r, int n, long p, int k) {
  Mat g = random_integral(r, n, n, p, k);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < i; ++j) g(i, j) = 0;
    g(i, i) = 1;
  }
  return g;
}

Perm random_perm(Rng& r, int n) {
  Perm s = perm_identity(n);
  for (int i = n - 1; i > 0; --i) std::swap(s[i], s[r.uniform(0, i)]);
  return s;
}

Mat random_n_beta(Rng& r, int n, long p, int beta) {
  mpq_class pb = qpow(mpq_class(p), beta);
  Mat a = random_upper_unipotent(r, n, p), b = random_upper_unipotent(r, n, p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      a(i, j) *= pb;
      b(i, j) *= pb;
    }
  Mat y = Mat::antidiag(n) + random_integral(r, n, n, p).scaled(pb);
  return Mat::block(a, y, Mat(n, n), b);
}

Mat random_iw_beta(Rng& r, int n, long p, int beta) {
  int m = 2 * n;
  Mat lo = random_integral(r, m, m, p);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) lo(i, j) = i == j ? mpq_class(1) : i > j ? lo(i, j) * p : mpq_class(0);
  Mat t = random_borel_zp(r, m, p);
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j) t(i, j) = 0;
  return lo * t * random_n_beta(r, n, p, beta);
}

Mat random_iwh1(Rng& r, int n, long p) {
  Mat t = random_borel_zp(r, n, p);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) t(i, j) = 0;
  Mat w = Mat::antidiag(n);
  Mat h1 = t + random_integral(r, n, n, p).scaled(p);
  Mat h2 = w * t * w + random_integral(r, n, n, p).scaled(p);
  return Mat::block(h1, Mat(n, n), Mat(n, n), h2);
}

std::vector<CellSample> cell_support_samples(Rng& r, int n, long p, int beta, int total, int constructed) {
  std::vector<CellSample> out;
  out.reserve(total);
  Mat wn = Mat::antidiag(n);
  for (int s = 0; s < total; ++s) {
    if (s < constructed) {
      Mat k = random_borel_zp(r, n, p) * wn * random_upper_unipotent(r, n, p);
      out.push_back({perm_longest(n), k, supported_x(r, k, beta, p), CellSampleKind::kConstructed});
      continue;
    }
    switch (r.uniform(0, 2)) {
      case 0: {
        // unconstrained k and delta, X near the support lattice
        Mat k = random_gl_zp(r, n, p);
        Perm delta = r.coin() ? perm_longest(n) : random_perm(r, n);
        out.push_back({delta, k, supported_x(r, k, beta, p), CellSampleKind::kRandom});
        break;
      }
      case 1: {
        // constructed point with one entry of m pushed out of Z_p
        Mat k = random_borel_zp(r, n, p) * wn * random_upper_unipotent(r, n, p);
        Mat m = random_integral(r, n, n, p, 2);
        int i = static_cast<int>(r.uniform(0, n - 1)), j = static_cast<int>(r.uniform(0, n - 1));
        m(i, j) += mpq_class(r.uniform(1, p - 1), p);
        Mat x = k * wn * z_pow(n, p, 2L * beta) * m;
        out.push_back({perm_longest(n), k, x, CellSampleKind::kNearMiss});
        break;
      }
      default: {
        // valid X for k, but delta moved off the longest element or k moved off the cell
        Mat k = random_borel_zp(r, n, p) * wn * random_upper_unipotent(r, n, p);
        Perm delta = perm_longest(n);
        if (n > 1 && r.coin()) {
          while (delta == perm_longest(n)) delta = random_perm(r, n);
        } else {
          Mat lower = Mat::identity(n);
          if (n > 1) lower(n - 1, 0) = r.uniform(1, p - 1);
          k = k * lower;
        }
        out.push_back({delta, k, supported_x(r, k, beta, p), CellSampleKind::kNearMiss});
      }
    }
  }
  return out;
}

}  // namespace plocal
