#include "doctest.h"
#include "gen.hpp"

using namespace plocal;

namespace {

Mat random_gl(Rng& r, int n, long p) {
  for (;;) {
    Mat g = testgen::integral_matrix(r, n, p, 3);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) g(i, j) *= qpow(mpq_class(p), r.uniform(-2, 2));
    if (sgn(g.det()) != 0) return g;
  }
}

Mat random_iwahori(Rng& r, int n, long p) {
  for (;;) {
    Mat g = testgen::integral_matrix(r, n, p, 3);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) g(i, j) *= p;
    if (in_iwahori(g, p)) return g;
  }
}

Mat random_upper(Rng& r, int n, long p) {
  Mat b(n, n);
  for (int i = 0; i < n; ++i) {
    b(i, i) = qpow(mpq_class(p), r.uniform(-2, 2)) * (r.uniform(1, p - 1) + p * r.uniform(0, 3));
    for (int j = i + 1; j < n; ++j) b(i, j) = testgen::small_rational(r, 9);
  }
  return b;
}

bool lower_left_minors_nonzero_mod_p(const Mat& g, long p) {
  int n = g.rows();
  for (int k = 1; k <= n; ++k) {
    Mat m = g.sub(n - k, 0, k, k);
    if (vp(m.det(), p) > 0) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("valuations and residues") {
  CHECK(vp(mpq_class(12), 2) == 2);
  CHECK(vp(mpq_class(5, 27), 3) == -3);
  CHECK(vp(mpq_class(0), 3) == kInfVal);
  CHECK(residue(mpq_class(1, 2), 3, 1) == 2);
  CHECK(residue(mpq_class(-1), 2, 3) == 7);
}

TEST_CASE("Iwahori-Bruhat decomposition reconstructs g") {
  Rng r(1);
  for (long p : {2L, 3L})
    for (int n = 1; n <= 4; ++n)
      for (int it = 0; it < 40; ++it) {
        Mat g = random_gl(r, n, p);
        BruhatDecomp d = iwahori_bruhat_decompose(g, p);
        CHECK(d.b.is_upper());
        CHECK(in_iwahori(d.i, p));
        CHECK(d.w == Mat::perm(d.cell.w));
        CHECK(d.b * d.w * d.i == g);
        for (int k = 0; k < n; ++k) CHECK(vp(d.b(k, k), p) == d.cell.torus_val[k]);
      }
}

TEST_CASE("Bruhat cell is invariant under B on the left and Iw on the right") {
  Rng r(2);
  for (long p : {2L, 3L})
    for (int n = 2; n <= 4; ++n)
      for (int it = 0; it < 30; ++it) {
        Mat g = random_gl(r, n, p);
        Mat b = random_upper(r, n, p);
        Mat i = random_iwahori(r, n, p);
        BruhatCell c0 = bruhat_cell(g, p), c1 = bruhat_cell(b * g * i, p);
        CHECK(c0.w == c1.w);
        for (int k = 0; k < n; ++k) CHECK(c1.torus_val[k] == c0.torus_val[k] + vp(b(k, k), p));
      }
}

TEST_CASE("Bruhat label of a monomial matrix is its permutation") {
  Perm pi{2, 0, 3, 1};
  Mat g = Mat::diag({mpq_class(3), mpq_class(1, 9), mpq_class(2), mpq_class(1)}) * Mat::perm(pi);
  BruhatCell c = bruhat_cell(g, 3);
  CHECK(c.w == pi);
  CHECK(c.torus_val == std::vector<long>{1, -2, 0, 0});
}

TEST_CASE("measures agree with counts over F_p") {
  for (long p : {2L, 3L})
    for (int n = 1; n <= 3; ++n) {
      if (n == 3 && p == 3) continue;
      long total = 1;
      for (int k = 0; k < n * n; ++k) total *= p;
      long gl = 0, borel = 0, big = 0;
      for (long code = 0; code < total; ++code) {
        Mat g(n, n);
        long c = code;
        for (int k = 0; k < n * n; ++k) g(k / n, k % n) = c % p, c /= p;
        if (vp(g.det(), p) > 0) continue;
        ++gl;
        bool upper = true;
        for (int i = 0; i < n; ++i)
          for (int j = 0; j < i; ++j)
            if (sgn(g(i, j)) != 0) upper = false;
        borel += upper;
        big += lower_left_minors_nonzero_mod_p(g, p);
      }
      CHECK(mpz_class(gl) == gl_order(n, p));
      CHECK(mpz_class(borel) == borel_order(n, p));
      mpq_class vb(borel, gl), vbig(big, gl);
      vb.canonicalize();
      vbig.canonicalize();
      CHECK(vol_iwahori(n, p) == vb);
      CHECK(upsilon_dprime(n, p) == vbig);
    }
  CHECK(upsilon_dprime(1, 5) == 1);
  CHECK(upsilon_prime(1, 5) == mpq_class(5, 4));
}

TEST_CASE("big Bruhat cell label agrees with minor criterion") {
  Rng r(3);
  for (long p : {2L, 3L})
    for (int n = 2; n <= 3; ++n)
      for (int it = 0; it < 60; ++it) {
        Mat g = testgen::integral_matrix(r, n, p, 2);
        if (!in_gl_zp(g, p)) continue;
        Perm w0(n);
        for (int j = 0; j < n; ++j) w0[j] = n - 1 - j;
        CHECK((bruhat_cell(g, p).w == w0) == lower_left_minors_nonzero_mod_p(g, p));
      }
}

TEST_CASE("opposite parahoric cell") {
  Rng r(4);
  long p = 3;
  int n = 4;
  for (int rr = 1; rr < n; ++rr)
    for (int it = 0; it < 20; ++it) {
      Perm sigma{0, 1, 2, 3};
      for (int k = n - 1; k > 0; --k) std::swap(sigma[k], sigma[r.uniform(0, k)]);
      Mat j;
      for (;;) {
        j = testgen::integral_matrix(r, n, p, 2);
        for (int a = 0; a < rr; ++a)
          for (int b = rr; b < n; ++b) j(a, b) *= p;
        if (in_gl_zp(j, p)) break;
      }
      Mat g = random_upper(r, n, p) * Mat::perm(sigma) * j;
      std::vector<int> expect(sigma.begin(), sigma.begin() + rr);
      std::sort(expect.begin(), expect.end());
      CHECK(opposite_parahoric_cell(g, rr, p) == expect);
    }
}

TEST_CASE("unit Iwahori factorization") {
  Rng r(5);
  for (long p : {2L, 3L})
    for (int n = 1; n <= 3; ++n)
      for (int beta = 1; beta <= 2; ++beta) {
        Mat x = testgen::integral_matrix(r, n, p, 2);
        auto [rr, s] = iwahori_factorize_unit(x, beta, p);
        Mat lhs = Mat::identity(n) + (Mat::antidiag(n) * x).scaled(qpow(mpq_class(p), beta));
        CHECK(rr * s == lhs);
        CHECK(rr.is_upper());
        CHECK(s.is_lower());
        CHECK(congruent_identity(rr, p, beta));
        CHECK(congruent_identity(s, p, beta));
        for (int k = 0; k < n; ++k) CHECK(rr(k, k) == 1);
      }
}

TEST_CASE("LDU factorization of Iwahori elements") {
  Rng r(6);
  for (int it = 0; it < 30; ++it) {
    Mat g = random_iwahori(r, 3, 2);
    auto f = ldu(g);
    REQUIRE(f);
    CHECK(f->nbar * f->t * f->n == g);
    CHECK(f->nbar.is_lower());
    CHECK(f->t.is_diagonal());
    CHECK(f->n.is_upper());
    CHECK(mat_integral(f->nbar, 2));
    CHECK(mat_integral(f->n, 2));
  }
}

TEST_CASE("open cell factorization") {
  Rng r(7);
  for (int n = 1; n <= 3; ++n) {
    Mat w = Mat::antidiag(n);
    Mat u = Mat::block(Mat::identity(n), w, Mat(n, n), Mat::identity(n));
    auto f = open_cell_factorize(u);
    REQUIRE(f);
    CHECK(f->bbar == Mat::identity(2 * n));
    CHECK(f->h1 == Mat::identity(n));
    CHECK(f->h2 == Mat::identity(n));
    CHECK_FALSE(open_cell_factorize(Mat::identity(2 * n)));
    for (int it = 0; it < 20; ++it) {
      Mat g = testgen::integral_matrix(r, 2 * n, 5, 2);
      auto h = open_cell_factorize(g);
      if (!h) continue;
      Mat hh = Mat::block(h->h1, Mat(n, n), Mat(n, n), h->h2);
      CHECK(h->bbar * u * hh == g);
      CHECK(h->bbar.is_lower());
    }
  }
}
