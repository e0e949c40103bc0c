#include "doctest.h"
#include "gen.hpp"
#include "plocal/princhecke.hpp"

using namespace plocal;

namespace {

PSVector random_vector(Rng& r, const Satake& s, const Perm& sigma) {
  PSVector f{s, sigma, {}};
  for (const Perm& w : all_perms(2 * s.n))
    if (r.coin()) f.coeffs[w] = SymElem(testgen::small_rational(r) + 1).with_prime(s.p);
  return f;
}

Mat random_iwahori(Rng& r, int n, long p) {
  for (;;) {
    Mat g = testgen::integral_matrix(r, n, p, 2);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < i; ++j) g(i, j) *= p;
    if (in_iwahori(g, p)) return g;
  }
}

}  // namespace

TEST_CASE("evaluation of the cell vectors") {
  Satake s = satake_ag(2, 3);
  for (const Perm& sigma : {perm_identity(4), Perm{2, 0, 3, 1}}) {
    PSVector f = ps_fsigma(s, sigma);
    Mat w = Mat::antidiag(4);
    CHECK(ps_evaluate(f, w) == SymElem(1));
    for (int r = 1; r < 4; ++r) {
      Mat tp = w * t_pr(4, r, 3) * w;
      std::vector<long> v(4, 0);
      for (int i = 4 - r; i < 4; ++i) v[i] = 1;
      CHECK(ps_evaluate(f, tp * w) == torus_character(s, sigma, v));
    }
    CHECK(ps_evaluate(f, Mat::identity(4)).is_zero());
  }
}

TEST_CASE("evaluation is right Iwahori invariant") {
  Rng r(21);
  Satake s = satake_ag(2, 2);
  for (int it = 0; it < 20; ++it) {
    PSVector f = random_vector(r, s, perm_identity(4));
    Mat g = testgen::integral_matrix(r, 4, 2, 3);
    if (sgn(g.det()) == 0) continue;
    CHECK(ps_evaluate(f, g * random_iwahori(r, 4, 2)) == ps_evaluate(f, g));
  }
}

TEST_CASE("U_{p,r} eigenvectors for n = 1") {
  for (long p : {2L, 3L}) {
    Satake s = satake_ag(1, p);
    for (const Perm& sigma : all_perms(2)) {
      PSVector f = ps_fsigma(s, sigma);
      PSVector u = hecke_apply(f, 1);
      CHECK(u == f.scaled(hecke_eigenvalue(Refinement{s, sigma}, 1)));
      CHECK(u.coeff(perm_longest(2)) == SymElem::y(p) * s.theta[sigma[1]]);
    }
  }
}

TEST_CASE("U_{p,r} eigenvectors for n = 2, p = 2") {
  Satake s = satake_ag(2, 2);
  for (const Perm& sigma : all_perms(4)) {
    PSVector f = ps_fsigma(s, sigma);
    for (int r = 1; r < 4; ++r) CHECK(hecke_apply(f, r) == f.scaled(hecke_eigenvalue(Refinement{s, sigma}, r)));
  }
}

TEST_CASE("U_{p,r} is linear, commuting, and driver independent") {
  Rng r(22);
  Satake s = satake_ag(2, 2);
  Perm sigma{1, 3, 0, 2};
  for (int it = 0; it < 2; ++it) {
    PSVector f = random_vector(r, s, sigma), g = random_vector(r, s, sigma);
    CHECK(hecke_apply(f + g, 2) == hecke_apply(f, 2) + hecke_apply(g, 2));
    CHECK(hecke_apply(hecke_apply(f, 1), 3) == hecke_apply(hecke_apply(f, 3), 1));
    PSVector a = hecke_apply(f, 2), b = hecke_apply_serial(f, 2);
    CHECK(a == b);
    CHECK(a.coeffs.size() == b.coeffs.size());
  }
}
