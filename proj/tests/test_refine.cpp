#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "plocal/refine.hpp"

using namespace plocal;

TEST_CASE("eigenvalue examples") {
  Satake s = satake_ag(1, 3);
  Refinement id{s, perm_identity(2)};
  CHECK(hecke_eigenvalue(id, 1) == SymElem::y(3) * s.theta[1]);
  CHECK(integral_eigenvalue(id, 1, {4, 0}) == SymElem(81) * SymElem::y(3) * s.theta[1]);
  Satake f = satake_free(2, 5);
  Refinement rev{f, perm_longest(4)};
  CHECK(hecke_eigenvalue(rev, 2) == SymElem::p_half_power(5, 4) * f.theta[0] * f.theta[1]);
  SymElem prod(1);
  for (int r = 1; r < 4; ++r) prod *= hecke_eigenvalue(rev, r);
  CHECK(up_eigenvalue(rev) == prod);
  CHECK(integral_eigenvalue(rev, 2, {0, 0, 0, 0}) == hecke_eigenvalue(rev, 2));
}

TEST_CASE("spin refinements: counts and equivalent characterizations") {
  const size_t spins[] = {0, 2, 8, 48};
  for (int n = 1; n <= 3; ++n) {
    Satake s = satake_ag(n, 3);
    std::set<Perm> wg0;
    for (const Perm& w : wg0_members(n)) wg0.insert(w);
    size_t count = 0, total = 0;
    for (const Perm& sigma : all_perms(2 * n)) {
      ++total;
      Refinement ref{s, sigma};
      bool spin = is_spin(ref);
      count += spin;
      CHECK(spin == spin_by_pairs(sigma));
      CHECK(spin == (wg0.count(delta_perm(sigma)) == 1));
      CHECK(spin == gspin_factorization(ref).has_value());
    }
    CHECK(count == spins[n]);
    CHECK(total == all_perms(2 * n).size());
  }
}

TEST_CASE("GSpin factorization routes") {
  Satake s = satake_ag(1, 2);
  auto g = gspin_factorization(Refinement{s, perm_identity(2)});
  REQUIRE(g);
  CHECK(g->u[0] == SymElem::y(2) * s.theta[1]);
  CHECK(g->v == s.eta);
  Satake s2 = satake_ag(2, 3);
  for (const Perm& sigma : all_perms(4)) {
    Refinement ref{s2, sigma};
    if (!is_spin(ref)) continue;
    GSpinEigen t = gspin_eigen_transfer(ref);
    for (int r = 1; r <= 2; ++r) CHECK(t.u[r - 1] == hecke_eigenvalue(ref, r));
  }
  CHECK_FALSE(gspin_factorization(Refinement{s2, perm_identity(4)}));
}

TEST_CASE("free Satake parameters admit no spin refinement") {
  Satake f = satake_free(2, 3);
  for (const Perm& sigma : all_perms(4)) CHECK_FALSE(is_spin(Refinement{f, sigma}));
}

TEST_CASE("non-regular Satake parameters are rejected") {
  Satake s = satake_free(1, 3);
  s.theta[1] = s.theta[0];
  CHECK_THROWS_AS(is_spin(Refinement{s, perm_identity(2)}), std::domain_error);
}

TEST_CASE("Shalika matchings") {
  for (int n = 1; n <= 3; ++n) {
    Satake s = satake_ag(n, 2);
    auto nu = shalika_admissible(s.theta, s.eta);
    REQUIRE(nu);
    for (int i = 0; i < n; ++i) CHECK((*nu)[i] == n + i);
    std::vector<SymElem> ast(2 * n);
    Perm tau = tau_perm(n);
    for (int i = 0; i < 2 * n; ++i) ast[i] = s.theta[tau[i]];
    auto nu2 = shalika_admissible(ast, s.eta);
    REQUIRE(nu2);
    for (int i = 0; i < n; ++i) CHECK((*nu2)[i] == 2 * n - 1 - i);
    Satake f = satake_free(n, 2);
    CHECK_FALSE(shalika_admissible(f.theta, f.eta));
  }
}

TEST_CASE("normalizing the Satake parameter") {
  for (int n = 1; n <= 3; ++n) {
    Satake s = satake_ag(n, 3);
    Perm tau = tau_perm(n);
    std::set<Perm> wg0;
    for (const Perm& w : wg0_members(n)) wg0.insert(w);
    Normalized already = normalize_satake(Refinement{s, tau});
    CHECK(already.conjugator == perm_identity(2 * n));
    for (const Perm& sigma : all_perms(2 * n)) {
      Refinement ref{s, sigma};
      if (!is_spin(ref)) continue;
      Normalized z = normalize_satake(ref);
      Refinement check{z.satake, tau};
      for (int r = 1; r < 2 * n; ++r) CHECK(hecke_eigenvalue(check, r) == hecke_eigenvalue(ref, r));
      // conjugator lies in tau^{-1} W_G^0 tau
      CHECK(wg0.count(perm_compose(tau, perm_compose(z.conjugator, tau))) == 1);
    }
  }
}

TEST_CASE("non-critical slope") {
  long k = 3;
  Satake s = satake_ag(1, 5);
  std::map<int, mpq_class> vals{{gen_x(1), mpq_class(-2 * k - 1, 2)}, {kE, mpq_class(-k)}};
  // theta_2 = E / X_1 has valuation 1/2
  Refinement id{s, perm_identity(2)};
  Refinement sw{s, Perm{1, 0}};
  CHECK(sym_valuation(integral_eigenvalue(id, 1, {k, 0}), vals) == k + 1);
  CHECK(sym_valuation(integral_eigenvalue(sw, 1, {k, 0}), vals) == 0);
  CHECK_FALSE(noncritical_slope(id, {k, 0}, vals));
  CHECK(noncritical_slope(sw, {k, 0}, vals));
  std::map<int, mpq_class> vals2{{gen_x(1), mpq_class(0)}, {kE, mpq_class(-1, 2)}};
  CHECK(sym_valuation(integral_eigenvalue(id, 1, {k, 0}), vals2) == k);
  CHECK(noncritical_slope(id, {k, 0}, vals2));
}
