#include <algorithm>
#include <set>

#include "doctest.h"
#include "gen.hpp"
#include "plocal/rootspin.hpp"

using namespace plocal;

namespace {

Weight basis(int size, int k) {
  Weight v(size, 0);
  v[k] = 1;
  return v;
}

bool is_pure(const Weight& l) {
  int m = static_cast<int>(l.size());
  for (int i = 0; i < m; ++i)
    if (l[i] + l[m - 1 - i] != l[0] + l[m - 1]) return false;
  return true;
}

}  // namespace

TEST_CASE("transfer on weights") {
  CHECK(jmath_weight({0, 1, 0}) == Weight{1, 0, 0, -1});
  CHECK(jmath_weight({1, 0}) == Weight{0, 1});
  CHECK(jmath_weyl(gspin_identity(3)) == perm_identity(6));
  CHECK(jmath_weyl(gspin_sign(3, 2)) == Perm{0, 4, 2, 3, 1, 5});
}

TEST_CASE("pure weights are exactly the image of the transfer") {
  for (int n = 1; n <= 3; ++n) {
    int m = 2 * n;
    long total = 1;
    for (int i = 0; i < m; ++i) total *= 9;
    long pure = 0;
    for (long code = 0; code < total; ++code) {
      Weight l(m);
      long c = code;
      for (int i = 0; i < m; ++i) l[i] = c % 9 - 4, c /= 9;
      if (!is_pure(l)) continue;
      ++pure;
      // unique preimage: mu_0 = purity weight, mu_i = lambda_i for i <= n
      Weight mu(n + 1);
      mu[0] = l[0] + l[m - 1];
      for (int i = 1; i <= n; ++i) mu[i] = l[i - 1];
      CHECK(jmath_weight(mu) == l);
    }
    CHECK(pure > 0);
    // injectivity on a box
    std::set<Weight> seen;
    for (long code = 0; code < 1L << (2 * (n + 1)); ++code) {
      Weight mu(n + 1);
      long c = code;
      for (int i = 0; i <= n; ++i) mu[i] = c % 4 - 2, c /= 4;
      CHECK(seen.insert(jmath_weight(mu)).second);
    }
  }
}

TEST_CASE("Weyl group law matches the action on characters") {
  for (int n = 1; n <= 3; ++n) {
    auto all = all_gspin_weyl(n);
    CHECK(all.size() == static_cast<size_t>((1 << n) * (n == 1 ? 1 : n == 2 ? 2 : 6)));
    for (const auto& a : all) {
      for (int k = 0; k <= n; ++k) {
        Weight f = basis(n + 1, k);
        CHECK(gspin_act_weight(a, f) == gspin_act_weight_generators(a, f));
        for (int l = 0; l <= n; ++l)
          CHECK(pair(gspin_act_weight(a, f), gspin_act_coweight(a, basis(n + 1, l))) == (k == l));
      }
      for (const auto& b : all) {
        GSpinWeyl ab = gspin_compose(a, b);
        for (int k = 0; k <= n; ++k) {
          Weight f = basis(n + 1, k);
          CHECK(gspin_act_weight(ab, f) == gspin_act_weight(a, gspin_act_weight(b, f)));
          CHECK(gspin_act_coweight(ab, f) == gspin_act_coweight(a, gspin_act_coweight(b, f)));
        }
      }
    }
  }
}

TEST_CASE("Weyl transfer is an isomorphism onto the purity stabilizer") {
  const size_t sizes[] = {0, 2, 8, 48};
  for (int n = 1; n <= 3; ++n) {
    auto wg0 = wg0_members(n);
    CHECK(wg0.size() == sizes[n]);
    std::set<Perm> image;
    auto all = all_gspin_weyl(n);
    for (const auto& a : all) {
      Perm s = jmath_weyl(a);
      image.insert(s);
      CHECK(jmath_weyl_inverse(s) == a);
      for (const auto& b : all) CHECK(jmath_weyl(gspin_compose(a, b)) == perm_compose(s, jmath_weyl(b)));
      for (int k = 0; k <= n; ++k) {
        Weight f = basis(n + 1, k);
        CHECK(jmath_weight(gspin_act_weight(a, f)) == gl_act(s, jmath_weight(f)));
      }
      for (int i = 0; i < 2 * n; ++i) {
        Weight e = basis(2 * n, i);
        CHECK(jmath_vee(gl_act(s, e)) == gspin_act_coweight(a, jmath_vee(e)));
      }
    }
    CHECK(std::set<Perm>(wg0.begin(), wg0.end()) == image);
    for (const Perm& s : all_perms(2 * n))
      if (!image.count(s)) CHECK_THROWS(jmath_weyl_inverse(s));
  }
}

TEST_CASE("wg0 is an extension of S_n by signs") {
  for (int n = 1; n <= 3; ++n) {
    std::set<Perm> kernel, quotient;
    for (const Perm& s : wg0_members(n)) {
      GSpinWeyl w = jmath_weyl_inverse(s);
      quotient.insert(w.pi);
      if (w.pi == perm_identity(n)) kernel.insert(s);
    }
    CHECK(kernel.size() == (1u << n));
    CHECK(quotient.size() == all_perms(n).size());
  }
}

TEST_CASE("pairing identity and half sums") {
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= n; ++k)
      for (int i = 0; i < 2 * n; ++i)
        CHECK(pair(basis(n + 1, k), jmath_vee(basis(2 * n, i))) ==
              pair(jmath_weight(basis(n + 1, k)), basis(2 * n, i)));
    CHECK(jmath_weight(rho_gspin_doubled(n)) == rho_gl_doubled(n));
  }
  CHECK(jmath_vee(nu_r(1, 4)) == Weight{0, 1, 0});
  CHECK(jmath_vee(nu_r(3, 4)) == Weight{1, 1, 0});
}

TEST_CASE("modulus character") {
  CHECK(delta_b({1, 0}, 3) == SymElem(mpq_class(1, 3)));
  CHECK(delta_b({0, 0, 0, 0}, 3) == SymElem(1));
  CHECK(delta_b_half({1, 0}, 3) * delta_b_half({1, 0}, 3) == delta_b({1, 0}, 3));
  for (int n = 1; n <= 3; ++n)
    for (int beta = 1; beta <= 2; ++beta) {
      std::vector<long> tp(2 * n), a(2 * n, 0), b(2 * n);
      for (int i = 0; i < n; ++i) {
        tp[i] = n + (n - 1 - i);
        tp[n + i] = n - 1 - i;
        a[i] = n * beta;
        b[i] = b[n + i] = beta * (n - 1 - i);
      }
      CHECK(delta_b(tp, 5).pow(beta) == delta_b(a, 5) * delta_b(b, 5));
    }
}
