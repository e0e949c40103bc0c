#include "doctest.h"
#include "gen.hpp"
#include "plocal/samplers.hpp"
#include "plocal/shalikazeta.hpp"

using namespace plocal;

namespace {

std::vector<Refinement> spin_refinements(int n, long p) {
  std::vector<Refinement> out;
  Satake s = satake_ag(n, p);
  for (const Perm& sigma : all_perms(2 * n)) {
    Refinement r{s, sigma};
    if (is_spin(r)) out.push_back(r);
  }
  return out;
}

SymElem s_pow(long p, long k) {
  Mono m;
  m.e[kS] = static_cast<int16_t>(k);
  return SymElem::term(CycNum(1), m, p);
}

SymElem q(long p, const mpq_class& v) { return SymElem(v).with_prime(p); }

}  // namespace

TEST_CASE("gauss sums of small conductors") {
  auto c3 = primitive_characters(3, 1);
  REQUIRE(c3.size() == 1);
  CHECK(gauss_sum(c3[0]) == CycNum::root(3, 1) - CycNum::root(3, 2));
  auto c4 = primitive_characters(2, 2);
  REQUIRE(c4.size() == 1);
  CHECK(c4[0](3) == CycNum(-1));
  CHECK(gauss_sum(c4[0]) == CycNum::root(4, 1) - CycNum::root(4, 3));
  CHECK(primitive_characters(2, 1).empty());
  CHECK_THROWS_AS(gauss_sum(TwistCharacter::trivial(3)), std::domain_error);
}

TEST_CASE("character counts, multiplicativity and |tau|^2 = p^beta") {
  for (long p : {2L, 3L, 5L})
    for (int b = 1; b <= 3; ++b) {
      long mod = ipow(p, b);
      auto chars = primitive_characters(p, b);
      long expect = p == 2 ? (b == 1 ? 0 : (b == 2 ? 1 : 2)) : euler_phi(mod) - (b == 1 ? 1 : euler_phi(mod / p));
      CHECK(static_cast<long>(chars.size()) == expect);
      for (const auto& chi : chars) {
        for (long a = 1; a < mod; ++a)
          for (long c = 1; c < mod; c += 3)
            if (a % p && c % p) CHECK(chi(a * c) == chi(a) * chi(c));
        CHECK(gauss_sum(chi) * gauss_sum(chi.conj()) * chi(-1) == CycNum(mod));
        CHECK(gauss_sum(chi.conj()) == chi(-1) * gauss_sum(chi).conj());
      }
    }
}

TEST_CASE("additive character orthogonality") {
  for (long p : {2L, 3L})
    for (int b = 1; b <= 2; ++b)
      for (long m = 1; m < 3 * ipow(p, b); ++m) {
        bool deep = m % ipow(p, b) == 0;
        CHECK(additive_char_average(p, b, m) == CycNum(deep ? 1 : 0));
      }
}

TEST_CASE("cell support predicate against the Bruhat cell of the assembled matrix") {
  Rng rng(20240611);
  for (int n : {1, 2})
    for (long p : {2L, 3L})
      for (int beta : {1, 2}) {
        Rng r = rng.fork(static_cast<uint64_t>(n * 100 + p * 10 + beta));
        int positives = 0, agree = 0;
        auto samples = cell_support_samples(r, n, p, beta, 250, 40);
        Satake s = satake_ag(n, p);
        for (const auto& smp : samples) {
          bool pred = shalika_support_predicate(smp.delta, smp.k, smp.x, beta, p);
          bool cell = shalika_cell_membership(smp.delta, smp.k, smp.x, beta, p);
          agree += pred == cell;
          if (smp.kind == CellSampleKind::kConstructed) CHECK(pred);
          if (pred) {
            ++positives;
            CHECK_NOTHROW(borel_part_character(s.theta, smp.k, smp.x, beta, p));
          }
        }
        CHECK(agree == static_cast<int>(samples.size()));
        CHECK(positives >= 40);
      }
}

TEST_CASE("cell support named cases") {
  for (long p : {2L, 3L}) {
    int n = 2, beta = 1;
    Mat wn = Mat::antidiag(n);
    Mat x = z_matrix(n, p) * z_matrix(n, p);
    CHECK(shalika_support_predicate(perm_longest(n), wn, x, beta, p));
    CHECK_FALSE(shalika_support_predicate(perm_identity(n), wn, x, beta, p));
    CHECK_FALSE(shalika_cell_membership(perm_identity(n), wn, x, beta, p));
    CHECK_FALSE(shalika_support_predicate(perm_longest(n), Mat::identity(n), x, beta, p));
    std::vector<SymElem> trivial(2 * n, SymElem(1).with_prime(p));
    CHECK(borel_part_character(trivial, wn, x, beta, p) == SymElem(1));
    Satake s = satake_ag(n, p);
    SymElem expect = s.theta[2].pow(2);
    CHECK(borel_part_character(s.theta, wn, x, beta, p) == expect);
    CHECK_THROWS_AS(borel_part_character(s.theta, Mat::identity(n), x, beta, p), std::invalid_argument);
  }
}

TEST_CASE("intertwining oracle: normalization, support and Shalika equivariance") {
  for (long p : {2L, 3L}) {
    Satake s = satake_ag(1, p);
    PSVector f = ps_basis(s, perm_identity(2), perm_longest(2));
    CHECK(ag_intertwine_value(f, Mat::identity(2), 3) == SymElem(1));
    PSVector g = f + ps_basis(s, perm_identity(2), perm_identity(2)).scaled(SymElem::x(1));
    for (long v : {-1L, -2L}) {
      Mat d = Mat::diag({qpow(mpq_class(p), v) * (p - 1), 1});
      CHECK(ag_intertwine_value(g, d, 4).is_zero());
    }
    Rng r(7 + p);
    for (int t = 0; t < 4; ++t) {
      Mat h = random_iwahori(r, 2, p);
      h(0, 0) *= p;
      h(0, 1) *= p;
      long k = r.uniform(-1, 1);
      mpq_class a = qpow(mpq_class(p), k) * (1 + p * r.uniform(0, 2));
      long num = r.uniform(1, p - 1);
      mpq_class x(num, p);
      Mat left = Mat::diag({a, a});
      Mat unip = Mat::identity(2);
      unip(0, 1) = x;
      SymElem base = ag_intertwine_value(g, h, 4);
      SymElem moved = ag_intertwine_value(g, left * unip * h, 5);
      SymElem eta = s.eta.pow(k);
      CHECK(moved == eta * SymElem(CycNum::root(p, num)) * base);
      CHECK(base == ag_intertwine_value_serial(g, h, 4));
    }
  }
}

TEST_CASE("intertwining oracle certifies its truncation") {
  Satake s = satake_ag(1, 3);
  PSVector f = ps_basis(s, perm_identity(2), perm_identity(2));
  Mat g = Mat::identity(2);
  g(0, 1) = mpq_class(1, 27);
  CHECK(ag_required_shells(g, 3) == 6);
  CHECK_THROWS_AS(ag_intertwine_value(f, g, 5), TruncationError);
  // (1 x; 0 1) with x = 1/27 shifts W by psi(1/27)
  CHECK(ag_intertwine_value(f, g, 6) == SymElem(CycNum::root(27, 1)) * ag_intertwine_value(f, Mat::identity(2), 2));
}

TEST_CASE("W-value at the Shalika point: two routes, unit monomial, oracle at n = 1") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& ref : spin_refinements(n, 2))
      for (int beta : {1, 2}) {
        SymElem v = w_value_closed(ref, beta);
        CHECK(v.is_unit_monomial());
        CHECK(v == w_value_direct(ref, beta));
      }
  for (long p : {2L, 3L})
    for (const auto& ref : spin_refinements(1, p)) {
      CHECK(w_value_closed(ref, 1) == SymElem(1));
      Normalized nz = normalize_satake(ref);
      PSVector f = ps_basis(nz.satake, perm_identity(2), shalika_cell_label(perm_longest(1)));
      CHECK(ag_intertwine_value(f, Mat::identity(2), 3) == w_value_closed(ref, 2));
    }
  for (const auto& ref : spin_refinements(2, 3)) {
    SymElem v1 = w_value_closed(ref, 1), v2 = w_value_closed(ref, 2), v3 = w_value_closed(ref, 3);
    CHECK(v3 * v1 == v2 * v2);
  }
  Refinement bad{satake_ag(2, 2), perm_identity(4)};
  if (!is_spin(bad)) CHECK_THROWS(w_value_closed(bad, 1));
}

TEST_CASE("Iwahori zeta: oracle equals closed form") {
  for (long p : {2L, 3L}) {
    Satake s = satake_ag(1, p);
    PSVector f = ps_basis(s, perm_identity(2), perm_longest(2));
    PSVector g = f + ps_basis(s, perm_identity(2), perm_identity(2)).scaled(SymElem::x(1) + SymElem(2));
    for (int beta : {1, 2}) {
      auto chars = primitive_characters(p, beta);
      if (chars.empty()) continue;
      for (const PSVector* h : {&f, &g}) {
        auto table = iwahori_shell_table(*h, beta, beta + 2);
        SymElem wb = ag_intertwine_value(*h, Mat::identity(2), beta + 2);
        for (const auto& chi : chars) {
          ZetaResult o = zeta_iwahori_oracle(table, chi);
          ZetaResult c = zeta_iwahori_closed(wb, chi, 1, s.eta);
          CHECK(o.source == ZetaResult::Source::kOracle);
          CHECK(o.value == c.value);
        }
      }
      PSVector zero{s, perm_identity(2), {}};
      CHECK(zeta_iwahori_oracle(zero, chars[0], beta + 2).value.is_zero());
      SymElem c = SymElem::x(1) - SymElem(3);
      CHECK(zeta_iwahori_oracle(f.scaled(c), chars[0], beta + 2).value ==
            c * zeta_iwahori_oracle(f, chars[0], beta + 2).value);
    }
  }
}

TEST_CASE("Iwahori zeta closed form at n = 1, p = 3, beta = 1") {
  auto chi = primitive_characters(3, 1)[0];
  SymElem got = zeta_iwahori_closed(SymElem(1), chi, 1, SymElem::gen(kE, 3)).value;
  SymElem want = q(3, mpq_class(3, 2)) * q(3, mpq_class(1, 3)) * s_pow(3, 1) * SymElem::p_half_power(3, -1) *
                 SymElem(CycNum::root(3, 1) - CycNum::root(3, 2)) * SymElem(chi(-1));
  CHECK(got == want);
  CHECK_THROWS_AS(zeta_iwahori_closed(SymElem(1), TwistCharacter::trivial(3), 1, SymElem(1)), std::domain_error);
}

TEST_CASE("parahoric zeta: oracle equals closed form on both rows") {
  for (long p : {2L, 3L}) {
    Satake s = satake_ag(1, p);
    std::vector<TwistCharacter> chars{TwistCharacter::trivial(p)};
    for (int b : {1, 2})
      for (const auto& c : primitive_characters(p, b)) chars.push_back(c);
    for (const auto& chi : chars) {
      SymElem c = zeta_parahoric_closed(s, chi, 0).value;
      CHECK(zeta_parahoric_oracle(s, chi, 3).value == c);
      CHECK(zeta_parahoric_oracle(s, chi, 5).value == c);
    }
    CHECK_THROWS_AS(zeta_parahoric_oracle(s, primitive_characters(3, 2)[0], 1), TruncationError);
    // written-out rows
    SymElem t = s.theta[1] * s_pow(p, -1);
    SymElem unram = q(p, mpq_class(-1, p - 1)) * (SymElem(1) - q(p, p) * t) * geometric_tail(SymElem(1), t);
    CHECK(zeta_parahoric_closed(s, TwistCharacter::trivial(p), 0).value ==
          s_pow(p, 1) * SymElem::p_half_power(p, -1) * unram);
  }
  auto chi = primitive_characters(3, 1)[0];
  SymElem ram = q(3, mpq_class(1, 3)) * q(3, mpq_class(3, 2)) * SymElem(gauss_sum(chi));
  CHECK(zeta_parahoric_closed(satake_ag(1, 3), chi, 0).value ==
        s_pow(3, 1) * SymElem::p_half_power(3, -1) * SymElem(chi(-1)) * ram);
}

TEST_CASE("Euler factors: ramified quotient and unramified comparison") {
  PureWeight w1 = pure_weight({1, 0});
  PureWeight w2 = pure_weight({2, 1, -1, -2});
  for (long p : {2L, 3L}) {
    for (const auto& ref : spin_refinements(1, p))
      for (long j : {-1L, 0L}) {
        for (int b : {1, 2})
          for (const auto& chi : primitive_characters(p, b))
            CHECK(ep_factor(ref, chi, j, w1) / qprime_factor(chi, j, 1) == hecke_eigenvalue(ref, 1).pow(-b));
        SymElem e = ep_factor(ref, TwistCharacter::trivial(p), j, w1);
        Normalized nz = normalize_satake(ref);
        SymElem qv = at_critical_point(zeta_parahoric_closed(nz.satake, TwistCharacter::trivial(p), 0).value, j);
        CHECK(((e / qv) / q(p, qpow(mpq_class(1 - p), 1))).is_unit_monomial());
      }
    const auto refs2 = spin_refinements(2, p);
    for (size_t k = 0; k < refs2.size(); k += 3)
      for (long j = -1; j <= 1; ++j) {
        const auto& ref = refs2[k];
        auto chi = primitive_characters(3, 1)[0];
        if (p == 3)
          CHECK(ep_factor(ref, chi, j, w2) / qprime_factor(chi, j, 2) == hecke_eigenvalue(ref, 2).pow(-1));
        SymElem e = ep_factor(ref, TwistCharacter::trivial(p), j, w2);
        Normalized nz = normalize_satake(ref);
        SymElem qv = at_critical_point(zeta_parahoric_closed(nz.satake, TwistCharacter::trivial(p), 0).value, j);
        CHECK(((e / qv) / q(p, qpow(mpq_class(1 - p), 2))).is_unit_monomial());
      }
  }
  CHECK_THROWS_AS(ep_factor(spin_refinements(1, 3)[0], TwistCharacter::trivial(3), 3, w1), std::invalid_argument);
}

TEST_CASE("Euler factor pole under numeric specialization") {
  Satake s = satake_ag(1, 3);
  Refinement ref{s, perm_identity(2)};
  // theta_2 = E / X_1 = p^{1/2} makes alpha_{2,0} = 1
  Satake num = s;
  num.theta = {SymElem::x(1), SymElem::p_half_power(3, 1)};
  num.eta = SymElem::x(1) * SymElem::p_half_power(3, 1);
  Refinement bad{num, perm_identity(2)};
  CHECK_THROWS_AS(ep_factor(bad, TwistCharacter::trivial(3), 0, pure_weight({1, 0})), DivisionByZero);
  CHECK_NOTHROW(ep_factor(ref, TwistCharacter::trivial(3), 0, pure_weight({1, 0})));
}

TEST_CASE("Iwahori route reproduces the L-value structure") {
  for (int n : {1, 2}) {
    long p = 3;
    PureWeight w = n == 1 ? pure_weight({1, 0}) : pure_weight({2, 1, -1, -2});
    auto refs = spin_refinements(n, p);
    const auto& ref = refs[refs.size() / 2];
    SymElem gamma = SymElem::gen(kU, p) * q(p, upsilon_prime(n, p) * upsilon_dprime(n, p));
    for (int b : {1, 2})
      for (const auto& chi : primitive_characters(p, b)) {
        long j = crit_range(w).first;
        long sgn = (n + n * (n - 1) / 2) % 2 ? -1 : 1;
        SymElem want = gamma * SymElem(chi(sgn)) * hecke_eigenvalue(ref, n).pow(-b) * qprime_factor(chi, j, n);
        CHECK(iwahori_route_value(ref, w, chi, j) == want);
      }
  }
}

TEST_CASE("comparison constant is the same across twists and critical points") {
  {
    long p = 3;
    auto ref = spin_refinements(1, p)[0];
    auto quad = primitive_characters(p, 1)[0];
    std::vector<InterpolationPair> pairs{{quad, 0}, {quad, -1}, {TwistCharacter::trivial(p), 0},
                                         {TwistCharacter::trivial(p), -1}, {primitive_characters(p, 2)[1], 0}};
    SymElem c = comparison_constant(ref, pure_weight({1, 0}), pairs);
    SymElem want = SymElem::gen(kU, p) * q(p, upsilon_prime(1, p) * upsilon_dprime(1, p) * mpq_class(2, 3));
    CHECK(c == want);
    CHECK(comparison_constant(ref, pure_weight({1, 0}), {pairs[0]}) == want);
  }
  {
    long p = 2;
    auto refs = spin_refinements(2, p);
    PureWeight w = pure_weight({2, 1, -1, -2});
    std::vector<InterpolationPair> pairs;
    for (long j = -1; j <= 1; ++j) {
      pairs.push_back({TwistCharacter::trivial(p), j});
      pairs.push_back({primitive_characters(p, 2)[0], j});
    }
    SymElem want = SymElem::gen(kU, p) * q(p, upsilon_prime(2, p) * upsilon_dprime(2, p) * mpq_class(1, 4));
    for (size_t k = 0; k < refs.size(); k += 2) CHECK(comparison_constant(refs[k], w, pairs) == want);
  }
}
