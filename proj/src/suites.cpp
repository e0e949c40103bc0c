#include "plocal/suites.hpp"

#include <algorithm>
#include <chrono>
#include <exception>
#include <optional>
#include <set>
#include <sstream>

#include "plocal/branchfam.hpp"
#include "plocal/princhecke.hpp"
#include "plocal/refine.hpp"
#include "plocal/rootspin.hpp"
#include "plocal/samplers.hpp"
#include "plocal/shalikazeta.hpp"

namespace plocal {

namespace {

// first failure of an aggregated property
class Tally {
 public:
  void check(bool ok, const std::string& witness) {
    ++checked_;
    if (!ok && !bad_) bad_ = witness;
  }
  bool ok() const { return !bad_.has_value(); }
  size_t checked() const { return checked_; }
  std::string witness() const { return bad_.value_or(""); }

 private:
  size_t checked_ = 0;
  std::optional<std::string> bad_;
};

void record_tally(SuiteRecorder& rec, const std::string& name, const std::string& inputs, const std::string& from,
                  const Tally& t) {
  rec.record(name, inputs + ";checked=" + std::to_string(t.checked()), from, t.ok(), t.witness());
}

std::string base_inputs(int n, long p, int beta = 0) {
  std::string s = "n=" + std::to_string(n) + ";p=" + std::to_string(p);
  if (beta) s += ";beta=" + std::to_string(beta);
  return s;
}

uint64_t salt(const std::string& name) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : name) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return h;
}

Rng suite_rng(const SuiteConfig& c, const std::string& name) { return Rng(c.seed).fork(salt(name)); }

std::string weight_str(const std::vector<long>& l) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < l.size(); ++i) os << (i ? "," : "") << l[i];
  os << ")";
  return os.str();
}

std::vector<Refinement> spin_refinements(int n, long p) {
  std::vector<Refinement> out;
  Satake s = satake_ag(n, p);
  for (const Perm& sigma : all_perms(2 * n)) {
    Refinement r{s, sigma};
    if (is_spin(r)) out.push_back(r);
  }
  return out;
}

// every k-th element, so n = 3 stays desk sized
template <class T>
std::vector<T> thin(const std::vector<T>& v, size_t k) {
  std::vector<T> out;
  for (size_t i = 0; i < v.size(); i += k) out.push_back(v[i]);
  return out;
}

long factorial(long k) { return k <= 1 ? 1 : k * factorial(k - 1); }

SymElem q(long p, const mpq_class& v) { return SymElem(v).with_prime(p); }

// a regular pure weight with a critical range of length n + 1 around 0
PureWeight test_weight(int n) {
  std::vector<long> l(2 * n);
  for (int i = 0; i < n; ++i) {
    l[i] = n - i;
    l[2 * n - 1 - i] = -(n - i);
  }
  if (n == 1) l = {1, 0};
  return pure_weight(l);
}

// ramified characters for the twist checks; p = 2 has none of conductor 2
std::vector<TwistCharacter> ramified(long p, int beta) {
  auto c = primitive_characters(p, beta);
  return c.empty() ? primitive_characters(p, beta + 1) : c;
}

std::string chi_label(const TwistCharacter& chi, size_t k) {
  if (chi.is_trivial()) return "trivial";
  return "cond p^" + std::to_string(chi.conductor_exp()) + " #" + std::to_string(k);
}

// ---------------------------------------------------------------------------

SuiteReport suite_spin_enum(const SuiteConfig& c) {
  SuiteRecorder rec("spin-enum", "spin refinement classification");
  int n = c.n;
  long p = c.p;
  Satake s = satake_ag(n, p);
  std::set<Perm> wg0;
  for (const Perm& w : wg0_members(n)) wg0.insert(w);
  size_t total = 0, spin = 0;
  Tally chars, fact, transfer;
  for (const Perm& sigma : all_perms(2 * n)) {
    ++total;
    Refinement ref{s, sigma};
    bool sp = is_spin(ref);
    spin += sp;
    std::string w = "sigma=" + perm_str(sigma);
    chars.check(sp == spin_by_pairs(sigma) && sp == (wg0.count(delta_perm(sigma)) == 1), w);
    auto g = gspin_factorization(ref);
    fact.check(sp == g.has_value(), w);
    if (sp) {
      GSpinEigen t = gspin_eigen_transfer(ref);
      bool ok = true;
      for (int r = 1; r <= n; ++r) ok = ok && t.u[r - 1] == hecke_eigenvalue(ref, r);
      transfer.check(ok, w);
    }
  }
  std::string in = base_inputs(n, p);
  long want_total = factorial(2 * n), want_spin = (1L << n) * factorial(n);
  rec.record("refinement count", in, "closed form (2n)!", static_cast<long>(total) == want_total,
             "got " + std::to_string(total) + ", want " + std::to_string(want_total));
  rec.record("spin refinement count", in, "closed form 2^n n!", static_cast<long>(spin) == want_spin,
             "got " + std::to_string(spin) + ", want " + std::to_string(want_spin));
  record_tally(rec, "spin criteria agree", in, "independent oracle: pairing and purity stabilizer", chars);
  record_tally(rec, "GSpin factorization exactly on the spin set", in, "independent oracle", fact);
  record_tally(rec, "GSpin eigenvalues through the dual transfer", in, "independent oracle", transfer);
  return rec.finish();
}

SuiteReport suite_weyl_transfer(const SuiteConfig& c) {
  SuiteRecorder rec("weyl-transfer", "Weyl group transfer to the purity stabilizer");
  int n = c.n;
  auto wg0 = wg0_members(n);
  auto all = all_gspin_weyl(n);
  std::set<Perm> image;
  Tally hom, inv, eq_weight, eq_coweight;
  for (const auto& a : all) {
    Perm s = jmath_weyl(a);
    image.insert(s);
    std::string wa = "w=" + perm_str(s);
    inv.check(jmath_weyl_inverse(s) == a, wa);
    for (const auto& b : all) hom.check(jmath_weyl(gspin_compose(a, b)) == perm_compose(s, jmath_weyl(b)), wa + ";w'=" + perm_str(jmath_weyl(b)));
    for (int k = 0; k <= n; ++k) {
      Weight f(n + 1, 0);
      f[k] = 1;
      eq_weight.check(jmath_weight(gspin_act_weight(a, f)) == gl_act(s, jmath_weight(f)), wa + ";f_" + std::to_string(k));
    }
    for (int i = 0; i < 2 * n; ++i) {
      Weight e(2 * n, 0);
      e[i] = 1;
      eq_coweight.check(jmath_vee(gl_act(s, e)) == gspin_act_coweight(a, jmath_vee(e)), wa + ";e_" + std::to_string(i + 1));
    }
  }
  std::string in = base_inputs(n, c.p);
  rec.record("image is the purity stabilizer", in, "independent oracle: brute-force stabilizer",
             image == std::set<Perm>(wg0.begin(), wg0.end()),
             "image " + std::to_string(image.size()) + " vs stabilizer " + std::to_string(wg0.size()));
  rec.record("injective", in, "structural identity", image.size() == all.size(),
             std::to_string(image.size()) + " images of " + std::to_string(all.size()) + " elements");
  record_tally(rec, "homomorphism", in, "structural identity", hom);
  record_tally(rec, "inverse on the image", in, "structural identity", inv);
  record_tally(rec, "equivariance on characters", in, "independent oracle: generator-wise action", eq_weight);
  record_tally(rec, "equivariance on cocharacters", in, "independent oracle: generator-wise action", eq_coweight);
  return rec.finish();
}

constexpr long kCosetBudget = 4096;

SuiteReport suite_hecke_eigen(const SuiteConfig& c) {
  SuiteRecorder rec("hecke-eigen", "principal series U_p eigenvectors");
  int n = c.n;
  long p = c.p;
  Rng r = suite_rng(c, "hecke-eigen");
  Satake s = satake_ag(n, p);
  std::vector<Perm> sigmas = all_perms(2 * n);
  if (n >= 3) {
    // spot check
    std::vector<Perm> pick;
    for (int k = 0; k < 2; ++k) pick.push_back(sigmas[r.uniform(0, static_cast<long>(sigmas.size()) - 1)]);
    sigmas = pick;
  }
  for (const Perm& sigma : sigmas) {
    PSVector f = ps_fsigma(s, sigma);
    Refinement ref{s, sigma};
    for (int k = 1; k < 2 * n; ++k) {
      // U_{p,r} sums over p^(r(2n-r)) cosets; large ones are skipped at n = 3
      if (n >= 3 && ipow(p, k * (2 * n - k)) > kCosetBudget) continue;
      SymElem alpha = hecke_eigenvalue(ref, k);
      PSVector u = hecke_apply(f, k);
      std::string name = "U_{p," + std::to_string(k) + "} f^sigma, sigma=" + perm_str(sigma);
      rec.record(name, base_inputs(n, p) + ";sigma=" + perm_str(sigma) + ";r=" + std::to_string(k),
                 "closed form eigenvalue", u == f.scaled(alpha), "alpha=" + alpha.str());
    }
  }
  PSVector f = ps_fsigma(s, sigmas.front());
  rec.record("parallel and serial drivers agree", base_inputs(n, p) + ";sigma=" + perm_str(sigmas.front()),
             "serial reference", hecke_apply(f, 1) == hecke_apply_serial(f, 1), "drivers differ at r=1");
  return rec.finish();
}

SuiteReport suite_cell_support(const SuiteConfig& c) {
  SuiteRecorder rec("cell-support", "shalika cell support");
  int n = c.n, beta = c.beta;
  long p = c.p;
  Rng r = suite_rng(c, "cell-support");
  int constructed = std::min(c.samples, std::max(100, c.samples / 10));
  auto samples = cell_support_samples(r, n, p, beta, c.samples, constructed);
  Satake s = satake_ag(n, p);
  SymElem theta_z(1);
  for (int i = 0; i < n; ++i) theta_z *= s.theta[n + i].pow(2L * beta * (n - 1 - i));
  Tally agree, constructed_pos, borel;
  int positives = 0, constructed_seen = 0;
  for (size_t i = 0; i < samples.size(); ++i) {
    const auto& smp = samples[i];
    std::string w = "sample " + std::to_string(i) + ";delta=" + perm_str(smp.delta) + ";k=" + smp.k.str() + ";X=" + smp.x.str();
    bool pred = shalika_support_predicate(smp.delta, smp.k, smp.x, beta, p);
    bool cell = shalika_cell_membership(smp.delta, smp.k, smp.x, beta, p);
    agree.check(pred == cell, w);
    if (smp.kind == CellSampleKind::kConstructed) {
      ++constructed_seen;
      constructed_pos.check(pred, w);
    }
    if (pred) {
      ++positives;
      bool ok;
      try {
        ok = borel_part_character(s.theta, smp.k, smp.x, beta, p) == theta_z;
      } catch (const std::exception& e) {
        ok = false;
        w += ";" + std::string(e.what());
      }
      borel.check(ok, w);
    }
  }
  std::string in = base_inputs(n, p, beta) + ";samples=" + std::to_string(c.samples);
  record_tally(rec, "predicate agrees with the Bruhat cell", in, "independent oracle: Bruhat cell of the assembled matrix", agree);
  record_tally(rec, "constructed samples are positive", in, "definition", constructed_pos);
  rec.record("positive count", in, "definition", constructed_seen == constructed && positives >= constructed,
             std::to_string(positives) + " positives, " + std::to_string(constructed_seen) + " constructed");
  record_tally(rec, "Borel part character on positives", in, "closed form Theta(diag(1, z^2beta))", borel);
  Mat wn = Mat::antidiag(n);
  Mat x = z_matrix(n, p);
  x = x * x;
  if (beta == 2) x = x * x;
  rec.record("named point w_n, X = z^2beta", in, "definition",
             shalika_support_predicate(perm_longest(n), wn, x, beta, p) &&
                 shalika_cell_membership(perm_longest(n), wn, x, beta, p),
             "named point rejected");
  return rec.finish();
}

SuiteReport suite_zeta_iwahori(const SuiteConfig& c) {
  SuiteRecorder rec("zeta-iwahori", "Iwahori-level twisted zeta integral");
  long p = c.p;
  int beta = c.beta;
  Satake s = satake_ag(1, p);
  PSVector f = ps_basis(s, perm_identity(2), perm_longest(2));
  PSVector g = f + ps_basis(s, perm_identity(2), perm_identity(2)).scaled(SymElem::x(1) + SymElem(2));
  auto chars = primitive_characters(p, beta);
  std::string in = base_inputs(1, p, beta) + ";shells=" + std::to_string(c.shells);
  if (chars.empty()) {
    rec.record("no primitive character of conductor p^beta", in, "character count", true);
    return rec.finish();
  }
  const std::pair<const char*, const PSVector*> vecs[] = {{"f_w", &f}, {"f_w + (X_1 + 2) f_1", &g}};
  for (const auto& [label, h] : vecs) {
    auto table = iwahori_shell_table(*h, beta, c.shells);
    SymElem wb = ag_intertwine_value(*h, Mat::identity(2), c.shells);
    for (size_t k = 0; k < chars.size(); ++k) {
      ZetaResult o = zeta_iwahori_oracle(table, chars[k]);
      ZetaResult cl = zeta_iwahori_closed(wb, chars[k], 1, s.eta);
      bool ok = o.source == ZetaResult::Source::kOracle && cl.source == ZetaResult::Source::kClosedForm &&
                o.value == cl.value;
      rec.record(std::string("oracle equals closed form, ") + label + ", chi " + chi_label(chars[k], k),
                 in + ";vector=" + label + ";chi=" + std::to_string(k), "independent oracle: shell sum", ok,
                 "oracle=" + o.value.str() + " closed=" + cl.value.str());
    }
  }
  PSVector zero{s, perm_identity(2), {}};
  rec.record("zero vector", in, "definition", zeta_iwahori_oracle(zero, chars[0], c.shells).value.is_zero(),
             "nonzero integral of the zero vector");
  return rec.finish();
}

SuiteReport suite_zeta_parahoric(const SuiteConfig& c) {
  SuiteRecorder rec("zeta-parahoric", "parahoric-level zeta integral");
  long p = c.p;
  Satake s = satake_ag(1, p);
  std::vector<TwistCharacter> chars{TwistCharacter::trivial(p)};
  for (const auto& x : primitive_characters(p, c.beta)) chars.push_back(x);
  std::string in = base_inputs(1, p, c.beta) + ";shells=" + std::to_string(c.shells);
  for (size_t k = 0; k < chars.size(); ++k) {
    SymElem cl = zeta_parahoric_closed(s, chars[k], 0).value;
    SymElem o = zeta_parahoric_oracle(s, chars[k], c.shells).value;
    rec.record(std::string(chars[k].is_trivial() ? "unramified row" : "ramified row") + ", chi " + chi_label(chars[k], k),
               in + ";chi=" + std::to_string(k), "independent oracle: shell sum", o == cl,
               "oracle=" + o.str() + " closed=" + cl.str());
  }
  return rec.finish();
}

SuiteReport suite_shalika_witness(const SuiteConfig& c) {
  SuiteRecorder rec("shalika-witness", "spin refinements are Shalika");
  int n = c.n, beta = c.beta;
  long p = c.p;
  std::string in = base_inputs(n, p, beta);
  Tally unit, direct;
  for (const auto& ref : spin_refinements(n, p)) {
    SymElem v = w_value_closed(ref, beta);
    std::string w = "sigma=" + perm_str(ref.sigma) + ";W=" + v.str();
    unit.check(v.is_unit_monomial(), w);
    direct.check(v == w_value_direct(ref, beta), w);
  }
  record_tally(rec, "W-value is a nonzero unit monomial", in, "structural identity", unit);
  record_tally(rec, "W-value through the normalized character", in, "independent oracle", direct);
  if (n == 1) {
    Tally ag;
    for (const auto& ref : spin_refinements(1, p)) {
      Normalized nz = normalize_satake(ref);
      PSVector f = ps_basis(nz.satake, perm_identity(2), shalika_cell_label(perm_longest(1)));
      SymElem a = ag_intertwine_value(f, Mat::identity(2), std::max(c.shells, 3));
      SymElem v = w_value_closed(ref, beta);
      ag.check(a == v && v == SymElem(1), "sigma=" + perm_str(ref.sigma) + ";oracle=" + a.str() + ";closed=" + v.str());
    }
    record_tally(rec, "W-value equals the intertwining oracle", in, "independent oracle: intertwining integral", ag);
  }
  return rec.finish();
}

SuiteReport suite_branching_support(const SuiteConfig& c) {
  SuiteRecorder rec("branching-support", "branching vectors on N^beta");
  int n = c.n, beta = c.beta;
  long p = c.p;
  Rng r = suite_rng(c, "branching-support");
  auto weights = pure_weights(n, 5);
  std::vector<Mat> points;
  std::string in = base_inputs(n, p, beta);
  mpq_class pb = qpow(mpq_class(p), beta);
  if (n == 1) {
    // every class of y mod p^3 in (1, 1 + p^beta y; 0, 1)
    for (long y = 0; y < ipow(p, 3); ++y) {
      Mat g = u_matrix(1);
      g(0, 1) = 1 + pb * y;
      points.push_back(g);
    }
    in += ";classes=p^3";
  } else {
    for (int t = 0; t < c.samples; ++t) points.push_back(random_n_beta(r, n, p, beta));
    in += ";samples=" + std::to_string(c.samples);
  }
  in += ";weights=" + std::to_string(weights.size());
  Tally member, support, interp;
  for (size_t i = 0; i < points.size(); ++i) {
    const Mat& g = points[i];
    std::string w = "point " + std::to_string(i) + "=" + g.str();
    member.check(in_Nbeta(g, p, beta), w);
    auto bd = branch_data(g);
    auto pt = iw1_point(g, p);
    if (!bd || !pt) {
      support.check(false, w + ";off the open cell");
      continue;
    }
    for (const auto& wt : weights) {
      mpq_class wl = w_chi(*pt, wt);
      auto [lo, hi] = crit_range(wt);
      mpq_class zj = qpow(pt->z, lo);
      for (long j = lo; j <= hi; ++j, zj *= pt->z) {
        mpq_class v = v_lambda_j(*bd, wt, j);
        std::string wj = w + ";lambda=" + weight_str(wt.lambda) + ";j=" + std::to_string(j);
        support.check(vp(v - 1, p) >= beta, wj + ";v=" + v.get_str());
        interp.check(wl * zj == v, wj);
      }
    }
  }
  record_tally(rec, "points lie in N^beta", in, "definition", member);
  record_tally(rec, "values lie in 1 + p^beta Z_p", in, "structural identity", support);
  record_tally(rec, "w_lambda z^j interpolates v_lambda,j", in, "independent oracle: basic vector product", interp);
  return rec.finish();
}

SuiteReport suite_interp_diagram(const SuiteConfig& c) {
  SuiteRecorder rec("interp-diagram", "distribution maps commute with specialization");
  int n = c.n, M = c.family_m;
  long p = c.p;
  Rng r = suite_rng(c, "interp-diagram");
  PureWeight base = pure_weight([&] {
    std::vector<long> l(2 * n, 0);
    for (int i = 0; i < n; ++i) l[i] = 1;
    return l;
  }());
  FamilyWeight fam = family_weight(p, base, M, c.family_d);
  long s = fam.step();
  std::vector<PureWeight> lams{base};
  {
    std::vector<long> l = base.lambda;
    l[0] += s;
    l[2 * n - 1] -= s;
    lams.push_back(pure_weight(l));
    l = base.lambda;
    for (auto& x : l) x += s;
    lams.push_back(pure_weight(l));
  }
  int count = std::min(c.samples, 100);
  std::string in = base_inputs(n, p) + ";M=" + std::to_string(M) + ";D=" + std::to_string(c.family_d) +
                   ";distributions=" + std::to_string(count);
  Tally support, sq1, sq2, bound;
  LocPoly ind = LocPoly::indicator(p, 2, 1);
  LocPoly mixed = LocPoly::indicator(p, 2, 1 + p);
  mixed.pieces[1 + p][1] = 3;
  mixed.pieces[1][2] = 1;
  for (int t = 0; t < count; ++t) {
    FiniteDistribution mu{p, n, {}};
    for (int k = 0; k < 3; ++k) mu.terms.emplace_back(mpq_class(r.uniform(-9, 9)), random_iw_beta(r, n, p, 1));
    std::string w = "distribution " + std::to_string(t);
    support.check(mu.supported_on(1), w);
    FamilyPointMeasure kf = kappa_family(mu, fam);
    for (const auto& lam : lams) {
      PointMeasure kl = kappa_lambda(mu, lam);
      std::string wl = w + ";lambda=" + weight_str(lam.lambda);
      auto [lo, hi] = crit_range(lam);
      std::vector<LocPoly> fs{ind, mixed};
      for (long j = lo; j <= hi; ++j) {
        LocPoly f = LocPoly::monomial(p, j);
        fs.push_back(f);
        sq2.check(kl.integrate(f) == kappa_lambda_j(mu, lam, j), wl + ";j=" + std::to_string(j));
      }
      for (size_t k = 0; k < fs.size(); ++k) {
        mpz_class got = specialize_weight(kf.integrate(fs[k], fam.ctx), fam, lam);
        sq1.check(got == residue(kl.integrate(fs[k]), p, M), wl + ";test function " + std::to_string(k));
      }
      // integrals of Z_p-valued functions stay in p^v Z_p with v the mass valuation
      if (lam.lambda == base.lambda)
        for (long j = lo; j <= hi; ++j) {
          mpq_class v = kl.integrate(LocPoly::monomial(p, j));
          bound.check(v == 0 || vp(v, p) >= mu.mass_valuation(), wl + ";j=" + std::to_string(j));
        }
    }
  }
  record_tally(rec, "distributions supported on Iw^1", in, "definition", support);
  record_tally(rec, "family map specializes to the weight map mod p^M", in, "independent oracle: weight-lambda push-forward", sq1);
  record_tally(rec, "weight map pairs with the branching vector", in, "independent oracle: branching vector", sq2);
  record_tally(rec, "order-zero bound", in, "structural identity", bound);
  return rec.finish();
}

SuiteReport suite_euler_factors(const SuiteConfig& c) {
  SuiteRecorder rec("euler-factors", "modified Euler factor at p");
  int n = c.n, beta = c.beta;
  long p = c.p;
  PureWeight w = test_weight(n);
  auto chars = ramified(p, beta);
  auto refs = spin_refinements(n, p);
  if (n == 3) refs = thin(refs, 8);
  std::string in = base_inputs(n, p, beta) + ";lambda=" + weight_str(w.lambda);
  Tally ram, unram;
  auto [lo, hi] = crit_range(w);
  for (const auto& ref : refs) {
    Normalized nz = normalize_satake(ref);
    SymElem qpar = zeta_parahoric_closed(nz.satake, TwistCharacter::trivial(p), 0).value;
    for (long j = lo; j <= hi; ++j) {
      std::string wr = "sigma=" + perm_str(ref.sigma) + ";j=" + std::to_string(j);
      for (size_t k = 0; k < chars.size(); ++k) {
        int b = chars[k].conductor_exp();
        SymElem got = ep_factor(ref, chars[k], j, w) / qprime_factor(chars[k], j, n);
        SymElem want = hecke_eigenvalue(ref, n).pow(-b);
        ram.check(got == want, wr + ";chi=" + std::to_string(k) + ";got " + got.str() + ";want " + want.str());
      }
      SymElem e = ep_factor(ref, TwistCharacter::trivial(p), j, w);
      SymElem ratio = (e / at_critical_point(qpar, j)) / q(p, qpow(mpq_class(1 - p), n));
      unram.check(ratio.is_unit_monomial(), wr + ";ratio " + ratio.str());
    }
  }
  record_tally(rec, "ramified e_p / Q' = alpha_{p,n}^-beta", in, "closed form Hecke eigenvalue", ram);
  record_tally(rec, "unramified e_p against the parahoric integral", in, "independent oracle: parahoric zeta integral", unram);
  return rec.finish();
}

SuiteReport suite_comparison(const SuiteConfig& c) {
  SuiteRecorder rec("comparison", "Iwahori and parahoric routes differ by a constant");
  int n = c.n;
  long p = c.p;
  PureWeight w = test_weight(n);
  auto [lo, hi] = crit_range(w);
  std::vector<InterpolationPair> pairs;
  auto chars = ramified(p, c.beta);
  for (long j = lo; j <= hi; ++j) {
    pairs.push_back({TwistCharacter::trivial(p), j});
    pairs.push_back({chars.front(), j});
  }
  auto refs = spin_refinements(n, p);
  refs = thin(refs, n == 3 ? 8 : (n == 2 ? 2 : 1));
  SymElem want = SymElem::gen(kU, p) * q(p, upsilon_prime(n, p) * upsilon_dprime(n, p) * qpow(1 - mpq_class(1, p), n));
  std::string in = base_inputs(n, p, c.beta) + ";lambda=" + weight_str(w.lambda) + ";pairs=" + std::to_string(pairs.size());
  for (const auto& ref : refs) {
    bool ok;
    std::string witness;
    try {
      SymElem got = comparison_constant(ref, w, pairs);
      ok = got == want;
      witness = "got " + got.str() + ";want " + want.str();
    } catch (const std::runtime_error& e) {
      ok = false;
      witness = e.what();
    }
    rec.record("same constant for every twist, sigma=" + perm_str(ref.sigma), in + ";sigma=" + perm_str(ref.sigma),
               "closed form U Upsilon' Upsilon'' (1 - 1/p)^n", ok, witness);
  }
  return rec.finish();
}

}  // namespace

const std::vector<SuiteInfo>& suite_catalog() {
  static const std::vector<SuiteInfo> cat = [] {
    std::vector<SuiteInfo> v{
        {"branching-support", "branching vectors on N^beta",
         "v_lambda,j takes values in 1 + p^beta Z_p on N^beta and is interpolated by w_lambda z^j", suite_branching_support},
        {"cell-support", "shalika cell support",
         "support predicate of the twisted zeta integrand against Bruhat cell membership", suite_cell_support},
        {"comparison", "Iwahori and parahoric routes differ by a constant",
         "the ratio of the two interpolation routes is independent of the twist and critical point", suite_comparison},
        {"euler-factors", "modified Euler factor at p",
         "ramified and unramified coherence of the modified Euler factor", suite_euler_factors},
        {"hecke-eigen", "principal series U_p eigenvectors", "U_{p,r} f^sigma = alpha_{p,r} f^sigma by coset sums",
         suite_hecke_eigen},
        {"interp-diagram", "distribution maps commute with specialization",
         "family and weight-lambda push-forwards agree after specialization", suite_interp_diagram},
        {"shalika-witness", "spin refinements are Shalika",
         "the Shalika-point value of a spin eigenvector is a nonzero unit monomial", suite_shalika_witness},
        {"spin-enum", "spin refinement classification",
         "refinement and spin counts, equivalent spin criteria, GSpin factorization", suite_spin_enum},
        {"weyl-transfer", "Weyl group transfer to the purity stabilizer",
         "the dual Weyl transfer is an isomorphism onto the purity stabilizer, equivariant on (co)characters",
         suite_weyl_transfer},
        {"zeta-iwahori", "Iwahori-level twisted zeta integral", "n = 1 shell-sum oracle against the closed form",
         suite_zeta_iwahori},
        {"zeta-parahoric", "parahoric-level zeta integral", "n = 1 shell-sum oracle against the closed form",
         suite_zeta_parahoric},
    };
    std::sort(v.begin(), v.end(), [](const SuiteInfo& a, const SuiteInfo& b) { return a.name < b.name; });
    return v;
  }();
  return cat;
}

const SuiteInfo* find_suite(const std::string& name) {
  for (const auto& s : suite_catalog())
    if (s.name == name) return &s;
  return nullptr;
}

Report run_suites(const SuiteConfig& cfg) {
  validate(cfg);
  std::vector<const SuiteInfo*> sel;
  for (const auto& s : suite_catalog())
    if (cfg.suites.empty() || std::count(cfg.suites.begin(), cfg.suites.end(), s.name)) sel.push_back(&s);
  std::vector<SuiteReport> out(sel.size());
  std::vector<std::exception_ptr> errs(sel.size());
  const long m = static_cast<long>(sel.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < m; ++i) {
    auto t0 = std::chrono::steady_clock::now();
    try {
      out[i] = sel[i]->run(cfg);
    } catch (const TruncationError&) {
      errs[i] = std::current_exception();
    } catch (const std::exception& e) {
      SuiteRecorder rec(sel[i]->name, sel[i]->anchor);
      rec.record("suite completed", "", "definition", false, std::string("uncaught exception: ") + e.what());
      out[i] = rec.finish();
    }
    out[i].wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
  return Report{cfg, std::move(out)};
}

nlohmann::ordered_json zeta_table(const SuiteConfig& cfg) {
  validate(cfg);
  long p = cfg.p;
  Satake s = satake_ag(1, p);
  PSVector f = ps_basis(s, perm_identity(2), perm_longest(2));
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::vector<TwistCharacter> chars{TwistCharacter::trivial(p)};
  for (const auto& x : primitive_characters(p, cfg.beta)) chars.push_back(x);
  std::optional<IwahoriShellTable> table;
  std::optional<SymElem> wb;
  for (size_t k = 0; k < chars.size(); ++k) {
    const auto& chi = chars[k];
    nlohmann::ordered_json row;
    row["chi"] = chi_label(chi, k);
    row["conductor_exp"] = chi.conductor_exp();
    SymElem pc = zeta_parahoric_closed(s, chi, 0).value;
    SymElem po = zeta_parahoric_oracle(s, chi, cfg.shells).value;
    row["parahoric_closed"] = pc.str();
    row["parahoric_oracle"] = po.str();
    bool agree = pc == po;
    if (!chi.is_trivial()) {
      if (!table) {
        table = iwahori_shell_table(f, cfg.beta, cfg.shells);
        wb = ag_intertwine_value(f, Mat::identity(2), cfg.shells);
      }
      SymElem ic = zeta_iwahori_closed(*wb, chi, 1, s.eta).value;
      SymElem io = zeta_iwahori_oracle(*table, chi).value;
      row["iwahori_closed"] = ic.str();
      row["iwahori_oracle"] = io.str();
      agree = agree && ic == io;
    }
    row["agree"] = agree;
    rows.push_back(row);
  }
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["n"] = 1;
  j["p"] = p;
  j["beta"] = cfg.beta;
  j["shells"] = cfg.shells;
  j["rows"] = rows;
  return j;
}

nlohmann::ordered_json enumerate_refinements(const SuiteConfig& cfg) {
  validate(cfg);
  Satake s = satake_ag(cfg.n, cfg.p);
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  size_t spin = 0;
  for (const Perm& sigma : all_perms(2 * cfg.n)) {
    Refinement ref{s, sigma};
    nlohmann::ordered_json row;
    row["sigma"] = perm_str(sigma);
    bool sp = is_spin(ref);
    spin += sp;
    row["spin"] = sp;
    std::vector<std::string> alpha;
    for (int r = 1; r < 2 * cfg.n; ++r) alpha.push_back(hecke_eigenvalue(ref, r).str());
    row["alpha"] = alpha;
    if (auto g = gspin_factorization(ref)) {
      std::vector<std::string> u;
      for (const auto& x : g->u) u.push_back(x.str());
      row["gspin_u"] = u;
      row["gspin_v"] = g->v.str();
    }
    rows.push_back(row);
  }
  nlohmann::ordered_json j;
  j["schema_version"] = kReportSchemaVersion;
  j["n"] = cfg.n;
  j["p"] = cfg.p;
  j["refinements"] = rows.size();
  j["spin"] = spin;
  j["rows"] = rows;
  return j;
}

}  // namespace plocal
