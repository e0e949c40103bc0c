#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "plocal/character.hpp"
#include "plocal/padic.hpp"
#include "plocal/series.hpp"
#include "plocal/weight.hpp"

namespace plocal {

// u = (1 w_n; 0 1)
Mat u_matrix(int n);

// Diagonal of bbar and det(h_i) from the open-cell factorization g = bbar u (h1, h2).
struct BranchData {
  std::vector<mpq_class> bdiag;
  mpq_class d1, d2;
};
std::optional<BranchData> branch_data(const Mat& g);

// lambda(bbar) det(h1)^-j det(h2)^(sw+j); throws std::invalid_argument unless j is critical
mpq_class v_lambda_j(const BranchData& b, const PureWeight& w, long j);
// zero off the open cell
mpq_class v_lambda_j(const Mat& g, const PureWeight& w, long j);

// The factors v_(0), v_(1..n-1), v_(n),1, v_(n),2, each normalized to 1 at u.
struct BasicVectors {
  mpq_class v0;
  std::vector<mpq_class> vi;  // v_(1) .. v_(n-1)
  mpq_class vn1, vn2;
};
BasicVectors basic_vectors(const BranchData& b);

bool in_Nbeta(const Mat& g, long p, int beta);
// Nbar(pZ_p) T(Z_p) N^beta(Z_p)
bool in_Iwbeta(const Mat& g, long p, int beta);
// h = diag(h1, h2) in H(Z_p) with u h in Iw^beta
bool in_IwHbeta(const Mat& h, long p, int beta);

// Iwahori factorization g = nbar t n of an element of Iw^1
struct Iw1Factor {
  std::vector<mpq_class> t;
  Mat n;
};
std::optional<Iw1Factor> iw1_factor(const Mat& g, long p);

// a point of Iw^1 with the basic vectors of its N^1 part and z = v_(n),2 / v_(n),1
struct Iw1Point {
  Iw1Factor fac;
  BasicVectors bv;
  mpq_class z;
};
std::optional<Iw1Point> iw1_point(const Mat& g, long p);

// w_lambda on Iw^1, extended through the Iwahori factorization; throws
// std::invalid_argument off Iw^1
mpq_class w_chi(const Mat& g, const PureWeight& w, long p);
mpq_class w_chi(const Iw1Point& x, const PureWeight& w);

// A character of Z_p^x in the family: x -> x^base * prod_v (1 + T_v)^(coeff_v * l(x)),
// with <x> = gamma^l(x).
struct FamChar {
  long base = 0;
  std::vector<long> coeff;
  FamChar operator+(const FamChar& o) const;
  FamChar operator-(const FamChar& o) const;
  FamChar scaled(long k) const;
};

// Disc around a pure weight base: variables T_0..T_{n-1} move lambda_1..lambda_n,
// T_n moves sw. Classical members are the pure dominant lambda congruent to
// base modulo step() coordinatewise, where the truncation costs nothing
// modulo p^M.
struct FamilyWeight {
  long p = 3;
  PureWeight base;
  SeriesCtxPtr ctx;

  int n() const { return static_cast<int>(base.lambda.size() / 2); }
  long step() const { return p == 2 ? 2 : p * (p - 1); }
  FamChar coordinate(int i) const;  // chi_{Omega,i}, 1 <= i <= 2n
  FamChar sw() const;
  bool contains(const PureWeight& w) const;
};
FamilyWeight family_weight(long p, const PureWeight& base, int precision, int degree);

// x^chi for a p-adic unit x
Series char_value(const FamilyWeight& fam, const FamChar& chi, const mpq_class& x);
Series w_chi(const Mat& g, const FamilyWeight& fam);
// evaluation at a classical member: T_v = gamma^(lambda_v - base_v) - 1
mpz_class specialize_weight(const Series& x, const FamilyWeight& fam, const PureWeight& w);

// Locally Laurent-polynomial function on Z_p^x: on each unit class a mod p^c,
// z -> sum_k coeff_k z^k. Missing classes are zero.
struct LocPoly {
  long p = 2;
  int level = 1;
  std::map<long, std::map<long, mpq_class>> pieces;

  static LocPoly monomial(long p, long k);
  static LocPoly indicator(long p, int level, long a);
  mpq_class operator()(const mpq_class& z) const;
  // z -> f(d z)
  LocPoly dilate(const mpq_class& d) const;
};

// v_Omega(f) and v_lambda(f) on Iw; zero off Iw^1
Series v_family(const LocPoly& f, const Mat& g, const FamilyWeight& fam);
mpq_class v_lambda(const LocPoly& f, const Mat& g, const PureWeight& w, long p);
// the family action factor det(h2)^sw_Omega and the dilation det(h2)/det(h1)
Series h_act_scalar(const Mat& h, const FamilyWeight& fam);
LocPoly h_act_poly(const Mat& h, const LocPoly& f);

// finite combination of Dirac measures on Iw
struct FiniteDistribution {
  long p = 2;
  int n = 1;
  std::vector<std::pair<mpq_class, Mat>> terms;

  bool supported_on(int beta) const;
  // order-0 bound: min valuation of the masses
  long mass_valuation() const;
  FiniteDistribution operator+(const FiniteDistribution& o) const;
  FiniteDistribution scaled(const mpq_class& s) const;
};

// push-forwards to Z_p^x as atoms (mass, z); base points outside Iw throw
struct PointMeasure {
  std::vector<std::pair<mpq_class, mpq_class>> atoms;
  mpq_class integrate(const LocPoly& f) const;
};
struct FamilyPointMeasure {
  std::vector<std::pair<Series, mpq_class>> atoms;
  Series integrate(const LocPoly& f, const SeriesCtxPtr& ctx) const;
};
PointMeasure kappa_lambda(const FiniteDistribution& mu, const PureWeight& w);
FamilyPointMeasure kappa_family(const FiniteDistribution& mu, const FamilyWeight& fam);
Series kappa_family(const FiniteDistribution& mu, const LocPoly& f, const FamilyWeight& fam);
mpq_class kappa_lambda_j(const FiniteDistribution& mu, const PureWeight& w, long j);
// r_lambda(mu) paired with a vector of V_lambda given as a function on G(Z_p)
template <class F>
mpq_class r_lambda_pair(const FiniteDistribution& mu, F&& v) {
  mpq_class acc = 0;
  for (const auto& [c, g] : mu.terms)
    if (in_Iwbeta(g, mu.p, 1)) acc += c * v(g);
  return acc;
}
// integral of chi(z) z^j against a push-forward
CycNum moment(const PointMeasure& m, const TwistCharacter& chi, long j);

}  // namespace plocal
