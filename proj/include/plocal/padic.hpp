#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "plocal/cyclo.hpp"
#include "plocal/perm.hpp"

namespace plocal {

// p-adic scalars are exact rationals; only their image in Q_p matters.
constexpr long kInfVal = 1L << 40;

long vp(const mpz_class& x, long p);
long vp(const mpq_class& x, long p);  // kInfVal for 0
// x mod p^k for x in Z_(p)
mpz_class residue(const mpq_class& x, long p, long k);
bool is_integral(const mpq_class& x, long p);

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : r_(rows), c_(cols), a_(static_cast<size_t>(rows) * cols, 0) {}
  static Mat identity(int n);
  static Mat diag(const std::vector<mpq_class>& d);
  // permutation matrix with entry (pi[j], j) = 1
  static Mat perm(const std::vector<int>& pi);
  static Mat antidiag(int n);  // w_n
  static Mat block(const Mat& a, const Mat& b, const Mat& c, const Mat& d);

  int rows() const { return r_; }
  int cols() const { return c_; }
  mpq_class& operator()(int i, int j) { return a_[static_cast<size_t>(i) * c_ + j]; }
  const mpq_class& operator()(int i, int j) const { return a_[static_cast<size_t>(i) * c_ + j]; }

  Mat sub(int r0, int c0, int nr, int nc) const;
  Mat operator*(const Mat& o) const;
  Mat operator+(const Mat& o) const;
  Mat operator-(const Mat& o) const;
  Mat scaled(const mpq_class& s) const;
  bool operator==(const Mat& o) const = default;

  std::optional<Mat> inverse() const;
  mpq_class det() const;
  bool is_upper() const;
  bool is_lower() const;
  bool is_diagonal() const;
  std::string str() const;

 private:
  int r_ = 0, c_ = 0;
  std::vector<mpq_class> a_;
};

bool mat_integral(const Mat& g, long p);
bool in_gl_zp(const Mat& g, long p);
// integral, unit determinant, strictly lower entries in pZ_p
bool in_iwahori(const Mat& g, long p);
// integral, unit determinant, strictly upper entries in pZ_p
bool in_opposite_iwahori(const Mat& g, long p);
// upper unipotent integral, congruent to u = (1 w; 0 1) mod p^beta
bool in_n_beta(const Mat& g, long p, int beta);
// entries congruent to the identity mod p^beta
bool congruent_identity(const Mat& g, long p, int beta);

struct BruhatCell {
  Perm w;                      // Weyl element
  std::vector<long> torus_val;  // valuations of the diagonal of b
};

struct BruhatDecomp {
  Mat b;  // upper triangular
  Mat w;  // permutation matrix
  Mat i;  // Iwahori element
  BruhatCell cell;
};

// g = b w i with b in B(Q_p), w a permutation matrix and i in Iw.
BruhatDecomp iwahori_bruhat_decompose(const Mat& g, long p);
// same cell data without assembling the factors
BruhatCell bruhat_cell(const Mat& g, long p);

// Coset in W_n / W_{r,n-r} labelling the double coset B(Q_p) w J^-_r where
// J^-_r is the opposite parahoric; returned as the sorted image w({0..r-1}).
std::vector<int> opposite_parahoric_cell(const Mat& g, int r, long p);

// 1 + p^beta w_n X = R S with R upper unipotent, S lower triangular.
std::pair<Mat, Mat> iwahori_factorize_unit(const Mat& x, int beta, long p);

struct OpenCell {
  Mat bbar;  // lower triangular 2n x 2n
  Mat h1, h2;
};
// g = bbar u diag(h1, h2) with u = (1 w_n; 0 1); nullopt off the open cell
std::optional<OpenCell> open_cell_factorize(const Mat& g);

struct Ldu {
  Mat nbar, t, n;
};
// Doolittle-type factorization g = nbar t n; nullopt if a leading minor vanishes
std::optional<Ldu> ldu(const Mat& g);

// Haar measures with vol(GL_n(Z_p)) = 1
mpq_class vol_iwahori(int n, long p);
mpq_class upsilon_prime(int n, long p);   // vol(Iw_n) (1 - 1/p)^{-n} p^{(n^2-n)/2}
mpq_class upsilon_dprime(int n, long p);  // vol(B_n(Z_p) w_n Iw_n)
mpz_class gl_order(int n, long p);        // |GL_n(F_p)|
mpz_class borel_order(int n, long p);     // |B_n(F_p)|

}  // namespace plocal
