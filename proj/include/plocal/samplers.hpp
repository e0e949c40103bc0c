#pragma once

#include <vector>

#include "plocal/padic.hpp"
#include "plocal/perm.hpp"
#include "plocal/rng.hpp"

namespace plocal {

// entries uniform in [0, p^k)
Mat random_integral(Rng& r, int rows, int cols, long p, int k = 2);
Mat random_gl_zp(Rng& r, int n, long p);
Mat random_iwahori(Rng& r, int n, long p);
Mat random_borel_zp(Rng& r, int n, long p);   // upper triangular, unit diagonal
Mat random_upper_unipotent(Rng& r, int n, long p, int k = 2);
Perm random_perm(Rng& r, int n);
// 2n x 2n: N^beta(Z_p), Iw^beta = Nbar(pZ_p) T(Z_p) N^beta(Z_p), and diag(h1, h2) in Iw_H^1
Mat random_n_beta(Rng& r, int n, long p, int beta);
Mat random_iw_beta(Rng& r, int n, long p, int beta);
Mat random_iwh1(Rng& r, int n, long p);

enum class CellSampleKind { kRandom, kConstructed, kNearMiss };

struct CellSample {
  Perm delta;
  Mat k, x;
  CellSampleKind kind;
};

// mixed stream for the Shalika cell-support check; the first `constructed`
// samples satisfy the support conditions by construction
std::vector<CellSample> cell_support_samples(Rng& r, int n, long p, int beta, int total, int constructed);

}  // namespace plocal
