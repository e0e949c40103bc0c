#pragma once

#include <utility>
#include <vector>

namespace plocal {

// Dominant weight (lambda_1 >= ... >= lambda_2n) of GL_2n with
// lambda_i + lambda_{2n+1-i} = sw for all i.
struct PureWeight {
  std::vector<long> lambda;
  long sw = 0;
};

// throws unless lambda is dominant and pure
PureWeight pure_weight(const std::vector<long>& lambda);

// [lo, hi] = [-lambda_n, -lambda_{n+1}]
std::pair<long, long> crit_range(const PureWeight& w);
bool in_crit(const PureWeight& w, long j);

// every pure dominant weight of GL_2n with entries in [-bound, bound]
std::vector<PureWeight> pure_weights(int n, long bound);

}  // namespace plocal
