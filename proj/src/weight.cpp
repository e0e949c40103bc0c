#include "plocal/weight.hpp"

#include <stdexcept>

namespace plocal {

PureWeight pure_weight(const std::vector<long>& lambda) {
  size_t m = lambda.size();
  if (m == 0 || m % 2) throw std::invalid_argument("weight needs an even positive length");
  for (size_t i = 0; i + 1 < m; ++i)
    if (lambda[i] < lambda[i + 1]) throw std::invalid_argument("weight is not dominant");
  long sw = lambda[0] + lambda[m - 1];
  for (size_t i = 0; i < m; ++i)
    if (lambda[i] + lambda[m - 1 - i] != sw) throw std::invalid_argument("weight is not pure");
  return {lambda, sw};
}

std::pair<long, long> crit_range(const PureWeight& w) {
  size_t n = w.lambda.size() / 2;
  return {-w.lambda[n - 1], -w.lambda[n]};
}

bool in_crit(const PureWeight& w, long j) {
  auto [lo, hi] = crit_range(w);
  return lo <= j && j <= hi;
}

namespace {

void extend(std::vector<long>& head, int n, long bound, std::vector<PureWeight>& out) {
  if (static_cast<int>(head.size()) == n) {
    for (long sw = -2 * bound; sw <= 2 * bound; ++sw) {
      std::vector<long> l = head;
      for (int i = n - 1; i >= 0; --i) l.push_back(sw - head[i]);
      bool ok = true;
      for (size_t i = 0; i < l.size(); ++i) ok = ok && l[i] >= -bound && l[i] <= bound && (i == 0 || l[i - 1] >= l[i]);
      if (ok) out.push_back({l, sw});
    }
    return;
  }
  long top = head.empty() ? bound : head.back();
  for (long v = top; v >= -bound; --v) {
    head.push_back(v);
    extend(head, n, bound, out);
    head.pop_back();
  }
}

}  // namespace

std::vector<PureWeight> pure_weights(int n, long bound) {
  std::vector<PureWeight> out;
  std::vector<long> head;
  extend(head, n, bound, out);
  return out;
}

}  // namespace plocal
