#include "plocal/perm.hpp"

#include <algorithm>
#include <numeric>

namespace plocal {

Perm perm_identity(int n) {
  Perm p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Perm perm_longest(int n) {
  Perm p(n);
  for (int j = 0; j < n; ++j) p[j] = n - 1 - j;
  return p;
}

Perm perm_compose(const Perm& a, const Perm& b) {
  Perm c(b.size());
  for (size_t j = 0; j < b.size(); ++j) c[j] = a[b[j]];
  return c;
}

Perm perm_inverse(const Perm& a) {
  Perm c(a.size());
  for (size_t j = 0; j < a.size(); ++j) c[a[j]] = static_cast<int>(j);
  return c;
}

std::vector<Perm> all_perms(int n) {
  std::vector<Perm> out;
  Perm p = perm_identity(n);
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::string perm_str(const Perm& a) {
  std::string s = "[";
  for (size_t j = 0; j < a.size(); ++j) {
    if (j) s += " ";
    s += std::to_string(a[j] + 1);
  }
  return s + "]";
}

}  // namespace plocal
