#pragma once

#include <string>
#include <vector>

namespace plocal {

using Perm = std::vector<int>;  // 0-based, pi[j] = image of j

Perm perm_identity(int n);
Perm perm_longest(int n);  // j -> n-1-j
Perm perm_compose(const Perm& a, const Perm& b);  // a o b
Perm perm_inverse(const Perm& a);
std::vector<Perm> all_perms(int n);  // lexicographic
std::string perm_str(const Perm& a);  // 1-based one-line notation

}  // namespace plocal
