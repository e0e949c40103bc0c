#include "plocal/rng.hpp"

#include <stdexcept>

namespace plocal {

long Rng::uniform(long lo, long hi) {
  if (hi < lo) throw std::invalid_argument("empty sampling range");
  uint64_t span = static_cast<uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(next());
  uint64_t limit = -span % span;  // 2^64 mod span
  uint64_t w;
  do {
    w = next();
  } while (w < limit);
  return lo + static_cast<long>(w % span);
}

Rng Rng::fork(uint64_t salt) {
  uint64_t s = next() ^ (salt * 0x9E3779B97F4A7C15ULL);
  return Rng(s);
}

}  // namespace plocal
