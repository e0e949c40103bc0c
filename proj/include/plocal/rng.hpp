#pragma once

#include <cstdint>
#include <random>

namespace plocal {

// Seeded sample stream. The engine is std::mt19937_64, whose output sequence
// is fixed by the C++ standard. Range reduction is done here by rejection on
// the raw 64-bit words (the std distributions are implementation defined), so
// a given seed yields the same samples on every platform:
//   uniform(lo, hi): span = hi - lo + 1, skip = 2^64 mod span;
//   draw words until w >= skip, return lo + w mod span.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}
  uint64_t next() { return eng_(); }
  long uniform(long lo, long hi);
  bool coin() { return next() >> 63; }
  // derived stream for an independent sub-task
  Rng fork(uint64_t salt);

 private:
  std::mt19937_64 eng_;
};

}  // namespace plocal
