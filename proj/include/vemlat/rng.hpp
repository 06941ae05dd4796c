#pragma once

#include <cstdint>
#include <random>

namespace vemlat {

// mt19937_64 with explicit double extraction; the distribution classes in
// <random> are implementation-defined, this is bit-reproducible everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  double uniform() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

 private:
  std::mt19937_64 eng_;
};

}  // namespace vemlat
