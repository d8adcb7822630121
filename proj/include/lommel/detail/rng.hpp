#pragma once

#include <cstdint>
#include <random>

namespace lommel::detail {

// Seeded draw helper with a fixed uniform mapping.  The standard
// distributions are not bit-identical across library implementations, so
// doubles are built from raw engine output instead (53-bit mantissa).
class Pick {
 public:
  explicit Pick(std::uint64_t seed) : engine_(seed) {}

  double uniform01() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Uniform over {lo, ..., hi} inclusive.
  int uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

  // Random sign in {-1, +1}.
  double sign() { return (engine_() & 1u) ? 1.0 : -1.0; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace lommel::detail
