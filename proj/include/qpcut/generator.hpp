#ifndef QPCUT_GENERATOR_HPP
#define QPCUT_GENERATOR_HPP

#include <cstdint>
#include <string>

#include "qpcut/instance.hpp"

namespace qpcut {

/// SplitMix64 (Steele, Lea, Flood 2014). Chosen because its integer
/// stream is fully specified by ~5 lines of arithmetic, so generated
/// corpora reproduce bit-for-bit in any language.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1): top 53 bits scaled by 2^-53.
  double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double next_in(double lo, double hi) { return lo + next_unit() * (hi - lo); }

 private:
  std::uint64_t state_;
};

/// Random-instance recipe. Draw order (fixed; golden files depend on it):
/// the n linear costs, then for each row i the off-diagonal entries j in
/// index order (one acceptance draw, then one value draw when accepted),
/// then the knapsack weights when the constraint spec asks for one.
struct GeneratorConfig {
  int n = 0;
  double density = 0.5;    // probability an off-diagonal entry is nonzero
  double b_max = 10.0;     // entries uniform on [0, b_max)
  double c_min = -10.0;    // costs uniform on [c_min, c_max)
  double c_max = 10.0;
  std::string constraint = "box";  // box | card:<le|ge|eq>:<k> | knap:<le|ge>:<ratio>
  std::uint64_t seed = 0;
};

/// Builds the instance for `config`. Knapsack specs draw n weights
/// uniform on [0, 1) and set capacity = ratio * (total weight), which
/// keeps the relaxation nonempty for any ratio in [0, 1].
/// Throws Error on an invalid spec.
QuadraticInstance generate_instance(const GeneratorConfig& config);

}  // namespace qpcut

#endif  // QPCUT_GENERATOR_HPP
