#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace gpsaf {

/// Seedable random stream with labeled child streams.
///
/// Every run owns a single root Rng. Components (baseline algorithm, the
/// alpha/beta phases, PKT, ...) draw from children created by fork(), which
/// derives the child seed from the *original* seed and the label only. Forking
/// never consumes state from the parent, so adding a component to a run never
/// perturbs the stream any other component sees.
///
/// All distributions are hand-rolled on top of a mt19937_64 so that sequences
/// are identical across standard libraries.
class Rng {
 public:
  explicit Rng(std::uint64_t seed);

  /// Child stream addressed by (seed, label). Distinct labels give streams
  /// that are independent for all practical purposes; the same label always
  /// yields the same stream.
  Rng fork(std::string_view label) const;

  std::uint64_t next_u64();

  /// Uniform double in [0, 1).
  double uniform();

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi);

  /// Uniform integer in [lo, hi], both inclusive. Requires lo <= hi.
  int uniform_int(int lo, int hi);

  /// Normal draw with mean 0 and standard deviation sigma (Box-Muller).
  /// sigma == 0 still consumes the same number of raw draws and returns 0.
  double normal(double sigma);

  /// Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (int i = static_cast<int>(v.size()) - 1; i > 0; --i) {
      const int j = uniform_int(0, i);
      std::swap(v[static_cast<std::size_t>(i)], v[static_cast<std::size_t>(j)]);
    }
  }

  std::uint64_t seed() const { return seed_; }

 private:
  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace gpsaf
