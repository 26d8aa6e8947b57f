#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace oosr2 {

/// Tags separating the random streams of unrelated tasks. Every stream is a
/// pure function of (seed, purpose, a, b), so results never depend on
/// execution order or thread count.
enum class Purpose : std::uint64_t {
  Folds = 1,
  Bootstrap,
  ParamRedraw,
  TrainModel,
  NestedInnerFolds,
  NestedInnerTrain,
  RhoReplicate,
  BcaJackknife,
  JointBootstrap,
  MseMain,
  SimX,
  SimY,
  OracleTrain,
  OracleTest,
  OracleFit,
  Instance,
};

/// SplitMix64 finalizer; bijective on 64-bit words.
std::uint64_t mix64(std::uint64_t x);

/// Collapse (seed, purpose, a, b) into a single well-mixed 64-bit seed.
std::uint64_t derive_seed(std::uint64_t seed, Purpose purpose, std::uint64_t a = 0,
                          std::uint64_t b = 0);

/// Deterministic random stream. The normal sampler goes through the inverse
/// CDF so every draw consumes exactly one engine output.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed) : engine_(mix64(seed)) {}

  std::uint64_t next_u64() { return engine_(); }

  /// Uniform on the open interval (0, 1), 53-bit resolution.
  double uniform01() {
    return (static_cast<double>(next_u64() >> 11) + 0.5) * 0x1.0p-53;
  }

  /// Unbiased uniform integer in [0, n).
  std::uint64_t uniform_below(std::uint64_t n);

  /// Standard normal draw.
  double normal();

  /// In-place Fisher-Yates shuffle.
  template <typename T>
  void shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[uniform_below(i)]);
    }
  }

 private:
  std::mt19937_64 engine_;
};

inline RngStream derive_stream(std::uint64_t seed, Purpose purpose, std::uint64_t a = 0,
                               std::uint64_t b = 0) {
  return RngStream(derive_seed(seed, purpose, a, b));
}

}  // namespace oosr2
