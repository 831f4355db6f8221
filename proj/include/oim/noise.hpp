#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <utility>

namespace oim {

/// Philox4x32-10 counter-based generator (Salmon et al., SC'11).
///
/// A pure function of (key, counter): no state is carried between calls, so
/// draws can be produced in any order by any thread.
class Philox4x32 {
 public:
  using Counter = std::array<std::uint32_t, 4>;
  using Key = std::array<std::uint32_t, 2>;

  static constexpr Counter generate(Counter ctr, Key key) {
    for (int round = 0; round < 10; ++round) {
      if (round > 0) {
        key[0] += kWeyl0;
        key[1] += kWeyl1;
      }
      const std::uint64_t p0 = std::uint64_t{kMul0} * ctr[0];
      const std::uint64_t p1 = std::uint64_t{kMul1} * ctr[2];
      ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
             static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
    }
    return ctr;
  }

 private:
  static constexpr std::uint32_t kMul0 = 0xD2511F53u;
  static constexpr std::uint32_t kMul1 = 0xCD9E8D57u;
  static constexpr std::uint32_t kWeyl0 = 0x9E3779B9u;
  static constexpr std::uint32_t kWeyl1 = 0xBB67AE85u;
};

/// Seeded source of standard normal and uniform draws indexed by
/// (oscillator, step). Identical triples give identical draws regardless of
/// evaluation order, batch size or worker count.
class NoiseSource {
 public:
  explicit NoiseSource(std::uint64_t seed)
      : key_{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)} {}

  /// Standard normal for (oscillator, step). Steps 2k and 2k+1 are the two
  /// Box-Muller outputs of one generator call.
  double normal(std::uint64_t oscillator, std::uint64_t step) const {
    const auto [even, odd] = normal_pair(oscillator, step / 2);
    return step % 2 == 0 ? even : odd;
  }

  /// Draws for steps (2 * pair, 2 * pair + 1).
  std::pair<double, double> normal_pair(std::uint64_t oscillator, std::uint64_t pair) const {
    const auto r = raw(oscillator, pair);
    const double radius = std::sqrt(-2.0 * std::log(open_unit(r[0], r[1])));
    const double angle = 2.0 * std::numbers::pi * closed_open_unit(r[2], r[3]);
    return {radius * std::cos(angle), radius * std::sin(angle)};
  }

  /// Uniform in [0,1) for initial phases; drawn from a counter range no step uses.
  double initial_phase(std::uint64_t oscillator) const {
    const auto r = raw(oscillator, kInitialStep);
    return closed_open_unit(r[0], r[1]);
  }

 private:
  static constexpr std::uint64_t kInitialStep = ~std::uint64_t{0};

  Philox4x32::Counter raw(std::uint64_t oscillator, std::uint64_t step) const {
    return Philox4x32::generate(
        {static_cast<std::uint32_t>(oscillator), static_cast<std::uint32_t>(oscillator >> 32),
         static_cast<std::uint32_t>(step), static_cast<std::uint32_t>(step >> 32)},
        key_);
  }

  static std::uint64_t bits53(std::uint32_t hi, std::uint32_t lo) {
    return ((std::uint64_t{hi} << 32) | lo) >> 11;
  }
  // [0,1)
  static double closed_open_unit(std::uint32_t hi, std::uint32_t lo) {
    return static_cast<double>(bits53(hi, lo)) * 0x1.0p-53;
  }
  // (0,1]
  static double open_unit(std::uint32_t hi, std::uint32_t lo) {
    return (static_cast<double>(bits53(hi, lo)) + 1.0) * 0x1.0p-53;
  }

  Philox4x32::Key key_;
};

}  // namespace oim
