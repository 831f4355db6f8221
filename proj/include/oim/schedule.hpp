#pragma once

#include <cmath>
#include <stdexcept>

namespace oim {

/// Triangular waveform for the injection-locking strength: 0 at the start of
/// each period, ks_max at mid-period, back to 0 at the end.
struct KsSchedule {
  double ks_max = 0.0;
  double period = 1.0;

  KsSchedule() = default;
  KsSchedule(double max, double period_) : ks_max(max), period(period_) {
    if (!(ks_max >= 0.0) || !std::isfinite(ks_max))
      throw std::invalid_argument("ks_max must be finite and non-negative");
    if (!(period > 0.0) || !std::isfinite(period))
      throw std::invalid_argument("Ks period must be positive");
  }
};

inline double ks_at(const KsSchedule& schedule, double t) {
  if (schedule.ks_max == 0.0) return 0.0;
  const double phase = std::fmod(t, schedule.period) / schedule.period;
  const double tri = phase < 0.5 ? 2.0 * phase : 2.0 * (1.0 - phase);
  return schedule.ks_max * tri;
}

}  // namespace oim
