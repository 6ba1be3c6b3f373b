#pragma once

// Deterministic AM and FM test-signal generation. Each generated signal
// carries its analytic instantaneous amplitude and frequency tracks, which
// downstream benchmarking substitutes into the cosine responses.

#include <cmath>
#include <cstddef>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "heo/types.hpp"

namespace heo {

enum class Modulation { AM, FM };

constexpr std::string_view to_string(Modulation m) {
  return m == Modulation::AM ? "am" : "fm";
}

inline Modulation parse_modulation(std::string_view name) {
  if (name == "am") return Modulation::AM;
  if (name == "fm") return Modulation::FM;
  throw InvalidArgument("unknown modulation '" + std::string(name) + "'");
}

struct ModulationParams {
  double lambda = 0.0;    ///< message bandwidth / carrier frequency, in [0, 0.5]
  double beta = 0.0;      ///< modulation ratio, in [0, 1]
  double omega_c = std::numbers::pi / 2;  ///< carrier, radians/sample, in (0, pi)
  double theta = 0.0;     ///< carrier phase
  double theta_q = 0.0;   ///< message phase
  double amplitude = 1.0; ///< carrier amplitude A > 0
  std::size_t length = 1024;
};

struct ModulatedSignal {
  Signal samples;
  std::vector<double> amp_track;   ///< instantaneous amplitude A[n]
  std::vector<double> freq_track;  ///< instantaneous frequency W[n], radians/sample
  Modulation kind = Modulation::AM;
  ModulationParams params;
};

namespace detail {

inline void check_modulation_params(const ModulationParams& p) {
  if (!(p.lambda >= 0.0 && p.lambda <= 0.5))
    throw InvalidArgument("lambda=" + std::to_string(p.lambda) + " outside [0, 0.5]");
  if (!(p.beta >= 0.0 && p.beta <= 1.0))
    throw InvalidArgument("beta=" + std::to_string(p.beta) + " outside [0, 1]");
  if (!(p.omega_c > 0.0 && p.omega_c < std::numbers::pi))
    throw InvalidArgument("omega_c=" + std::to_string(p.omega_c) + " outside (0, pi)");
  if (!(p.amplitude > 0.0))
    throw InvalidArgument("amplitude=" + std::to_string(p.amplitude) + " must be > 0");
  if (p.length == 0) throw InvalidArgument("length must be >= 1");
}

}  // namespace detail

/// FM test signal:
///   q[n]   = cos(lambda W_c n + theta_q)
///   W_i[n] = W_c (1 + beta q[n])
///   phi[n] = theta + sum_{m=0}^{n} W_i[m]   (inclusive prefix sum)
///   x[n]   = A cos(phi[n])
/// The peak instantaneous frequency W_c (1 + beta) may touch pi exactly
/// (the benchmark drives it there at beta = 1); beyond pi is an error.
inline ModulatedSignal make_fm(const ModulationParams& p) {
  detail::check_modulation_params(p);
  if (p.omega_c * (1.0 + p.beta) > std::numbers::pi)
    throw InvalidArgument("make_fm: peak instantaneous frequency omega_c*(1+beta)=" +
                          std::to_string(p.omega_c * (1.0 + p.beta)) + " exceeds pi");
  ModulatedSignal sig;
  sig.kind = Modulation::FM;
  sig.params = p;
  sig.samples.resize(p.length);
  sig.amp_track.assign(p.length, p.amplitude);
  sig.freq_track.resize(p.length);
  double phase = p.theta;
  for (std::size_t n = 0; n < p.length; ++n) {
    const double q = std::cos(p.lambda * p.omega_c * static_cast<double>(n) + p.theta_q);
    const double wi = p.omega_c * (1.0 + p.beta * q);
    phase += wi;
    sig.freq_track[n] = wi;
    sig.samples[n] = p.amplitude * std::cos(phase);
  }
  return sig;
}

/// AM test signal:
///   A_i[n] = A (1 + beta cos(lambda W_c n + theta_q))
///   x[n]   = A_i[n] cos(W_c n + theta)
inline ModulatedSignal make_am(const ModulationParams& p) {
  detail::check_modulation_params(p);
  ModulatedSignal sig;
  sig.kind = Modulation::AM;
  sig.params = p;
  sig.samples.resize(p.length);
  sig.amp_track.resize(p.length);
  sig.freq_track.assign(p.length, p.omega_c);
  for (std::size_t n = 0; n < p.length; ++n) {
    const double q = std::cos(p.lambda * p.omega_c * static_cast<double>(n) + p.theta_q);
    const double ai = p.amplitude * (1.0 + p.beta * q);
    sig.amp_track[n] = ai;
    sig.samples[n] = ai * std::cos(p.omega_c * static_cast<double>(n) + p.theta);
  }
  return sig;
}

}  // namespace heo
