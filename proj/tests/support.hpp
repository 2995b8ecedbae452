#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <vector>

#include "qsup/state.hpp"

namespace qsup_test {

// Stratified (alpha, r) sample over |alpha| <= 3, r in [0, 1): three modulus
// bins crossed with four r bins, phases uniform, fixed seed. Degenerate
// points (possible only near alpha = r = 0) are resampled.
inline std::vector<qsup::StateParams> stratified_params(std::size_t count,
                                                        unsigned seed = 20240811u) {
  std::mt19937 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<qsup::StateParams> out;
  out.reserve(count);
  std::size_t stratum = 0;
  while (out.size() < count) {
    const std::size_t mod_bin = stratum % 3;
    const std::size_t r_bin = (stratum / 3) % 4;
    ++stratum;
    const double mod = (static_cast<double>(mod_bin) + unit(rng)) * 1.0;
    const double phase = 2.0 * M_PI * unit(rng);
    const double r = (static_cast<double>(r_bin) + unit(rng)) * 0.25 * 0.999;
    try {
      out.push_back(qsup::make_state(std::polar(mod, phase), r));
    } catch (const qsup::DegenerateState&) {
      // resample this stratum
      --stratum;
    }
  }
  return out;
}

// Coherent amplitude via lgamma, independent of the library's recurrence.
inline std::complex<double> coherent_amp_ref(std::complex<double> alpha, int n) {
  const double mag = std::abs(alpha);
  if (mag == 0.0) return n == 0 ? 1.0 : 0.0;
  const double log_mag = std::exp(n * std::log(mag) - 0.5 * std::lgamma(n + 1.0) -
                                  0.5 * std::norm(alpha));
  return std::polar(log_mag, n * std::arg(alpha));
}

}  // namespace qsup_test
