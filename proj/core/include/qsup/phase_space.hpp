#pragma once

#include <complex>
#include <cstddef>
#include <optional>
#include <vector>

#include "qsup/state.hpp"

namespace qsup {

// Husimi Q(beta) = (1/pi) N^{-1} |t alpha + r conj(beta)|^2 e^{-|alpha-beta|^2}.
double husimi_q(const StateParams& params, std::complex<double> beta);

// Zero locus beta = -conj(alpha) t / r; none for r = 0 (coherent state).
std::optional<std::complex<double>> q_zero(const StateParams& params);

struct GridSpec {
  double re_min = -4.0;
  double re_max = 4.0;
  double im_min = -4.0;
  double im_max = 4.0;
  std::size_t n_re = 161;
  std::size_t n_im = 161;
};

// Rasterized Q over a uniform grid; values stored row-major with the re index
// outer, matching the emitted CSV order.
struct PhaseGrid {
  GridSpec spec;
  std::vector<double> values;

  double at(std::size_t i_re, std::size_t i_im) const {
    return values[i_re * spec.n_im + i_im];
  }
  double cell_area() const;
  // Riemann sum times cell area; approaches 1 when the grid covers the state.
  double integral() const;
  double min_value() const;
};

// Throws GridTooLarge above 4e6 points.
PhaseGrid husimi_grid(const StateParams& params, const GridSpec& spec);

// det(M) = Q(b1) Q(b2) - e^{-|b2-b1|^2/2} Q((b1+b2)/2)^2; negativity
// certifies nonclassical light.
double psmatrix_det(const StateParams& params, std::complex<double> beta1,
                    std::complex<double> beta2);

// The special case with beta1 pinned at the Husimi zero:
// det(M) = -e^{-|b2-b1|^2/2} Q((b2 + b1)/2)^2 <= 0, zero iff b2 = b1.
// Requires r > 1e-12 (the zero must exist).
double psmatrix_special(const StateParams& params, std::complex<double> beta2);

}  // namespace qsup
