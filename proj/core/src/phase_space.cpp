#include "qsup/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qsup {

double husimi_q(const StateParams& params, std::complex<double> beta) {
  const std::complex<double> weight =
      params.t * params.alpha + params.r * std::conj(beta);
  const double gaussian = std::exp(-std::norm(params.alpha - beta));
  return std::norm(weight) * gaussian /
         (std::numbers::pi * params.norm_const);
}

std::optional<std::complex<double>> q_zero(const StateParams& params) {
  if (params.r <= 1e-12) return std::nullopt;
  return -std::conj(params.alpha) * params.t / params.r;
}

double PhaseGrid::cell_area() const {
  const double d_re = spec.n_re > 1
                          ? (spec.re_max - spec.re_min) / static_cast<double>(spec.n_re - 1)
                          : 0.0;
  const double d_im = spec.n_im > 1
                          ? (spec.im_max - spec.im_min) / static_cast<double>(spec.n_im - 1)
                          : 0.0;
  return d_re * d_im;
}

double PhaseGrid::integral() const {
  double sum = 0.0;
  for (double v : values) sum += v;
  return sum * cell_area();
}

double PhaseGrid::min_value() const {
  return values.empty() ? 0.0 : *std::min_element(values.begin(), values.end());
}

PhaseGrid husimi_grid(const StateParams& params, const GridSpec& spec) {
  if (spec.n_re == 0 || spec.n_im == 0) {
    throw DomainError("grid counts must be positive");
  }
  if (spec.n_re * spec.n_im > 4'000'000) {
    throw GridTooLarge("husimi grid limited to 4e6 points");
  }
  PhaseGrid grid{spec, {}};
  grid.values.resize(spec.n_re * spec.n_im);
  const double d_re =
      spec.n_re > 1 ? (spec.re_max - spec.re_min) / static_cast<double>(spec.n_re - 1) : 0.0;
  const double d_im =
      spec.n_im > 1 ? (spec.im_max - spec.im_min) / static_cast<double>(spec.n_im - 1) : 0.0;
  for (std::size_t i = 0; i < spec.n_re; ++i) {
    const double re = spec.re_min + d_re * static_cast<double>(i);
    for (std::size_t j = 0; j < spec.n_im; ++j) {
      const double im = spec.im_min + d_im * static_cast<double>(j);
      grid.values[i * spec.n_im + j] = husimi_q(params, {re, im});
    }
  }
  return grid;
}

double psmatrix_det(const StateParams& params, std::complex<double> beta1,
                    std::complex<double> beta2) {
  const double q1 = husimi_q(params, beta1);
  const double q2 = husimi_q(params, beta2);
  const double qm = husimi_q(params, 0.5 * (beta1 + beta2));
  return q1 * q2 - std::exp(-0.5 * std::norm(beta2 - beta1)) * qm * qm;
}

double psmatrix_special(const StateParams& params, std::complex<double> beta2) {
  if (params.r <= 1e-12) {
    throw DomainError("psmatrix_special requires r > 1e-12");
  }
  const std::complex<double> beta1 = -std::conj(params.alpha) * params.t / params.r;
  const double qm = husimi_q(params, 0.5 * (beta1 + beta2));
  return -std::exp(-0.5 * std::norm(beta2 - beta1)) * qm * qm;
}

}  // namespace qsup
