#include "qsup/state.hpp"

#include <cmath>
#include <string>

namespace qsup {

namespace {

constexpr double kDegenerateNorm = 1e-12;

double normalization(std::complex<double> alpha, double t, double r) {
  const double two_re_alpha_sq = 2.0 * (alpha.real() * alpha.real() - alpha.imag() * alpha.imag());
  return r * r + std::norm(alpha) + r * t * two_re_alpha_sq;
}

StateParams validated(std::complex<double> alpha, double r, double t) {
  if (r < 0.0 || r > 1.0) {
    throw DomainError("r must lie in [0, 1]");
  }
  if (std::abs(t * t + r * r - 1.0) > 1e-12) {
    throw DomainError("t^2 + r^2 must equal 1 within 1e-12");
  }
  const double n = normalization(alpha, t, r);
  if (n <= kDegenerateNorm) {
    throw DegenerateState("(t a + r adag)|alpha> has vanishing norm at this point");
  }
  return StateParams{alpha, t, r, n};
}

}  // namespace

StateParams make_state(std::complex<double> alpha, double r) {
  if (r < 0.0 || r > 1.0) {
    throw DomainError("r must lie in [0, 1]");
  }
  return validated(alpha, r, std::sqrt(1.0 - r * r));
}

StateParams make_state_signed(std::complex<double> alpha, double r, double t) {
  return validated(alpha, r, t);
}

std::size_t choose_truncation(std::complex<double> alpha, double tail_tol) {
  if (!(tail_tol > 0.0)) {
    throw DomainError("tail_tol must be positive");
  }
  const double lambda = std::norm(alpha) + 2.0;
  if (std::norm(alpha) == 0.0) {
    return 4;  // expansion terminates at n = 1
  }
  double pmf = std::exp(-lambda);
  double cdf = pmf;
  std::size_t k = 0;
  while (1.0 - cdf >= tail_tol && k < 4096) {
    ++k;
    pmf *= lambda / static_cast<double>(k);
    cdf += pmf;
  }
  return k < 2 ? 2 : k;
}

std::vector<std::complex<double>> coherent_amplitudes(std::complex<double> alpha,
                                                      std::size_t n_max) {
  std::vector<std::complex<double>> g(n_max + 1);
  g[0] = std::exp(-0.5 * std::norm(alpha));
  for (std::size_t n = 1; n <= n_max; ++n) {
    g[n] = g[n - 1] * alpha / std::sqrt(static_cast<double>(n));
  }
  return g;
}

std::vector<std::complex<double>> superposed_amplitudes(std::complex<double> alpha,
                                                        std::complex<double> t,
                                                        std::complex<double> r,
                                                        std::size_t n_max) {
  const auto g = coherent_amplitudes(alpha, n_max);
  std::vector<std::complex<double>> c(n_max + 1);
  c[0] = t * alpha * g[0];
  const std::complex<double> t_alpha_sq = t * alpha * alpha;
  for (std::size_t n = 1; n <= n_max; ++n) {
    c[n] = g[n - 1] * (t_alpha_sq + r * static_cast<double>(n)) /
           std::sqrt(static_cast<double>(n));
  }
  return c;
}

FockVector fock_coefficients(const StateParams& params, double tail_tol,
                             std::size_t extra_levels) {
  if (!(tail_tol > 0.0) || tail_tol > 1e-3) {
    throw DomainError("tail_tol must lie in (0, 1e-3]");
  }
  const std::size_t base = choose_truncation(params.alpha, tail_tol);
  const std::size_t n_max = base + extra_levels;

  auto c = superposed_amplitudes(params.alpha, params.t, params.r, n_max);
  double norm_sq = 0.0;
  for (const auto& amp : c) norm_sq += std::norm(amp);
  if (norm_sq <= kDegenerateNorm) {
    throw DegenerateState("truncated expansion has vanishing norm");
  }
  const double inv_norm = 1.0 / std::sqrt(norm_sq);
  for (auto& amp : c) amp *= inv_norm;

  // Achieved Poisson-tail bound at the chosen truncation.
  const double lambda = std::norm(params.alpha) + 2.0;
  double tail = 0.0;
  if (std::norm(params.alpha) > 0.0) {
    double pmf = std::exp(-lambda);
    double cdf = pmf;
    for (std::size_t k = 1; k <= n_max; ++k) {
      pmf *= lambda / static_cast<double>(k);
      cdf += pmf;
    }
    tail = 1.0 - cdf;
    if (tail < 0.0) tail = 0.0;
  }
  return FockVector{std::move(c), tail};
}

}  // namespace qsup
