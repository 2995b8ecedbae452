#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "qsup/errors.hpp"

namespace qsup {

// Parameters of |psi> = N^{-1/2} (t a + r adag)|alpha>, with the cached
// normalization N = r^2 + |alpha|^2 + r t (alpha^2 + conj(alpha)^2). The
// single source of truth for every closed-form evaluation.
struct StateParams {
  std::complex<double> alpha;
  double t = 1.0;
  double r = 0.0;
  double norm_const = 0.0;
};

// Builds validated parameters with t = +sqrt(1 - r^2).
// Throws DomainError for r outside [0, 1], DegenerateState for N <= 1e-12.
StateParams make_state(std::complex<double> alpha, double r);

// Variant with an explicitly signed t (the heralding scheme realizes
// t ~ -r1* t2*/t1 < 0). Still requires t^2 + r^2 = 1 within 1e-12.
StateParams make_state_signed(std::complex<double> alpha, double r, double t);

// Truncation level with the Poisson(|alpha|^2 + 2) tail below tail_tol,
// monotone non-increasing in tail_tol. The alpha = 0 expansion terminates at
// n = 1 exactly, so that case returns a small constant.
std::size_t choose_truncation(std::complex<double> alpha, double tail_tol);

// Truncated number-basis image of |psi>, unit norm after construction.
struct FockVector {
  std::vector<std::complex<double>> amplitudes;
  double tail_bound = 0.0;  // guaranteed bound on the omitted probability mass

  std::size_t n_max() const { return amplitudes.size() - 1; }
};

// Number-basis expansion c_n of |psi|, normalized to unit norm, with
// n_max = choose_truncation(alpha, tail_tol) + extra_levels. Requires
// tail_tol in (0, 1e-3]. extra_levels buys boundary margin for oracle
// computations that apply off-diagonal operators repeatedly.
FockVector fock_coefficients(const StateParams& params, double tail_tol,
                             std::size_t extra_levels = 0);

// Un-normalized amplitudes of (t a + r adag)|alpha> for arbitrary complex
// coefficients; c_0 = t alpha g_0 and c_n = g_{n-1} (t alpha^2 + r n)/sqrt(n)
// with g_n the coherent amplitudes. Shared by the state family and the
// heralding simulator's target states.
std::vector<std::complex<double>> superposed_amplitudes(std::complex<double> alpha,
                                                        std::complex<double> t,
                                                        std::complex<double> r,
                                                        std::size_t n_max);

std::vector<std::complex<double>> coherent_amplitudes(std::complex<double> alpha,
                                                      std::size_t n_max);

}  // namespace qsup
