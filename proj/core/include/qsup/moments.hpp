#pragma once

#include <complex>

#include "qsup/state.hpp"

namespace qsup {

// <psi| adag^m a^n |psi> via the four-term normally ordered route
//   N^{-1} <alpha| t^2 adag^{m+1} a^{n+1} + r^2 a adag^m a^n adag
//               + r t adag^{m+1} a^n adag + r t a adag^m a^{n+1} |alpha>,
// which is regular at alpha = 0. Requires m, n <= 16.
std::complex<double> general_moment(const StateParams& params, int m, int n);

// Expanded real-alpha polynomial form, kept as a regression guard; requires
// Im(alpha) = 0 and agrees with general_moment to 1e-10.
double special_case_real(const StateParams& params, int m, int n);

// mu_j = <(adag a)^j> = sum_n S(j,n) <adag^n a^n>. Requires j <= 12.
double number_moment(const StateParams& params, int j);

// <(N - <N>)^l>; l = 1 returns 0. Requires l <= 10.
double central_number_moment(const StateParams& params, int l);

// <(X - <X>)^l> with X = (a + adag)/sqrt(2). Requires even l <= 10.
double quadrature_central_moment(const StateParams& params, int l);

}  // namespace qsup
