#pragma once

#include <Eigen/Dense>
#include <complex>
#include <string>
#include <vector>

#include "qsup/state.hpp"

namespace qsup {

// Dense truncated matrix images of a, adag, N = adag a, X = (a + adag)/sqrt(2)
// on the (n_max + 1)-dimensional number basis. O(n^2) storage; the scale here
// (dimension <= ~200) makes dense the simple, fast-enough choice.
struct LadderMatrices {
  Eigen::MatrixXcd annihilate;
  Eigen::MatrixXcd create;
  Eigen::MatrixXcd number;
  Eigen::MatrixXcd quadrature;

  static LadderMatrices make(std::size_t n_max);
};

enum class Observable { Number, Quadrature };

// <psi| adag^m a^n |psi> by repeated matrix application. Requires
// m + n <= n_max/2 so boundary rows stay uncontaminated.
std::complex<double> oracle_moment(const FockVector& fock, int m, int n);

// <(A - <A>)^l> for A in {N, X} by repeated shifted matrix-vector products.
double oracle_central_moment(const FockVector& fock, Observable observable, int l);

// Central moment of Poisson(mu) from Touchard raw moments, centralized
// binomially. Requires mu > 0, l <= 10.
double poisson_central_moment(double mu, int l);

// |c_m|^2.
double oracle_pm(const FockVector& fock, int m);

// (1/pi) |<beta|psi>|^2 from coherent-state inner products.
double oracle_husimi(const FockVector& fock, std::complex<double> beta);

struct VerifyEntry {
  std::string quantity;
  double closed_form = 0.0;
  double oracle = 0.0;
  double abs_err = 0.0;
  double rel_err = 0.0;  // abs_err / (1 + |oracle|)
  bool pass = false;
};

struct VerifyReport {
  std::vector<VerifyEntry> entries;
  double tol = 0.0;
  std::size_t n_max = 0;
  bool all_pass = true;

  std::string to_json() const;
};

// Recomputes every witness and phase-space quantity both ways (closed form vs
// truncated-Fock numerics) and reports per-quantity deviations. Mismatches are
// report entries, never exceptions. Requires tol >= 1e-12.
VerifyReport verify_all(const StateParams& params, double tol);

}  // namespace qsup
