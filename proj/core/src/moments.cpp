#include "qsup/moments.hpp"

#include <cmath>
#include <string>

#include "qsup/algebra.hpp"

namespace qsup {

namespace {

constexpr int kMaxMomentOrder = 16;

double require_real(std::complex<double> z, const char* what) {
  if (std::abs(z.imag()) > 1e-10 * (1.0 + std::abs(z.real()))) {
    throw Error(std::string(what) + ": imaginary residue exceeds 1e-10");
  }
  return z.real();
}

// <alpha| word |alpha> evaluated exactly through the normal-ordering engine.
std::complex<double> word_expectation(const OperatorWord& word,
                                      std::complex<double> alpha) {
  return coherent_expectation(normal_order(word), alpha);
}

}  // namespace

std::complex<double> general_moment(const StateParams& params, int m, int n) {
  if (m < 0 || n < 0 || m > kMaxMomentOrder || n > kMaxMomentOrder) {
    throw DomainError("moment orders must lie in [0, 16]");
  }
  const std::complex<double> alpha = params.alpha;
  const double t = params.t;
  const double r = params.r;

  OperatorWord w1 = OperatorWord::create_power(m + 1);
  w1.append(OperatorWord::annihilate_power(n + 1));

  OperatorWord w2 = OperatorWord::annihilate_power(1);
  w2.append(OperatorWord::create_power(m))
      .append(OperatorWord::annihilate_power(n))
      .append(Ladder::Create);

  OperatorWord w3 = OperatorWord::create_power(m + 1);
  w3.append(OperatorWord::annihilate_power(n)).append(Ladder::Create);

  OperatorWord w4 = OperatorWord::annihilate_power(1);
  w4.append(OperatorWord::create_power(m))
      .append(OperatorWord::annihilate_power(n + 1));

  const std::complex<double> value =
      t * t * word_expectation(w1, alpha) + r * r * word_expectation(w2, alpha) +
      r * t * word_expectation(w3, alpha) + r * t * word_expectation(w4, alpha);
  return value / params.norm_const;
}

double special_case_real(const StateParams& params, int m, int n) {
  if (params.alpha.imag() != 0.0) {
    throw DomainError("special_case_real requires real alpha");
  }
  if (m < 0 || n < 0 || m > kMaxMomentOrder || n > kMaxMomentOrder) {
    throw DomainError("moment orders must lie in [0, 16]");
  }
  const double a = params.alpha.real();
  const double t = params.t;
  const double r = params.r;
  double value = (2.0 * r * t + 1.0) * std::pow(a, m + n + 2) +
                 (r * r * (m + n + 1) + r * t * (m + n)) * std::pow(a, m + n);
  if (m * n != 0) {
    // zero-coefficient terms are skipped before any negative power of alpha
    value += r * r * m * n * std::pow(a, m + n - 2);
  }
  return value / params.norm_const;
}

double number_moment(const StateParams& params, int j) {
  if (j < 0 || j > 12) {
    throw DomainError("number_moment requires j <= 12");
  }
  std::complex<double> sum = 0.0;
  for (int n = 0; n <= j; ++n) {
    const BigCoeff s = stirling2(j, n);
    if (s == 0) continue;
    sum += to_double(s) * general_moment(params, n, n);
  }
  return require_real(sum, "number_moment");
}

double central_number_moment(const StateParams& params, int l) {
  if (l < 1 || l > 10) {
    throw DomainError("central_number_moment requires l in [1, 10]");
  }
  const double mu = number_moment(params, 1);
  double sum = 0.0;
  for (int k = 0; k <= l; ++k) {
    const double raw = number_moment(params, k);
    sum += to_double(binomial(l, k)) * std::pow(-mu, l - k) * raw;
  }
  return sum;
}

double quadrature_central_moment(const StateParams& params, int l) {
  if (l < 2 || l > 10 || l % 2 != 0) {
    throw DomainError("quadrature_central_moment requires even l in [2, 10]");
  }
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);

  // <X^k> from the normal ordering of (a + adag)^k evaluated on |psi>.
  NormalForm x = NormalForm::single(0, 1);
  x.add(1, 0, 1);
  std::vector<double> xk(l + 1);
  xk[0] = 1.0;
  NormalForm power = NormalForm::identity();
  for (int k = 1; k <= l; ++k) {
    power = multiply(power, x);
    std::complex<double> sum = 0.0;
    for (const auto& [key, coeff] : power.terms()) {
      sum += to_double(coeff) * general_moment(params, key.first, key.second);
    }
    xk[k] = require_real(sum, "quadrature moment") * std::pow(inv_sqrt2, k);
  }

  const double mean_x = xk[1];
  double central = 0.0;
  for (int k = 0; k <= l; ++k) {
    central += to_double(binomial(l, k)) * std::pow(-mean_x, l - k) * xk[k];
  }
  return central;
}

}  // namespace qsup
