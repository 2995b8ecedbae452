#include "qsup/oracle.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <utility>

#include "json.hpp"
#include "qsup/algebra.hpp"
#include "qsup/moments.hpp"
#include "qsup/phase_space.hpp"
#include "qsup/witnesses.hpp"

namespace qsup {

namespace {

Eigen::VectorXcd to_eigen(const FockVector& fock) {
  Eigen::VectorXcd v(static_cast<Eigen::Index>(fock.amplitudes.size()));
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    v[i] = fock.amplitudes[static_cast<std::size_t>(i)];
  }
  return v;
}

}  // namespace

LadderMatrices LadderMatrices::make(std::size_t n_max) {
  const auto dim = static_cast<Eigen::Index>(n_max + 1);
  LadderMatrices m;
  m.annihilate = Eigen::MatrixXcd::Zero(dim, dim);
  for (Eigen::Index n = 1; n < dim; ++n) {
    m.annihilate(n - 1, n) = std::sqrt(static_cast<double>(n));
  }
  m.create = m.annihilate.adjoint();
  m.number = m.create * m.annihilate;
  m.quadrature = (m.annihilate + m.create) / std::sqrt(2.0);
  return m;
}

std::complex<double> oracle_moment(const FockVector& fock, int m, int n) {
  if (m < 0 || n < 0) throw DomainError("moment orders must be non-negative");
  if (static_cast<std::size_t>(m + n) > fock.n_max() / 2) {
    throw TruncationTooSmall("oracle_moment requires m + n <= n_max/2");
  }
  const auto mats = LadderMatrices::make(fock.n_max());
  Eigen::VectorXcd left = to_eigen(fock);
  for (int i = 0; i < m; ++i) left = mats.annihilate * left;
  Eigen::VectorXcd right = to_eigen(fock);
  for (int i = 0; i < n; ++i) right = mats.annihilate * right;
  return left.dot(right);  // Eigen's dot conjugates the left argument
}

double oracle_central_moment(const FockVector& fock, Observable observable, int l) {
  if (l < 1 || l > 10) throw DomainError("oracle_central_moment requires l <= 10");
  if (fock.n_max() < static_cast<std::size_t>(4 * l)) {
    throw TruncationTooSmall("oracle_central_moment needs n_max >= 4 l");
  }
  const auto mats = LadderMatrices::make(fock.n_max());
  const Eigen::MatrixXcd& op =
      observable == Observable::Number ? mats.number : mats.quadrature;
  const Eigen::VectorXcd psi = to_eigen(fock);
  const double mean = std::real(psi.dot(op * psi));
  const Eigen::MatrixXcd shifted =
      op - mean * Eigen::MatrixXcd::Identity(op.rows(), op.cols());
  Eigen::VectorXcd v = psi;
  for (int i = 0; i < l; ++i) v = shifted * v;
  return std::real(psi.dot(v));
}

double poisson_central_moment(double mu, int l) {
  if (!(mu > 0.0)) throw DomainError("poisson_central_moment requires mu > 0");
  if (l < 1 || l > 10) throw DomainError("poisson_central_moment requires l <= 10");
  std::vector<double> raw(static_cast<std::size_t>(l) + 1);
  for (int e = 0; e <= l; ++e) {
    double s = 0.0;
    for (int f = 0; f <= e; ++f) s += to_double(stirling2(e, f)) * std::pow(mu, f);
    raw[static_cast<std::size_t>(e)] = s;
  }
  double central = 0.0;
  for (int e = 0; e <= l; ++e) {
    central += to_double(binomial(l, e)) * std::pow(-mu, l - e) *
               raw[static_cast<std::size_t>(e)];
  }
  return central;
}

double oracle_pm(const FockVector& fock, int m) {
  if (m < 0) throw DomainError("photon number must be non-negative");
  if (static_cast<std::size_t>(m) > fock.n_max()) {
    throw TruncationTooSmall("oracle_pm: m beyond the truncation");
  }
  return std::norm(fock.amplitudes[static_cast<std::size_t>(m)]);
}

double oracle_husimi(const FockVector& fock, std::complex<double> beta) {
  const auto coh = coherent_amplitudes(beta, fock.n_max());
  std::complex<double> overlap = 0.0;
  for (std::size_t n = 0; n < fock.amplitudes.size(); ++n) {
    overlap += std::conj(coh[n]) * fock.amplitudes[n];
  }
  return std::norm(overlap) / std::numbers::pi;
}

namespace {

void push_entry(VerifyReport& report, const std::string& quantity, double closed,
                double oracle) {
  VerifyEntry e;
  e.quantity = quantity;
  e.closed_form = closed;
  e.oracle = oracle;
  e.abs_err = std::abs(closed - oracle);
  e.rel_err = e.abs_err / (1.0 + std::abs(oracle));
  e.pass = e.rel_err <= report.tol;
  report.all_pass = report.all_pass && e.pass;
  report.entries.push_back(std::move(e));
}

}  // namespace

VerifyReport verify_all(const StateParams& params, double tol) {
  if (tol < 1e-12) throw DomainError("verify_all requires tol >= 1e-12");
  VerifyReport report;
  report.tol = tol;

  const FockVector fock = fock_coefficients(params, 1e-12, 32);
  report.n_max = fock.n_max();

  // Normalization identity: N vs the squared norm of the raw expansion.
  {
    const auto raw =
        superposed_amplitudes(params.alpha, params.t, params.r, fock.n_max());
    double norm_sq = 0.0;
    for (const auto& amp : raw) norm_sq += std::norm(amp);
    push_entry(report, "norm_const", params.norm_const, norm_sq);
  }

  for (const auto& [m, n] : std::vector<std::pair<int, int>>{
           {1, 1}, {2, 2}, {3, 3}, {1, 0}, {2, 1}, {4, 2}}) {
    const auto closed = general_moment(params, m, n);
    const auto oracle = oracle_moment(fock, m, n);
    const std::string base =
        "moment(" + std::to_string(m) + "," + std::to_string(n) + ")";
    push_entry(report, base + ".re", closed.real(), oracle.real());
    if (m != n) push_entry(report, base + ".im", closed.imag(), oracle.imag());
  }

  for (int l = 2; l <= 4; ++l) {
    push_entry(report, "mandel_q(" + std::to_string(l) + ")",
               mandel_q(params, l).value,
               oracle_central_moment(fock, Observable::Number, l) /
                       std::real(oracle_moment(fock, 1, 1)) -
                   1.0);
    push_entry(report, "hoa(" + std::to_string(l) + ")", hoa(params, l).value,
               std::real(oracle_moment(fock, l, l)) -
                   std::pow(std::real(oracle_moment(fock, 1, 1)), l));
    push_entry(report, "hosps(" + std::to_string(l) + ")", hosps(params, l).value,
               oracle_central_moment(fock, Observable::Number, l) -
                   poisson_central_moment(std::real(oracle_moment(fock, 1, 1)), l));
  }

  for (int l : {2, 4, 6}) {
    const double reference = pochhammer_half(l).value();
    push_entry(report, "hos(" + std::to_string(l) + ")", hos(params, l).value,
               (oracle_central_moment(fock, Observable::Quadrature, l) - reference) /
                   reference);
  }

  {
    const auto rec = agarwal_tara(params);
    // Oracle route: m_j from ladder moments, mu_j from the photon-number
    // distribution directly.
    std::array<double, 5> m{1.0};
    std::array<double, 5> mu{1.0};
    for (int j = 1; j <= 4; ++j) {
      m[static_cast<std::size_t>(j)] = std::real(oracle_moment(fock, j, j));
      double s = 0.0;
      for (std::size_t n = 0; n <= fock.n_max(); ++n) {
        s += std::pow(static_cast<double>(n), j) * std::norm(fock.amplitudes[n]);
      }
      mu[static_cast<std::size_t>(j)] = s;
    }
    const auto det3 = [](const std::array<std::array<double, 3>, 3>& x) {
      return x[0][0] * (x[1][1] * x[2][2] - x[1][2] * x[2][1]) -
             x[0][1] * (x[1][0] * x[2][2] - x[1][2] * x[2][0]) +
             x[0][2] * (x[1][0] * x[2][1] - x[1][1] * x[2][0]);
    };
    const double det_m =
        det3({{{1.0, m[1], m[2]}, {m[1], m[2], m[3]}, {m[2], m[3], m[4]}}});
    const double det_mu =
        det3({{{1.0, mu[1], mu[2]}, {mu[1], mu[2], mu[3]}, {mu[2], mu[3], mu[4]}}});
    if (rec.degenerate) {
      push_entry(report, "agarwal_tara.degenerate_det", 0.0, det_mu - det_m);
    } else {
      push_entry(report, "agarwal_tara", rec.value, det_m / (det_mu - det_m));
    }
  }

  for (int m = 0; m <= 6; ++m) {
    push_entry(report, "p(" + std::to_string(m) + ")", photon_prob(params, m),
               oracle_pm(fock, m));
  }
  for (int m = 0; m <= 4; ++m) {
    const double oracle_b =
        (m + 2) * oracle_pm(fock, m) * oracle_pm(fock, m + 2) -
        (m + 1) * oracle_pm(fock, m + 1) * oracle_pm(fock, m + 1);
    push_entry(report, "klyshko(" + std::to_string(m) + ")",
               klyshko(params, m).value, oracle_b);
  }

  const std::complex<double> around = params.alpha;
  const std::vector<std::complex<double>> betas{
      around, around + std::complex<double>{0.7, 0.0},
      around + std::complex<double>{-0.3, 0.9}, around + std::complex<double>{0.0, -1.1},
      around + std::complex<double>{1.4, 0.6}};
  for (std::size_t i = 0; i < betas.size(); ++i) {
    push_entry(report, "husimi_q(b" + std::to_string(i) + ")",
               husimi_q(params, betas[i]), oracle_husimi(fock, betas[i]));
  }
  for (std::size_t i = 0; i + 1 < betas.size(); ++i) {
    const auto b1 = betas[i];
    const auto b2 = betas[i + 1];
    const double oracle_det =
        oracle_husimi(fock, b1) * oracle_husimi(fock, b2) -
        std::exp(-0.5 * std::norm(b2 - b1)) *
            std::pow(oracle_husimi(fock, 0.5 * (b1 + b2)), 2);
    push_entry(report, "psmatrix_det(b" + std::to_string(i) + ")",
               psmatrix_det(params, b1, b2), oracle_det);
  }

  return report;
}

std::string VerifyReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& e : entries) {
    arr.push_back({{"quantity", e.quantity},
                   {"closed_form", e.closed_form},
                   {"oracle", e.oracle},
                   {"abs_err", e.abs_err},
                   {"rel_err", e.rel_err},
                   {"pass", e.pass}});
  }
  nlohmann::json doc{{"tol", tol},
                     {"n_max", n_max},
                     {"all_pass", all_pass},
                     {"entries", arr}};
  return doc.dump(2);
}

}  // namespace qsup
