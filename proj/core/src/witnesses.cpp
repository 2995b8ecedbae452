#include "qsup/witnesses.hpp"

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "qsup/algebra.hpp"
#include "qsup/moments.hpp"

namespace qsup {

namespace {

constexpr double kBoundaryTol = 1e-12;
constexpr double kDegenerateDet = 1e-12;

double factorial(int n) {
  static const auto table = [] {
    std::array<double, 64> t{};
    t[0] = 1.0;
    for (std::size_t i = 1; i < t.size(); ++i) t[i] = t[i - 1] * static_cast<double>(i);
    return t;
  }();
  return table[static_cast<std::size_t>(n)];
}

WitnessRecord make_record(Witness name, int order, const StateParams& params,
                          double value) {
  WitnessRecord rec;
  rec.name = name;
  rec.order = order;
  rec.params = params;
  rec.value = value;
  rec.threshold = 0.0;
  rec.boundary = std::abs(value) <= kBoundaryTol;
  rec.nonclassical = !rec.boundary && value < 0.0;
  return rec;
}

WitnessRecord make_degenerate(Witness name, int order, const StateParams& params) {
  WitnessRecord rec;
  rec.name = name;
  rec.order = order;
  rec.params = params;
  rec.degenerate = true;
  return rec;
}

double det3(const std::array<std::array<double, 3>, 3>& m) {
  return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
         m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
         m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
}

double real_part(std::complex<double> z, const char* what) {
  if (std::abs(z.imag()) > 1e-10 * (1.0 + std::abs(z.real()))) {
    throw Error(std::string(what) + ": imaginary residue exceeds 1e-10");
  }
  return z.real();
}

double antibunching_value(const StateParams& params, int l) {
  const double ml = real_part(general_moment(params, l, l), "hoa moment");
  const double mean = real_part(general_moment(params, 1, 1), "hoa mean");
  return ml - std::pow(mean, l);
}

double poisson_central(double mu, int l) {
  std::vector<double> raw(l + 1);
  for (int e = 0; e <= l; ++e) {
    double s = 0.0;
    for (int f = 0; f <= e; ++f) s += to_double(stirling2(e, f)) * std::pow(mu, f);
    raw[e] = s;
  }
  double central = 0.0;
  for (int e = 0; e <= l; ++e) {
    central += to_double(binomial(l, e)) * std::pow(-mu, l - e) * raw[e];
  }
  return central;
}

}  // namespace

std::string_view witness_name(Witness w) {
  switch (w) {
    case Witness::MandelQ: return "mandel";
    case Witness::Hoa: return "hoa";
    case Witness::Hosps: return "hosps";
    case Witness::Hos: return "hos";
    case Witness::AgarwalTara: return "agarwal-tara";
    case Witness::Klyshko: return "klyshko";
  }
  return "unknown";
}

WitnessRecord mandel_q(const StateParams& params, int l) {
  if (l < 2 || l > 10) {
    throw DomainError("mandel_q requires l in [2, 10]");
  }
  const double mean = number_moment(params, 1);
  if (mean <= 1e-12) {
    throw DegenerateState("mandel_q requires a nonvanishing mean photon number");
  }
  const double value = central_number_moment(params, l) / mean - 1.0;
  return make_record(Witness::MandelQ, l, params, value);
}

WitnessRecord hoa(const StateParams& params, int l) {
  if (l < 2 || l > 10) {
    throw DomainError("hoa requires l in [2, 10]");
  }
  return make_record(Witness::Hoa, l, params, antibunching_value(params, l));
}

WitnessRecord hosps(const StateParams& params, int l) {
  if (l < 2 || l > 8) {
    throw DomainError("hosps requires l in [2, 8]");
  }
  const double mu = number_moment(params, 1);
  const double value = central_number_moment(params, l) - poisson_central(mu, l);

  // Alternative double-sum route with alternating sign (-1)^e and standard
  // Stirling numbers. Matches the primary value for even l and flips sign
  // for odd l, where the consistent factor would be (-1)^{l-e}.
  double printed = 0.0;
  for (int e = 0; e <= l; ++e) {
    for (int f = 1; f <= e; ++f) {
      printed += to_double(stirling2(e, f)) * to_double(binomial(l, e)) *
                 ((e % 2 == 0) ? 1.0 : -1.0) * antibunching_value(params, f) *
                 std::pow(mu, l - e);
    }
  }

  WitnessRecord rec = make_record(Witness::Hosps, l, params, value);
  rec.printed_form = printed;
  return rec;
}

WitnessRecord hos(const StateParams& params, int l, std::optional<double> phase) {
  StateParams p = params;
  if (phase) {
    const double mag = std::abs(params.alpha);
    p = make_state_signed(std::polar(mag, *phase), params.r, params.t);
  }
  const double reference = pochhammer_half(l).value();
  const double value = (quadrature_central_moment(p, l) - reference) / reference;
  return make_record(Witness::Hos, l, p, value);
}

WitnessRecord agarwal_tara(const StateParams& params) {
  std::array<double, 5> m{1.0};
  std::array<double, 5> mu{1.0};
  for (int j = 1; j <= 4; ++j) {
    m[j] = real_part(general_moment(params, j, j), "agarwal_tara moment");
    mu[j] = number_moment(params, j);
  }
  const double det_m = det3({{{1.0, m[1], m[2]}, {m[1], m[2], m[3]}, {m[2], m[3], m[4]}}});
  const double det_mu =
      det3({{{1.0, mu[1], mu[2]}, {mu[1], mu[2], mu[3]}, {mu[2], mu[3], mu[4]}}});
  if (std::abs(det_mu - det_m) < kDegenerateDet) {
    return make_degenerate(Witness::AgarwalTara, 3, params);
  }
  return make_record(Witness::AgarwalTara, 3, params, det_m / (det_mu - det_m));
}

double photon_prob(const StateParams& params, int m) {
  if (m < 0 || m > 60) {
    throw DomainError("photon_prob requires m in [0, 60]");
  }
  const std::complex<double> alpha = params.alpha;
  const double envelope = std::exp(-std::norm(alpha)) / params.norm_const;
  if (m == 0) {
    return envelope * std::norm(params.t * alpha);
  }
  const std::complex<double> bracket =
      params.t * alpha * alpha + params.r * static_cast<double>(m);
  return envelope * std::pow(std::norm(alpha), m - 1) * std::norm(bracket) /
         factorial(m);
}

WitnessRecord klyshko(const StateParams& params, int m) {
  if (m < 0 || m > 30) {
    throw DomainError("klyshko requires m in [0, 30]");
  }
  const double value = (m + 2) * photon_prob(params, m) * photon_prob(params, m + 2) -
                       (m + 1) * photon_prob(params, m + 1) * photon_prob(params, m + 1);
  return make_record(Witness::Klyshko, m, params, value);
}

double klyshko_closed_form(const StateParams& params, int m) {
  if (m < 0 || m > 30) {
    throw DomainError("klyshko requires m in [0, 30]");
  }
  const std::complex<double> alpha = params.alpha;
  const double t = params.t;
  const double r = params.r;
  const std::complex<double> a2 = alpha * alpha;
  const double re_a2 = a2.real();
  const double re_a4 = (a2 * a2).real();
  const double bracket = r * r * (2.0 * m * m + 4.0 * m + 1.0) +
                         2.0 * r * t * (m + 1) * 2.0 * re_a2 + t * t * 2.0 * re_a4;
  const double prefactor = std::exp(-2.0 * std::norm(alpha)) *
                           std::pow(std::norm(alpha), 2 * m) /
                           (params.norm_const * params.norm_const * factorial(m) *
                            factorial(m + 1));
  return -prefactor * r * r * bracket;
}

}  // namespace qsup
