#include "qsup/herald.hpp"

#include <cmath>

#include "qsup/algebra.hpp"

namespace qsup {

namespace {

constexpr double kLeakTol = 1e-10;       // max clipped population
constexpr double kSeriesTol = 1e-18;     // PDC series cutoff
constexpr double kZeroProbability = 1e-30;

double sqrt_factorial(std::size_t n) {
  static const auto table = [] {
    std::array<double, 64> t{};
    t[0] = 1.0;
    for (std::size_t i = 1; i < t.size(); ++i) {
      t[i] = t[i - 1] * std::sqrt(static_cast<double>(i));
    }
    return t;
  }();
  return table[n];
}

}  // namespace

void SchemeConfig::validate() const {
  if (std::abs(std::norm(t1) + std::norm(r1) - 1.0) > 1e-12 ||
      std::abs(std::norm(t2) + std::norm(r2) - 1.0) > 1e-12) {
    throw DomainError("beam-splitter coefficients must satisfy |t|^2 + |r|^2 = 1");
  }
  if (eta < 0.0) throw DomainError("eta must be non-negative");
  const double cap = pdc_order == PdcOrder::Exact ? 0.3 : 0.05;
  if (eta > cap) {
    throw DomainError("eta exceeds the supported coupling range for this PDC order");
  }
}

MultimodeState::MultimodeState(std::size_t n_a, std::size_t n_b, std::size_t n_c)
    : caps_{n_a, n_b, n_c},
      amplitudes_((n_a + 1) * (n_b + 1) * (n_c + 1), std::complex<double>{0.0}) {}

MultimodeState MultimodeState::coherent_a(std::complex<double> alpha, std::size_t n_a,
                                          std::size_t n_b, std::size_t n_c) {
  MultimodeState state(n_a, n_b, n_c);
  const auto g = coherent_amplitudes(alpha, n_a);
  for (std::size_t ia = 0; ia <= n_a; ++ia) {
    state.at(ia, 0, 0) = g[ia];
  }
  state.refresh_norm();
  return state;
}

std::complex<double>& MultimodeState::at(std::size_t ia, std::size_t ib,
                                         std::size_t ic) {
  return amplitudes_[(ia * (caps_[1] + 1) + ib) * (caps_[2] + 1) + ic];
}

const std::complex<double>& MultimodeState::at(std::size_t ia, std::size_t ib,
                                               std::size_t ic) const {
  return amplitudes_[(ia * (caps_[1] + 1) + ib) * (caps_[2] + 1) + ic];
}

double MultimodeState::norm_sq() const {
  double s = 0.0;
  for (const auto& amp : amplitudes_) s += std::norm(amp);
  return s;
}

void MultimodeState::refresh_norm() { stored_norm_sq_ = norm_sq(); }

MultimodeState apply_pdc(const MultimodeState& state, double eta, PdcOrder order) {
  const std::size_t n_a = state.cap(0);
  const std::size_t n_b = state.cap(1);
  const std::size_t n_c = state.cap(2);
  MultimodeState out = state;

  if (order == PdcOrder::First) {
    for (std::size_t ia = 1; ia <= n_a; ++ia) {
      for (std::size_t ib = 0; ib <= n_b; ++ib) {
        for (std::size_t ic = 1; ic <= n_c; ++ic) {
          out.at(ia, ib, ic) -= eta * std::sqrt(static_cast<double>(ia)) *
                                std::sqrt(static_cast<double>(ic)) *
                                state.at(ia - 1, ib, ic - 1);
        }
      }
    }
  } else {
    // Truncated series of exp(G), G = -eta adag cdag + eta a c.
    MultimodeState term = state;
    for (int k = 1; k < 256; ++k) {
      MultimodeState next(n_a, n_b, n_c);
      for (std::size_t ia = 0; ia <= n_a; ++ia) {
        for (std::size_t ib = 0; ib <= n_b; ++ib) {
          for (std::size_t ic = 0; ic <= n_c; ++ic) {
            const auto v = term.at(ia, ib, ic);
            if (v == std::complex<double>{0.0}) continue;
            if (ia + 1 <= n_a && ic + 1 <= n_c) {
              next.at(ia + 1, ib, ic + 1) -=
                  eta * std::sqrt(static_cast<double>(ia + 1)) *
                  std::sqrt(static_cast<double>(ic + 1)) * v;
            }
            if (ia >= 1 && ic >= 1) {
              next.at(ia - 1, ib, ic - 1) += eta *
                                             std::sqrt(static_cast<double>(ia)) *
                                             std::sqrt(static_cast<double>(ic)) * v;
            }
          }
        }
      }
      const double inv_k = 1.0 / static_cast<double>(k);
      for (std::size_t i = 0; i < next.size(); ++i) {
        next.raw()[i] *= inv_k;
        out.raw()[i] += next.raw()[i];
      }
      term = std::move(next);
      if (term.norm_sq() < kSeriesTol * kSeriesTol) break;
    }
  }

  double cap_population = 0.0;
  for (std::size_t ia = 0; ia <= n_a; ++ia) {
    for (std::size_t ib = 0; ib <= n_b; ++ib) {
      cap_population += std::norm(out.at(ia, ib, n_c));
    }
  }
  if (cap_population > kLeakTol) {
    throw CapExceeded("population at the c-mode cap exceeds 1e-10");
  }
  out.refresh_norm();
  return out;
}

MultimodeState apply_beam_splitter(const MultimodeState& state,
                                   std::pair<int, int> mode_pair,
                                   std::complex<double> t, std::complex<double> r) {
  if (std::abs(std::norm(t) + std::norm(r) - 1.0) > 1e-12) {
    throw DomainError("beam splitter requires |t|^2 + |r|^2 = 1");
  }
  const int x = mode_pair.first;
  const int y = mode_pair.second;
  if (x < 0 || x > 2 || y < 0 || y > 2 || x == y) {
    throw DomainError("beam splitter needs two distinct modes out of (a, b, c)");
  }

  const std::array<std::size_t, 3> caps{state.cap(0), state.cap(1), state.cap(2)};
  MultimodeState out(caps[0], caps[1], caps[2]);
  double clipped = 0.0;

  // Powers of the substituted creation operators, expanded binomially:
  // |m, n>_{xy} -> (t* xdag + r* ydag)^m (t ydag - r xdag)^n |0, 0>.
  std::array<std::size_t, 3> occ{};
  for (std::size_t ia = 0; ia <= caps[0]; ++ia) {
    for (std::size_t ib = 0; ib <= caps[1]; ++ib) {
      for (std::size_t ic = 0; ic <= caps[2]; ++ic) {
        const auto v = state.at(ia, ib, ic);
        if (v == std::complex<double>{0.0}) continue;
        occ = {ia, ib, ic};
        const auto m = occ[static_cast<std::size_t>(x)];
        const auto n = occ[static_cast<std::size_t>(y)];
        const std::complex<double> pref = v / (sqrt_factorial(m) * sqrt_factorial(n));

        for (std::size_t k = 0; k <= m; ++k) {
          for (std::size_t j = 0; j <= n; ++j) {
            const std::size_t px = k + (n - j);
            const std::size_t py = (m - k) + j;
            std::complex<double> coeff =
                to_double(binomial(static_cast<int>(m), static_cast<int>(k))) *
                to_double(binomial(static_cast<int>(n), static_cast<int>(j)));
            for (std::size_t q = 0; q < k; ++q) coeff *= std::conj(t);
            for (std::size_t q = 0; q < m - k; ++q) coeff *= std::conj(r);
            for (std::size_t q = 0; q < j; ++q) coeff *= t;
            for (std::size_t q = 0; q < n - j; ++q) coeff *= -r;
            const std::complex<double> w =
                pref * coeff * sqrt_factorial(px) * sqrt_factorial(py);
            if (px > caps[static_cast<std::size_t>(x)] ||
                py > caps[static_cast<std::size_t>(y)]) {
              clipped += std::norm(w);
              continue;
            }
            auto dest = occ;
            dest[static_cast<std::size_t>(x)] = px;
            dest[static_cast<std::size_t>(y)] = py;
            out.at(dest[0], dest[1], dest[2]) += w;
          }
        }
      }
    }
  }

  if (clipped > kLeakTol) {
    throw CapExceeded("beam splitter drove population past a mode cap");
  }
  out.refresh_norm();
  return out;
}

HeraldResult herald(const MultimodeState& state, HeraldPattern pattern) {
  const std::size_t n_a = state.cap(0);
  const std::size_t want_b = pattern == HeraldPattern::Pd2ClickPd1Silent ? 1 : 0;
  const std::size_t want_c = pattern == HeraldPattern::Pd1ClickPd2Silent ? 1 : 0;

  std::vector<std::complex<double>> v(n_a + 1);
  double branch = 0.0;
  for (std::size_t ia = 0; ia <= n_a; ++ia) {
    v[ia] = state.at(ia, want_b, want_c);
    branch += std::norm(v[ia]);
  }
  const double total = state.norm_sq();
  const double probability = total > 0.0 ? branch / total : 0.0;
  if (probability < kZeroProbability) {
    throw ZeroProbability("herald pattern has vanishing probability");
  }
  const double inv = 1.0 / std::sqrt(branch);
  for (auto& amp : v) amp *= inv;
  return HeraldResult{FockVector{std::move(v), 0.0}, probability};
}

MultimodeState run_scheme(std::complex<double> alpha, const SchemeConfig& config) {
  config.validate();
  const std::size_t n_a = choose_truncation(alpha, 1e-12) + 2;
  MultimodeState state = MultimodeState::coherent_a(alpha, n_a);
  state = apply_pdc(state, config.eta, config.pdc_order);
  state = apply_beam_splitter(state, {1, 0}, config.t1, config.r1);  // BS1 on (b, a)
  state = apply_beam_splitter(state, {1, 2}, config.t2, config.r2);  // BS2 on (b, c)
  return state;
}

FidelityResult scheme_fidelity(std::complex<double> alpha, const SchemeConfig& config,
                               HeraldPattern pattern) {
  const MultimodeState state = run_scheme(alpha, config);
  const HeraldResult heralded = herald(state, pattern);

  FidelityResult result;
  if (pattern == HeraldPattern::Pd1ClickPd2Silent) {
    result.implied_t = -std::conj(config.r1) * std::conj(config.t2) / config.t1;
    result.implied_r = -config.eta * config.t2;
  } else {
    result.implied_t = -std::conj(config.r1) * std::conj(config.r2) / config.t1;
    result.implied_r = config.eta * config.r2;
  }
  result.success_probability = heralded.success_probability;

  auto target = superposed_amplitudes(alpha, result.implied_t, result.implied_r,
                                      heralded.mode_a.n_max());
  double norm_sq = 0.0;
  for (const auto& amp : target) norm_sq += std::norm(amp);
  std::complex<double> overlap = 0.0;
  for (std::size_t n = 0; n < target.size(); ++n) {
    overlap += std::conj(target[n]) * heralded.mode_a.amplitudes[n];
  }
  result.fidelity = std::norm(overlap) / norm_sq;
  return result;
}

}  // namespace qsup
