#pragma once

#include <array>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "qsup/state.hpp"

namespace qsup {

enum class PdcOrder { First, Exact };

// Beam-splitter and coupling parameters of the generation scheme: PDC on
// modes (a, c), BS1 mixing (a, b), BS2 erasing which-path info on (b, c),
// photodetectors on the two ancilla outputs.
struct SchemeConfig {
  std::complex<double> t1{1.0, 0.0};
  std::complex<double> r1{0.0, 0.0};
  std::complex<double> t2{1.0, 0.0};
  std::complex<double> r2{0.0, 0.0};
  double eta = 0.0;
  PdcOrder pdc_order = PdcOrder::Exact;

  // Throws DomainError on non-unitary coefficient pairs or eta out of range
  // (<= 0.3 exact, <= 0.05 first order).
  void validate() const;
};

// Truncated three-mode amplitude tensor over (a, b, c) occupations. The
// ancilla caps default to 3: the scheme injects at most one photon per
// ancilla at first order, and the cap stays >= 2 so leakage is detected
// rather than silently truncated.
class MultimodeState {
 public:
  MultimodeState(std::size_t n_a, std::size_t n_b, std::size_t n_c);

  static MultimodeState coherent_a(std::complex<double> alpha, std::size_t n_a,
                                   std::size_t n_b = 3, std::size_t n_c = 3);

  std::size_t cap(int mode) const { return caps_[static_cast<std::size_t>(mode)]; }
  std::size_t size() const { return amplitudes_.size(); }

  std::complex<double>& at(std::size_t ia, std::size_t ib, std::size_t ic);
  const std::complex<double>& at(std::size_t ia, std::size_t ib, std::size_t ic) const;

  double norm_sq() const;
  // Stored norm, refreshed by the scheme operations; equals norm_sq() within
  // 1e-12.
  double stored_norm_sq() const { return stored_norm_sq_; }
  void refresh_norm();

  const std::vector<std::complex<double>>& raw() const { return amplitudes_; }
  std::vector<std::complex<double>>& raw() { return amplitudes_; }

 private:
  std::array<std::size_t, 3> caps_;
  std::vector<std::complex<double>> amplitudes_;
  double stored_norm_sq_ = 0.0;
};

// PDC on modes (a, c): first order applies (1 - eta adag cdag); exact applies
// the truncated series of exp(-eta adag cdag + eta a c) to machine precision.
// Output is not renormalized (heralding probabilities need the raw norm).
// Throws CapExceeded if population at the c-mode cap exceeds 1e-10.
MultimodeState apply_pdc(const MultimodeState& state, double eta, PdcOrder order);

// Passive two-mode unitary with output-mode operators x' = t x + r y,
// y' = t* y - r* x (equivalently, creation-operator substitution
// xdag -> t* xdag + r* ydag, ydag -> t ydag - r xdag). mode_pair indexes
// (x, y) into (a, b, c). Norm preserved within 1e-12; components driven past
// a cap are an error when their total population exceeds 1e-10.
MultimodeState apply_beam_splitter(const MultimodeState& state,
                                   std::pair<int, int> mode_pair,
                                   std::complex<double> t, std::complex<double> r);

// PD1 watches the c output, PD2 the b output.
enum class HeraldPattern { Pd1ClickPd2Silent, Pd2ClickPd1Silent };

struct HeraldResult {
  FockVector mode_a;
  double success_probability = 0.0;
};

// Projects the ancillas onto |1> at the clicking detector and |0> at the
// silent one, returning the normalized conditional a-mode state and the
// Born-rule branch probability. Throws ZeroProbability below 1e-30.
HeraldResult herald(const MultimodeState& state, HeraldPattern pattern);

// Full pipeline PDC -> BS1 -> BS2 for a coherent input.
MultimodeState run_scheme(std::complex<double> alpha, const SchemeConfig& config);

struct FidelityResult {
  double fidelity = 0.0;
  std::complex<double> implied_t;
  std::complex<double> implied_r;
  double success_probability = 0.0;
};

// Runs the pipeline, heralds on the requested pattern, and scores the result
// against (t a + r adag)|alpha> built from the scheme's implied coefficients
// (PD1: t = -r1* t2*/t1, r = -eta t2; PD2: t = -r1* r2*/t1, r = eta r2).
FidelityResult scheme_fidelity(std::complex<double> alpha, const SchemeConfig& config,
                               HeraldPattern pattern = HeraldPattern::Pd1ClickPd2Silent);

}  // namespace qsup
