#pragma once

#include <optional>
#include <string_view>

#include "qsup/state.hpp"

namespace qsup {

enum class Witness { MandelQ, Hoa, Hosps, Hos, AgarwalTara, Klyshko };

std::string_view witness_name(Witness w);

// One evaluated witness. All thresholds here are exactly 0 and the
// nonclassical verdict is the strict inequality value < 0. Values within
// 1e-12 of the threshold are flagged boundary instead; degenerate results
// (the 0/0 Agarwal-Tara case) carry the degenerate flag and value 0.
struct WitnessRecord {
  Witness name = Witness::MandelQ;
  int order = 0;
  StateParams params;
  double value = 0.0;
  double threshold = 0.0;
  bool nonclassical = false;
  bool degenerate = false;
  bool boundary = false;
  // Secondary evaluator kept for comparison where an alternative published
  // form exists (currently HOSPS's double sum).
  std::optional<double> printed_form;
};

// Higher-order Mandel parameter Q_M^{(l)} = <(dN)^l>/<adag a> - 1.
// Requires 2 <= l <= 10 and mean photon number > 1e-12.
WitnessRecord mandel_q(const StateParams& params, int l);

// Higher-order antibunching d(l-1) = <adag^l a^l> - <adag a>^l, 2 <= l <= 10.
WitnessRecord hoa(const StateParams& params, int l);

// Higher-order sub-Poissonian statistics: <(dN)^l> minus the central moment
// of a Poisson distribution with the same mean. The record's printed_form
// carries the alternating binomial-Stirling double sum, which matches for
// even l and flips sign for odd l. Requires 2 <= l <= 8.
WitnessRecord hosps(const StateParams& params, int l);

// Hong-Mandel squeezing S(l) = (<(dX)^l> - (1/2)_{l/2})/(1/2)_{l/2} for even
// l <= 10. An optional phase rotates alpha -> |alpha| e^{i phase} first.
WitnessRecord hos(const StateParams& params, int l,
                  std::optional<double> phase = std::nullopt);

// Agarwal-Tara A_3 = det m3 / (det mu3 - det m3) from the j = 1..4 normally
// ordered and number moments; the 0/0 case is a degenerate-flagged record.
WitnessRecord agarwal_tara(const StateParams& params);

// p_m = N^{-1} e^{-|alpha|^2} |alpha|^{2(m-1)} |t alpha^2 + r m|^2 / m!,
// with the alpha = 0 limit taken term by term.
double photon_prob(const StateParams& params, int m);

// Klyshko B(m) = (m+2) p_m p_{m+2} - (m+1) p_{m+1}^2, m <= 30.
WitnessRecord klyshko(const StateParams& params, int m);

// Closed form for B(m) in terms of (alpha, t, r, N) directly; equals the
// triplet route to 1e-10.
double klyshko_closed_form(const StateParams& params, int m);

}  // namespace qsup
