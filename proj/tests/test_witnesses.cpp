#include "qsup/witnesses.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <vector>

#include "qsup/moments.hpp"
#include "qsup/oracle.hpp"
#include "support.hpp"

namespace {

using qsup::agarwal_tara;
using qsup::hoa;
using qsup::hos;
using qsup::hosps;
using qsup::klyshko;
using qsup::klyshko_closed_form;
using qsup::make_state;
using qsup::mandel_q;
using qsup::photon_prob;

TEST(MandelQ, PoissonianIsBoundary) {
  const auto rec = mandel_q(make_state({1.0, 0.0}, 0.0), 2);
  EXPECT_NEAR(rec.value, 0.0, 1e-12);
  EXPECT_TRUE(rec.boundary);
  EXPECT_FALSE(rec.nonclassical);
}

TEST(MandelQ, SinglePhotonReachesMinusOne) {
  const auto rec = mandel_q(make_state({0.0, 0.0}, 1.0), 2);
  EXPECT_NEAR(rec.value, -1.0, 1e-10);
  EXPECT_TRUE(rec.nonclassical);
}

TEST(MandelQ, PoissonFourthOrderValue) {
  // (mu + 3 mu^2)/mu - 1 = 3 mu at mu = 1
  EXPECT_NEAR(mandel_q(make_state({1.0, 0.0}, 0.0), 4).value, 3.0, 1e-10);
}

TEST(MandelQ, RejectsVanishingMean) {
  // Aggregate-constructed unphysical params exercise the guard.
  const qsup::StateParams params{{0.0, 0.0}, 1.0, 0.0, 1.0};
  EXPECT_THROW(mandel_q(params, 2), qsup::DegenerateState);
}

TEST(Hoa, CoherentFactorialMomentsFactorize) {
  const auto params = make_state({1.4, -0.3}, 0.0);
  for (int l = 2; l <= 6; ++l) {
    const auto rec = hoa(params, l);
    EXPECT_NEAR(rec.value, 0.0, 1e-10) << "l=" << l;
    EXPECT_FALSE(rec.nonclassical);
  }
}

TEST(Hoa, SinglePhotonAntibunching) {
  EXPECT_NEAR(hoa(make_state({0.0, 0.0}, 1.0), 2).value, -1.0, 1e-12);
}

TEST(Hoa, FrozenValueAndOracle) {
  const auto params = make_state({1.0, 0.0}, 0.2);
  const auto rec = hoa(params, 2);
  EXPECT_NEAR(rec.value, -0.0719409107562905, 1e-10);
  EXPECT_TRUE(rec.nonclassical);

  const auto fock = qsup::fock_coefficients(params, 1e-12, 24);
  const double oracle = std::real(qsup::oracle_moment(fock, 2, 2)) -
                        std::pow(std::real(qsup::oracle_moment(fock, 1, 1)), 2);
  EXPECT_NEAR(rec.value, oracle, 1e-9);
}

TEST(Hosps, PoissonianVanishesAtAllOrders) {
  const auto params = make_state({1.2, 0.0}, 0.0);
  for (int l = 2; l <= 5; ++l) {
    EXPECT_NEAR(hosps(params, l).value, 0.0, 1e-10) << "l=" << l;
  }
}

TEST(Hosps, SinglePhotonSecondOrder) {
  // Var = 0 minus the Poisson variance mu = 1.
  EXPECT_NEAR(hosps(make_state({0.0, 0.0}, 1.0), 2).value, -1.0, 1e-10);
}

TEST(Hosps, SecondOrderEqualsMandelNumerator) {
  const auto params = make_state({1.0, 0.0}, 0.2);
  const double numerator = qsup::central_number_moment(params, 2) -
                           qsup::number_moment(params, 1);
  EXPECT_NEAR(hosps(params, 2).value, numerator, 1e-10);

  const auto fock = qsup::fock_coefficients(params, 1e-12, 24);
  const double mu = std::real(qsup::oracle_moment(fock, 1, 1));
  const double oracle =
      qsup::oracle_central_moment(fock, qsup::Observable::Number, 2) -
      qsup::poisson_central_moment(mu, 2);
  EXPECT_NEAR(hosps(params, 2).value, oracle, 1e-9);
}

TEST(Hosps, PrintedSumMatchesUpToParity) {
  // The double-sum route equals the primary value for even l and flips
  // sign for odd l (its (-1)^e would need to be (-1)^{l-e} to agree).
  for (const auto& params : qsup_test::stratified_params(8)) {
    for (int l = 2; l <= 5; ++l) {
      const auto rec = hosps(params, l);
      ASSERT_TRUE(rec.printed_form.has_value());
      const double expected = (l % 2 == 0) ? rec.value : -rec.value;
      EXPECT_NEAR(*rec.printed_form, expected, 1e-9 * (1.0 + std::abs(expected)))
          << "l=" << l;
    }
  }
}

TEST(Hos, CoherentSaturatesTheBound) {
  for (const auto alpha :
       {std::complex<double>{0.7, 0.0}, std::complex<double>{0.4, -1.1}}) {
    const auto params = make_state(alpha, 0.0);
    for (int l : {2, 4, 6}) {
      EXPECT_NEAR(hos(params, l).value, 0.0, 1e-10) << "l=" << l;
    }
  }
}

TEST(Hos, MatchesQuadratureOracle) {
  const auto params = make_state({1.0, 0.0}, 0.2);
  const auto fock = qsup::fock_coefficients(params, 1e-12, 24);
  const double reference = qsup::pochhammer_half(2).value();
  const double oracle =
      (qsup::oracle_central_moment(fock, qsup::Observable::Quadrature, 2) -
       reference) /
      reference;
  EXPECT_NEAR(hos(params, 2).value, oracle, 1e-8);
}

TEST(Hos, PhaseArgumentRotatesAlpha) {
  const double phase = 1.1;
  const auto params = make_state({1.0, 0.0}, 0.38);
  const auto rotated = make_state(std::polar(1.0, phase), 0.38);
  EXPECT_NEAR(hos(params, 2, phase).value, hos(rotated, 2).value, 1e-12);
  // Phase dependence is real: the rotated value differs from the unrotated.
  EXPECT_GT(std::abs(hos(params, 2, phase).value - hos(params, 2).value), 1e-3);
}

TEST(Hos, RejectsOddOrders) {
  EXPECT_THROW(hos(make_state({1.0, 0.0}, 0.2), 3), qsup::DomainError);
}

TEST(AgarwalTara, CoherentStateIsZero) {
  const auto rec = agarwal_tara(make_state({1.3, 0.0}, 0.0));
  EXPECT_FALSE(rec.degenerate);
  EXPECT_NEAR(rec.value, 0.0, 1e-10);
}

TEST(AgarwalTara, SinglePhotonIsDegenerate) {
  const auto params = make_state({0.0, 0.0}, 1.0);
  const auto rec = agarwal_tara(params);
  EXPECT_TRUE(rec.degenerate);
  EXPECT_FALSE(rec.nonclassical);

  // Direct 3x3 evaluation: both determinants vanish for |1>.
  const double m1 = qsup::general_moment(params, 1, 1).real();
  const double m2 = qsup::general_moment(params, 2, 2).real();
  EXPECT_NEAR(m1, 1.0, 1e-14);
  EXPECT_NEAR(m2, 0.0, 1e-14);
  const double det_m = 1.0 * (m2 * qsup::general_moment(params, 4, 4).real() -
                              qsup::general_moment(params, 3, 3).real() *
                                  qsup::general_moment(params, 3, 3).real()) -
                       m1 * (m1 * qsup::general_moment(params, 4, 4).real() -
                             qsup::general_moment(params, 3, 3).real() * m2) +
                       m2 * (m1 * qsup::general_moment(params, 3, 3).real() - m2 * m2);
  EXPECT_NEAR(det_m, 0.0, 1e-12);
}

TEST(AgarwalTara, ShallowDipAtModerateR) {
  // A3 stays within (-0.008, 0) for r in {0.2, 0.38} over alpha <= 2; at
  // r = 0.94 the dip reaches about -0.2.
  for (double r : {0.2, 0.38}) {
    for (int i = 1; i <= 20; ++i) {
      const double a = 0.1 * static_cast<double>(i);
      const auto rec = agarwal_tara(make_state({a, 0.0}, r));
      ASSERT_FALSE(rec.degenerate);
      EXPECT_GT(rec.value, -0.008) << "r=" << r << " alpha=" << a;
      EXPECT_LT(rec.value, 0.0) << "r=" << r << " alpha=" << a;
    }
  }
  double deepest = 0.0;
  for (int i = 1; i <= 20; ++i) {
    deepest = std::min(deepest, agarwal_tara(make_state({0.1 * i, 0.0}, 0.94)).value);
  }
  EXPECT_LT(deepest, -0.1);
  EXPECT_GT(deepest, -1.0);
}

TEST(PhotonProb, PoissonianAtRZero) {
  const auto params = make_state({1.0, 0.0}, 0.0);
  double factorial = 1.0;
  for (int m = 0; m <= 6; ++m) {
    if (m > 0) factorial *= m;
    EXPECT_NEAR(photon_prob(params, m), std::exp(-1.0) / factorial, 1e-14);
  }
}

TEST(PhotonProb, FockStateDistribution) {
  const auto params = make_state({0.0, 0.0}, 1.0);
  EXPECT_NEAR(photon_prob(params, 1), 1.0, 1e-14);
  for (int m : {0, 2, 3, 4}) {
    EXPECT_NEAR(photon_prob(params, m), 0.0, 1e-14);
  }
}

TEST(PhotonProb, CompletenessAndOracle) {
  const auto params = make_state({2.0, 0.0}, 0.38);
  double total = 0.0;
  for (int m = 0; m <= 60; ++m) total += photon_prob(params, m);
  EXPECT_NEAR(total, 1.0, 1e-10);

  const auto fock = qsup::fock_coefficients(params, 1e-12, 8);
  for (int m = 0; m <= 10; ++m) {
    EXPECT_NEAR(photon_prob(params, m), qsup::oracle_pm(fock, m), 1e-10);
  }
}

TEST(Klyshko, PoissonianVanishesIdentically) {
  const auto params = make_state({2.0, 0.0}, 0.0);
  for (int m = 0; m <= 8; ++m) {
    EXPECT_NEAR(klyshko(params, m).value, 0.0, 1e-14) << "m=" << m;
  }
}

TEST(Klyshko, SinglePhotonAtZero) {
  EXPECT_NEAR(klyshko(make_state({0.0, 0.0}, 1.0), 0).value, -1.0, 1e-12);
}

TEST(Klyshko, ClosedFormMatchesTripletRoute) {
  for (const auto& params : qsup_test::stratified_params(16)) {
    for (int m = 0; m <= 8; m += 2) {
      const double triplet = klyshko(params, m).value;
      EXPECT_NEAR(klyshko_closed_form(params, m), triplet,
                  1e-10 * (1.0 + std::abs(triplet)))
          << "m=" << m;
    }
  }
}

TEST(Klyshko, MostNegativeNearThree) {
  // argmin at alpha = 2: m = 3 for r in {0.2, 0.38}; at r = 0.94 the dip
  // shifts to m = 4.
  for (double r : {0.2, 0.38}) {
    const auto params = make_state({2.0, 0.0}, r);
    int argmin = 0;
    double best = 0.0;
    for (int m = 0; m <= 10; ++m) {
      const double b = klyshko(params, m).value;
      if (b < best) {
        best = b;
        argmin = m;
      }
    }
    EXPECT_EQ(argmin, 3) << "r=" << r;
  }
  const auto params = make_state({2.0, 0.0}, 0.94);
  int argmin = 0;
  double best = 0.0;
  for (int m = 0; m <= 10; ++m) {
    const double b = klyshko(params, m).value;
    if (b < best) {
      best = b;
      argmin = m;
    }
  }
  EXPECT_EQ(argmin, 4);
}

TEST(Klyshko, NegativeForPositiveRealParameters) {
  for (double r : {0.2, 0.38, 0.94}) {
    for (double a : {0.3, 0.7, 1.1, 1.7, 2.0}) {
      const auto params = make_state({a, 0.0}, r);
      for (int m = 0; m <= 10; ++m) {
        EXPECT_LT(klyshko(params, m).value, 0.0)
            << "r=" << r << " alpha=" << a << " m=" << m;
      }
    }
  }
}

TEST(Witnesses, CoherentLimitZeroSet) {
  const auto params = make_state({1.1, 0.0}, 0.0);
  EXPECT_NEAR(mandel_q(params, 2).value, 0.0, 1e-10);
  EXPECT_NEAR(mandel_q(params, 3).value, 0.0, 1e-10);
  for (int l = 2; l <= 5; ++l) {
    EXPECT_NEAR(hoa(params, l).value, 0.0, 1e-10);
    EXPECT_NEAR(hosps(params, l).value, 0.0, 1e-10);
  }
  for (int l : {2, 4, 6}) {
    EXPECT_NEAR(hos(params, l).value, 0.0, 1e-10);
  }
  EXPECT_NEAR(agarwal_tara(params).value, 0.0, 1e-10);
  for (int m = 0; m <= 10; ++m) {
    EXPECT_NEAR(klyshko(params, m).value, 0.0, 1e-10);
  }
}

TEST(Witnesses, AntibunchedOverFigureGrid) {
  for (double r : {0.2, 0.38, 0.94}) {
    for (int i = 1; i <= 25; ++i) {
      const double a = 2.0 * static_cast<double>(i) / 25.0;
      EXPECT_LT(hoa(make_state({a, 0.0}, r), 2).value, 0.0)
          << "r=" << r << " alpha=" << a;
    }
  }
}

TEST(Witnesses, FiniteOnComplexSample) {
  for (const auto& params : qsup_test::stratified_params(10)) {
    EXPECT_TRUE(std::isfinite(mandel_q(params, 3).value));
    EXPECT_TRUE(std::isfinite(hoa(params, 4).value));
    EXPECT_TRUE(std::isfinite(hosps(params, 3).value));
    EXPECT_TRUE(std::isfinite(hos(params, 4).value));
    EXPECT_TRUE(std::isfinite(klyshko(params, 5).value));
  }
}

}  // namespace
