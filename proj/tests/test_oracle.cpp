#include "qsup/oracle.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "json.hpp"
#include "qsup/witnesses.hpp"
#include "support.hpp"

namespace {

using qsup::fock_coefficients;
using qsup::LadderMatrices;
using qsup::make_state;
using qsup::Observable;
using qsup::oracle_central_moment;
using qsup::oracle_husimi;
using qsup::oracle_moment;
using qsup::oracle_pm;
using qsup::poisson_central_moment;
using qsup::verify_all;

TEST(LadderMatrices, EntriesAndAdjoint) {
  const auto mats = LadderMatrices::make(12);
  for (int n = 1; n <= 12; ++n) {
    EXPECT_NEAR(std::abs(mats.annihilate(n - 1, n) - std::sqrt(double(n))), 0.0, 1e-15);
  }
  EXPECT_NEAR((mats.create - mats.annihilate.adjoint()).norm(), 0.0, 1e-15);
  EXPECT_NEAR(
      (mats.quadrature - (mats.annihilate + mats.create) / std::sqrt(2.0)).norm(),
      0.0, 1e-15);
}

TEST(LadderMatrices, CommutatorIsIdentityOnInteriorBlock) {
  const auto mats = LadderMatrices::make(30);
  const Eigen::MatrixXcd comm =
      mats.annihilate * mats.create - mats.create * mats.annihilate;
  const Eigen::MatrixXcd expected = Eigen::MatrixXcd::Identity(31, 31);
  EXPECT_LE((comm.topLeftCorner(29, 29) - expected.topLeftCorner(29, 29))
                .cwiseAbs()
                .maxCoeff(),
            1e-13);
}

TEST(OracleMoment, CoherentMeanPhotonNumber) {
  const auto fock = fock_coefficients(make_state({1.0, 0.0}, 0.0), 1e-12, 8);
  EXPECT_NEAR(std::abs(oracle_moment(fock, 1, 1) - std::complex<double>{1.0}), 0.0,
              1e-10);
}

TEST(OracleMoment, SinglePhotonHigherMomentVanishes) {
  const auto fock = fock_coefficients(make_state({0.0, 0.0}, 1.0), 1e-12, 8);
  EXPECT_NEAR(std::abs(oracle_moment(fock, 2, 2)), 0.0, 1e-14);
}

TEST(OracleMoment, GuardsAgainstShallowTruncation) {
  const auto fock = fock_coefficients(make_state({0.5, 0.0}, 0.2), 1e-4);
  EXPECT_THROW(oracle_moment(fock, 8, 8), qsup::TruncationTooSmall);
}

TEST(OracleCentralMoment, CoherentReferenceValues) {
  const auto fock = fock_coefficients(make_state({1.2, 0.0}, 0.0), 1e-12, 24);
  EXPECT_NEAR(oracle_central_moment(fock, Observable::Number, 2), 1.44, 1e-9);
  EXPECT_NEAR(oracle_central_moment(fock, Observable::Quadrature, 2), 0.5, 1e-10);
  EXPECT_NEAR(oracle_central_moment(fock, Observable::Quadrature, 6), 15.0 / 8.0,
              1e-9);
}

TEST(PoissonCentralMoment, LowOrderIdentities) {
  for (double mu : {0.3, 1.0, 2.7}) {
    EXPECT_NEAR(poisson_central_moment(mu, 2), mu, 1e-12);
    EXPECT_NEAR(poisson_central_moment(mu, 3), mu, 1e-11);
    EXPECT_NEAR(poisson_central_moment(mu, 4), mu + 3.0 * mu * mu, 1e-11);
  }
}

TEST(PoissonCentralMoment, MatchesDirectSummation) {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> mu_dist(0.2, 6.0);
  for (int trial = 0; trial < 10; ++trial) {
    const double mu = mu_dist(rng);
    for (int l = 2; l <= 8; ++l) {
      long double pmf = std::exp(static_cast<long double>(-mu));
      long double sum = pmf * std::pow(-static_cast<long double>(mu), l);
      for (int k = 1; k < 400; ++k) {
        pmf *= mu / static_cast<long double>(k);
        sum += pmf * std::pow(static_cast<long double>(k) - mu, l);
      }
      EXPECT_NEAR(poisson_central_moment(mu, l), static_cast<double>(sum),
                  1e-9 * (1.0 + std::abs(static_cast<double>(sum))))
          << "mu=" << mu << " l=" << l;
    }
  }
}

TEST(OraclePm, CoherentVacuumProbability) {
  const auto fock = fock_coefficients(make_state({1.0, 0.0}, 0.0), 1e-12);
  EXPECT_NEAR(oracle_pm(fock, 0), std::exp(-1.0), 1e-12);
}

TEST(OracleHusimi, SinglePhotonVanishesAtOrigin) {
  const auto fock = fock_coefficients(make_state({0.0, 0.0}, 1.0), 1e-12);
  EXPECT_NEAR(oracle_husimi(fock, {0.0, 0.0}), 0.0, 1e-14);
}

TEST(OracleHusimi, MatchesPhotonProbNormalization) {
  const auto params = make_state({2.0, 0.0}, 0.38);
  const auto fock = fock_coefficients(params, 1e-12, 8);
  double total = 0.0;
  for (std::size_t m = 0; m <= fock.n_max(); ++m) {
    total += oracle_pm(fock, static_cast<int>(m));
  }
  EXPECT_NEAR(total, 1.0, 1e-12);
}

TEST(Oracle, TruncationStable) {
  for (const auto& params : qsup_test::stratified_params(6)) {
    const auto base = fock_coefficients(params, 1e-12, 16);
    const auto doubled = fock_coefficients(params, 1e-12, 16 + base.n_max());
    EXPECT_NEAR(std::abs(oracle_moment(base, 2, 2) - oracle_moment(doubled, 2, 2)),
                0.0, 1e-10);
    EXPECT_NEAR(oracle_central_moment(base, Observable::Number, 4),
                oracle_central_moment(doubled, Observable::Number, 4), 1e-10);
    const auto beta = params.alpha + std::complex<double>{0.5, -0.2};
    EXPECT_NEAR(oracle_husimi(base, beta), oracle_husimi(doubled, beta), 1e-10);
  }
}

TEST(VerifyAll, CoherentPointAllPass) {
  const auto report = verify_all(make_state({1.0, 0.0}, 0.0), 1e-8);
  EXPECT_TRUE(report.all_pass);
  for (const auto& entry : report.entries) {
    if (entry.quantity.rfind("hoa", 0) == 0 || entry.quantity.rfind("hos", 0) == 0) {
      EXPECT_NEAR(entry.closed_form, 0.0, 1e-10) << entry.quantity;
    }
  }
}

TEST(VerifyAll, FockPointValues) {
  const auto report = verify_all(make_state({0.0, 0.0}, 1.0), 1e-8);
  EXPECT_TRUE(report.all_pass);
  bool saw_mandel = false;
  bool saw_degenerate_a3 = false;
  for (const auto& entry : report.entries) {
    if (entry.quantity == "mandel_q(2)") {
      saw_mandel = true;
      EXPECT_NEAR(entry.closed_form, -1.0, 1e-10);
    }
    if (entry.quantity == "agarwal_tara.degenerate_det") saw_degenerate_a3 = true;
  }
  EXPECT_TRUE(saw_mandel);
  EXPECT_TRUE(saw_degenerate_a3);
}

TEST(VerifyAll, StronglyNonclassicalPointAllPass) {
  EXPECT_TRUE(verify_all(make_state({1.1, 0.0}, 0.94), 1e-8).all_pass);
}

TEST(VerifyAll, RejectsImpossibleTolerance) {
  EXPECT_THROW(verify_all(make_state({1.0, 0.0}, 0.2), 1e-13), qsup::DomainError);
}

TEST(VerifyAll, ReportSerializesToJson) {
  const auto report = verify_all(make_state({1.0, 0.0}, 0.2), 1e-8);
  const auto doc = nlohmann::json::parse(report.to_json());
  EXPECT_TRUE(doc.at("all_pass").get<bool>());
  EXPECT_EQ(doc.at("entries").size(), report.entries.size());
  for (const auto& entry : doc.at("entries")) {
    EXPECT_TRUE(entry.contains("quantity"));
    EXPECT_TRUE(entry.contains("closed_form"));
    EXPECT_TRUE(entry.contains("oracle"));
    EXPECT_TRUE(entry.contains("abs_err"));
    EXPECT_TRUE(entry.contains("rel_err"));
    EXPECT_TRUE(entry.contains("pass"));
  }
}

}  // namespace
