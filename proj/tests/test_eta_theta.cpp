#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qseries/eta_theta.hpp"

using namespace qseries;
using oracle::coeffs;
using oracle::ints;

namespace {
const CoefficientRing Z = CoefficientRing::integers();
}

TEST(EulerProduct, Examples) {
  EXPECT_EQ(coeffs(euler_product(1, Z, 7)), ints({1, -1, -1, 0, 0, 1, 0, 1}));
  EXPECT_EQ(coeffs(euler_product(2, Z, 4)), ints({1, 0, -1, 0, -1}));
  EXPECT_EQ(coeffs(euler_product(9, Z, 0)), ints({1}));
}

TEST(EulerProduct, MatchesNaiveProduct) {
  for (std::size_t s : {1, 2, 3, 7, 25}) {
    EXPECT_EQ(coeffs(euler_product(s, Z, 800)), oracle::euler_product(s, 800)) << "scale " << s;
  }
}

TEST(EulerProduct, PlusProduct) {
  // (-q;q) = (q^2;q^2) / (q;q)
  auto expected = divide(euler_product(2, Z, 300), euler_product(1, Z, 300));
  EXPECT_EQ(plus_product(1, Z, 300), expected);
  EXPECT_EQ(plus_product(3, Z, 300), substitute_power(expected, 3));
}

TEST(EtaQuotient, Examples) {
  EXPECT_EQ(coeffs(eta_quotient({0, {{1, -1}}}, Z, 5)), ints({1, 1, 2, 3, 5, 7}));
  EXPECT_EQ(coeffs(eta_quotient({0, {{2, 1}, {1, -2}}}, Z, 4)), ints({1, 2, 4, 8, 14}));
  EXPECT_EQ(coeffs(eta_quotient({0, {{5, 2}, {2, 1}, {1, -2}, {10, -1}}}, Z, 4)),
            ints({1, 2, 4, 8, 14}));
}

TEST(EtaQuotient, Prefactor) {
  EXPECT_EQ(coeffs(eta_quotient({1, {{1, 1}}}, Z, 3)), ints({0, 1, -1, -1}));
}

TEST(EtaQuotient, SpecNormalisation) {
  EtaQuotientSpec spec(0, {{2, 1}, {1, -1}, {1, -1}, {3, 0}});
  EXPECT_EQ(spec, EtaQuotientSpec(0, {{1, -2}, {2, 1}}));
  EXPECT_EQ(spec.inverse_factors(), EtaQuotientSpec(0, {{1, 2}, {2, -1}}));
  EXPECT_THROW(EtaQuotientSpec(0, {{0, 1}}), std::invalid_argument);
}

TEST(EtaSpecGrammar, Parses) {
  EXPECT_EQ(parse_eta_spec("5^2 2^1 1^-2 10^-1"),
            EtaQuotientSpec(0, {{5, 2}, {2, 1}, {1, -2}, {10, -1}}));
  EXPECT_EQ(parse_eta_spec("q^1 1^1"), EtaQuotientSpec(1, {{1, 1}}));
  EXPECT_EQ(parse_eta_spec("  1^-1  "), EtaQuotientSpec(0, {{1, -1}}));
}

TEST(EtaSpecGrammar, ReportsOffendingToken) {
  try {
    parse_eta_spec("2^1 1^x");
    FAIL() << "expected a parse error";
  } catch (const EtaSpecParseError& e) {
    EXPECT_EQ(e.token(), "1^x");
    EXPECT_EQ(e.position(), 4u);
  }
  EXPECT_THROW(parse_eta_spec("2^1 q^3"), EtaSpecParseError);
  EXPECT_THROW(parse_eta_spec("0^1"), EtaSpecParseError);
  EXPECT_THROW(parse_eta_spec("2"), EtaSpecParseError);
}

TEST(Theta, Phi) {
  EXPECT_EQ(coeffs(phi(1, Z, 9)), ints({1, 2, 0, 0, 2, 0, 0, 0, 0, 2}));
  EXPECT_EQ(coeffs(phi(-1, Z, 9)), ints({1, -2, 0, 0, 2, 0, 0, 0, 0, -2}));
  EXPECT_EQ(coeffs(phi(-1, Z, 2000)), oracle::phi(-1, 2000));
}

TEST(Theta, BilateralSum) {
  EXPECT_EQ(theta_f_series({1, 1, 1, 1}, Z, 200), phi(1, Z, 200));
  // Exponents 3 n(n+1)/2 + 7 n(n-1)/2 = 5n^2 - 2n for n = 0, 1, -1, 2, -2.
  auto f37 = coeffs(theta_f_series({1, 3, 1, 7}, Z, 24));
  for (std::size_t n = 0; n <= 24; ++n) {
    const bool hit = n == 0 || n == 3 || n == 7 || n == 16 || n == 24;
    EXPECT_EQ(f37[n], hit ? 1 : 0) << n;
  }
  // 5n^2 - 4n: 0, 1, 9, 12, 28.
  auto f19 = coeffs(theta_f_series({1, 1, 1, 9}, Z, 28));
  for (std::size_t n = 0; n <= 28; ++n) {
    const bool hit = n == 0 || n == 1 || n == 9 || n == 12 || n == 28;
    EXPECT_EQ(f19[n], hit ? 1 : 0) << n;
  }
  // f(-q, -q) == phi(-q)
  EXPECT_EQ(theta_f_series({-1, 1, -1, 1}, Z, 100), phi(-1, Z, 100));
}

TEST(Theta, TripleProduct) {
  EXPECT_EQ(coeffs(theta_f_product({1, 1, 1, 1}, Z, 4)), ints({1, 2, 0, 0, 2}));
  for (auto spec : {ThetaSpec{1, 3, 1, 7}, ThetaSpec{1, 1, 1, 9}, ThetaSpec{1, 2, 1, 3},
                    ThetaSpec{1, 1, 1, 4}}) {
    EXPECT_EQ(theta_f_product(spec, Z, 1500), theta_f_series(spec, Z, 1500));
  }
  EXPECT_THROW(theta_f_product({-1, 1, 1, 2}, Z, 10), std::invalid_argument);
  EXPECT_THROW(theta_f_series({2, 1, 1, 1}, Z, 10), std::invalid_argument);
}

TEST(Theta, FiveDissectionResidual) {
  for (std::size_t order : {4, 100, 1000}) {
    EXPECT_TRUE(phi_five_dissection_residual(Z, order).is_zero()) << order;
  }
}
