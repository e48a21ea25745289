#include <numeric>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qseries/arithmetic.hpp"

using namespace qseries;

TEST(ArithmeticFunctions, Examples) {
  EXPECT_EQ(d_star(1), 1);
  EXPECT_EQ(d_star(4), 3);
  EXPECT_EQ(d_star(6), 12);
  EXPECT_EQ(sigma3_minus(1), -1);
  EXPECT_EQ(sigma3_minus(2), 7);
  EXPECT_EQ(sigma3_minus(4), 71);
  EXPECT_EQ(chi(1), 1);
  EXPECT_EQ(chi(3), -1);
  EXPECT_EQ(chi(2), 0);
  EXPECT_THROW(d_star(0), std::domain_error);
  EXPECT_THROW(sigma3_minus(0), std::domain_error);
}

TEST(ArithmeticFunctions, MatchDivisorScan) {
  for (std::uint64_t n = 1; n <= 500; ++n) {
    EXPECT_EQ(d_star(n), oracle::d_star(n)) << n;
    EXPECT_EQ(sigma3_minus(n), oracle::sigma3_minus(n)) << n;
  }
}

TEST(ArithmeticFunctions, Multiplicative) {
  for (std::uint64_t m = 1; m <= 60; ++m) {
    for (std::uint64_t n = 1; n <= 60; ++n) {
      if (std::gcd(m, n) != 1) continue;
      EXPECT_EQ(d_star(m * n), d_star(m) * d_star(n));
      EXPECT_EQ(sigma3_minus(m * n), -sigma3_minus(m) * sigma3_minus(n));
    }
  }
}

TEST(SquaresFormula, Examples) {
  EXPECT_EQ(r_formula(4, 2), 24);
  EXPECT_EQ(r_formula(2, 5), 8);
  EXPECT_EQ(r_formula(6, 1), 12);
  EXPECT_EQ(r_formula(8, 3), 448);
  EXPECT_EQ(r_formula(8, 4), 1136);
  EXPECT_EQ(r_formula(4, 0), 1);
  EXPECT_THROW(r_formula(3, 4), std::invalid_argument);
}

TEST(SquaresOracle, Examples) {
  EXPECT_EQ(r_oracle(4, 0), 1);
  EXPECT_EQ(r_oracle(4, 1), 8);
  EXPECT_EQ(r_oracle(8, 2), 112);
  EXPECT_THROW(r_oracle(9, 2), std::out_of_range);
}

TEST(SquaresOracle, MatchesTupleRecursion) {
  for (unsigned k : {1u, 2u, 3u, 4u, 6u, 8u}) {
    auto table = r_oracle_table(k, 40);
    for (std::int64_t n = 0; n <= 40; ++n) EXPECT_EQ(table[n], oracle::lattice_count(k, n));
  }
}

TEST(SquaresFormula, MatchesOracle) {
  for (unsigned k : {2u, 4u, 6u, 8u}) {
    auto table = r_oracle_table(k, 600);
    for (std::uint64_t n = 0; n <= 600; ++n) EXPECT_EQ(r_formula(k, n), table[n]) << k << " " << n;
  }
}

TEST(Primes, Basics) {
  EXPECT_EQ(primes_up_to(20), (std::vector<std::uint64_t>{2, 3, 5, 7, 11, 13, 17, 19}));
  EXPECT_TRUE(is_prime(1000003));
  EXPECT_FALSE(is_prime(1));
  EXPECT_FALSE(is_prime(561));
}

TEST(Primes, Legendre) {
  EXPECT_EQ(legendre(-3, 5), -1);
  EXPECT_EQ(legendre(1, 7), 1);
  EXPECT_EQ(legendre(4, 5), 1);
  EXPECT_EQ(legendre(10, 5), 0);
  for (std::uint64_t p : {3, 5, 7, 11, 13}) {
    for (std::int64_t a = 1; a < static_cast<std::int64_t>(p); ++a) {
      bool square = false;
      for (std::uint64_t x = 1; x < p; ++x) square = square || (x * x) % p == static_cast<std::uint64_t>(a);
      EXPECT_EQ(legendre(a, p), square ? 1 : -1);
    }
  }
}
