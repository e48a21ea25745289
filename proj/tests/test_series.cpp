#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"
#include "qseries/eta_theta.hpp"
#include "qseries/series.hpp"

using namespace qseries;
using oracle::coeffs;
using oracle::ints;

namespace {

const CoefficientRing Z = CoefficientRing::integers();
const CoefficientRing F5 = CoefficientRing::modulo(5);

Series random_series(std::mt19937_64& rng, CoefficientRing ring, std::size_t order,
                     bool unit_constant = false) {
  std::uniform_int_distribution<std::int64_t> dist(-50, 50);
  std::vector<BigInt> c(order + 1);
  for (auto& v : c) v = static_cast<long>(dist(rng));
  if (unit_constant) c[0] = 1;
  return series_from_coeffs(ring, c, order);
}

}  // namespace

TEST(SeriesConstruction, Examples) {
  EXPECT_EQ(coeffs(series_from_coeffs(Z, {1}, 3)), ints({1, 0, 0, 0}));
  EXPECT_EQ(coeffs(series_from_coeffs(F5, {7, -1}, 2)), ints({2, 4, 0}));
  EXPECT_EQ(coeffs(series_from_coeffs(Z, {1, 2, 4, 8, 14}, 4)),
            std::vector<mpz_class>(oracle::overpartitions(0, 4)));
}

TEST(SeriesConstruction, RejectsTooManyCoefficients) {
  EXPECT_THROW(series_from_coeffs(Z, {1, 2, 3}, 1), std::invalid_argument);
}

TEST(SeriesRing, ModulusRange) {
  EXPECT_THROW(CoefficientRing::modulo(1), std::invalid_argument);
  EXPECT_THROW(CoefficientRing::modulo(std::uint64_t{1} << 63), std::invalid_argument);
  EXPECT_NO_THROW(CoefficientRing::modulo((std::uint64_t{1} << 63) - 1));
}

TEST(SeriesArithmetic, AddSub) {
  auto a = series_from_coeffs(Z, {1, 1}, 1);
  auto b = series_from_coeffs(Z, {1, -1}, 1);
  EXPECT_EQ(coeffs(add(a, b)), ints({2, 0}));
  EXPECT_TRUE(sub(a, a).is_zero());
  EXPECT_EQ(coeffs(add(phi(1, Z, 4), phi(-1, Z, 4))), ints({2, 0, 0, 0, 4}));
}

TEST(SeriesArithmetic, RingMismatchThrows) {
  auto a = Series::one(Z, 3);
  auto b = Series::one(F5, 3);
  EXPECT_THROW(add(a, b), RingMismatch);
  EXPECT_THROW(mul(a, b), RingMismatch);
}

TEST(SeriesArithmetic, Multiply) {
  auto a = series_from_coeffs(Z, {1, 1}, 2);
  auto b = series_from_coeffs(Z, {1, -1}, 2);
  EXPECT_EQ(coeffs(mul(a, b)), ints({1, 0, -1}));
  auto e1 = euler_product(1, Z, 10);
  EXPECT_EQ(coeffs(mul(e1, invert(e1))), coeffs(Series::one(Z, 10)));
  auto lhs = mul(pow(euler_product(1, Z, 9), 2), invert(euler_product(2, Z, 9)));
  EXPECT_EQ(coeffs(lhs), oracle::phi(-1, 9));
}

TEST(SeriesArithmetic, Invert) {
  EXPECT_EQ(coeffs(invert(series_from_coeffs(Z, {1, -1}, 4))), ints({1, 1, 1, 1, 1}));
  EXPECT_EQ(coeffs(invert(euler_product(1, Z, 5))), oracle::partitions(0, 5));
  // (2 + q)(3 + c q) == 1 (mod q^2) forces 2c + 3 == 0, so c == 1 mod 5.
  EXPECT_EQ(coeffs(invert(series_from_coeffs(F5, {2, 1}, 1))), ints({3, 1}));
}

TEST(SeriesArithmetic, InvertRequiresUnit) {
  EXPECT_THROW(invert(series_from_coeffs(Z, {2, 1}, 3)), NotInvertible);
  EXPECT_THROW(invert(series_from_coeffs(F5, {0, 1}, 3)), NotInvertible);
  EXPECT_THROW(invert(series_from_coeffs(CoefficientRing::modulo(6), {3, 1}, 3)), NotInvertible);
  EXPECT_EQ(coeffs(invert(series_from_coeffs(Z, {-1}, 2))), ints({-1, 0, 0}));
}

TEST(SeriesArithmetic, Pow) {
  auto s = series_from_coeffs(Z, {3, 1, 4}, 5);
  EXPECT_EQ(coeffs(pow(s, 0)), coeffs(Series::one(Z, 5)));
  EXPECT_EQ(coeffs(pow(series_from_coeffs(Z, {1, 1}, 2), 2)), ints({1, 2, 1}));
  EXPECT_EQ(pow(euler_product(1, F5, 10), 5), euler_product(5, F5, 10));
  EXPECT_EQ(pow(euler_product(1, Z, 12), -3), pow(invert(euler_product(1, Z, 12)), 3));
}

TEST(SeriesTransforms, Substitute) {
  EXPECT_EQ(coeffs(substitute_power(series_from_coeffs(Z, {1, 1}, 5), 3)),
            ints({1, 0, 0, 1, 0, 0}));
  auto p = phi(-1, Z, 25);
  auto scaled = coeffs(substitute_power(p, 5));
  auto small = oracle::phi(-1, 5);
  for (std::size_t n = 0; n <= 25; ++n) EXPECT_EQ(scaled[n], n % 5 ? mpz_class(0) : small[n / 5]);
  EXPECT_EQ(substitute_power(p, 1), p);
}

TEST(SeriesTransforms, Extract) {
  auto odd = extract_progression(phi(-1, Z, 9), 2, 1);
  EXPECT_EQ(coeffs(odd), ints({-2, 0, 0, 0, -2}));
  auto s = phi(1, Z, 30);
  EXPECT_EQ(extract_progression(s, 1, 0), s);
  EXPECT_THROW(extract_progression(s, 3, 3), std::invalid_argument);
}

TEST(SeriesTransforms, ShiftTruncateNegateVariable) {
  auto s = series_from_coeffs(Z, {1, 2, 3}, 2);
  EXPECT_EQ(coeffs(shift(s, 2)), ints({0, 0, 1}));
  EXPECT_EQ(coeffs(truncate(s, 4)), ints({1, 2, 3, 0, 0}));
  EXPECT_EQ(coeffs(truncate(s, 1)), ints({1, 2}));
  EXPECT_EQ(coeffs(negate_variable(s)), ints({1, -2, 3}));
}

TEST(SeriesReduce, Examples) {
  EXPECT_EQ(coeffs(reduce_mod(series_from_coeffs(Z, {1, -2, 0, 0, 2}, 4), 5)),
            ints({1, 3, 0, 0, 2}));
  EXPECT_TRUE(reduce_mod(Series(Z, 7), 11).is_zero());
  EXPECT_EQ(coeffs(reduce_mod(series_from_coeffs(Z, {1, 2, 4, 8, 14}, 4), 5)),
            ints({1, 2, 4, 3, 4}));
  EXPECT_THROW(reduce_mod(Series::one(F5, 2), 5), std::invalid_argument);
}

TEST(SeriesReduce, Congruent) {
  auto s = euler_product(1, Z, 100);
  EXPECT_TRUE(congruent_up_to(s, s, 7, 100));
  EXPECT_TRUE(congruent_up_to(pow(s, 5), euler_product(5, Z, 100), 5, 100));
  EXPECT_FALSE(congruent_up_to(series_from_coeffs(Z, {1, 1}, 1),
                               series_from_coeffs(Z, {1, -1}, 1), 5, 1));
  EXPECT_THROW(congruent_up_to(s, s, 5, 101), std::invalid_argument);
}

// Properties over random inputs.

TEST(SeriesProperties, RingLaws) {
  std::mt19937_64 rng(7);
  for (CoefficientRing ring : {Z, CoefficientRing::modulo(97), CoefficientRing::modulo(1ull << 62)}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto a = random_series(rng, ring, 30);
      auto b = random_series(rng, ring, 30);
      auto c = random_series(rng, ring, 30);
      EXPECT_EQ(a + b, b + a);
      EXPECT_EQ(a * b, b * a);
      EXPECT_EQ((a * b) * c, a * (b * c));
      EXPECT_EQ(a * (b + c), a * b + a * c);
      EXPECT_EQ(a - a, Series(ring, 30));
    }
  }
}

TEST(SeriesProperties, InverseAndDivision) {
  std::mt19937_64 rng(11);
  for (CoefficientRing ring : {Z, CoefficientRing::modulo(101)}) {
    for (int trial = 0; trial < 20; ++trial) {
      auto u = random_series(rng, ring, 40, true);
      auto a = random_series(rng, ring, 40);
      EXPECT_EQ(u * invert(u), Series::one(ring, 40));
      EXPECT_EQ(divide(a, u) * u, a);
    }
  }
}

TEST(SeriesProperties, DivisionAcrossBlocks) {
  // Long enough to exercise the blocked recurrence path.
  const std::size_t order = 5000;
  auto e1 = euler_product(1, Z, order);
  EXPECT_EQ(coeffs(invert(e1)), oracle::partitions(0, order));
  auto m = CoefficientRing::modulo(1000000007);
  auto e1m = euler_product(1, m, order);
  EXPECT_EQ(invert(e1m), reduce_mod(invert(e1), 1000000007));
  auto neg = negate(euler_product(3, Z, order));
  EXPECT_EQ(divide(Series::one(Z, order), neg) * neg, Series::one(Z, order));
}

TEST(SeriesProperties, ProgressionReconstruction) {
  std::mt19937_64 rng(13);
  const std::size_t order = 59;
  auto s = random_series(rng, Z, order);
  for (std::size_t k : {1, 2, 3, 5, 6}) {
    Series rebuilt(Z, order);
    for (std::size_t r = 0; r < k; ++r) {
      auto part = extract_progression(s, k, r);
      rebuilt = rebuilt + shift(substitute_power(truncate(part, order), k), r);
    }
    EXPECT_EQ(rebuilt, s) << "k = " << k;
  }
}

TEST(SeriesProperties, ReductionIsHomomorphism) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    auto a = random_series(rng, Z, 25);
    auto u = random_series(rng, Z, 25, true);
    EXPECT_EQ(reduce_mod(a * u, 7), reduce_mod(a, 7) * reduce_mod(u, 7));
    EXPECT_EQ(reduce_mod(a + u, 7), reduce_mod(a, 7) + reduce_mod(u, 7));
    EXPECT_EQ(reduce_mod(divide(a, u), 7), divide(reduce_mod(a, 7), reduce_mod(u, 7)));
  }
}

TEST(SeriesProperties, PowAdditivity) {
  std::mt19937_64 rng(19);
  auto u = random_series(rng, Z, 20, true);
  for (std::int64_t i : {-3, -1, 0, 2, 5}) {
    for (std::int64_t j : {-2, 0, 1, 3}) EXPECT_EQ(pow(u, i + j), pow(u, i) * pow(u, j));
  }
}
