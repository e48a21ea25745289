#ifndef QSERIES_ARITHMETIC_HPP
#define QSERIES_ARITHMETIC_HPP

#include <cstdint>
#include <vector>

namespace qseries {

// Pointwise arithmetic functions. Divisor sums scan divisor pairs up to sqrt(n).

/// sum of d | n with 4 not dividing d. Throws std::domain_error for n = 0.
std::int64_t d_star(std::uint64_t n);

/// sum_{d | n} (-1)^d d^3. Throws std::domain_error for n = 0.
std::int64_t sigma3_minus(std::uint64_t n);

/// 1 for n = 1 (mod 4), -1 for n = 3 (mod 4), 0 otherwise.
int chi(std::uint64_t n);

/// r_k(n) from its closed divisor-sum formula, k in {2, 4, 6, 8}.
/// r_formula(k, 0) is 1. Throws std::invalid_argument for other k.
std::int64_t r_formula(unsigned k, std::uint64_t n);

inline constexpr unsigned kMaxOracleSquares = 8;
inline constexpr std::uint64_t kMaxOracleIndex = 5000;

/// r_k(0..n_max) by k-fold convolution of the one-dimensional square counts.
/// Throws std::out_of_range above k = 8 or n_max = 5000.
std::vector<std::int64_t> r_oracle_table(unsigned k, std::uint64_t n_max);

/// Single value of the lattice count.
std::int64_t r_oracle(unsigned k, std::uint64_t n);

bool is_prime(std::uint64_t n);
std::vector<std::uint64_t> primes_up_to(std::uint64_t limit);

/// Legendre symbol (a | p) by Euler's criterion.
/// Throws std::invalid_argument unless p is an odd prime.
int legendre(std::int64_t a, std::uint64_t p);

}  // namespace qseries

#endif  // QSERIES_ARITHMETIC_HPP
