#include "qseries/arithmetic.hpp"

#include <stdexcept>
#include <string>

namespace qseries {
namespace {

template <typename F>
void for_each_divisor(std::uint64_t n, F&& f) {
  for (std::uint64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    f(d);
    if (d * d != n) f(n / d);
  }
}

void require_positive(std::uint64_t n, const char* what) {
  if (n == 0) throw std::domain_error(std::string(what) + " is undefined at n = 0");
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t e, std::uint64_t m) {
  unsigned __int128 result = 1 % m, b = base % m;
  while (e != 0) {
    if (e & 1U) result = (result * b) % m;
    b = (b * b) % m;
    e >>= 1U;
  }
  return static_cast<std::uint64_t>(result);
}

}  // namespace

std::int64_t d_star(std::uint64_t n) {
  require_positive(n, "d*");
  std::int64_t sum = 0;
  for_each_divisor(n, [&](std::uint64_t d) {
    if (d % 4 != 0) sum += static_cast<std::int64_t>(d);
  });
  return sum;
}

std::int64_t sigma3_minus(std::uint64_t n) {
  require_positive(n, "sigma3-");
  std::int64_t sum = 0;
  for_each_divisor(n, [&](std::uint64_t d) {
    const auto cube = static_cast<std::int64_t>(d * d * d);
    sum += d % 2 ? -cube : cube;
  });
  return sum;
}

int chi(std::uint64_t n) {
  switch (n % 4) {
    case 1: return 1;
    case 3: return -1;
    default: return 0;
  }
}

std::int64_t r_formula(unsigned k, std::uint64_t n) {
  if (k != 2 && k != 4 && k != 6 && k != 8) {
    throw std::invalid_argument("r_formula: unsupported k = " + std::to_string(k));
  }
  if (n == 0) return 1;
  switch (k) {
    case 2: {
      std::int64_t s = 0;
      for_each_divisor(n, [&](std::uint64_t d) { s += chi(d); });
      return 4 * s;
    }
    case 4:
      return 8 * d_star(n);
    case 6: {
      std::int64_t s = 0;
      for_each_divisor(n, [&](std::uint64_t d) {
        const auto sq = static_cast<std::int64_t>(d * d);
        s += 16 * chi(n / d) * sq - 4 * chi(d) * sq;
      });
      return s;
    }
    default:
      return 16 * (n % 2 ? -1 : 1) * sigma3_minus(n);
  }
}

std::vector<std::int64_t> r_oracle_table(unsigned k, std::uint64_t n_max) {
  if (k == 0 || k > kMaxOracleSquares || n_max > kMaxOracleIndex) {
    throw std::out_of_range("r_oracle: k must be in 1..8 and n at most 5000");
  }
  // squares[m] = number of integers x with x^2 = m.
  std::vector<std::int64_t> squares(n_max + 1, 0);
  for (std::uint64_t x = 0; x * x <= n_max; ++x) squares[x * x] += x == 0 ? 1 : 2;

  std::vector<std::int64_t> counts(n_max + 1, 0);
  counts[0] = 1;
  for (unsigned step = 0; step < k; ++step) {
    std::vector<std::int64_t> next(n_max + 1, 0);
    for (std::uint64_t x = 0; x * x <= n_max; ++x) {
      const std::uint64_t sq = x * x;
      const std::int64_t mult = x == 0 ? 1 : 2;
      for (std::uint64_t m = 0; m + sq <= n_max; ++m) next[m + sq] += mult * counts[m];
    }
    counts = std::move(next);
  }
  return counts;
}

std::int64_t r_oracle(unsigned k, std::uint64_t n) { return r_oracle_table(k, n)[n]; }

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

std::vector<std::uint64_t> primes_up_to(std::uint64_t limit) {
  std::vector<std::uint64_t> primes;
  if (limit < 2) return primes;
  std::vector<bool> composite(limit + 1, false);
  for (std::uint64_t i = 2; i <= limit; ++i) {
    if (composite[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= limit; j += i) composite[j] = true;
  }
  return primes;
}

int legendre(std::int64_t a, std::uint64_t p) {
  if (p == 2 || !is_prime(p)) {
    throw std::invalid_argument("legendre: " + std::to_string(p) + " is not an odd prime");
  }
  std::int64_t r = a % static_cast<std::int64_t>(p);
  if (r < 0) r += static_cast<std::int64_t>(p);
  if (r == 0) return 0;
  const std::uint64_t e = pow_mod(static_cast<std::uint64_t>(r), (p - 1) / 2, p);
  return e == 1 ? 1 : -1;
}

}  // namespace qseries
