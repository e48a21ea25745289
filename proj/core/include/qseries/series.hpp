#ifndef QSERIES_SERIES_HPP
#define QSERIES_SERIES_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace qseries {

using BigInt = mpz_class;

/// Raised when two operands live in different coefficient rings.
class RingMismatch : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when an inversion needs a unit constant term and does not get one.
class NotInvertible : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Either the integers, or the integers modulo m (2 <= m < 2^63).
class CoefficientRing {
 public:
  static CoefficientRing integers() noexcept { return CoefficientRing{0}; }
  static CoefficientRing modulo(std::uint64_t m);

  bool is_exact() const noexcept { return modulus_ == 0; }
  /// Zero for the exact ring.
  std::uint64_t modulus() const noexcept { return modulus_; }

  std::string to_string() const;

  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;

 private:
  explicit CoefficientRing(std::uint64_t m) noexcept : modulus_(m) {}
  std::uint64_t modulus_;
};

/// Reduces an integer to its least nonnegative residue mod m.
std::uint64_t residue(const BigInt& value, std::uint64_t m);
std::uint64_t residue(std::int64_t value, std::uint64_t m);

/// Truncated power series sum_{n=0}^{order} c_n q^n.
///
/// The truncation order is inclusive, so a series always stores order + 1
/// coefficients. Exact series hold GMP integers; modular series hold least
/// nonnegative residues in machine words. Values are immutable once built;
/// every operation below returns a fresh series.
class Series {
 public:
  using ExactCoeffs = std::vector<BigInt>;
  using ModularCoeffs = std::vector<std::uint64_t>;

  /// The zero series.
  Series(CoefficientRing ring, std::size_t order);
  /// Takes ownership of an exact coefficient vector; length fixes the order.
  explicit Series(ExactCoeffs coeffs);
  /// Takes ownership of residues mod m; every entry must already be in [0, m).
  Series(std::uint64_t m, ModularCoeffs residues);

  static Series one(CoefficientRing ring, std::size_t order);
  /// q^k truncated (zero series when k > order).
  static Series monomial(CoefficientRing ring, std::size_t order, std::size_t k);

  const CoefficientRing& ring() const noexcept { return ring_; }
  std::size_t order() const noexcept { return order_; }

  /// Coefficient of q^n as an integer (the least nonnegative residue in a
  /// modular ring).
  BigInt coefficient(std::size_t n) const;
  /// Coefficient of q^n reduced mod m; works for either ring.
  std::uint64_t coefficient_mod(std::size_t n, std::uint64_t m) const;

  /// Exact storage. Throws std::logic_error on a modular series.
  std::span<const BigInt> exact() const;
  /// Modular storage. Throws std::logic_error on an exact series.
  std::span<const std::uint64_t> residues() const;

  bool is_zero() const;
  std::size_t nonzero_count() const;

  friend bool operator==(const Series& a, const Series& b);

 private:
  CoefficientRing ring_;
  std::size_t order_;
  std::variant<ExactCoeffs, ModularCoeffs> coeffs_;
};

/// Builds a series from integer coefficients; missing trailing entries are
/// zero. Throws std::invalid_argument when coeffs is longer than order + 1.
Series series_from_coeffs(CoefficientRing ring, std::span<const BigInt> coeffs,
                          std::size_t order);
Series series_from_coeffs(CoefficientRing ring,
                          std::initializer_list<std::int64_t> coeffs,
                          std::size_t order);

// All binary operations truncate to the smaller of the two orders.
Series add(const Series& a, const Series& b);
Series sub(const Series& a, const Series& b);
Series negate(const Series& a);
Series scale(const Series& a, const BigInt& c);

/// Cauchy product. The sparser operand drives the loop, so multiplying by a
/// lacunary factor such as (q;q)_inf costs O(N * nnz) rather than O(N^2).
Series mul(const Series& a, const Series& b);

/// a / b, computed by the forward recurrence over the nonzero terms of b.
/// Throws NotInvertible unless b's constant term is a unit.
Series divide(const Series& a, const Series& b);
Series invert(const Series& a);

/// Binary powering; negative exponents invert the positive power.
Series pow(const Series& a, std::int64_t e);

/// sum c_n q^{k n}, truncated at a.order().
Series substitute_power(const Series& a, std::size_t k);
/// sum c_n (-q)^n.
Series negate_variable(const Series& a);
/// q^t * a, truncated at a.order().
Series shift(const Series& a, std::size_t t);
/// Same coefficients, new (smaller or larger) truncation order; growing pads
/// with zeros.
Series truncate(const Series& a, std::size_t order);

/// sum c_{k n + r} q^n with order floor((a.order - r) / k).
/// Throws std::invalid_argument when r >= k or r > a.order().
Series extract_progression(const Series& a, std::size_t k, std::size_t r);

/// Reduces an exact series into Z/mZ. Throws std::invalid_argument if a is
/// already modular.
Series reduce_mod(const Series& a, std::uint64_t m);

/// True iff a_n == b_n (mod m) for every 0 <= n <= bound.
/// Throws std::invalid_argument when bound exceeds either order.
bool congruent_up_to(const Series& a, const Series& b, std::uint64_t m,
                     std::size_t bound);

inline Series operator+(const Series& a, const Series& b) { return add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return mul(a, b); }

}  // namespace qseries

#endif  // QSERIES_SERIES_HPP
