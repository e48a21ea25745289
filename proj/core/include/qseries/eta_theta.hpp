#ifndef QSERIES_ETA_THETA_HPP
#define QSERIES_ETA_THETA_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "qseries/series.hpp"

namespace qseries {

/// One factor (q^scale; q^scale)_inf^exponent.
struct EtaFactor {
  std::uint64_t scale = 1;
  std::int64_t exponent = 0;

  friend bool operator==(const EtaFactor&, const EtaFactor&) = default;
};

/// q^prefactor * prod (q^a; q^a)_inf^e, described as data.
class EtaQuotientSpec {
 public:
  EtaQuotientSpec() = default;
  /// Merges duplicate scales (summing exponents), drops zero exponents and
  /// sorts by scale. Throws std::invalid_argument on a zero scale.
  EtaQuotientSpec(std::uint64_t prefactor, std::vector<EtaFactor> factors);

  std::uint64_t prefactor() const noexcept { return prefactor_; }
  const std::vector<EtaFactor>& factors() const noexcept { return factors_; }

  /// Every exponent negated, same prefactor.
  EtaQuotientSpec inverse_factors() const;

  /// Renders in the CLI grammar, e.g. "q^1 1^-2 2^1".
  std::string to_string() const;

  friend bool operator==(const EtaQuotientSpec&, const EtaQuotientSpec&) = default;

 private:
  std::uint64_t prefactor_ = 0;
  std::vector<EtaFactor> factors_;
};

/// Parse failure with the offending token and its byte offset.
class EtaSpecParseError : public std::invalid_argument {
 public:
  EtaSpecParseError(std::string token, std::size_t position, const std::string& why);

  const std::string& token() const noexcept { return token_; }
  std::size_t position() const noexcept { return position_; }

 private:
  std::string token_;
  std::size_t position_;
};

/// Grammar: an optional leading `q^t` token, then whitespace separated
/// `scale^exponent` tokens, e.g. "5^2 2^1 1^-2 10^-1".
EtaQuotientSpec parse_eta_spec(std::string_view text);

/// f(a_sign q^a_power, b_sign q^b_power) in Ramanujan's notation.
struct ThetaSpec {
  int a_sign = 1;
  std::uint64_t a_power = 1;
  int b_sign = 1;
  std::uint64_t b_power = 1;

  /// Throws std::invalid_argument unless signs are +-1 and a_power + b_power >= 1.
  void validate() const;
};

/// (q^s; q^s)_inf via the pentagonal number theorem; O(sqrt(order / s)) terms.
Series euler_product(std::uint64_t scale, CoefficientRing ring, std::size_t order);

/// (-q^s; q^s)_inf = prod_{n>=1} (1 + q^{s n}), expanded factor by factor.
Series plus_product(std::uint64_t scale, CoefficientRing ring, std::size_t order);

/// Applies each factor of the quotient with sparse multiply/divide passes.
Series eta_quotient(const EtaQuotientSpec& spec, CoefficientRing ring, std::size_t order);

/// phi(sign * q) = 1 + 2 sum_{n>=1} sign^{n^2} q^{n^2}.
Series phi(int sign, CoefficientRing ring, std::size_t order);

/// Bilateral sum form sum_n a^{n(n+1)/2} b^{n(n-1)/2}.
Series theta_f_series(const ThetaSpec& spec, CoefficientRing ring, std::size_t order);

/// Jacobi triple product form (-a; ab)_inf (-b; ab)_inf (ab; ab)_inf.
/// Only positive signs are supported.
Series theta_f_product(const ThetaSpec& spec, CoefficientRing ring, std::size_t order);

/// phi(-q) - [phi(-q^25) - 2q M1(-q^5) + 2q^4 M2(-q^5)] with M1(q) = f(q^3, q^7)
/// and M2(q) = f(q, q^9). Identically zero; returned for checking.
Series phi_five_dissection_residual(CoefficientRing ring, std::size_t order);

}  // namespace qseries

#endif  // QSERIES_ETA_THETA_HPP
