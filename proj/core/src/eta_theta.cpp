#include "qseries/eta_theta.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <map>

namespace qseries {
namespace {

Series from_exact(Series::ExactCoeffs coeffs, CoefficientRing ring) {
  Series s(std::move(coeffs));
  return ring.is_exact() ? s : reduce_mod(s, ring.modulus());
}

// In-place multiplication by (1 + q^e).
void times_one_plus(Series::ExactCoeffs& c, std::size_t e) {
  if (e == 0) {
    for (auto& v : c) v *= 2;
    return;
  }
  for (std::size_t k = c.size(); k-- > e;) c[k] += c[k - e];
}

std::int64_t parse_int(std::string_view text, const std::string& token,
                       std::size_t position) {
  std::int64_t value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (!text.empty() && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (text.empty() || ec != std::errc{} || ptr != last) {
    throw EtaSpecParseError(token, position, "expected an integer, got '" +
                                                 std::string(text) + "'");
  }
  return value;
}

}  // namespace

EtaQuotientSpec::EtaQuotientSpec(std::uint64_t prefactor,
                                 std::vector<EtaFactor> factors)
    : prefactor_(prefactor) {
  std::map<std::uint64_t, std::int64_t> merged;
  for (const auto& f : factors) {
    if (f.scale == 0) throw std::invalid_argument("eta factor scale must be positive");
    merged[f.scale] += f.exponent;
  }
  for (const auto& [scale, exponent] : merged) {
    if (exponent != 0) factors_.push_back({scale, exponent});
  }
}

EtaQuotientSpec EtaQuotientSpec::inverse_factors() const {
  std::vector<EtaFactor> flipped = factors_;
  for (auto& f : flipped) f.exponent = -f.exponent;
  return EtaQuotientSpec(prefactor_, std::move(flipped));
}

std::string EtaQuotientSpec::to_string() const {
  std::string out;
  if (prefactor_ != 0) out = "q^" + std::to_string(prefactor_);
  for (const auto& f : factors_) {
    if (!out.empty()) out += ' ';
    out += std::to_string(f.scale) + '^' + std::to_string(f.exponent);
  }
  return out.empty() ? "1" : out;
}

EtaSpecParseError::EtaSpecParseError(std::string token, std::size_t position,
                                     const std::string& why)
    : std::invalid_argument("bad token '" + token + "' at position " +
                            std::to_string(position) + ": " + why),
      token_(std::move(token)),
      position_(position) {}

EtaQuotientSpec parse_eta_spec(std::string_view text) {
  std::uint64_t prefactor = 0;
  std::vector<EtaFactor> factors;
  bool first_token = true;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    while (i < text.size() && !std::isspace(static_cast<unsigned char>(text[i]))) ++i;
    const std::string token(text.substr(start, i - start));
    const auto caret = token.find('^');
    if (caret == std::string::npos) {
      throw EtaSpecParseError(token, start, "expected base^exponent");
    }
    const std::string_view base = std::string_view(token).substr(0, caret);
    const std::string_view exponent = std::string_view(token).substr(caret + 1);
    if (base == "q") {
      if (!first_token) {
        throw EtaSpecParseError(token, start, "q^t must be the first token");
      }
      const auto t = parse_int(exponent, token, start);
      if (t < 0) throw EtaSpecParseError(token, start, "q power must be nonnegative");
      prefactor = static_cast<std::uint64_t>(t);
    } else {
      const auto scale = parse_int(base, token, start);
      if (scale < 1) throw EtaSpecParseError(token, start, "scale must be positive");
      const auto e = parse_int(exponent, token, start);
      if (e == 0) throw EtaSpecParseError(token, start, "exponent must be nonzero");
      factors.push_back({static_cast<std::uint64_t>(scale), e});
    }
    first_token = false;
  }
  if (first_token) throw EtaSpecParseError("", 0, "empty eta quotient");
  return EtaQuotientSpec(prefactor, std::move(factors));
}

void ThetaSpec::validate() const {
  if ((a_sign != 1 && a_sign != -1) || (b_sign != 1 && b_sign != -1)) {
    throw std::invalid_argument("theta signs must be +1 or -1");
  }
  if (a_power + b_power < 1) {
    throw std::invalid_argument("theta spec needs a_power + b_power >= 1");
  }
}

Series euler_product(std::uint64_t scale, CoefficientRing ring, std::size_t order) {
  if (scale == 0) throw std::invalid_argument("euler_product: scale must be positive");
  Series::ExactCoeffs c(order + 1);
  c[0] = 1;
  // Generalized pentagonal numbers j(3j-1)/2 for j = 1, -1, 2, -2, ...
  for (std::uint64_t j = 1;; ++j) {
    const std::uint64_t lo = scale * (j * (3 * j - 1) / 2);
    if (lo > order) break;
    const int sign = j % 2 ? -1 : 1;
    c[lo] += sign;
    const std::uint64_t hi = scale * (j * (3 * j + 1) / 2);
    if (hi <= order) c[hi] += sign;
  }
  return from_exact(std::move(c), ring);
}

Series plus_product(std::uint64_t scale, CoefficientRing ring, std::size_t order) {
  if (scale == 0) throw std::invalid_argument("plus_product: scale must be positive");
  Series::ExactCoeffs c(order + 1);
  c[0] = 1;
  for (std::uint64_t e = scale; e <= order; e += scale) times_one_plus(c, e);
  return from_exact(std::move(c), ring);
}

Series eta_quotient(const EtaQuotientSpec& spec, CoefficientRing ring, std::size_t order) {
  Series result = Series::one(ring, order);
  for (const auto& f : spec.factors()) {
    if (f.scale > order) continue;
    const Series factor = euler_product(f.scale, ring, order);
    const std::int64_t times = f.exponent < 0 ? -f.exponent : f.exponent;
    for (std::int64_t t = 0; t < times; ++t) {
      result = f.exponent > 0 ? mul(result, factor) : divide(result, factor);
    }
  }
  return spec.prefactor() == 0 ? result : shift(result, spec.prefactor());
}

Series phi(int sign, CoefficientRing ring, std::size_t order) {
  if (sign != 1 && sign != -1) throw std::invalid_argument("phi: sign must be +1 or -1");
  Series::ExactCoeffs c(order + 1);
  c[0] = 1;
  for (std::size_t n = 1; n * n <= order; ++n) {
    c[n * n] = (sign < 0 && n % 2 == 1) ? -2 : 2;
  }
  return from_exact(std::move(c), ring);
}

Series theta_f_series(const ThetaSpec& spec, CoefficientRing ring, std::size_t order) {
  spec.validate();
  Series::ExactCoeffs c(order + 1);
  auto add_term = [&](std::uint64_t tri_a, std::uint64_t tri_b) {
    // tri_a = n(n+1)/2, tri_b = n(n-1)/2
    const std::uint64_t e = tri_a * spec.a_power + tri_b * spec.b_power;
    if (e > order) return false;
    int sign = 1;
    if (spec.a_sign < 0 && tri_a % 2 == 1) sign = -sign;
    if (spec.b_sign < 0 && tri_b % 2 == 1) sign = -sign;
    c[e] += sign;
    return true;
  };
  // n >= 0: both exponents are nondecreasing in n.
  for (std::uint64_t n = 0; add_term(n * (n + 1) / 2, n == 0 ? 0 : n * (n - 1) / 2); ++n) {
  }
  // n = -m, m >= 1: n(n+1)/2 = m(m-1)/2 and n(n-1)/2 = m(m+1)/2.
  for (std::uint64_t m = 1; add_term(m * (m - 1) / 2, m * (m + 1) / 2); ++m) {
  }
  return from_exact(std::move(c), ring);
}

Series theta_f_product(const ThetaSpec& spec, CoefficientRing ring, std::size_t order) {
  spec.validate();
  if (spec.a_sign != 1 || spec.b_sign != 1) {
    throw std::invalid_argument("theta_f_product: unsupported sign pattern");
  }
  const std::uint64_t step = spec.a_power + spec.b_power;
  Series::ExactCoeffs c(order + 1);
  c[0] = 1;
  for (std::uint64_t base : {spec.a_power, spec.b_power}) {
    for (std::uint64_t e = base; e <= order; e += step) times_one_plus(c, e);
  }
  const Series plus_part = from_exact(std::move(c), ring);
  return mul(plus_part, euler_product(step, ring, order));
}

Series phi_five_dissection_residual(CoefficientRing ring, std::size_t order) {
  if (order < 4) throw std::invalid_argument("dissection residual needs order >= 4");
  const Series phi_minus = phi(-1, ring, order);
  auto signed_at_q5 = [&](const ThetaSpec& spec) {
    return substitute_power(negate_variable(theta_f_series(spec, ring, order)), 5);
  };
  const Series m1 = signed_at_q5({1, 3, 1, 7});
  const Series m2 = signed_at_q5({1, 1, 1, 9});
  const BigInt two = 2;
  const Series dissection =
      add(sub(substitute_power(phi_minus, 25), scale(shift(m1, 1), two)),
          scale(shift(m2, 4), two));
  return sub(phi_minus, dissection);
}

}  // namespace qseries
