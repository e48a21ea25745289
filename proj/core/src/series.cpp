#include "qseries/series.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <optional>
#include <utility>

namespace qseries {
namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

constexpr u64 kMaxModulus = u64{1} << 63;

u64 add_mod(u64 a, u64 b, u64 m) {
  u64 s = a + b;
  return s >= m ? s - m : s;
}

u64 sub_mod(u64 a, u64 b, u64 m) { return a >= b ? a - b : a + (m - b); }

u64 mul_mod(u64 a, u64 b, u64 m) {
  if (m <= (u64{1} << 32)) return (a * b) % m;
  return static_cast<u64>((static_cast<u128>(a) * b) % m);
}

// Inverse of a mod m, or 0 when gcd(a, m) != 1.
u64 inverse_mod(u64 a, u64 m) {
  __int128 old_r = a, r = m, old_s = 1, s = 0;
  while (r != 0) {
    __int128 q = old_r / r;
    std::swap(old_r, r);
    r -= q * old_r;
    std::swap(old_s, s);
    s -= q * old_s;
  }
  if (old_r != 1) return 0;
  __int128 v = old_s % static_cast<__int128>(m);
  if (v < 0) v += m;
  return static_cast<u64>(v);
}

void require_same_ring(const Series& a, const Series& b, const char* what) {
  if (a.ring() != b.ring()) {
    throw RingMismatch(std::string(what) + ": ring mismatch (" +
                       a.ring().to_string() + " vs " + b.ring().to_string() +
                       ")");
  }
}

template <typename T>
struct Term {
  std::size_t index;
  const T* value;
};

template <typename T, typename IsZero>
std::vector<Term<T>> nonzero_terms(std::span<const T> c, std::size_t upto,
                                   std::size_t from, IsZero is_zero) {
  std::vector<Term<T>> out;
  for (std::size_t i = from; i <= upto && i < c.size(); ++i) {
    if (!is_zero(c[i])) out.push_back({i, &c[i]});
  }
  return out;
}

bool big_is_zero(const BigInt& v) { return sgn(v) == 0; }
bool word_is_zero(u64 v) { return v == 0; }

Series mul_exact(std::span<const BigInt> a, std::span<const BigInt> b,
                 std::size_t order) {
  auto ta = nonzero_terms(a, order, 0, big_is_zero);
  auto tb = nonzero_terms(b, order, 0, big_is_zero);
  const bool a_sparse = ta.size() <= tb.size();
  const auto& sparse = a_sparse ? ta : tb;
  std::span<const BigInt> dense = a_sparse ? b : a;

  Series::ExactCoeffs out(order + 1);
  for (const auto& [i, vp] : sparse) {
    const BigInt& v = *vp;
    const std::size_t len = order - i;
    if (v == 1) {
      for (std::size_t j = 0; j <= len; ++j) out[i + j] += dense[j];
    } else if (v == -1) {
      for (std::size_t j = 0; j <= len; ++j) out[i + j] -= dense[j];
    } else {
      for (std::size_t j = 0; j <= len; ++j) {
        mpz_addmul(out[i + j].get_mpz_t(), v.get_mpz_t(), dense[j].get_mpz_t());
      }
    }
  }
  return Series(std::move(out));
}

Series mul_modular(std::span<const u64> a, std::span<const u64> b,
                   std::size_t order, u64 m) {
  auto ta = nonzero_terms(a, order, 0, word_is_zero);
  auto tb = nonzero_terms(b, order, 0, word_is_zero);
  const bool a_sparse = ta.size() <= tb.size();
  const auto& sparse = a_sparse ? ta : tb;
  std::span<const u64> dense = a_sparse ? b : a;

  Series::ModularCoeffs out(order + 1, 0);
  for (const auto& [i, vp] : sparse) {
    const u64 v = *vp;
    const std::size_t len = order - i;
    if (v == 1) {
      for (std::size_t j = 0; j <= len; ++j) out[i + j] = add_mod(out[i + j], dense[j], m);
    } else if (v == m - 1) {
      for (std::size_t j = 0; j <= len; ++j) out[i + j] = sub_mod(out[i + j], dense[j], m);
    } else {
      for (std::size_t j = 0; j <= len; ++j) {
        out[i + j] = add_mod(out[i + j], mul_mod(v, dense[j], m), m);
      }
    }
  }
  return Series(m, std::move(out));
}

constexpr std::size_t kDivideBlock = 1024;

Series divide_exact(std::span<const BigInt> a, std::span<const BigInt> b,
                    std::size_t order) {
  const BigInt& b0 = b[0];
  if (b0 != 1 && b0 != -1) {
    throw NotInvertible("divide: constant term " + b0.get_str() +
                        " is not a unit in Z");
  }
  const bool negate_result = b0 == -1;
  auto tb = nonzero_terms(b, order, 1, big_is_zero);

  Series::ExactCoeffs c(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(order + 1));
  auto apply = [](BigInt& cn, const BigInt& v, const BigInt& src) {
    if (v == 1) {
      mpz_sub(cn.get_mpz_t(), cn.get_mpz_t(), src.get_mpz_t());
    } else if (v == -1) {
      mpz_add(cn.get_mpz_t(), cn.get_mpz_t(), src.get_mpz_t());
    } else {
      mpz_submul(cn.get_mpz_t(), v.get_mpz_t(), src.get_mpz_t());
    }
  };
  // Blocked: terms reaching before the block are applied term by term so the
  // sources are read sequentially; only short-range terms run the recurrence.
  for (std::size_t start = 0; start <= order; start += kDivideBlock) {
    const std::size_t end = std::min(order + 1, start + kDivideBlock);
    for (const auto& [k, vp] : tb) {
      if (k < kDivideBlock) continue;
      if (k > end - 1) break;
      const BigInt& v = *vp;
      for (std::size_t n = std::max(start, k); n < end; ++n) apply(c[n], v, c[n - k]);
    }
    for (std::size_t n = start; n < end; ++n) {
      BigInt& cn = c[n];
      for (const auto& [k, vp] : tb) {
        if (k >= kDivideBlock || k > n) break;
        apply(cn, *vp, c[n - k]);
      }
      if (negate_result) mpz_neg(cn.get_mpz_t(), cn.get_mpz_t());
    }
  }
  return Series(std::move(c));
}

Series divide_modular(std::span<const u64> a, std::span<const u64> b,
                      std::size_t order, u64 m) {
  const u64 b0_inv = inverse_mod(b[0], m);
  if (b0_inv == 0) {
    throw NotInvertible("divide: constant term " + std::to_string(b[0]) +
                        " is not a unit mod " + std::to_string(m));
  }
  auto tb = nonzero_terms(b, order, 1, word_is_zero);

  Series::ModularCoeffs c(a.begin(), a.begin() + static_cast<std::ptrdiff_t>(order + 1));
  auto apply = [m](u64 acc, u64 v, u64 src) {
    if (v == 1) return sub_mod(acc, src, m);
    if (v == m - 1) return add_mod(acc, src, m);
    return sub_mod(acc, mul_mod(v, src, m), m);
  };
  for (std::size_t start = 0; start <= order; start += kDivideBlock) {
    const std::size_t end = std::min(order + 1, start + kDivideBlock);
    for (const auto& [k, vp] : tb) {
      if (k < kDivideBlock) continue;
      if (k > end - 1) break;
      const u64 v = *vp;
      for (std::size_t n = std::max(start, k); n < end; ++n) c[n] = apply(c[n], v, c[n - k]);
    }
    for (std::size_t n = start; n < end; ++n) {
      u64 acc = c[n];
      for (const auto& [k, vp] : tb) {
        if (k >= kDivideBlock || k > n) break;
        acc = apply(acc, *vp, c[n - k]);
      }
      c[n] = b0_inv == 1 ? acc : mul_mod(acc, b0_inv, m);
    }
  }
  return Series(m, std::move(c));
}

// Applies f(index, value) -> value to every coefficient of a (possibly into a
// different order) while keeping the ring.
template <typename F>
Series remap(const Series& a, std::size_t order, F&& source_index) {
  if (a.ring().is_exact()) {
    auto src = a.exact();
    Series::ExactCoeffs out(order + 1);
    for (std::size_t n = 0; n <= order; ++n) {
      if (auto s = source_index(n); s) out[n] = src[s->first] * s->second;
    }
    return Series(std::move(out));
  }
  const u64 m = a.ring().modulus();
  auto src = a.residues();
  Series::ModularCoeffs out(order + 1, 0);
  for (std::size_t n = 0; n <= order; ++n) {
    if (auto s = source_index(n); s) {
      const u64 v = src[s->first];
      out[n] = s->second < 0 ? sub_mod(0, v, m) : v;
    }
  }
  return Series(m, std::move(out));
}

using SourceRef = std::optional<std::pair<std::size_t, int>>;

}  // namespace

CoefficientRing CoefficientRing::modulo(std::uint64_t m) {
  if (m < 2) throw std::invalid_argument("modulus must be at least 2");
  if (m >= kMaxModulus) throw std::invalid_argument("modulus must be below 2^63");
  return CoefficientRing{m};
}

std::string CoefficientRing::to_string() const {
  return is_exact() ? "Z" : "Z/" + std::to_string(modulus_) + "Z";
}

std::uint64_t residue(const BigInt& value, std::uint64_t m) {
  return mpz_fdiv_ui(value.get_mpz_t(), m);
}

std::uint64_t residue(std::int64_t value, std::uint64_t m) {
  __int128 r = static_cast<__int128>(value) % static_cast<__int128>(m);
  if (r < 0) r += m;
  return static_cast<u64>(r);
}

Series::Series(CoefficientRing ring, std::size_t order)
    : ring_(ring), order_(order) {
  if (ring.is_exact()) {
    coeffs_ = ExactCoeffs(order + 1);
  } else {
    coeffs_ = ModularCoeffs(order + 1, 0);
  }
}

Series::Series(ExactCoeffs coeffs)
    : ring_(CoefficientRing::integers()), order_(0), coeffs_(std::move(coeffs)) {
  const auto& c = std::get<ExactCoeffs>(coeffs_);
  if (c.empty()) throw std::invalid_argument("series needs at least one coefficient");
  order_ = c.size() - 1;
}

Series::Series(std::uint64_t m, ModularCoeffs residues)
    : ring_(CoefficientRing::modulo(m)), order_(0), coeffs_(std::move(residues)) {
  const auto& c = std::get<ModularCoeffs>(coeffs_);
  if (c.empty()) throw std::invalid_argument("series needs at least one coefficient");
  for (u64 v : c) {
    if (v >= m) throw std::invalid_argument("residue out of range [0, m)");
  }
  order_ = c.size() - 1;
}

Series Series::one(CoefficientRing ring, std::size_t order) {
  return monomial(ring, order, 0);
}

Series Series::monomial(CoefficientRing ring, std::size_t order, std::size_t k) {
  Series s(ring, order);
  if (k <= order) {
    if (ring.is_exact()) {
      std::get<ExactCoeffs>(s.coeffs_)[k] = 1;
    } else {
      std::get<ModularCoeffs>(s.coeffs_)[k] = 1;
    }
  }
  return s;
}

BigInt Series::coefficient(std::size_t n) const {
  if (n > order_) throw std::out_of_range("coefficient index beyond series order");
  if (ring_.is_exact()) return std::get<ExactCoeffs>(coeffs_)[n];
  BigInt v;
  mpz_set_ui(v.get_mpz_t(), std::get<ModularCoeffs>(coeffs_)[n]);
  return v;
}

std::uint64_t Series::coefficient_mod(std::size_t n, std::uint64_t m) const {
  if (n > order_) throw std::out_of_range("coefficient index beyond series order");
  if (ring_.is_exact()) return residue(std::get<ExactCoeffs>(coeffs_)[n], m);
  if (ring_.modulus() % m != 0) {
    throw std::invalid_argument("cannot reduce " + ring_.to_string() + " mod " +
                                std::to_string(m));
  }
  return std::get<ModularCoeffs>(coeffs_)[n] % m;
}

std::span<const BigInt> Series::exact() const {
  if (!ring_.is_exact()) throw std::logic_error("series is not exact");
  return std::get<ExactCoeffs>(coeffs_);
}

std::span<const std::uint64_t> Series::residues() const {
  if (ring_.is_exact()) throw std::logic_error("series is not modular");
  return std::get<ModularCoeffs>(coeffs_);
}

bool Series::is_zero() const { return nonzero_count() == 0; }

std::size_t Series::nonzero_count() const {
  if (ring_.is_exact()) {
    const auto& c = std::get<ExactCoeffs>(coeffs_);
    return static_cast<std::size_t>(
        std::count_if(c.begin(), c.end(), [](const BigInt& v) { return sgn(v) != 0; }));
  }
  const auto& c = std::get<ModularCoeffs>(coeffs_);
  return static_cast<std::size_t>(
      std::count_if(c.begin(), c.end(), [](u64 v) { return v != 0; }));
}

bool operator==(const Series& a, const Series& b) {
  return a.ring_ == b.ring_ && a.order_ == b.order_ && a.coeffs_ == b.coeffs_;
}

Series series_from_coeffs(CoefficientRing ring, std::span<const BigInt> coeffs,
                          std::size_t order) {
  if (coeffs.size() > order + 1) {
    throw std::invalid_argument("series_from_coeffs: " +
                                std::to_string(coeffs.size()) +
                                " coefficients do not fit order " +
                                std::to_string(order));
  }
  if (ring.is_exact()) {
    Series::ExactCoeffs out(order + 1);
    std::copy(coeffs.begin(), coeffs.end(), out.begin());
    return Series(std::move(out));
  }
  Series::ModularCoeffs out(order + 1, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) out[i] = residue(coeffs[i], ring.modulus());
  return Series(ring.modulus(), std::move(out));
}

Series series_from_coeffs(CoefficientRing ring,
                          std::initializer_list<std::int64_t> coeffs,
                          std::size_t order) {
  std::vector<BigInt> big;
  big.reserve(coeffs.size());
  for (std::int64_t v : coeffs) big.emplace_back(static_cast<long>(v));
  return series_from_coeffs(ring, big, order);
}

Series add(const Series& a, const Series& b) {
  require_same_ring(a, b, "add");
  const std::size_t order = std::min(a.order(), b.order());
  if (a.ring().is_exact()) {
    Series::ExactCoeffs out(order + 1);
    auto x = a.exact(), y = b.exact();
    for (std::size_t n = 0; n <= order; ++n) out[n] = x[n] + y[n];
    return Series(std::move(out));
  }
  const u64 m = a.ring().modulus();
  Series::ModularCoeffs out(order + 1);
  auto x = a.residues(), y = b.residues();
  for (std::size_t n = 0; n <= order; ++n) out[n] = add_mod(x[n], y[n], m);
  return Series(m, std::move(out));
}

Series sub(const Series& a, const Series& b) {
  require_same_ring(a, b, "sub");
  return add(a, negate(b));
}

Series negate(const Series& a) {
  return remap(a, a.order(), [](std::size_t n) { return SourceRef{{n, -1}}; });
}

Series scale(const Series& a, const BigInt& c) {
  if (a.ring().is_exact()) {
    Series::ExactCoeffs out(a.exact().begin(), a.exact().end());
    for (auto& v : out) v *= c;
    return Series(std::move(out));
  }
  const u64 m = a.ring().modulus();
  const u64 cm = residue(c, m);
  Series::ModularCoeffs out(a.residues().begin(), a.residues().end());
  for (auto& v : out) v = mul_mod(v, cm, m);
  return Series(m, std::move(out));
}

Series mul(const Series& a, const Series& b) {
  require_same_ring(a, b, "mul");
  const std::size_t order = std::min(a.order(), b.order());
  if (a.ring().is_exact()) return mul_exact(a.exact(), b.exact(), order);
  return mul_modular(a.residues(), b.residues(), order, a.ring().modulus());
}

Series divide(const Series& a, const Series& b) {
  require_same_ring(a, b, "divide");
  const std::size_t order = std::min(a.order(), b.order());
  if (a.ring().is_exact()) return divide_exact(a.exact(), b.exact(), order);
  return divide_modular(a.residues(), b.residues(), order, a.ring().modulus());
}

Series invert(const Series& a) { return divide(Series::one(a.ring(), a.order()), a); }

Series pow(const Series& a, std::int64_t e) {
  if (e < 0) return invert(pow(a, -e));
  Series result = Series::one(a.ring(), a.order());
  Series base = a;
  auto remaining = static_cast<std::uint64_t>(e);
  while (remaining != 0) {
    if (remaining & 1U) result = mul(result, base);
    remaining >>= 1U;
    if (remaining != 0) base = mul(base, base);
  }
  return result;
}

Series substitute_power(const Series& a, std::size_t k) {
  if (k == 0) throw std::invalid_argument("substitute_power: k must be at least 1");
  return remap(a, a.order(), [k](std::size_t n) -> SourceRef {
    if (n % k != 0) return std::nullopt;
    return SourceRef{{n / k, 1}};
  });
}

Series negate_variable(const Series& a) {
  return remap(a, a.order(), [](std::size_t n) { return SourceRef{{n, n % 2 ? -1 : 1}}; });
}

Series shift(const Series& a, std::size_t t) {
  return remap(a, a.order(), [t](std::size_t n) -> SourceRef {
    if (n < t) return std::nullopt;
    return SourceRef{{n - t, 1}};
  });
}

Series truncate(const Series& a, std::size_t order) {
  const std::size_t have = a.order();
  return remap(a, order, [have](std::size_t n) -> SourceRef {
    if (n > have) return std::nullopt;
    return SourceRef{{n, 1}};
  });
}

Series extract_progression(const Series& a, std::size_t k, std::size_t r) {
  if (k == 0) throw std::invalid_argument("extract_progression: k must be at least 1");
  if (r >= k) {
    throw std::invalid_argument("extract_progression: residue " + std::to_string(r) +
                                " is not below modulus " + std::to_string(k));
  }
  if (r > a.order()) {
    throw std::invalid_argument("extract_progression: residue beyond series order");
  }
  return remap(a, (a.order() - r) / k,
               [k, r](std::size_t n) { return SourceRef{{k * n + r, 1}}; });
}

Series reduce_mod(const Series& a, std::uint64_t m) {
  if (!a.ring().is_exact()) throw std::invalid_argument("reduce_mod: series is already modular");
  const auto ring = CoefficientRing::modulo(m);
  return series_from_coeffs(ring, a.exact(), a.order());
}

bool congruent_up_to(const Series& a, const Series& b, std::uint64_t m,
                     std::size_t bound) {
  if (bound > a.order() || bound > b.order()) {
    throw std::invalid_argument("congruent_up_to: bound " + std::to_string(bound) +
                                " exceeds a series order");
  }
  for (std::size_t n = 0; n <= bound; ++n) {
    if (a.coefficient_mod(n, m) != b.coefficient_mod(n, m)) return false;
  }
  return true;
}

}  // namespace qseries
