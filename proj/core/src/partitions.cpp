#include "qseries/partitions.hpp"

#include <stdexcept>

namespace qseries {
namespace {

bool needs_param(SequenceName name) {
  return name == SequenceName::B_regular || name == SequenceName::A_regular_over ||
         name == SequenceName::R_squares;
}

// Counts partitions of n into parts <= max_part avoiding multiples of ell,
// each distinct part size contributing a factor of `weight`.
std::uint64_t count_descending(std::uint64_t n, std::uint64_t max_part,
                               std::optional<std::uint64_t> ell, std::uint64_t weight) {
  if (n == 0) return 1;
  std::uint64_t total = 0;
  for (std::uint64_t d = std::min(n, max_part); d >= 1; --d) {
    if (ell && d % *ell == 0) continue;
    for (std::uint64_t used = d; used <= n; used += d) {
      total += weight * count_descending(n - used, d - 1, ell, weight);
    }
  }
  return total;
}

BigInt run_oracle(std::optional<std::uint64_t> ell, std::uint64_t n, std::size_t cap,
                  std::uint64_t weight) {
  if (n > cap) {
    throw EnumerationCapExceeded("enumeration oracle: n = " + std::to_string(n) +
                                 " exceeds cap " + std::to_string(cap));
  }
  if (ell && *ell == 0) throw std::invalid_argument("oracle: ell must be positive");
  const std::uint64_t count = count_descending(n, n, ell, weight);
  BigInt out;
  mpz_set_ui(out.get_mpz_t(), count);
  return out;
}

}  // namespace

SequenceRef::SequenceRef(SequenceName name, std::optional<std::uint64_t> param)
    : name_(name), param_(param) {
  if (needs_param(name) != param.has_value()) {
    throw std::invalid_argument(param ? "sequence takes no parameter"
                                      : "sequence requires a parameter");
  }
  if ((name == SequenceName::A_regular_over || name == SequenceName::B_regular) &&
      *param < 2) {
    throw std::invalid_argument("ell must be at least 2");
  }
  if (name == SequenceName::R_squares && *param != 2 && *param != 4 && *param != 6 &&
      *param != 8) {
    throw std::invalid_argument("r_k is supported for k in {2, 4, 6, 8}");
  }
}

bool SequenceRef::series_backed() const noexcept {
  switch (name_) {
    case SequenceName::P:
    case SequenceName::Pbar:
    case SequenceName::B_regular:
    case SequenceName::A_regular_over:
    case SequenceName::R_squares:
      return true;
    default:
      return false;
  }
}

std::string SequenceRef::to_string() const {
  switch (name_) {
    case SequenceName::P: return "p";
    case SequenceName::Pbar: return "pbar";
    case SequenceName::B_regular: return "b[" + std::to_string(*param_) + "]";
    case SequenceName::A_regular_over: return "A[" + std::to_string(*param_) + "]";
    case SequenceName::R_squares: return "r[" + std::to_string(*param_) + "]";
    case SequenceName::DStar: return "dstar";
    case SequenceName::Sigma3Minus: return "sigma3m";
    case SequenceName::Chi: return "chi";
  }
  return "?";
}

EtaQuotientSpec generating_quotient(const SequenceRef& ref) {
  switch (ref.name()) {
    case SequenceName::P:
      return EtaQuotientSpec(0, {{1, -1}});
    case SequenceName::Pbar:
      return EtaQuotientSpec(0, {{2, 1}, {1, -2}});
    case SequenceName::B_regular: {
      const auto ell = *ref.param();
      return EtaQuotientSpec(0, {{ell, 1}, {1, -1}});
    }
    case SequenceName::A_regular_over: {
      const auto ell = *ref.param();
      return EtaQuotientSpec(0, {{ell, 2}, {2, 1}, {1, -2}, {2 * ell, -1}});
    }
    default:
      throw std::invalid_argument(ref.to_string() + " has no eta-quotient form");
  }
}

Series sequence_series(const SequenceRef& ref, CoefficientRing ring, std::size_t order) {
  if (!ref.series_backed()) {
    throw std::invalid_argument(ref.to_string() + " is pointwise only");
  }
  if (ref.name() == SequenceName::R_squares) {
    return pow(phi(1, ring, order), static_cast<std::int64_t>(*ref.param()));
  }
  return eta_quotient(generating_quotient(ref), ring, order);
}

BigInt oracle_regular_overpartition(std::optional<std::uint64_t> ell, std::uint64_t n,
                                    std::size_t cap) {
  return run_oracle(ell, n, cap, 2);
}

BigInt oracle_partition(std::optional<std::uint64_t> ell, std::uint64_t n, std::size_t cap) {
  return run_oracle(ell, n, cap, 1);
}

}  // namespace qseries
