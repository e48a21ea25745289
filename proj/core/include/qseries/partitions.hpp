#ifndef QSERIES_PARTITIONS_HPP
#define QSERIES_PARTITIONS_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>

#include "qseries/eta_theta.hpp"
#include "qseries/series.hpp"

namespace qseries {

enum class SequenceName {
  P,              // p(n)
  Pbar,           // overpartitions
  B_regular,      // ell-regular partitions b_ell(n)
  A_regular_over, // ell-regular overpartitions
  R_squares,      // r_k(n)
  DStar,          // sum of divisors not divisible by 4
  Sigma3Minus,    // sum (-1)^d d^3
  Chi,            // the nontrivial character mod 4
};

/// A named coefficient sequence together with its parameter (ell or k).
class SequenceRef {
 public:
  /// Throws std::invalid_argument if the parameter is missing, superfluous or
  /// out of range for the name.
  SequenceRef(SequenceName name, std::optional<std::uint64_t> param = std::nullopt);

  static SequenceRef p() { return {SequenceName::P}; }
  static SequenceRef pbar() { return {SequenceName::Pbar}; }
  static SequenceRef regular(std::uint64_t ell) { return {SequenceName::B_regular, ell}; }
  static SequenceRef overpartition(std::uint64_t ell) {
    return {SequenceName::A_regular_over, ell};
  }
  static SequenceRef squares(std::uint64_t k) { return {SequenceName::R_squares, k}; }
  static SequenceRef d_star() { return {SequenceName::DStar}; }
  static SequenceRef sigma3_minus() { return {SequenceName::Sigma3Minus}; }
  static SequenceRef chi() { return {SequenceName::Chi}; }

  SequenceName name() const noexcept { return name_; }
  std::optional<std::uint64_t> param() const noexcept { return param_; }

  /// True for sequences with a generating-function form (p, pbar, b, A, r).
  bool series_backed() const noexcept;

  /// Short display form, e.g. "A[25]", "pbar", "r[4]".
  std::string to_string() const;

  friend auto operator<=>(const SequenceRef&, const SequenceRef&) = default;

 private:
  SequenceName name_;
  std::optional<std::uint64_t> param_;
};

/// The eta quotient for a product-form sequence (everything except r_k).
EtaQuotientSpec generating_quotient(const SequenceRef& ref);

/// Generating series of ref at the requested ring and order. r_k is phi(q)^k.
/// Throws std::invalid_argument for pointwise-only sequences.
Series sequence_series(const SequenceRef& ref, CoefficientRing ring, std::size_t order);

inline constexpr std::size_t kDefaultEnumerationCap = 60;

/// Raised when an enumeration oracle is asked for n beyond its cap.
class EnumerationCapExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

/// Overpartitions of n whose parts avoid multiples of ell; no ell means plain
/// overpartitions. Counted by direct descending-part recursion, weighting each
/// partition by 2^(number of distinct part sizes).
BigInt oracle_regular_overpartition(std::optional<std::uint64_t> ell, std::uint64_t n,
                                    std::size_t cap = kDefaultEnumerationCap);

/// Partitions of n (ell-regular when ell is given), by the same recursion.
BigInt oracle_partition(std::optional<std::uint64_t> ell, std::uint64_t n,
                        std::size_t cap = kDefaultEnumerationCap);

}  // namespace qseries

#endif  // QSERIES_PARTITIONS_HPP
