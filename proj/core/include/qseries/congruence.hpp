#ifndef QSERIES_CONGRUENCE_HPP
#define QSERIES_CONGRUENCE_HPP

#include <cstddef>
#include <cstdint>
#include <future>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <tuple>
#include <variant>
#include <vector>

#include "qseries/eta_theta.hpp"
#include "qseries/partitions.hpp"
#include "qseries/series.hpp"

namespace qseries {

// ---------------------------------------------------------------------------
// Index forms and terms
// ---------------------------------------------------------------------------

/// a*n + b.
struct LinearIndex {
  std::uint64_t a = 1;
  std::uint64_t b = 0;

  std::uint64_t at(std::uint64_t n) const { return a * n + b; }
  friend bool operator==(const LinearIndex&, const LinearIndex&) = default;
};

/// Which primes a family ranges over.
struct PrimeFilter {
  bool odd_only = true;
  std::uint64_t residue_modulus = 0;  // 0: no residue condition
  std::uint64_t residue = 0;
  std::vector<std::uint64_t> excluded;

  bool accepts(std::uint64_t p) const;
  friend bool operator==(const PrimeFilter&, const PrimeFilter&) = default;
};

/// multiplier * p^e * (p n + i) with e = e_step * k + e_base and
/// i in {1, ..., p - 1}.
struct PrimeFamilyIndex {
  std::uint64_t multiplier = 1;
  std::uint64_t e_base = 0;
  std::uint64_t e_step = 0;
  PrimeFilter primes;

  /// The linear form for a concrete (p, k, i).
  LinearIndex instantiate(std::uint64_t p, std::uint64_t k, std::uint64_t i) const;
  friend bool operator==(const PrimeFamilyIndex&, const PrimeFamilyIndex&) = default;
};

using IndexForm = std::variant<LinearIndex, PrimeFamilyIndex>;

/// One side of a congruence: seq(index), optionally times (-1)^index, or the
/// literal 0 when seq is empty.
struct Term {
  std::optional<SequenceRef> seq;
  IndexForm index = LinearIndex{};
  bool sign_twist = false;

  static Term zero() { return Term{}; }
  static Term of(SequenceRef s, IndexForm index, bool sign_twist = false) {
    return Term{std::move(s), std::move(index), sign_twist};
  }
  bool is_constant() const noexcept { return !seq.has_value(); }
};

struct Parameter {
  std::string name;
  std::int64_t value = 0;

  friend bool operator==(const Parameter&, const Parameter&) = default;
};
using Parameters = std::vector<Parameter>;

/// A concrete instantiation of a claim's outer quantifiers (ell, alpha, j, i).
struct ClaimCase {
  Parameters params;
  Term lhs;
  Term rhs;
  std::uint64_t modulus = 2;
};

/// "lhs == rhs (mod m)" for all n >= n_min, over the listed cases and, for
/// prime families, over primes <= prime_cap and k <= k_cap.
struct CongruenceClaim {
  std::string id;
  std::string statement;
  std::string source;
  std::uint64_t n_min = 0;
  std::vector<ClaimCase> cases;

  /// Modulus of the first case (all registry claims but C-GEN share one).
  std::uint64_t modulus() const;
};

// ---------------------------------------------------------------------------
// Series expressions for exact identities
// ---------------------------------------------------------------------------

/// Immutable expression tree over series constructors and ring operations.
/// Evaluation propagates the demanded order downwards (extraction widens it).
class SeriesExpr {
 public:
  static SeriesExpr eta(EtaQuotientSpec spec);
  static SeriesExpr sequence(SequenceRef ref);
  static SeriesExpr phi(int sign);
  static SeriesExpr theta_sum(ThetaSpec spec);
  static SeriesExpr theta_product(ThetaSpec spec);
  static SeriesExpr plus_product(std::uint64_t scale);
  static SeriesExpr dissection_residual();
  /// Coefficients from the overpartition enumeration oracle (no ell: pbar).
  static SeriesExpr overpartition_oracle(std::optional<std::uint64_t> ell);
  static SeriesExpr zero();

  SeriesExpr pow(std::int64_t e) const;
  SeriesExpr substitute(std::size_t k) const;
  SeriesExpr extract(std::size_t k, std::size_t r = 0) const;

  friend SeriesExpr operator*(const SeriesExpr& a, const SeriesExpr& b);
  friend SeriesExpr operator/(const SeriesExpr& a, const SeriesExpr& b);
  friend SeriesExpr operator+(const SeriesExpr& a, const SeriesExpr& b);
  friend SeriesExpr operator-(const SeriesExpr& a, const SeriesExpr& b);

  Series evaluate(CoefficientRing ring, std::size_t order) const;
  /// Largest order the expression can be evaluated at (enumeration cap).
  std::optional<std::size_t> order_cap() const;
  std::string to_string() const;

  struct Node;

 private:
  explicit SeriesExpr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

struct IdentityCase {
  Parameters params;
  SeriesExpr lhs;
  SeriesExpr rhs;
  CoefficientRing ring = CoefficientRing::integers();
};

/// lhs == rhs coefficientwise (exactly, or in the case's modular ring).
struct IdentityClaim {
  std::string id;
  std::string statement;
  std::string source;
  std::vector<IdentityCase> cases;
  /// Orders above this are clamped (enumeration-backed identities).
  std::optional<std::size_t> max_order;
};

// ---------------------------------------------------------------------------
// Reports
// ---------------------------------------------------------------------------

enum class Status { Pass, Fail, Skipped };

std::string to_string(Status s);

struct Counterexample {
  Parameters params;
  std::uint64_t index = 0;
  BigInt lhs;
  BigInt rhs;

  friend bool operator==(const Counterexample&, const Counterexample&) = default;
};

struct VerificationReport {
  std::string claim_id;
  std::uint64_t bound = 0;
  std::uint64_t instances = 0;
  Status status = Status::Skipped;
  std::string reason;  // set when skipped
  std::optional<Counterexample> counterexample;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

// ---------------------------------------------------------------------------
// Verification
// ---------------------------------------------------------------------------

/// Generating series shared between claims, keyed by (sequence, ring, order).
/// Safe for concurrent use; each series is built once.
class SeriesCache {
 public:
  std::shared_ptr<const Series> get(const SequenceRef& ref, CoefficientRing ring,
                                    std::size_t order);
  std::size_t size() const;

 private:
  using Key = std::tuple<SequenceRef, std::uint64_t, std::size_t>;
  mutable std::mutex mutex_;
  std::map<Key, std::shared_future<std::shared_ptr<const Series>>> entries_;
};

struct VerifyOptions {
  std::uint64_t prime_cap = 20;
  std::uint64_t k_cap = 1;
};

/// Residue of seq(index) mod m, or nothing when the value is undefined there
/// (d* and sigma3- at 0) or the index lies beyond `order`.
/// Series-backed product sequences come from the cache at `order`; r_k uses its
/// closed formula.
std::optional<std::uint64_t> sequence_residue(const SequenceRef& seq, std::uint64_t index,
                                              std::uint64_t m, std::size_t order,
                                              SeriesCache& cache);

VerificationReport verify_congruence(const CongruenceClaim& claim, std::uint64_t bound,
                                     const VerifyOptions& options = {},
                                     SeriesCache* cache = nullptr);

VerificationReport verify_identity(const IdentityClaim& claim, std::size_t order);

using RegistryEntry = std::variant<CongruenceClaim, IdentityClaim>;

const std::string& entry_id(const RegistryEntry& entry);

/// Every congruence and identity the library knows, in a fixed order.
const std::vector<RegistryEntry>& builtin_registry();

/// Lookup by id; nullptr when unknown.
const RegistryEntry* find_entry(const std::string& id);

inline constexpr std::size_t kDefaultIdentityOrder = 1000;

/// Runs every registry entry. Congruences are checked at `bound`; identities at
/// min(bound, identity_order). Reports come back in registry order.
std::vector<VerificationReport> verify_all(std::uint64_t bound, std::uint64_t prime_cap = 20,
                                           std::uint64_t k_cap = 1,
                                           std::size_t identity_order = kDefaultIdentityOrder);

/// Runs the given entries (concurrently when hardware allows), in order.
std::vector<VerificationReport> verify_entries(const std::vector<const RegistryEntry*>& entries,
                                               std::uint64_t bound, const VerifyOptions& options,
                                               std::size_t identity_order);

// ---------------------------------------------------------------------------
// Hunting
// ---------------------------------------------------------------------------

struct HuntHit {
  std::uint64_t a = 0;
  std::uint64_t b = 0;
  std::uint64_t instances = 0;

  friend bool operator==(const HuntHit&, const HuntHit&) = default;
};

/// Every progression a*n + b (1 <= a <= max_step, b < a) on which seq vanishes
/// mod `modulus` for all indices <= bound, with at least min_instances checked
/// values. Sorted by (a, b); subsumed progressions are kept.
std::vector<HuntHit> hunt(const SequenceRef& seq, std::uint64_t modulus, std::uint64_t max_step,
                          std::uint64_t bound, std::uint64_t min_instances);

/// The claim "seq(a n + b) == 0 (mod modulus)" in registry form.
CongruenceClaim progression_claim(const SequenceRef& seq, std::uint64_t modulus,
                                  std::uint64_t a, std::uint64_t b);

}  // namespace qseries

#endif  // QSERIES_CONGRUENCE_HPP
