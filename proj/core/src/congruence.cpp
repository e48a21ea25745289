#include "qseries/congruence.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <limits>
#include <thread>

#include "qseries/arithmetic.hpp"

namespace qseries {
namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::uint64_t sat_mul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  return __builtin_mul_overflow(a, b, &out) ? kSaturated : out;
}

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out = 0;
  return __builtin_add_overflow(a, b, &out) ? kSaturated : out;
}

std::uint64_t sat_pow(std::uint64_t base, std::uint64_t e) {
  std::uint64_t out = 1;
  for (std::uint64_t i = 0; i < e && out != kSaturated; ++i) out = sat_mul(out, base);
  return out;
}

struct LinearPair {
  std::optional<LinearIndex> lhs;
  std::optional<LinearIndex> rhs;
};

// Checks one fully instantiated case over n = n_min, n_min + 1, ...
// Returns false once a counterexample has been recorded.
bool check_linear(const ClaimCase& c, const LinearPair& forms, const Parameters& params,
                  std::uint64_t n_min, std::uint64_t bound, SeriesCache& cache,
                  VerificationReport& report) {
  const std::uint64_t m = c.modulus;
  auto term_value = [&](const Term& t, std::uint64_t index) -> std::optional<std::uint64_t> {
    if (t.is_constant()) return 0;
    auto v = sequence_residue(*t.seq, index, m, bound, cache);
    if (v && t.sign_twist && index % 2 == 1) *v = (m - *v) % m;
    return v;
  };
  auto index_at = [](const std::optional<LinearIndex>& f, std::uint64_t n) {
    return f ? sat_add(sat_mul(f->a, n), f->b) : 0;
  };
  for (std::uint64_t n = n_min;; ++n) {
    const std::uint64_t li = index_at(forms.lhs, n);
    const std::uint64_t ri = index_at(forms.rhs, n);
    if (std::max(li, ri) > bound) break;
    const auto lv = term_value(c.lhs, li);
    const auto rv = term_value(c.rhs, ri);
    if (!lv || !rv) continue;
    ++report.instances;
    if (*lv != *rv) {
      Counterexample ce;
      ce.params = params;
      ce.params.push_back({"n", static_cast<std::int64_t>(n)});
      ce.index = forms.lhs ? li : ri;
      mpz_set_ui(ce.lhs.get_mpz_t(), *lv);
      mpz_set_ui(ce.rhs.get_mpz_t(), *rv);
      report.counterexample = std::move(ce);
      report.status = Status::Fail;
      return false;
    }
  }
  return true;
}

std::optional<LinearIndex> linear_part(const Term& t) {
  if (t.is_constant()) return std::nullopt;
  if (const auto* lin = std::get_if<LinearIndex>(&t.index)) return *lin;
  return std::nullopt;
}

const PrimeFamilyIndex* family_of(const Term& t) {
  if (t.is_constant()) return nullptr;
  return std::get_if<PrimeFamilyIndex>(&t.index);
}

}  // namespace

// ---------------------------------------------------------------------------

bool PrimeFilter::accepts(std::uint64_t p) const {
  if (odd_only && p == 2) return false;
  if (residue_modulus != 0 && p % residue_modulus != residue) return false;
  return std::find(excluded.begin(), excluded.end(), p) == excluded.end();
}

LinearIndex PrimeFamilyIndex::instantiate(std::uint64_t p, std::uint64_t k,
                                          std::uint64_t i) const {
  const std::uint64_t e = sat_add(sat_mul(e_step, k), e_base);
  const std::uint64_t scale = sat_mul(multiplier, sat_pow(p, e));
  return LinearIndex{sat_mul(scale, p), sat_mul(scale, i)};
}

std::uint64_t CongruenceClaim::modulus() const {
  if (cases.empty()) throw std::logic_error("claim " + id + " has no cases");
  return cases.front().modulus;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
  }
  return "?";
}

// ---------------------------------------------------------------------------

std::shared_ptr<const Series> SeriesCache::get(const SequenceRef& ref, CoefficientRing ring,
                                               std::size_t order) {
  const Key key{ref, ring.modulus(), order};
  std::promise<std::shared_ptr<const Series>> promise;
  std::shared_future<std::shared_ptr<const Series>> future;
  {
    std::lock_guard lock(mutex_);
    if (auto it = entries_.find(key); it != entries_.end()) {
      future = it->second;
    } else {
      future = promise.get_future().share();
      entries_.emplace(key, future);
      future = {};
    }
  }
  if (future.valid()) return future.get();
  try {
    auto built = std::make_shared<const Series>(sequence_series(ref, ring, order));
    promise.set_value(built);
    return built;
  } catch (...) {
    promise.set_exception(std::current_exception());
    throw;
  }
}

std::size_t SeriesCache::size() const {
  std::lock_guard lock(mutex_);
  return entries_.size();
}

std::optional<std::uint64_t> sequence_residue(const SequenceRef& seq, std::uint64_t index,
                                              std::uint64_t m, std::size_t order,
                                              SeriesCache& cache) {
  switch (seq.name()) {
    case SequenceName::R_squares:
      return residue(r_formula(static_cast<unsigned>(*seq.param()), index), m);
    case SequenceName::DStar:
      if (index == 0) return std::nullopt;
      return residue(d_star(index), m);
    case SequenceName::Sigma3Minus:
      if (index == 0) return std::nullopt;
      return residue(sigma3_minus(index), m);
    case SequenceName::Chi:
      return residue(static_cast<std::int64_t>(chi(index)), m);
    default:
      break;
  }
  if (index > order) return std::nullopt;
  return cache.get(seq, CoefficientRing::modulo(m), order)->residues()[index];
}

VerificationReport verify_congruence(const CongruenceClaim& claim, std::uint64_t bound,
                                     const VerifyOptions& options, SeriesCache* cache) {
  SeriesCache local;
  SeriesCache& series = cache ? *cache : local;
  VerificationReport report;
  report.claim_id = claim.id;
  report.bound = bound;

  for (const auto& c : claim.cases) {
    const PrimeFamilyIndex* family = family_of(c.lhs);
    if (!family) family = family_of(c.rhs);
    if (!family) {
      if (!check_linear(c, {linear_part(c.lhs), linear_part(c.rhs)}, c.params, claim.n_min,
                        bound, series, report)) {
        return report;
      }
      continue;
    }
    const std::uint64_t k_max = family->e_step == 0 ? 0 : options.k_cap;
    for (std::uint64_t p : primes_up_to(options.prime_cap)) {
      if (!family->primes.accepts(p)) continue;
      for (std::uint64_t k = 0; k <= k_max; ++k) {
        for (std::uint64_t i = 1; i < p; ++i) {
          auto instantiate = [&](const Term& t) -> std::optional<LinearIndex> {
            if (const auto* f = family_of(t)) return f->instantiate(p, k, i);
            return linear_part(t);
          };
          Parameters params = c.params;
          params.push_back({"p", static_cast<std::int64_t>(p)});
          params.push_back({"k", static_cast<std::int64_t>(k)});
          params.push_back({"i", static_cast<std::int64_t>(i)});
          if (!check_linear(c, {instantiate(c.lhs), instantiate(c.rhs)}, params, claim.n_min,
                            bound, series, report)) {
            return report;
          }
        }
      }
    }
  }
  if (report.instances == 0) {
    report.status = Status::Skipped;
    report.reason = "no instance with index <= " + std::to_string(bound);
  } else {
    report.status = Status::Pass;
  }
  return report;
}

VerificationReport verify_identity(const IdentityClaim& claim, std::size_t order) {
  if (order < 1) throw std::invalid_argument("verify_identity: order must be at least 1");
  VerificationReport report;
  report.claim_id = claim.id;
  std::size_t reported_order = claim.max_order ? std::min(order, *claim.max_order) : order;

  for (const auto& c : claim.cases) {
    std::size_t effective = claim.max_order ? std::min(order, *claim.max_order) : order;
    for (const auto* side : {&c.lhs, &c.rhs}) {
      if (auto cap = side->order_cap()) effective = std::min(effective, *cap);
    }
    reported_order = std::min(reported_order, effective);
    const Series lhs = c.lhs.evaluate(c.ring, effective);
    const Series rhs = c.rhs.evaluate(c.ring, effective);
    for (std::size_t n = 0; n <= effective; ++n) {
      ++report.instances;
      BigInt lv = lhs.coefficient(n);
      BigInt rv = rhs.coefficient(n);
      if (lv != rv) {
        Counterexample ce;
        ce.params = c.params;
        ce.params.push_back({"n", static_cast<std::int64_t>(n)});
        ce.index = n;
        ce.lhs = std::move(lv);
        ce.rhs = std::move(rv);
        report.counterexample = std::move(ce);
        report.status = Status::Fail;
        report.bound = reported_order;
        return report;
      }
    }
  }
  report.bound = reported_order;
  if (report.instances == 0) {
    report.status = Status::Skipped;
    report.reason = "identity has no cases";
  } else {
    report.status = Status::Pass;
  }
  return report;
}

const std::string& entry_id(const RegistryEntry& entry) {
  return std::visit([](const auto& claim) -> const std::string& { return claim.id; }, entry);
}

const RegistryEntry* find_entry(const std::string& id) {
  for (const auto& entry : builtin_registry()) {
    if (entry_id(entry) == id) return &entry;
  }
  return nullptr;
}

std::vector<VerificationReport> verify_entries(const std::vector<const RegistryEntry*>& entries,
                                               std::uint64_t bound, const VerifyOptions& options,
                                               std::size_t identity_order) {
  std::vector<VerificationReport> reports(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
  SeriesCache cache;
  std::atomic<std::size_t> next{0};

  auto worker = [&] {
    for (std::size_t i = next++; i < entries.size(); i = next++) {
      try {
        reports[i] = std::visit(
            [&](const auto& claim) {
              using T = std::decay_t<decltype(claim)>;
              if constexpr (std::is_same_v<T, CongruenceClaim>) {
                return verify_congruence(claim, bound, options, &cache);
              } else {
                return verify_identity(claim, identity_order);
              }
            },
            *entries[i]);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const std::size_t threads =
      std::min<std::size_t>(entries.size(), std::max(1U, std::thread::hardware_concurrency()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return reports;
}

std::vector<VerificationReport> verify_all(std::uint64_t bound, std::uint64_t prime_cap,
                                           std::uint64_t k_cap, std::size_t identity_order) {
  std::vector<const RegistryEntry*> entries;
  for (const auto& entry : builtin_registry()) entries.push_back(&entry);
  return verify_entries(entries, bound, {prime_cap, k_cap},
                        std::max<std::size_t>(1, std::min<std::size_t>(bound, identity_order)));
}

// ---------------------------------------------------------------------------

std::vector<HuntHit> hunt(const SequenceRef& seq, std::uint64_t modulus, std::uint64_t max_step,
                          std::uint64_t bound, std::uint64_t min_instances) {
  if (modulus < 2) throw std::invalid_argument("hunt: modulus must be at least 2");
  if (max_step < 1) throw std::invalid_argument("hunt: max_step must be at least 1");
  SeriesCache cache;
  std::vector<std::optional<std::uint64_t>> values(bound + 1);
  for (std::uint64_t n = 0; n <= bound; ++n) {
    values[n] = sequence_residue(seq, n, modulus, bound, cache);
  }
  const std::uint64_t needed = std::max<std::uint64_t>(1, min_instances);
  std::vector<HuntHit> hits;
  for (std::uint64_t a = 1; a <= max_step; ++a) {
    for (std::uint64_t b = 0; b < a && b <= bound; ++b) {
      std::uint64_t count = 0;
      bool vanishes = true;
      for (std::uint64_t idx = b; idx <= bound; idx += a) {
        const auto& v = values[idx];
        if (!v) continue;
        if (*v != 0) {
          vanishes = false;
          break;
        }
        ++count;
      }
      if (vanishes && count >= needed) hits.push_back({a, b, count});
    }
  }
  return hits;
}

CongruenceClaim progression_claim(const SequenceRef& seq, std::uint64_t modulus,
                                  std::uint64_t a, std::uint64_t b) {
  CongruenceClaim claim;
  claim.id = "HUNT-" + seq.to_string() + "-" + std::to_string(a) + "n+" + std::to_string(b);
  claim.statement = seq.to_string() + "(" + std::to_string(a) + "n+" + std::to_string(b) +
                    ") == 0 (mod " + std::to_string(modulus) + ")";
  claim.source = "hunt";
  claim.cases.push_back({{}, Term::of(seq, LinearIndex{a, b}), Term::zero(), modulus});
  return claim;
}

}  // namespace qseries
