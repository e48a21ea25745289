#include "qseries/congruence.hpp"

namespace qseries {
namespace {

std::uint64_t pow5(std::uint64_t alpha) {
  std::uint64_t v = 1;
  for (std::uint64_t i = 0; i < alpha; ++i) v *= 5;
  return v;
}

std::string a_name(std::uint64_t ell) { return "A" + std::to_string(ell); }

CongruenceClaim vanishing(std::string id, std::uint64_t ell, LinearIndex index,
                          std::uint64_t modulus, std::string source) {
  CongruenceClaim c;
  c.id = std::move(id);
  c.statement = a_name(ell) + "(" + std::to_string(index.a) + "n+" + std::to_string(index.b) +
                ") == 0 (mod " + std::to_string(modulus) + ")";
  c.source = std::move(source);
  c.cases.push_back(
      {{}, Term::of(SequenceRef::overpartition(ell), index), Term::zero(), modulus});
  return c;
}

CongruenceClaim family(std::string id, std::string statement, std::uint64_t ell,
                       PrimeFamilyIndex index, std::uint64_t modulus, std::string source) {
  CongruenceClaim c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.source = std::move(source);
  c.cases.push_back(
      {{}, Term::of(SequenceRef::overpartition(ell), std::move(index)), Term::zero(), modulus});
  return c;
}

PrimeFilter odd_except(std::uint64_t p) { return PrimeFilter{true, 0, 0, {p}}; }
PrimeFilter odd_residue(std::uint64_t modulus, std::uint64_t residue) {
  return PrimeFilter{true, modulus, residue, {}};
}

// A_ell(n) == (-1)^n r_{ell-1}(n) (mod ell).
ClaimCase squares_case(std::uint64_t ell, std::uint64_t k, std::uint64_t modulus) {
  return {{{"ell", static_cast<std::int64_t>(ell)}},
          Term::of(SequenceRef::overpartition(ell), LinearIndex{1, 0}),
          Term::of(SequenceRef::squares(k), LinearIndex{1, 0}, true),
          modulus};
}

std::vector<RegistryEntry> congruences() {
  std::vector<RegistryEntry> out;
  const char* shen = "earlier A3 congruences via dissection";
  out.push_back(vanishing("C-SHEN-1", 3, {4, 1}, 2, shen));
  out.push_back(vanishing("C-SHEN-2", 3, {4, 3}, 6, shen));
  out.push_back(vanishing("C-SHEN-3", 3, {9, 3}, 6, shen));
  out.push_back(vanishing("C-SHEN-4", 3, {9, 6}, 24, shen));

  {
    CongruenceClaim c;
    c.id = "C-T1";
    c.statement = "A5(n) == (-1)^n r4(n) (mod 5)";
    c.source = "(q;q)^5 == (q^5;q^5) and phi(-q) = (q;q)^2/(q^2;q^2)";
    c.n_min = 1;
    c.cases.push_back(squares_case(5, 4, 5));
    c.cases.front().params.clear();
    out.push_back(std::move(c));
  }
  out.push_back(family("C-T2", "A5(p^(4k+3)(pn+i)) == 0 (mod 5), odd p != 5", 5,
                       {1, 3, 4, odd_except(5)}, 5, "multiplicativity of d*"));
  out.push_back(vanishing("C-EX1", 5, {81, 27}, 5, "C-T2 at p = 3, k = 0, i = 1"));
  out.push_back(family("C-T3", "A5(p(pn+i)) == 0 (mod 5), p == 9 (mod 10)", 5,
                       {1, 1, 0, odd_residue(10, 9)}, 5, "1 + p == 0 (mod 5)"));
  out.push_back(vanishing("C-EX2", 5, {361, 19}, 5, "C-T3 at p = 19, i = 1"));
  {
    CongruenceClaim c;
    c.id = "C-GEN";
    c.statement = "A_ell(n) == (-1)^n r_(ell-1)(n) (mod ell), ell in {3, 7}";
    c.source = "(q;q)^ell == (q^ell;q^ell) (mod ell) with r2, r6 formulas";
    c.n_min = 1;
    c.cases.push_back(squares_case(3, 2, 3));
    c.cases.push_back(squares_case(7, 6, 7));
    out.push_back(std::move(c));
  }
  out.push_back(family("C-T5a", "A3(p^(2k+1)(pn+i)) == 0 (mod 3), p == 3 (mod 4)", 3,
                       {1, 1, 2, odd_residue(4, 3)}, 3, "r2 formula"));
  out.push_back(family("C-T5b", "A3(p^(3k+2)(pn+i)) == 0 (mod 3), p == 1 (mod 4)", 3,
                       {1, 2, 3, odd_residue(4, 1)}, 3, "r2 formula"));
  out.push_back(family("C-T5c", "A7(p^(6k+5)(pn+i)) == 0 (mod 7), odd p != 7", 7,
                       {1, 5, 6, odd_except(7)}, 7, "r6 formula"));
  {
    CongruenceClaim c;
    c.id = "C-A9";
    c.statement = "A9(n) == (-1)^n r8(n) (mod 3)";
    c.source = "(q;q)^3 == (q^3;q^3) (mod 3) applied twice";
    c.n_min = 1;
    c.cases.push_back(squares_case(9, 8, 3));
    c.cases.front().params.clear();
    out.push_back(std::move(c));
  }
  {
    CongruenceClaim c;
    c.id = "C-T6";
    c.statement = "A25(5n) == sigma3-(n) (mod 5)";
    c.source = "sum A25(5n) q^n == phi(-q)^8 (mod 5) and the r8 formula";
    c.n_min = 1;
    c.cases.push_back({{},
                       Term::of(SequenceRef::overpartition(25), LinearIndex{5, 0}),
                       Term::of(SequenceRef::sigma3_minus(), LinearIndex{1, 0}),
                       5});
    out.push_back(std::move(c));
  }
  out.push_back(family("C-T7", "A25(5p^(4k+3)(pn+i)) == 0 (mod 5), odd p != 5", 25,
                       {5, 3, 4, odd_except(5)}, 5, "multiplicativity of sigma3-"));
  out.push_back(family("C-T8", "A25(5p(pn+i)) == 0 (mod 5), p == 9 (mod 10)", 25,
                       {5, 1, 0, odd_residue(10, 9)}, 5, "1 + p^3 == 0 (mod 5)"));
  {
    CongruenceClaim c;
    c.id = "C-T9";
    c.statement = "A125(25n) == A125(625n) (mod 5)";
    c.source = "phi(-q) 5-dissection and pbar(25n) == pbar(625n) (mod 5)";
    c.n_min = 1;
    c.cases.push_back({{},
                       Term::of(SequenceRef::overpartition(125), LinearIndex{25, 0}),
                       Term::of(SequenceRef::overpartition(125), LinearIndex{625, 0}),
                       5});
    out.push_back(std::move(c));
  }
  {
    CongruenceClaim c;
    c.id = "C-T10";
    c.statement = "A_(5^alpha)(625n+i) == 0 (mod 5), i in {125, 500}, alpha in {4, 5}";
    c.source = "phi(-q^(5^alpha)) is a series in q^625 for alpha >= 4";
    for (std::uint64_t alpha : {4, 5}) {
      for (std::uint64_t i : {125, 500}) {
        c.cases.push_back({{{"alpha", static_cast<std::int64_t>(alpha)},
                            {"i", static_cast<std::int64_t>(i)}},
                           Term::of(SequenceRef::overpartition(pow5(alpha)), LinearIndex{625, i}),
                           Term::zero(),
                           5});
      }
    }
    out.push_back(std::move(c));
  }
  {
    CongruenceClaim c;
    c.id = "C-T11";
    c.statement = "A_(5^alpha)(25n) == A_(5^(alpha+2))(625n) (mod 5), alpha in {2, 3}";
    c.source = "pbar(25n) == pbar(625n) (mod 5)";
    c.n_min = 1;
    for (std::uint64_t alpha : {2, 3}) {
      c.cases.push_back(
          {{{"alpha", static_cast<std::int64_t>(alpha)}},
           Term::of(SequenceRef::overpartition(pow5(alpha)), LinearIndex{25, 0}),
           Term::of(SequenceRef::overpartition(pow5(alpha + 2)), LinearIndex{625, 0}),
           5});
    }
    out.push_back(std::move(c));
  }
  {
    CongruenceClaim c;
    c.id = "C-T12";
    c.statement =
        "A_(5^alpha)(25^j(625n+i)) == 0 (mod 5), alpha in {4, 5, 6}, 0 <= j <= (alpha-4)/2";
    c.source = "C-T10 combined with C-T11";
    for (std::uint64_t alpha : {4, 5, 6}) {
      std::uint64_t scale = 1;
      for (std::uint64_t j = 0; 2 * j <= alpha - 4; ++j, scale *= 25) {
        for (std::uint64_t i : {125, 500}) {
          c.cases.push_back({{{"alpha", static_cast<std::int64_t>(alpha)},
                              {"j", static_cast<std::int64_t>(j)},
                              {"i", static_cast<std::int64_t>(i)}},
                             Term::of(SequenceRef::overpartition(pow5(alpha)),
                                      LinearIndex{625 * scale, i * scale}),
                             Term::zero(),
                             5});
        }
      }
    }
    out.push_back(std::move(c));
  }
  {
    CongruenceClaim c;
    c.id = "C-CHEN-1";
    c.statement = "pbar(125(5n+1)) == pbar(125(5n-1)) == 0 (mod 5)";
    c.source = "known overpartition congruence";
    // 125(5n - 1) = 625(n - 1) + 500.
    c.cases.push_back({{{"sign", 1}}, Term::of(SequenceRef::pbar(), LinearIndex{625, 125}),
                       Term::zero(), 5});
    c.cases.push_back({{{"sign", -1}}, Term::of(SequenceRef::pbar(), LinearIndex{625, 500}),
                       Term::zero(), 5});
    out.push_back(std::move(c));
  }
  {
    CongruenceClaim c;
    c.id = "C-CHEN-2";
    c.statement = "pbar(25n) == pbar(625n) (mod 5)";
    c.source = "known overpartition congruence";
    c.n_min = 1;
    c.cases.push_back({{},
                       Term::of(SequenceRef::pbar(), LinearIndex{25, 0}),
                       Term::of(SequenceRef::pbar(), LinearIndex{625, 0}),
                       5});
    out.push_back(std::move(c));
  }
  {
    CongruenceClaim c;
    c.id = "C-CHEN-3";
    c.statement = "pbar(625n+125) == pbar(625n+500) == 0 (mod 5)";
    c.source = "known overpartition congruence";
    for (std::uint64_t i : {125, 500}) {
      c.cases.push_back({{{"i", static_cast<std::int64_t>(i)}},
                         Term::of(SequenceRef::pbar(), LinearIndex{625, i}), Term::zero(), 5});
    }
    out.push_back(std::move(c));
  }
  return out;
}

IdentityClaim identity(std::string id, std::string statement, std::string source) {
  IdentityClaim c;
  c.id = std::move(id);
  c.statement = std::move(statement);
  c.source = std::move(source);
  return c;
}

std::vector<RegistryEntry> identities() {
  using E = SeriesExpr;
  const auto Z = CoefficientRing::integers();
  const auto mod5 = CoefficientRing::modulo(5);
  const E phi_minus = E::phi(-1);
  const E pbar = E::sequence(SequenceRef::pbar());
  const E euler1 = E::eta(EtaQuotientSpec(0, {{1, 1}}));
  const E phi_quotient = E::eta(EtaQuotientSpec(0, {{1, 2}, {2, -1}}));

  std::vector<RegistryEntry> out;
  {
    auto c = identity("I-GF", "eta-quotient series of A_ell equals overpartition enumeration",
                      "generating function of ell-regular overpartitions");
    for (std::uint64_t ell : {3, 4, 5, 9, 25}) {
      c.cases.push_back({{{"ell", static_cast<std::int64_t>(ell)}},
                         E::sequence(SequenceRef::overpartition(ell)),
                         E::overpartition_oracle(ell),
                         Z});
    }
    c.max_order = 40;
    out.push_back(std::move(c));
  }
  {
    auto c = identity("I-QP", "(q;q)^p == (q^p;q^p) (mod p), p in {3, 5, 7}",
                      "binomial theorem");
    for (std::uint64_t p : {3, 5, 7}) {
      c.cases.push_back({{{"p", static_cast<std::int64_t>(p)}},
                         euler1.pow(static_cast<std::int64_t>(p)),
                         E::eta(EtaQuotientSpec(0, {{p, 1}})),
                         CoefficientRing::modulo(p)});
    }
    out.push_back(std::move(c));
  }
  {
    auto c = identity("I-PHI", "phi(-q) = (q;q)^2 / (q^2;q^2)", "classical product for phi(-q)");
    c.cases.push_back({{}, phi_minus, phi_quotient, Z});
    out.push_back(std::move(c));
  }
  {
    auto c = identity("I-GF5", "sum A5(n) q^n == ((q;q)^2/(q^2;q^2))^4 (mod 5)",
                      "(q;q)^5 == (q^5;q^5) (mod 5)");
    c.cases.push_back({{}, E::sequence(SequenceRef::overpartition(5)), phi_quotient.pow(4), mod5});
    out.push_back(std::move(c));
  }
  {
    auto c = identity("I-R25", "sum A25(5n) q^n == phi(-q)^8 (mod 5)",
                      "5-extraction of the A25 generating function");
    c.cases.push_back(
        {{}, E::sequence(SequenceRef::overpartition(25)).extract(5), phi_minus.pow(8), mod5});
    out.push_back(std::move(c));
  }
  {
    auto c = identity("I-TRENEER", "sum pbar(5n) q^n == phi(-q)^3 (mod 5)",
                      "known overpartition congruence");
    c.cases.push_back({{}, pbar.extract(5), phi_minus.pow(3), mod5});
    out.push_back(std::move(c));
  }
  {
    auto c = identity("I-GF125", "sum A125(125n) q^n = phi(-q) sum pbar(125n) q^n",
                      "125-extraction of the A125 generating function");
    c.cases.push_back({{},
                       E::sequence(SequenceRef::overpartition(125)).extract(125),
                       phi_minus * pbar.extract(125),
                       Z});
    out.push_back(std::move(c));
  }
  {
    auto c = identity("I-DISSECT", "phi(-q) = phi(-q^25) - 2q M1(-q^5) + 2q^4 M2(-q^5)",
                      "5-dissection of phi(-q)");
    c.cases.push_back({{}, E::dissection_residual(), E::zero(), Z});
    out.push_back(std::move(c));
  }
  {
    auto c = identity("I-TRIPLE", "f(a, b) bilateral sum equals its triple product",
                      "Jacobi triple product");
    for (auto [a, b] : {std::pair<std::uint64_t, std::uint64_t>{3, 7}, {1, 9}}) {
      const ThetaSpec spec{1, a, 1, b};
      c.cases.push_back({{{"a", static_cast<std::int64_t>(a)}, {"b", static_cast<std::int64_t>(b)}},
                         E::theta_sum(spec),
                         E::theta_product(spec),
                         Z});
    }
    out.push_back(std::move(c));
  }
  {
    auto c = identity("I-ALPHA",
                      "sum A_(5^alpha)(25n) q^n = phi(-q^(5^(alpha-2))) sum pbar(25n) q^n",
                      "25-extraction of the A_(5^alpha) generating function");
    for (std::uint64_t alpha : {2, 3, 4}) {
      c.cases.push_back({{{"alpha", static_cast<std::int64_t>(alpha)}},
                         E::sequence(SequenceRef::overpartition(pow5(alpha))).extract(25),
                         phi_minus.substitute(pow5(alpha - 2)) * pbar.extract(25),
                         Z});
    }
    out.push_back(std::move(c));
  }
  {
    auto c = identity("I-PBAR", "(-q;q) / (q;q) = (q^2;q^2) / (q;q)^2",
                      "overpartition generating function");
    c.cases.push_back({{}, E::plus_product(1) / euler1, pbar, Z});
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace

const std::vector<RegistryEntry>& builtin_registry() {
  static const std::vector<RegistryEntry> registry = [] {
    auto out = congruences();
    for (auto& entry : identities()) out.push_back(std::move(entry));
    return out;
  }();
  return registry;
}

}  // namespace qseries
