// Seeded registry mutations: each must be caught by the verifier.
#ifndef QSERIES_TESTS_MUTATIONS_HPP
#define QSERIES_TESTS_MUTATIONS_HPP

#include <string>
#include <vector>

#include "qseries/congruence.hpp"

namespace mutations {

struct Mutation {
  std::string name;
  qseries::CongruenceClaim claim;
};

inline qseries::CongruenceClaim registry_claim(const std::string& id) {
  return std::get<qseries::CongruenceClaim>(*qseries::find_entry(id));
}

inline std::vector<Mutation> seeded() {
  using namespace qseries;
  std::vector<Mutation> out;

  auto sign = registry_claim("C-T1");
  sign.cases[0].rhs.sign_twist = !sign.cases[0].rhs.sign_twist;
  out.push_back({"sign flip (C-T1 without (-1)^n)", sign});

  auto modulus = registry_claim("C-T6");
  modulus.cases[0].modulus += 1;
  out.push_back({"modulus +1 (C-T6 mod 6)", modulus});

  auto offset = registry_claim("C-EX1");
  std::get<LinearIndex>(offset.cases[0].lhs.index).b += 1;
  out.push_back({"offset b+1 (C-EX1 at 81n+28)", offset});

  auto rhs = registry_claim("C-T6");
  rhs.cases[0].rhs.seq = SequenceRef::d_star();
  out.push_back({"wrong rhs sequence (C-T6 against d*)", rhs});

  auto multiplier = registry_claim("C-T6");
  std::get<LinearIndex>(multiplier.cases[0].lhs.index).a -= 1;
  out.push_back({"wrong multiplier (C-T6 at 4n)", multiplier});

  return out;
}

}  // namespace mutations

#endif  // QSERIES_TESTS_MUTATIONS_HPP
