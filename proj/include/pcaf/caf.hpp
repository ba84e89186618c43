#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "pcaf/af.hpp"

namespace pcaf {

// A claim extension rendered at the claim level. std::set's lexicographic
// element order makes {alpha} sort before {alpha,beta}, matching the textual
// order of the rendered forms "[alpha]" < "[alpha,beta]".
using ClaimSet = std::set<std::string>;

std::string to_string(const ClaimSet& c);  // "[alpha,beta]", "[]" when empty
void sort_claim_sets(std::vector<ClaimSet>& sets);

// An argumentation framework whose arguments carry claims. Well-formedness
// (same-claim arguments attack the same targets) is a checkable property,
// not an invariant: reducts of preference frameworks routinely violate it.
class ClaimFramework {
 public:
  ClaimFramework() = default;
  // claim_names[i] is the claim of argument i of `af`.
  ClaimFramework(ArgFramework af, const std::vector<std::string>& claim_names);

  const ArgFramework& af() const { return af_; }
  std::size_t size() const { return af_.size(); }

  std::size_t claim_count() const { return claims_.size(); }
  const std::vector<std::string>& claim_names() const { return claims_; }
  const std::string& claim_name(std::size_t c) const { return claims_[c]; }
  int claim_index(std::string_view name) const;  // -1 when absent
  int claim_of(std::size_t arg) const { return claim_of_[arg]; }
  const ArgSet& args_with_claim(std::size_t c) const { return claim_class_[c]; }

  ClaimSet claims_of(const ArgSet& e) const;
  // Arguments whose claim lies in `c`. Claims absent from this framework's
  // alphabet contribute no arguments.
  ArgSet args_for(const ClaimSet& c) const;

  bool is_well_formed() const;
  // All pairs (a, b) with (a, b) not an attack while some argument sharing
  // a's claim attacks b. Empty exactly when the framework is well-formed.
  std::vector<std::pair<int, int>> wf_problematic() const;

  std::vector<ClaimSet> claim_extensions(SemanticsId s) const;

  // Same arguments and claims, different attack relation.
  ClaimFramework with_attacks(const std::vector<std::pair<int, int>>& attacks) const;

  bool operator==(const ClaimFramework& other) const;

 private:
  ArgFramework af_;
  std::vector<int> claim_of_;
  std::vector<std::string> claims_;  // sorted, unique
  std::vector<ArgSet> claim_class_;
};

}  // namespace pcaf
