#pragma once

#include "pcaf/caf.hpp"

namespace pcaf {

enum class ReductionId { R1 = 1, R2 = 2, R3 = 3, R4 = 4 };

inline constexpr ReductionId kAllReductions[] = {ReductionId::R1, ReductionId::R2,
                                                 ReductionId::R3, ReductionId::R4};

std::string_view to_string(ReductionId r);
std::optional<ReductionId> reduction_from_string(std::string_view name);  // "1".."4"

// Transitive closure of a strict preference relation over n items. Throws
// InputError when the closure is not asymmetric (a cycle in the input).
std::vector<std::pair<int, int>> transitive_closure(std::size_t n,
                                                    const std::vector<std::pair<int, int>>& prefs);

// A well-formed claim framework with an asymmetric (not necessarily
// transitive) strict preference relation over its arguments. Both invariants
// are validated on construction.
class PrefFramework {
 public:
  PrefFramework() = default;
  PrefFramework(ClaimFramework caf, const std::vector<std::pair<std::string, std::string>>& prefs);
  static PrefFramework from_indices(ClaimFramework caf,
                                    const std::vector<std::pair<int, int>>& prefs);

  const ClaimFramework& caf() const { return caf_; }
  std::size_t size() const { return caf_.size(); }

  // Pairs (a, b) with a strictly preferred to b, sorted.
  const std::vector<std::pair<int, int>>& pref_pairs() const { return prefs_; }
  bool prefers(std::size_t a, std::size_t b) const { return pref_over_[a].test(b); }
  bool has_transitive_prefs() const;

  // The preference-free claim framework obtained by rewriting each attack
  // according to the chosen reduction. The result keeps all arguments and
  // claims and is generally not well-formed.
  ClaimFramework reduce(ReductionId r) const;

  std::vector<ClaimSet> pref_extensions(ReductionId r, SemanticsId s) const;

  bool operator==(const PrefFramework& other) const;

 private:
  void init_prefs(std::vector<std::pair<int, int>> prefs);

  ClaimFramework caf_;
  std::vector<std::pair<int, int>> prefs_;
  std::vector<ArgSet> pref_over_;  // pref_over_[a].test(b) iff a preferred to b
};

}  // namespace pcaf
