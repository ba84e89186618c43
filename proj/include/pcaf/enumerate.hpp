#pragma once

#include "pcaf/pcaf.hpp"

namespace pcaf {

struct EnumOptions {
  // Size guards; exceeding one raises ResourceError before any search runs.
  std::size_t max_args = 64;    // argument-level enumeration paths
  std::size_t max_claims = 20;  // claim-subset loop paths
  int jobs = 1;                 // worker threads for the claim-subset loop
  // Under reduction 3 and preferred semantics the accepted claim sets form
  // an antichain, so subsets of accepted sets can be skipped when walking
  // claim sets by decreasing size. Off by default; forces jobs = 1.
  bool r3_prf_pruning = false;
};

struct EnumStats {
  std::uint64_t candidates = 0;  // claim subsets or argument extensions examined
  double elapsed_seconds = 0.0;
};

// All claim sets of f's reduct under r and s, sorted. Reductions 2-4 run a
// 2^k loop over claim subsets (complete semantics under reductions 2 and 4
// excepted); reduction 1 and the exceptions project argument-level
// extensions of the reduct.
std::vector<ClaimSet> enumerate_claim_extensions(const PrefFramework& f, ReductionId r,
                                                 SemanticsId s, const EnumOptions& opts = {},
                                                 EnumStats* stats = nullptr);

// claim appears in some / in every enumerated claim set (vacuously true for
// an empty family).
bool credulous(const PrefFramework& f, ReductionId r, SemanticsId s, const std::string& claim,
               const EnumOptions& opts = {}, EnumStats* stats = nullptr);
bool skeptical(const PrefFramework& f, ReductionId r, SemanticsId s, const std::string& claim,
               const EnumOptions& opts = {}, EnumStats* stats = nullptr);

}  // namespace pcaf
