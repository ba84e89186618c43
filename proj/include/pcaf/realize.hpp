#pragma once

#include "pcaf/pcaf.hpp"

namespace pcaf {

// Fixed-point chain for a target claim set C under reductions 2, 3, 4:
//   e0    all arguments whose claim lies in C
//   e1    e0 minus the arguments e0 attacks in the original framework;
//         the unique maximal conflict-free realization candidate
//   e(k)  members of e(k-1) defended by e(k-1) inside the reduct, k >= 2
// chain = [e1, e2, ...] is strictly decreasing until its last element,
// estar, which is the fixpoint.
struct RealizationTrace {
  ArgSet e0;
  ArgSet e1;
  std::vector<ArgSet> chain;
  ArgSet estar;
};

// Throws InputError for reduction 1, whose reduct does not preserve
// conflicts and admits no such chain; verify() covers it by direct search.
RealizationTrace realization(const PrefFramework& f, ReductionId r, const ClaimSet& c);

struct VerifyStats {
  std::uint64_t nodes = 0;
};

// Does c belong to the claim extensions of f's reduct under r and s?
// Reductions 2-4 are decided through the fixed-point chain plus, for the
// maximality-based semantics, one global witness search; reduction 1 and
// complete semantics under reductions 2 and 4 fall back to a propagated
// search over the candidate arguments. Claims outside the alphabet simply
// make the answer false.
bool verify(const PrefFramework& f, ReductionId r, SemanticsId s, const ClaimSet& c,
            VerifyStats* stats = nullptr);

}  // namespace pcaf
