#pragma once

#include <cstdint>
#include <random>

#include "pcaf/pcaf.hpp"

namespace pcaf {

// First violating pair (P, Q) with P a proper subset of Q, minimizing (P, Q)
// in the sorted claim-set order; nullopt when the family is an antichain.
std::optional<std::pair<ClaimSet, ClaimSet>> check_imaximality(const std::vector<ClaimSet>& family);

// Uniform-ish preference framework sampler. Claims are surjective onto a
// random alphabet of at most max_claims names; attacks are drawn per
// (claim class, target) pair, so the framework is well-formed by
// construction. With transitive_only the preferences are a random strict
// partial order (closure of pairs oriented along a random permutation).
PrefFramework random_pcaf(std::mt19937_64& rng, int max_args, int max_claims,
                          bool transitive_only);

struct FalsifyOptions {
  std::uint64_t trials = 1000;
  std::uint64_t seed = 0;
  int max_args = 7;
  int max_claims = 4;
  bool transitive_only = false;
};

struct FalsifyResult {
  std::optional<PrefFramework> counterexample;
  std::optional<std::pair<ClaimSet, ClaimSet>> violation;
  std::uint64_t trials_run = 0;
};

// Random search for a framework whose claim extensions under (r, s) are not
// an antichain. Exact families are computed by argument-level enumeration,
// so a reported violation is always genuine.
FalsifyResult falsify_imaximality(ReductionId r, SemanticsId s, const FalsifyOptions& opt);

// A fixed instance witnessing (or probing) the I-maximality behaviour of one
// (reduction, semantics) cell. `expected` is the full sorted claim-extension
// family; `expected_violation` is the first violating pair when the cell
// fails I-maximality.
struct CatalogEntry {
  std::string name;
  PrefFramework pf;
  ReductionId reduction;
  SemanticsId semantics;
  std::vector<ClaimSet> expected;
  std::optional<std::pair<ClaimSet, ClaimSet>> expected_violation;
};

// Hand-built witnesses covering every cell of the I-maximality table that
// fails, plus a baseline entry whose family is an antichain.
const std::vector<CatalogEntry>& catalog();

}  // namespace pcaf
