#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "pcaf/caf.hpp"

// Three-state subset search (in / out / undecided) with constraint
// propagation. Propagation only ever forces moves that preserve at least one
// witness, and every acceptance test re-checks its condition exactly, so the
// searches below are sound and complete regardless of propagation strength.

namespace pcaf::detail {

struct SearchCounters {
  std::uint64_t nodes = 0;
  std::uint64_t limit = 0;  // 0 = unlimited; exceeding throws ResourceError
};

enum class RealizeMode { CF, ADM, COM, STB, NAIVE, PRF, SEM, STG };

// First S with S ⊆ universe, claims_of(S) == target exactly, and S an
// extension of f.af() under `mode` with respect to the whole framework.
// Maximality-flavoured modes (NAIVE, PRF, SEM, STG) check their global
// condition through the witness searches below.
std::optional<ArgSet> find_realization(const ClaimFramework& f, const ArgSet& universe,
                                       const ClaimSet& target, RealizeMode mode,
                                       SearchCounters* counters = nullptr);

// True iff some conflict-free proper superset of s exists (s assumed cf).
bool exists_cf_proper_superset(const ClaimFramework& f, const ArgSet& s);
// True iff some admissible proper superset of s exists (s assumed adm).
bool exists_adm_proper_superset(const ClaimFramework& f, const ArgSet& s,
                                SearchCounters* counters = nullptr);
// True iff some admissible T has range(T) a proper superset of range0.
bool exists_adm_larger_range(const ClaimFramework& f, const ArgSet& range0,
                             SearchCounters* counters = nullptr);
// True iff some conflict-free T has range(T) a proper superset of range0.
bool exists_cf_larger_range(const ClaimFramework& f, const ArgSet& range0,
                            SearchCounters* counters = nullptr);

}  // namespace pcaf::detail
