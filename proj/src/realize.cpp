#include "pcaf/realize.hpp"

#include "search.hpp"

namespace pcaf {

RealizationTrace realization(const PrefFramework& f, ReductionId r, const ClaimSet& c) {
  if (r == ReductionId::R1)
    throw InputError("the fixed-point chain is defined for reductions 2-4 only; "
                     "reduction 1 does not preserve conflict-freeness");
  const ClaimFramework& caf = f.caf();
  ClaimFramework red = f.reduce(r);

  RealizationTrace t;
  t.e0 = caf.args_for(c);
  // Well-formedness makes e1 the unique maximal conflict-free realization:
  // an argument of e0 attacked inside e0 is attacked by every claim-cover.
  t.e1 = t.e0 - caf.af().attacked_set(t.e0);
  t.chain.push_back(t.e1);
  while (true) {
    const ArgSet& prev = t.chain.back();
    ArgSet defended = red.af().empty_set();
    for (std::size_t x = prev.find_first(); x != ArgSet::npos; x = prev.find_next(x))
      if (red.af().defends(prev, x)) defended.set(x);
    if (defended == prev) break;
    t.chain.push_back(std::move(defended));
  }
  t.estar = t.chain.back();
  return t;
}

namespace {

bool verify_by_search(const PrefFramework& f, ReductionId r, SemanticsId s, const ClaimSet& c,
                      VerifyStats* stats) {
  ClaimFramework red = f.reduce(r);
  detail::RealizeMode mode = detail::RealizeMode::CF;
  switch (s) {
    case SemanticsId::CF: mode = detail::RealizeMode::CF; break;
    case SemanticsId::ADM: mode = detail::RealizeMode::ADM; break;
    case SemanticsId::COM: mode = detail::RealizeMode::COM; break;
    case SemanticsId::NAIVE: mode = detail::RealizeMode::NAIVE; break;
    case SemanticsId::STB: mode = detail::RealizeMode::STB; break;
    case SemanticsId::PRF: mode = detail::RealizeMode::PRF; break;
    case SemanticsId::SEM: mode = detail::RealizeMode::SEM; break;
    case SemanticsId::STG: mode = detail::RealizeMode::STG; break;
  }
  detail::SearchCounters counters;
  auto found = detail::find_realization(red, red.args_for(c), c, mode, &counters);
  if (stats) stats->nodes += counters.nodes;
  return found.has_value();
}

}  // namespace

bool verify(const PrefFramework& f, ReductionId r, SemanticsId s, const ClaimSet& c,
            VerifyStats* stats) {
  if (r == ReductionId::R1 ||
      (s == SemanticsId::COM && (r == ReductionId::R2 || r == ReductionId::R4)))
    return verify_by_search(f, r, s, c, stats);

  for (const auto& name : c)
    if (f.caf().claim_index(name) < 0) return false;

  RealizationTrace t = realization(f, r, c);
  const ClaimFramework& caf = f.caf();
  ClaimFramework red = f.reduce(r);
  detail::SearchCounters counters;
  bool answer = false;
  switch (s) {
    case SemanticsId::CF:
      answer = caf.claims_of(t.e1) == c;
      break;
    case SemanticsId::NAIVE:
      answer = caf.claims_of(t.e1) == c && red.af().is_extension(t.e1, SemanticsId::NAIVE);
      break;
    case SemanticsId::ADM:
      answer = caf.claims_of(t.estar) == c;
      break;
    case SemanticsId::STB:
      // A stable realization is admissible, hence contained in estar, and
      // attacks everything outside itself, hence equal to estar.
      answer = caf.claims_of(t.estar) == c &&
               (t.estar | red.af().attacked_set(t.estar)).count() == red.size();
      break;
    case SemanticsId::COM:
      answer = caf.claims_of(t.estar) == c && red.af().is_extension(t.estar, SemanticsId::COM);
      break;
    case SemanticsId::PRF:
      answer = caf.claims_of(t.estar) == c && !detail::exists_adm_proper_superset(red, t.estar, &counters);
      break;
    case SemanticsId::SEM:
      answer = caf.claims_of(t.estar) == c &&
               !detail::exists_adm_larger_range(red, red.af().range_of(t.estar), &counters);
      break;
    case SemanticsId::STG:
      answer = caf.claims_of(t.e1) == c &&
               !detail::exists_cf_larger_range(red, red.af().range_of(t.e1), &counters);
      break;
  }
  if (stats) stats->nodes += counters.nodes;
  return answer;
}

}  // namespace pcaf
