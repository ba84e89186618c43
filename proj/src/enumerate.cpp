#include "pcaf/enumerate.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <thread>

#include "search.hpp"

namespace pcaf {

namespace {

using Clock = std::chrono::steady_clock;

struct ChainResult {
  ArgSet e1;
  ArgSet estar;
};

ChainResult chain_for(const ClaimFramework& caf, const ClaimFramework& red, const ArgSet& e0) {
  ChainResult out{e0 - caf.af().attacked_set(e0), caf.af().empty_set()};
  ArgSet cur = out.e1;
  while (true) {
    ArgSet defended = red.af().empty_set();
    for (std::size_t x = cur.find_first(); x != ArgSet::npos; x = cur.find_next(x))
      if (red.af().defends(cur, x)) defended.set(x);
    if (defended == cur) break;
    cur = std::move(defended);
  }
  out.estar = std::move(cur);
  return out;
}

using ClaimMask = boost::dynamic_bitset<>;

ClaimMask claims_mask(const ClaimFramework& caf, const ArgSet& e) {
  ClaimMask m(caf.claim_count());
  for (std::size_t i = e.find_first(); i != ArgSet::npos; i = e.find_next(i))
    m.set(caf.claim_of(i));
  return m;
}

ClaimSet mask_to_claims(const ClaimFramework& caf, const ClaimMask& m) {
  ClaimSet out;
  for (std::size_t c = m.find_first(); c != ClaimMask::npos; c = m.find_next(c))
    out.insert(caf.claim_name(c));
  return out;
}

ArgSet args_of_mask(const ClaimFramework& caf, const ClaimMask& m) {
  ArgSet e0 = caf.af().empty_set();
  for (std::size_t c = m.find_first(); c != ClaimMask::npos; c = m.find_next(c))
    e0 |= caf.args_with_claim(c);
  return e0;
}

bool uses_claim_loop(ReductionId r, SemanticsId s) {
  if (r == ReductionId::R1) return false;
  if (s == SemanticsId::COM && r != ReductionId::R3) return false;
  return true;
}

struct LoopHit {
  std::uint64_t mask;
  ArgSet witness;  // e1 or estar, whichever the semantics filters on
};

// Evaluates one claim subset; returns the witness to pool (for the
// maximality-based semantics) or to accept directly (for the others).
std::optional<ArgSet> loop_candidate(const ClaimFramework& caf, const ClaimFramework& red,
                                     SemanticsId s, const ClaimMask& mask) {
  ArgSet e0 = args_of_mask(caf, mask);
  ChainResult chain = chain_for(caf, red, e0);
  switch (s) {
    case SemanticsId::CF:
      if (claims_mask(caf, chain.e1) == mask) return chain.e1;
      return std::nullopt;
    case SemanticsId::NAIVE:
      if (claims_mask(caf, chain.e1) == mask &&
          red.af().is_extension(chain.e1, SemanticsId::NAIVE))
        return chain.e1;
      return std::nullopt;
    case SemanticsId::STG:
      if (claims_mask(caf, chain.e1) == mask) return chain.e1;
      return std::nullopt;
    case SemanticsId::ADM:
      if (claims_mask(caf, chain.estar) == mask) return chain.estar;
      return std::nullopt;
    case SemanticsId::STB:
      if (claims_mask(caf, chain.estar) == mask &&
          (chain.estar | red.af().attacked_set(chain.estar)).count() == red.size())
        return chain.estar;
      return std::nullopt;
    case SemanticsId::COM:
      if (claims_mask(caf, chain.estar) == mask &&
          red.af().is_extension(chain.estar, SemanticsId::COM))
        return chain.estar;
      return std::nullopt;
    case SemanticsId::PRF:
    case SemanticsId::SEM:
      if (claims_mask(caf, chain.estar) == mask) return chain.estar;
      return std::nullopt;
  }
  return std::nullopt;
}

std::vector<ClaimSet> claim_loop(const PrefFramework& f, ReductionId r, SemanticsId s,
                                 const EnumOptions& opts, EnumStats* stats) {
  const ClaimFramework& caf = f.caf();
  const std::size_t k = caf.claim_count();
  if (k > opts.max_claims)
    throw ResourceError("claim alphabet larger than the configured limit of " +
                        std::to_string(opts.max_claims));
  ClaimFramework red = f.reduce(r);
  const std::uint64_t total = std::uint64_t{1} << k;
  if (stats) stats->candidates += total;

  if (s == SemanticsId::PRF && r == ReductionId::R3 && opts.r3_prf_pruning) {
    // Decreasing-size walk; accepted sets form an antichain, so any subset
    // of an accepted set cannot be accepted and is skipped unevaluated.
    std::vector<std::uint64_t> masks(total);
    for (std::uint64_t m = 0; m < total; ++m) masks[m] = m;
    std::stable_sort(masks.begin(), masks.end(), [](std::uint64_t a, std::uint64_t b) {
      return std::popcount(a) > std::popcount(b);
    });
    std::vector<std::uint64_t> accepted_masks;
    std::vector<ClaimSet> out;
    for (std::uint64_t m : masks) {
      bool covered = false;
      for (std::uint64_t a : accepted_masks)
        if ((m & a) == m && m != a) {
          covered = true;
          break;
        }
      if (covered) continue;
      ClaimMask mask(k, m);
      ArgSet e0 = args_of_mask(caf, mask);
      ChainResult chain = chain_for(caf, red, e0);
      if (claims_mask(caf, chain.estar) != mask) continue;
      if (detail::exists_adm_proper_superset(red, chain.estar)) continue;
      accepted_masks.push_back(m);
      out.push_back(mask_to_claims(caf, mask));
    }
    sort_claim_sets(out);
    return out;
  }

  const bool pooled =
      s == SemanticsId::PRF || s == SemanticsId::SEM || s == SemanticsId::STG;
  const int jobs = std::max(1, opts.jobs);
  std::vector<std::vector<LoopHit>> per_thread(jobs);
  auto worker = [&](int t) {
    for (std::uint64_t m = t; m < total; m += jobs) {
      ClaimMask mask(k, m);
      if (auto witness = loop_candidate(caf, red, s, mask))
        per_thread[t].push_back({m, std::move(*witness)});
    }
  };
  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> threads;
    for (int t = 0; t < jobs; ++t) threads.emplace_back(worker, t);
    for (auto& th : threads) th.join();
  }
  std::vector<LoopHit> hits;
  for (auto& v : per_thread)
    for (auto& h : v) hits.push_back(std::move(h));

  std::vector<ClaimSet> out;
  if (!pooled) {
    for (const LoopHit& h : hits) out.push_back(mask_to_claims(caf, ClaimMask(k, h.mask)));
  } else {
    // Keep the pool entries whose witness (set for preferred, range for the
    // range-based semantics) is maximal across the whole pool; those are
    // exactly the reduct's extensions realizing their claim set.
    std::vector<ArgSet> keys;
    keys.reserve(hits.size());
    for (const LoopHit& h : hits)
      keys.push_back(s == SemanticsId::PRF ? h.witness : red.af().range_of(h.witness));
    for (std::size_t i = 0; i < hits.size(); ++i) {
      bool dominated = false;
      for (std::size_t j = 0; j < hits.size() && !dominated; ++j)
        if (keys[i].is_proper_subset_of(keys[j])) dominated = true;
      if (!dominated) out.push_back(mask_to_claims(caf, ClaimMask(k, hits[i].mask)));
    }
  }
  sort_claim_sets(out);
  return out;
}

std::vector<ClaimSet> argument_level(const PrefFramework& f, ReductionId r, SemanticsId s,
                                     const EnumOptions& opts, EnumStats* stats) {
  if (f.size() > opts.max_args)
    throw ResourceError("framework larger than the configured limit of " +
                        std::to_string(opts.max_args) + " arguments");
  ClaimFramework red = f.reduce(r);
  auto exts = red.af().extensions(s);
  if (stats) stats->candidates += exts.size();
  std::vector<ClaimSet> out;
  for (const ArgSet& e : exts) out.push_back(red.claims_of(e));
  sort_claim_sets(out);
  return out;
}

}  // namespace

std::vector<ClaimSet> enumerate_claim_extensions(const PrefFramework& f, ReductionId r,
                                                 SemanticsId s, const EnumOptions& opts,
                                                 EnumStats* stats) {
  auto start = Clock::now();
  std::vector<ClaimSet> out = uses_claim_loop(r, s) ? claim_loop(f, r, s, opts, stats)
                                                    : argument_level(f, r, s, opts, stats);
  if (stats)
    stats->elapsed_seconds +=
        std::chrono::duration_cast<std::chrono::duration<double>>(Clock::now() - start).count();
  return out;
}

bool credulous(const PrefFramework& f, ReductionId r, SemanticsId s, const std::string& claim,
               const EnumOptions& opts, EnumStats* stats) {
  for (const ClaimSet& c : enumerate_claim_extensions(f, r, s, opts, stats))
    if (c.count(claim)) return true;
  return false;
}

bool skeptical(const PrefFramework& f, ReductionId r, SemanticsId s, const std::string& claim,
               const EnumOptions& opts, EnumStats* stats) {
  for (const ClaimSet& c : enumerate_claim_extensions(f, r, s, opts, stats))
    if (!c.count(claim)) return false;
  return true;
}

}  // namespace pcaf
