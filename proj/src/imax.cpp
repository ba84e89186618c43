#include "pcaf/imax.hpp"

#include <algorithm>

#include "rng.hpp"

namespace pcaf {

using detail::uniform01;
using detail::uniform_int;

std::optional<std::pair<ClaimSet, ClaimSet>> check_imaximality(
    const std::vector<ClaimSet>& family) {
  std::vector<ClaimSet> sorted = family;
  sort_claim_sets(sorted);
  for (const ClaimSet& p : sorted)
    for (const ClaimSet& q : sorted) {
      if (p.size() >= q.size()) continue;
      if (std::includes(q.begin(), q.end(), p.begin(), p.end()))
        return std::make_pair(p, q);
    }
  return std::nullopt;
}

PrefFramework random_pcaf(std::mt19937_64& rng, int max_args, int max_claims,
                          bool transitive_only) {
  const int n = uniform_int(rng, 1, max_args);
  const int k = uniform_int(rng, 1, std::min(max_claims, n));

  std::vector<std::string> args, claims;
  for (int i = 0; i < n; ++i) args.push_back("a" + std::to_string(i));
  std::vector<int> claim_of(n);
  for (int i = 0; i < n; ++i) claim_of[i] = i < k ? i : uniform_int(rng, 0, k - 1);
  for (int i = 0; i < n; ++i) claims.push_back("c" + std::to_string(claim_of[i]));

  const double density = 0.1 + 0.4 * uniform01(rng);
  std::vector<std::pair<int, int>> attacks;
  for (int c = 0; c < k; ++c)
    for (int t = 0; t < n; ++t)
      if (uniform01(rng) < density)
        for (int a = 0; a < n; ++a)
          if (claim_of[a] == c) attacks.emplace_back(a, t);

  std::vector<std::pair<int, int>> prefs;
  if (transitive_only) {
    std::vector<int> perm(n);
    for (int i = 0; i < n; ++i) perm[i] = i;
    for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[uniform_int(rng, 0, i)]);
    const double q = 0.1 + 0.4 * uniform01(rng);
    std::vector<std::pair<int, int>> base;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (uniform01(rng) < q) base.emplace_back(perm[i], perm[j]);
    prefs = transitive_closure(static_cast<std::size_t>(n), base);
  } else {
    const double p = 0.1 + 0.4 * uniform01(rng);
    for (int a = 0; a < n; ++a)
      for (int b = a + 1; b < n; ++b)
        if (uniform01(rng) < p) {
          if (uniform01(rng) < 0.5)
            prefs.emplace_back(a, b);
          else
            prefs.emplace_back(b, a);
        }
  }
  return PrefFramework::from_indices(
      ClaimFramework(ArgFramework::from_indices(std::move(args), attacks), claims), prefs);
}

FalsifyResult falsify_imaximality(ReductionId r, SemanticsId s, const FalsifyOptions& opt) {
  FalsifyResult result;
  std::mt19937_64 rng(opt.seed);
  for (std::uint64_t t = 0; t < opt.trials; ++t) {
    PrefFramework pf = random_pcaf(rng, opt.max_args, opt.max_claims, opt.transitive_only);
    ++result.trials_run;
    auto violation = check_imaximality(pf.pref_extensions(r, s));
    if (violation) {
      result.counterexample = std::move(pf);
      result.violation = std::move(violation);
      return result;
    }
  }
  return result;
}

namespace {

PrefFramework build(const std::vector<std::pair<std::string, std::string>>& args_claims,
                    const std::vector<std::pair<std::string, std::string>>& attacks,
                    const std::vector<std::pair<std::string, std::string>>& prefs) {
  std::vector<std::string> args, claims;
  for (const auto& [a, c] : args_claims) {
    args.push_back(a);
    claims.push_back(c);
  }
  return PrefFramework(ClaimFramework(ArgFramework(std::move(args), attacks), claims), prefs);
}

ClaimSet cs(std::initializer_list<const char*> names) {
  ClaimSet out;
  for (const char* n : names) out.insert(n);
  return out;
}

void add_block(std::vector<CatalogEntry>& entries, const std::string& stem,
               const PrefFramework& pf, ReductionId r, const std::vector<SemanticsId>& sems,
               std::vector<ClaimSet> expected,
               std::optional<std::pair<ClaimSet, ClaimSet>> violation) {
  for (SemanticsId s : sems)
    entries.push_back(CatalogEntry{stem + "-" + std::string(to_string(s)), pf, r, s, expected,
                                   violation});
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> entries;
  const std::vector<SemanticsId> quad = {SemanticsId::STB, SemanticsId::PRF, SemanticsId::SEM,
                                         SemanticsId::STG};

  // Two claim-alpha arguments, one of them demoted below its beta attacker.
  PrefFramework fig1_r1 = build({{"a", "alpha"}, {"ap", "alpha"}, {"b", "beta"}},
                                {{"a", "b"}, {"b", "a"}, {"ap", "b"}}, {{"b", "ap"}});
  add_block(entries, "fig1-right-R1", fig1_r1, ReductionId::R1, quad,
            {cs({"alpha"}), cs({"alpha", "beta"})},
            std::make_pair(cs({"alpha"}), cs({"alpha", "beta"})));

  // A single reversed attack yields the same mutual conflict under
  // reduction 4, with the spare alpha argument left isolated.
  PrefFramework fig1_r4 = build({{"a", "alpha"}, {"ap", "alpha"}, {"b", "beta"}},
                                {{"b", "a"}}, {{"a", "b"}});
  add_block(entries, "fig1-right-R4", fig1_r4, ReductionId::R4, quad,
            {cs({"alpha"}), cs({"alpha", "beta"})},
            std::make_pair(cs({"alpha"}), cs({"alpha", "beta"})));

  // Reduction 2 reverses one attack of each beta argument, leaving a
  // four-cycle plus an isolated alpha argument.
  PrefFramework fig4_r2 = build(
      {{"a", "alpha"}, {"ap", "alpha"}, {"app", "alpha"}, {"b", "beta"}, {"bp", "beta"}},
      {{"b", "a"}, {"b", "ap"}, {"bp", "a"}, {"bp", "ap"}}, {{"a", "b"}, {"ap", "bp"}});
  add_block(entries, "fig4-right-R2", fig4_r2, ReductionId::R2, quad,
            {cs({"alpha"}), cs({"alpha", "beta"})},
            std::make_pair(cs({"alpha"}), cs({"alpha", "beta"})));

  // Stage semantics under reduction 3: deleting one attack of the
  // three-cycle makes the naive ranges incomparable.
  PrefFramework fig4_l3 =
      build({{"a", "alpha"}, {"ap", "alpha"}, {"b", "beta"}, {"c", "gamma"}},
            {{"a", "b"}, {"b", "c"}, {"c", "a"}, {"ap", "b"}, {"b", "ap"}}, {{"b", "ap"}});
  add_block(entries, "fig4-left-R3", fig4_l3, ReductionId::R3, {SemanticsId::STG},
            {cs({"alpha"}), cs({"alpha", "gamma"}), cs({"beta"})},
            std::make_pair(cs({"alpha"}), cs({"alpha", "gamma"})));

  // Naive semantics already fails on a preference-free well-formed
  // framework; every reduction leaves it untouched.
  PrefFramework wf_naive =
      build({{"x", "alpha"}, {"z", "alpha"}, {"y", "beta"}}, {{"y", "x"}}, {});
  for (ReductionId r : kAllReductions)
    add_block(entries, "wfcaf-naive-R" + std::string(to_string(r)), wf_naive, r,
              {SemanticsId::NAIVE}, {cs({"alpha"}), cs({"alpha", "beta"})},
              std::make_pair(cs({"alpha"}), cs({"alpha", "beta"})));

  // Baseline antichain: stable families can also be incomparable.
  PrefFramework ex4 = build({{"a", "alpha"}, {"ap", "alpha"}, {"b", "beta"}},
                            {{"a", "b"}, {"ap", "b"}, {"b", "a"}}, {{"b", "ap"}});
  add_block(entries, "example4-R2", ex4, ReductionId::R2, {SemanticsId::STB},
            {cs({"alpha"}), cs({"beta"})}, std::nullopt);

  return entries;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

}  // namespace pcaf
