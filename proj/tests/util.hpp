#pragma once

// Shared helpers for the unit tests: deterministic instance generators and
// small conversion utilities. The generators here are test-local on purpose;
// they do not reuse the library's samplers.

#include <random>
#include <string>
#include <utility>
#include <vector>

#include "pcaf/pcaf.hpp"

namespace testutil {

inline int rint(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

inline bool chance(std::mt19937_64& rng, double p) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53 < p;
}

inline std::vector<std::string> arg_names(int n) {
  std::vector<std::string> out;
  for (int i = 0; i < n; ++i) out.push_back("a" + std::to_string(i));
  return out;
}

inline pcaf::ArgFramework random_af(std::mt19937_64& rng, int max_args) {
  const int n = rint(rng, 1, max_args);
  const double density = 0.1 + 0.5 * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
  std::vector<std::pair<int, int>> attacks;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (chance(rng, density)) attacks.emplace_back(a, b);
  return pcaf::ArgFramework::from_indices(arg_names(n), attacks);
}

// Arbitrary claim framework; usually not well-formed. Claims are surjective
// onto k names.
inline pcaf::ClaimFramework random_caf(std::mt19937_64& rng, int max_args, int max_claims) {
  pcaf::ArgFramework af = random_af(rng, max_args);
  const int n = static_cast<int>(af.size());
  const int k = rint(rng, 1, std::min(max_claims, n));
  std::vector<std::string> claims;
  for (int i = 0; i < n; ++i) {
    const int c = i < k ? i : rint(rng, 0, k - 1);
    claims.push_back("k" + std::to_string(c));
  }
  return pcaf::ClaimFramework(std::move(af), claims);
}

inline pcaf::ArgSet set_from_mask(const pcaf::ArgFramework& af, std::uint32_t mask) {
  pcaf::ArgSet out = af.empty_set();
  for (std::size_t i = 0; i < af.size(); ++i)
    if (mask >> i & 1) out.set(i);
  return out;
}

inline pcaf::ClaimSet cs(std::initializer_list<const char*> names) {
  pcaf::ClaimSet out;
  for (const char* n : names) out.insert(n);
  return out;
}

// Canonical claim partitions: claim of argument 0 is index 0 and each later
// argument uses an existing index or the next fresh one, up to max_claims.
// Visits each partition as a vector of per-argument claim indices.
template <class Fn>
void for_each_partition(int n, int max_claims, Fn&& fn) {
  std::vector<int> claim(n, 0);
  auto rec = [&](auto&& self, int i, int used) -> void {
    if (i == n) {
      fn(claim);
      return;
    }
    const int limit = std::min(used + 1, max_claims);
    for (int c = 0; c < limit; ++c) {
      claim[i] = c;
      self(self, i + 1, std::max(used, c + 1));
    }
  };
  rec(rec, 0, 0);
}

inline std::vector<std::string> claim_names_of(const std::vector<int>& claim) {
  std::vector<std::string> out;
  for (int c : claim) out.push_back("k" + std::to_string(c));
  return out;
}

// All asymmetric preference relations over n arguments: each unordered pair
// is none / forward / backward.
template <class Fn>
void for_each_pref_relation(int n, Fn&& fn) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b) pairs.emplace_back(a, b);
  std::vector<int> state(pairs.size(), 0);
  std::vector<std::pair<int, int>> prefs;
  while (true) {
    prefs.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      if (state[i] == 1) prefs.push_back(pairs[i]);
      if (state[i] == 2) prefs.emplace_back(pairs[i].second, pairs[i].first);
    }
    fn(prefs);
    std::size_t i = 0;
    while (i < state.size() && state[i] == 2) state[i++] = 0;
    if (i == state.size()) break;
    ++state[i];
  }
}

// All well-formed attack relations for a given claim partition: one target
// set per claim class, shared by the class members.
template <class Fn>
void for_each_class_attack_relation(const std::vector<int>& claim, int claim_count, Fn&& fn) {
  const int n = static_cast<int>(claim.size());
  std::vector<std::uint32_t> out_set(claim_count, 0);
  std::vector<std::pair<int, int>> attacks;
  const std::uint32_t top = claim_count * n >= 31 ? 0 : std::uint32_t(1) << (claim_count * n);
  for (std::uint32_t code = 0;; ++code) {
    for (int c = 0; c < claim_count; ++c)
      out_set[c] = (code >> (c * n)) & ((std::uint32_t(1) << n) - 1);
    attacks.clear();
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        if (out_set[claim[a]] >> b & 1) attacks.emplace_back(a, b);
    fn(attacks);
    if (code + 1 == top || top == 0) break;
  }
}

}  // namespace testutil
