#include "pcaf/pcaf.hpp"

#include <algorithm>

namespace pcaf {

std::string_view to_string(ReductionId r) {
  switch (r) {
    case ReductionId::R1: return "1";
    case ReductionId::R2: return "2";
    case ReductionId::R3: return "3";
    case ReductionId::R4: return "4";
  }
  return "?";
}

std::optional<ReductionId> reduction_from_string(std::string_view name) {
  for (ReductionId r : kAllReductions)
    if (name == to_string(r)) return r;
  return std::nullopt;
}

std::vector<std::pair<int, int>> transitive_closure(std::size_t n,
                                                    const std::vector<std::pair<int, int>>& prefs) {
  std::vector<ArgSet> over(n, ArgSet(n));
  for (auto [a, b] : prefs) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= n || static_cast<std::size_t>(b) >= n)
      throw InputError("preference index out of range");
    over[a].set(b);
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = over[a].find_first(); b != ArgSet::npos; b = over[a].find_next(b)) {
        ArgSet grown = over[a] | over[b];
        if (grown != over[a]) {
          over[a] = std::move(grown);
          changed = true;
        }
      }
  }
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = over[a].find_first(); b != ArgSet::npos; b = over[a].find_next(b)) {
      if (over[b].test(a) || a == b)
        throw InputError("transitive closure of the preferences is not asymmetric");
      out.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return out;
}

PrefFramework::PrefFramework(ClaimFramework caf,
                             const std::vector<std::pair<std::string, std::string>>& prefs)
    : caf_(std::move(caf)) {
  std::vector<std::pair<int, int>> idx;
  for (const auto& [x, y] : prefs) {
    int a = caf_.af().index_of(x), b = caf_.af().index_of(y);
    if (a < 0) throw InputError("preference endpoint is not a declared argument: " + x);
    if (b < 0) throw InputError("preference endpoint is not a declared argument: " + y);
    idx.emplace_back(a, b);
  }
  init_prefs(std::move(idx));
}

PrefFramework PrefFramework::from_indices(ClaimFramework caf,
                                          const std::vector<std::pair<int, int>>& prefs) {
  PrefFramework f;
  f.caf_ = std::move(caf);
  for (auto [a, b] : prefs)
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= f.size() ||
        static_cast<std::size_t>(b) >= f.size())
      throw InputError("preference index out of range");
  f.init_prefs(prefs);
  return f;
}

void PrefFramework::init_prefs(std::vector<std::pair<int, int>> prefs) {
  if (!caf_.is_well_formed())
    throw InputError("claim framework is not well-formed: arguments with equal claims "
                     "must attack the same targets");
  pref_over_.assign(size(), caf_.af().empty_set());
  for (auto [a, b] : prefs) {
    if (a == b)
      throw InputError("preference relation is not asymmetric: " + caf_.af().name_of(a) +
                       " over itself");
    if (pref_over_[b].test(a))
      throw InputError("preference relation is not asymmetric: " + caf_.af().name_of(a) +
                       " and " + caf_.af().name_of(b) + " prefer each other");
    pref_over_[a].set(b);
  }
  prefs_.clear();
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = pref_over_[a].find_first(); b != ArgSet::npos;
         b = pref_over_[a].find_next(b))
      prefs_.emplace_back(static_cast<int>(a), static_cast<int>(b));
}

bool PrefFramework::has_transitive_prefs() const {
  for (auto [a, b] : prefs_)
    for (std::size_t c = pref_over_[b].find_first(); c != ArgSet::npos;
         c = pref_over_[b].find_next(c))
      if (!pref_over_[a].test(c)) return false;
  return true;
}

ClaimFramework PrefFramework::reduce(ReductionId r) const {
  const ArgFramework& af = caf_.af();
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = 0; b < size(); ++b) {
      const bool ab = af.attacks(a, b);
      const bool ba = af.attacks(b, a);
      const bool a_over_b = prefers(a, b);
      const bool b_over_a = prefers(b, a);
      bool keep = false;
      switch (r) {
        case ReductionId::R1:
          keep = ab && !b_over_a;
          break;
        case ReductionId::R2:
          keep = (ab && !b_over_a) || (ba && !ab && a_over_b);
          break;
        case ReductionId::R3:
          keep = (ab && !b_over_a) || (ab && !ba);
          break;
        case ReductionId::R4:
          keep = (ab && !b_over_a) || (ba && !ab && a_over_b) || (ab && !ba);
          break;
      }
      if (keep) out.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return caf_.with_attacks(out);
}

std::vector<ClaimSet> PrefFramework::pref_extensions(ReductionId r, SemanticsId s) const {
  return reduce(r).claim_extensions(s);
}

bool PrefFramework::operator==(const PrefFramework& other) const {
  return caf_ == other.caf_ && prefs_ == other.prefs_;
}

}  // namespace pcaf
