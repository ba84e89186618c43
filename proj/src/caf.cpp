#include "pcaf/caf.hpp"

#include <algorithm>

namespace pcaf {

std::string to_string(const ClaimSet& c) {
  std::string out = "[";
  for (const auto& name : c) {
    if (out.size() > 1) out += ',';
    out += name;
  }
  out += ']';
  return out;
}

void sort_claim_sets(std::vector<ClaimSet>& sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

ClaimFramework::ClaimFramework(ArgFramework af, const std::vector<std::string>& claim_names)
    : af_(std::move(af)) {
  if (claim_names.size() != af_.size())
    throw InputError("expected one claim per argument");
  for (const auto& c : claim_names)
    if (c.empty()) throw InputError("empty claim name");
  claims_ = claim_names;
  std::sort(claims_.begin(), claims_.end());
  claims_.erase(std::unique(claims_.begin(), claims_.end()), claims_.end());
  claim_of_.resize(af_.size());
  claim_class_.assign(claims_.size(), af_.empty_set());
  for (std::size_t i = 0; i < af_.size(); ++i) {
    auto it = std::lower_bound(claims_.begin(), claims_.end(), claim_names[i]);
    claim_of_[i] = static_cast<int>(it - claims_.begin());
    claim_class_[claim_of_[i]].set(i);
  }
}

int ClaimFramework::claim_index(std::string_view name) const {
  auto it = std::lower_bound(claims_.begin(), claims_.end(), name);
  if (it == claims_.end() || *it != name) return -1;
  return static_cast<int>(it - claims_.begin());
}

ClaimSet ClaimFramework::claims_of(const ArgSet& e) const {
  ClaimSet out;
  for (std::size_t i = e.find_first(); i != ArgSet::npos; i = e.find_next(i))
    out.insert(claims_[claim_of_[i]]);
  return out;
}

ArgSet ClaimFramework::args_for(const ClaimSet& c) const {
  ArgSet out = af_.empty_set();
  for (const auto& name : c) {
    int idx = claim_index(name);
    if (idx >= 0) out |= claim_class_[idx];
  }
  return out;
}

bool ClaimFramework::is_well_formed() const {
  for (const auto& cls : claim_class_) {
    std::size_t first = cls.find_first();
    for (std::size_t i = cls.find_next(first); i != ArgSet::npos; i = cls.find_next(i))
      if (af_.targets_of(i) != af_.targets_of(first)) return false;
  }
  return true;
}

std::vector<std::pair<int, int>> ClaimFramework::wf_problematic() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t c = 0; c < claim_class_.size(); ++c) {
    ArgSet class_targets = af_.empty_set();
    for (std::size_t i = claim_class_[c].find_first(); i != ArgSet::npos;
         i = claim_class_[c].find_next(i))
      class_targets |= af_.targets_of(i);
    for (std::size_t a = claim_class_[c].find_first(); a != ArgSet::npos;
         a = claim_class_[c].find_next(a)) {
      ArgSet missing = class_targets - af_.targets_of(a);
      for (std::size_t b = missing.find_first(); b != ArgSet::npos; b = missing.find_next(b))
        out.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<ClaimSet> ClaimFramework::claim_extensions(SemanticsId s) const {
  std::vector<ClaimSet> out;
  for (const ArgSet& e : af_.extensions(s)) out.push_back(claims_of(e));
  sort_claim_sets(out);
  return out;
}

ClaimFramework ClaimFramework::with_attacks(const std::vector<std::pair<int, int>>& attacks) const {
  std::vector<std::string> per_arg(size());
  for (std::size_t i = 0; i < size(); ++i) per_arg[i] = claims_[claim_of_[i]];
  return ClaimFramework(ArgFramework::from_indices(af_.arg_names(), attacks), per_arg);
}

bool ClaimFramework::operator==(const ClaimFramework& other) const {
  return af_ == other.af_ && claim_of_ == other.claim_of_ && claims_ == other.claims_;
}

}  // namespace pcaf
