#include "pcaf/af.hpp"

#include <algorithm>

namespace pcaf {

std::string_view to_string(SemanticsId s) {
  switch (s) {
    case SemanticsId::CF: return "cf";
    case SemanticsId::ADM: return "adm";
    case SemanticsId::COM: return "com";
    case SemanticsId::NAIVE: return "naive";
    case SemanticsId::STB: return "stb";
    case SemanticsId::PRF: return "prf";
    case SemanticsId::SEM: return "sem";
    case SemanticsId::STG: return "stg";
  }
  return "?";
}

std::optional<SemanticsId> semantics_from_string(std::string_view name) {
  for (SemanticsId s : kAllSemantics)
    if (name == to_string(s)) return s;
  return std::nullopt;
}

ArgFramework::ArgFramework(std::vector<std::string> args,
                           const std::vector<std::pair<std::string, std::string>>& attacks)
    : names_(std::move(args)) {
  index_.reserve(names_.size());
  for (std::size_t i = 0; i < names_.size(); ++i) {
    if (names_[i].empty()) throw InputError("empty argument name");
    if (!index_.emplace(names_[i], static_cast<int>(i)).second)
      throw InputError("duplicate argument name: " + names_[i]);
  }
  targets_.assign(names_.size(), ArgSet(names_.size()));
  attackers_.assign(names_.size(), ArgSet(names_.size()));
  for (const auto& [src, dst] : attacks) {
    int a = index_of(src), b = index_of(dst);
    if (a < 0) throw InputError("attack endpoint is not a declared argument: " + src);
    if (b < 0) throw InputError("attack endpoint is not a declared argument: " + dst);
    targets_[a].set(b);
    attackers_[b].set(a);
  }
}

ArgFramework ArgFramework::from_indices(std::vector<std::string> args,
                                        const std::vector<std::pair<int, int>>& attacks) {
  ArgFramework f(std::move(args), {});
  for (auto [a, b] : attacks) {
    if (a < 0 || b < 0 || static_cast<std::size_t>(a) >= f.size() ||
        static_cast<std::size_t>(b) >= f.size())
      throw InputError("attack endpoint index out of range");
    f.targets_[a].set(b);
    f.attackers_[b].set(a);
  }
  return f;
}

int ArgFramework::index_of(std::string_view name) const {
  auto it = index_.find(std::string(name));
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::pair<int, int>> ArgFramework::attack_pairs() const {
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < size(); ++a)
    for (std::size_t b = targets_[a].find_first(); b != ArgSet::npos;
         b = targets_[a].find_next(b))
      out.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return out;
}

std::size_t ArgFramework::attack_count() const {
  std::size_t n = 0;
  for (const auto& t : targets_) n += t.count();
  return n;
}

ArgSet ArgFramework::set_of(const std::vector<std::string>& members) const {
  ArgSet e(size());
  for (const auto& m : members) {
    int i = index_of(m);
    if (i < 0) throw InputError("not an argument of this framework: " + m);
    e.set(i);
  }
  return e;
}

std::vector<std::string> ArgFramework::names_of(const ArgSet& e) const {
  check_member_set(e);
  std::vector<std::string> out;
  for (std::size_t i = e.find_first(); i != ArgSet::npos; i = e.find_next(i))
    out.push_back(names_[i]);
  return out;
}

void ArgFramework::check_member_set(const ArgSet& e) const {
  if (e.size() != size()) throw InputError("extension does not belong to this framework");
}

ArgSet ArgFramework::attacked_set(const ArgSet& e) const {
  check_member_set(e);
  ArgSet out(size());
  for (std::size_t i = e.find_first(); i != ArgSet::npos; i = e.find_next(i))
    out |= targets_[i];
  return out;
}

bool ArgFramework::defends(const ArgSet& e, std::size_t x) const {
  if (x >= size()) throw InputError("argument index out of range");
  return attackers_[x].is_subset_of(attacked_set(e));
}

bool ArgFramework::conflict_free(const ArgSet& e) const {
  check_member_set(e);
  for (std::size_t i = e.find_first(); i != ArgSet::npos; i = e.find_next(i))
    if (targets_[i].intersects(e)) return false;
  return true;
}

bool ArgFramework::is_extension(const ArgSet& e, SemanticsId s) const {
  check_member_set(e);
  if (!conflict_free(e)) return false;
  const ArgSet attacked = attacked_set(e);
  auto admissible = [&] {
    for (std::size_t i = e.find_first(); i != ArgSet::npos; i = e.find_next(i))
      if (!attackers_[i].is_subset_of(attacked)) return false;
    return true;
  };
  switch (s) {
    case SemanticsId::CF:
      return true;
    case SemanticsId::ADM:
      return admissible();
    case SemanticsId::COM: {
      if (!admissible()) return false;
      for (std::size_t x = 0; x < size(); ++x)
        if (!e.test(x) && attackers_[x].is_subset_of(attacked)) return false;
      return true;
    }
    case SemanticsId::NAIVE: {
      for (std::size_t x = 0; x < size(); ++x) {
        if (e.test(x)) continue;
        if (!targets_[x].test(x) && !targets_[x].intersects(e) && !attackers_[x].intersects(e))
          return false;
      }
      return true;
    }
    case SemanticsId::STB:
      return (e | attacked).count() == size();
    case SemanticsId::PRF: {
      if (!admissible()) return false;
      for (const ArgSet& t : extensions(SemanticsId::ADM))
        if (e.is_proper_subset_of(t)) return false;
      return true;
    }
    case SemanticsId::SEM: {
      if (!admissible()) return false;
      const ArgSet range = e | attacked;
      for (const ArgSet& t : extensions(SemanticsId::ADM))
        if (range.is_proper_subset_of(range_of(t))) return false;
      return true;
    }
    case SemanticsId::STG: {
      const ArgSet range = e | attacked;
      for (const ArgSet& t : extensions(SemanticsId::CF))
        if (range.is_proper_subset_of(range_of(t))) return false;
      return true;
    }
  }
  return false;
}

namespace {

// All conflict-free sets by depth-first extension of conflict-free partial
// sets. `blocked` holds every argument attacking or attacked by `cur`, so
// supersets of a conflicting pair are pruned without re-scanning `cur`.
void collect_cf(const ArgFramework& f, std::size_t next, ArgSet& cur, ArgSet& blocked,
                std::vector<ArgSet>& out) {
  out.push_back(cur);
  for (std::size_t i = next; i < f.size(); ++i) {
    if (blocked.test(i) || f.targets_of(i).test(i)) continue;
    ArgSet saved_blocked = blocked;
    cur.set(i);
    blocked |= f.targets_of(i);
    blocked |= f.attackers_of(i);
    collect_cf(f, i + 1, cur, blocked, out);
    cur.reset(i);
    blocked = std::move(saved_blocked);
  }
}

std::vector<ArgSet> range_maximal(const ArgFramework& f, const std::vector<ArgSet>& pool) {
  std::vector<ArgSet> ranges;
  ranges.reserve(pool.size());
  for (const ArgSet& e : pool) ranges.push_back(f.range_of(e));
  std::vector<ArgSet> out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < pool.size() && !dominated; ++j)
      if (ranges[i].is_proper_subset_of(ranges[j])) dominated = true;
    if (!dominated) out.push_back(pool[i]);
  }
  return out;
}

}  // namespace

std::vector<ArgSet> ArgFramework::extensions(SemanticsId s) const {
  std::vector<ArgSet> cf;
  {
    ArgSet cur(size()), blocked(size());
    collect_cf(*this, 0, cur, blocked, cf);
  }
  std::vector<ArgSet> result;
  switch (s) {
    case SemanticsId::CF:
      result = std::move(cf);
      break;
    case SemanticsId::NAIVE:
      result = maximal_sets(cf);
      break;
    case SemanticsId::STB: {
      for (const ArgSet& e : cf)
        if (range_of(e).count() == size()) result.push_back(e);
      break;
    }
    case SemanticsId::STG:
      result = range_maximal(*this, cf);
      break;
    case SemanticsId::ADM:
    case SemanticsId::COM:
    case SemanticsId::PRF:
    case SemanticsId::SEM: {
      std::vector<ArgSet> adm;
      for (const ArgSet& e : cf) {
        const ArgSet attacked = attacked_set(e);
        bool ok = true;
        for (std::size_t i = e.find_first(); ok && i != ArgSet::npos; i = e.find_next(i))
          if (!attackers_[i].is_subset_of(attacked)) ok = false;
        if (ok) adm.push_back(e);
      }
      if (s == SemanticsId::ADM) {
        result = std::move(adm);
      } else if (s == SemanticsId::PRF) {
        result = maximal_sets(adm);
      } else if (s == SemanticsId::SEM) {
        result = range_maximal(*this, adm);
      } else {
        for (const ArgSet& e : adm) {
          const ArgSet attacked = attacked_set(e);
          bool complete = true;
          for (std::size_t x = 0; x < size() && complete; ++x)
            if (!e.test(x) && attackers_[x].is_subset_of(attacked)) complete = false;
          if (complete) result.push_back(e);
        }
      }
      break;
    }
  }
  sort_extensions(result);
  return result;
}

bool ArgFramework::operator==(const ArgFramework& other) const {
  return names_ == other.names_ && targets_ == other.targets_;
}

std::vector<ArgSet> maximal_sets(const std::vector<ArgSet>& sets) {
  std::vector<ArgSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j)
      if (sets[i].is_proper_subset_of(sets[j])) dominated = true;
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

void sort_extensions(std::vector<ArgSet>& sets) {
  std::sort(sets.begin(), sets.end(), [](const ArgSet& a, const ArgSet& b) {
    std::size_t i = a.find_first(), j = b.find_first();
    while (i != ArgSet::npos && j != ArgSet::npos) {
      if (i != j) return i < j;
      i = a.find_next(i);
      j = b.find_next(j);
    }
    return j != ArgSet::npos;
  });
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
}

}  // namespace pcaf
