#include "search.hpp"

namespace pcaf::detail {

namespace {

enum class FinalCheck { None, Naive, Prf, Sem, Stg };

struct Engine {
  const ClaimFramework& f;
  const ArgFramework& af;
  SearchCounters* counters;

  ArgSet universe;
  std::vector<ArgSet> cover_classes;  // one per target claim; all must intersect `in`
  bool need_defense = false;
  bool need_complete = false;
  bool need_stable = false;
  ArgSet seed;
  bool require_proper = false;
  ArgSet range0;
  bool require_range = false;
  FinalCheck final_check = FinalCheck::None;
  // Branch on plain undecided arguments once all obligations are met. Needed
  // whenever a rejected candidate may have an accepted superset.
  bool explore = false;

  ArgSet isolated;  // no attackers and no targets
  std::optional<ArgSet> result;

  explicit Engine(const ClaimFramework& cf, SearchCounters* ctrs)
      : f(cf), af(cf.af()), counters(ctrs), universe(af.empty_set()), seed(af.empty_set()),
        range0(af.empty_set()), isolated(af.empty_set()) {
    for (std::size_t a = 0; a < af.size(); ++a)
      if (af.attackers_of(a).none() && af.targets_of(a).none()) isolated.set(a);
  }

  void restrict_universe(ArgSet base) {
    for (std::size_t a = 0; a < af.size(); ++a)
      if (af.attacks(a, a)) base.reset(a);
    universe = std::move(base);
  }

  ArgSet attackers_union(const ArgSet& e) const {
    ArgSet out = af.empty_set();
    for (std::size_t i = e.find_first(); i != ArgSet::npos; i = e.find_next(i))
      out |= af.attackers_of(i);
    return out;
  }

  bool search(ArgSet in, ArgSet out) {
    if (counters) {
      ++counters->nodes;
      if (counters->limit && counters->nodes > counters->limit)
        throw ResourceError("subset search exceeded its node budget");
    }

    // Propagation to a fixpoint; every rule either prunes a provably dead
    // branch or forces an argument that some remaining witness must contain.
    ArgSet attacked = af.attacked_set(in);
    while (true) {
      if ((attacked & in).any()) return false;  // forced args collided
      ArgSet und = universe & ~in & ~out;
      ArgSet conflicted = und & (attacked | attackers_union(in));
      if (conflicted.any()) {
        out |= conflicted;
        continue;
      }
      ArgSet force = und & isolated;
      for (const ArgSet& cls : cover_classes) {
        if ((in & cls).any()) continue;
        ArgSet cand = und & cls;
        if (cand.none()) return false;
        if (cand.count() == 1) force |= cand;
      }
      if (need_defense) {
        for (std::size_t x = in.find_first(); x != ArgSet::npos; x = in.find_next(x)) {
          ArgSet open = af.attackers_of(x) - attacked;
          for (std::size_t b = open.find_first(); b != ArgSet::npos; b = open.find_next(b)) {
            ArgSet cand = und & af.attackers_of(b);
            if (cand.none()) return false;
            if (cand.count() == 1) force |= cand;
          }
        }
      }
      if (need_stable) {
        for (std::size_t y = 0; y < af.size(); ++y) {
          if (in.test(y) || attacked.test(y)) continue;
          ArgSet cand = und & af.attackers_of(y);
          if (und.test(y)) cand.set(y);
          if (cand.none()) return false;
          if (cand.count() == 1) force |= cand;
        }
      }
      if (need_complete) {
        // Defense by `in` is monotone, so an argument defended now is
        // defended by every completion and must belong to it.
        for (std::size_t y = 0; y < af.size(); ++y) {
          if (in.test(y) || !af.attackers_of(y).is_subset_of(attacked)) continue;
          if (!und.test(y)) return false;
          force.set(y);
        }
      }
      if (require_range) {
        ArgSet potential = in | und | attacked | af.attacked_set(und);
        if (!range0.is_subset_of(potential)) return false;
        ArgSet open = range0 - (in | attacked);
        for (std::size_t r = open.find_first(); r != ArgSet::npos; r = open.find_next(r)) {
          ArgSet cand = und & af.attackers_of(r);
          if (und.test(r)) cand.set(r);
          if (cand.count() == 1) force |= cand;
        }
      }
      force -= in;
      if (force.none()) break;
      in |= force;
      attacked = af.attacked_set(in);
    }

    const ArgSet und = universe & ~in & ~out;

    if (accept(in, attacked)) {
      result = in;
      return true;
    }

    std::size_t pick = choose_branch(in, und, attacked);
    if (pick == ArgSet::npos) return false;
    {
      ArgSet in2 = in;
      in2.set(pick);
      if (search(std::move(in2), out)) return true;
    }
    out.set(pick);
    return search(std::move(in), std::move(out));
  }

  bool accept(const ArgSet& in, const ArgSet& attacked) {
    for (const ArgSet& cls : cover_classes)
      if (!(in & cls).any()) return false;
    if (need_defense) {
      for (std::size_t x = in.find_first(); x != ArgSet::npos; x = in.find_next(x))
        if (!af.attackers_of(x).is_subset_of(attacked)) return false;
    }
    if (need_stable && (in | attacked).count() != af.size()) return false;
    if (require_proper && in == seed) return false;
    if (require_range) {
      ArgSet range = in | attacked;
      if (!range0.is_subset_of(range) || range == range0) return false;
    }
    switch (final_check) {
      case FinalCheck::None: break;
      case FinalCheck::Naive:
        if (exists_cf_proper_superset(f, in)) return false;
        break;
      case FinalCheck::Prf:
        if (exists_adm_proper_superset(f, in, counters)) return false;
        break;
      case FinalCheck::Sem:
        if (exists_adm_larger_range(f, in | attacked, counters)) return false;
        break;
      case FinalCheck::Stg:
        if (exists_cf_larger_range(f, in | attacked, counters)) return false;
        break;
    }
    return true;
  }

  // Most constrained obligation first; ties broken toward the lowest index
  // so runs are deterministic.
  std::size_t choose_branch(const ArgSet& in, const ArgSet& und, const ArgSet& attacked) const {
    ArgSet best = af.empty_set();
    std::size_t best_count = ArgSet::npos;
    auto consider = [&](const ArgSet& cand) {
      std::size_t c = cand.count();
      if (c > 1 && c < best_count) {
        best = cand;
        best_count = c;
      }
    };
    for (const ArgSet& cls : cover_classes)
      if (!(in & cls).any()) consider(und & cls);
    if (need_defense) {
      for (std::size_t x = in.find_first(); x != ArgSet::npos; x = in.find_next(x)) {
        ArgSet open = af.attackers_of(x) - attacked;
        for (std::size_t b = open.find_first(); b != ArgSet::npos; b = open.find_next(b))
          consider(und & af.attackers_of(b));
      }
    }
    if (need_stable) {
      for (std::size_t y = 0; y < af.size(); ++y) {
        if (in.test(y) || attacked.test(y)) continue;
        ArgSet cand = und & af.attackers_of(y);
        if (und.test(y)) cand.set(y);
        consider(cand);
      }
    }
    if (require_range) {
      ArgSet open = range0 - (in | attacked);
      for (std::size_t r = open.find_first(); r != ArgSet::npos; r = open.find_next(r)) {
        ArgSet cand = und & af.attackers_of(r);
        if (und.test(r)) cand.set(r);
        consider(cand);
      }
    }
    if (best_count != ArgSet::npos) return best.find_first();
    if (explore) return und.find_first();
    return ArgSet::npos;
  }
};

}  // namespace

std::optional<ArgSet> find_realization(const ClaimFramework& f, const ArgSet& universe,
                                       const ClaimSet& target, RealizeMode mode,
                                       SearchCounters* counters) {
  std::vector<ArgSet> classes;
  ArgSet allowed = f.af().empty_set();
  for (const auto& name : target) {
    int c = f.claim_index(name);
    if (c < 0) return std::nullopt;  // claim outside the alphabet is unrealizable
    classes.push_back(f.args_with_claim(c));
    allowed |= classes.back();
  }
  Engine e(f, counters);
  e.restrict_universe(universe & allowed);
  e.cover_classes = std::move(classes);
  switch (mode) {
    case RealizeMode::CF:
      break;
    case RealizeMode::ADM:
      e.need_defense = true;
      break;
    case RealizeMode::COM:
      e.need_defense = true;
      e.need_complete = true;
      break;
    case RealizeMode::STB:
      e.need_stable = true;
      break;
    case RealizeMode::NAIVE:
      e.final_check = FinalCheck::Naive;
      e.explore = true;
      break;
    case RealizeMode::PRF:
      e.need_defense = true;
      e.final_check = FinalCheck::Prf;
      e.explore = true;
      break;
    case RealizeMode::SEM:
      e.need_defense = true;
      e.final_check = FinalCheck::Sem;
      e.explore = true;
      break;
    case RealizeMode::STG:
      e.final_check = FinalCheck::Stg;
      e.explore = true;
      break;
  }
  e.search(f.af().empty_set(), f.af().empty_set());
  return e.result;
}

bool exists_cf_proper_superset(const ClaimFramework& f, const ArgSet& s) {
  const ArgFramework& af = f.af();
  ArgSet blocked = af.attacked_set(s);
  for (std::size_t i = s.find_first(); i != ArgSet::npos; i = s.find_next(i))
    blocked |= af.attackers_of(i);
  for (std::size_t u = 0; u < af.size(); ++u)
    if (!s.test(u) && !blocked.test(u) && !af.attacks(u, u)) return true;
  return false;
}

bool exists_adm_proper_superset(const ClaimFramework& f, const ArgSet& s,
                                SearchCounters* counters) {
  Engine e(f, counters);
  e.restrict_universe(f.af().full_set());
  e.need_defense = true;
  e.seed = s;
  e.require_proper = true;
  e.explore = true;
  return e.search(s, f.af().empty_set());
}

bool exists_adm_larger_range(const ClaimFramework& f, const ArgSet& range0,
                             SearchCounters* counters) {
  Engine e(f, counters);
  e.restrict_universe(f.af().full_set());
  e.need_defense = true;
  e.range0 = range0;
  e.require_range = true;
  e.explore = true;
  return e.search(f.af().empty_set(), f.af().empty_set());
}

bool exists_cf_larger_range(const ClaimFramework& f, const ArgSet& range0,
                            SearchCounters* counters) {
  Engine e(f, counters);
  e.restrict_universe(f.af().full_set());
  e.range0 = range0;
  e.require_range = true;
  e.explore = true;
  return e.search(f.af().empty_set(), f.af().empty_set());
}

}  // namespace pcaf::detail
