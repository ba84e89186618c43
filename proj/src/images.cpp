#include "pcaf/images.hpp"

#include <algorithm>

namespace pcaf {

std::string_view to_string(ImageClassId cls) {
  switch (cls) {
    case ImageClassId::IM1: return "IM1";
    case ImageClassId::IM2: return "IM2";
    case ImageClassId::IM3: return "IM3";
    case ImageClassId::IM4: return "IM4";
    case ImageClassId::IM1_TR: return "IM1_TR";
  }
  return "?";
}

std::optional<ImageClassId> image_class_from_string(std::string_view name) {
  for (ImageClassId c : kAllImageClasses)
    if (name == to_string(c)) return c;
  return std::nullopt;
}

namespace {

std::vector<ArgSet> wfp_matrix(const ClaimFramework& f) {
  std::vector<ArgSet> m(f.size(), f.af().empty_set());
  for (auto [a, b] : f.wf_problematic()) m[a].set(b);
  return m;
}

// Reachability by paths of length >= 1.
std::vector<ArgSet> path_closure(std::vector<ArgSet> adj) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t a = 0; a < adj.size(); ++a)
      for (std::size_t b = adj[a].find_first(); b != ArgSet::npos; b = adj[a].find_next(b)) {
        ArgSet grown = adj[a] | adj[b];
        if (grown != adj[a]) {
          adj[a] = std::move(grown);
          changed = true;
        }
      }
  }
  return adj;
}

}  // namespace

bool in_image(const ClaimFramework& f, ImageClassId cls) {
  const ArgFramework& af = f.af();
  const auto wfp = f.wf_problematic();
  switch (cls) {
    case ImageClassId::IM1: {
      auto m = wfp_matrix(f);
      for (auto [a, b] : wfp)
        if (m[b].test(a)) return false;
      return true;
    }
    case ImageClassId::IM3: {
      for (auto [a, b] : wfp)
        if (!af.attacks(b, a)) return false;
      return true;
    }
    case ImageClassId::IM2:
    case ImageClassId::IM4: {
      // A problematic pair (a, b) with no counterattack on a is tolerable
      // only if every claim-mate a' attacking b fails the bracket condition
      // characteristic of the reduction.
      for (auto [a, b] : wfp) {
        if (af.attacks(b, a)) continue;
        const ArgSet& mates = f.args_with_claim(f.claim_of(a));
        for (std::size_t ap = mates.find_first(); ap != ArgSet::npos; ap = mates.find_next(ap)) {
          if (!af.attacks(ap, b)) continue;
          const bool b_hits_ap = af.attacks(b, ap);
          bool bracket = (cls == ImageClassId::IM2) ? b_hits_ap : !b_hits_ap;
          if (!bracket) {
            const ArgSet& bmates = f.args_with_claim(f.claim_of(b));
            for (std::size_t bp = bmates.find_first(); bp != ArgSet::npos;
                 bp = bmates.find_next(bp))
              if (!af.attacks(ap, bp) && !af.attacks(bp, ap)) {
                bracket = true;
                break;
              }
          }
          if (bracket) return false;
        }
      }
      return true;
    }
    case ImageClassId::IM1_TR: {
      auto reach = path_closure(wfp_matrix(f));
      for (std::size_t a = 0; a < f.size(); ++a)
        if (reach[a].test(a)) return false;
      for (auto [a, b] : af.attack_pairs())
        if (reach[a].test(b)) return false;
      return true;
    }
  }
  return false;
}

namespace {

enum PrefState { kNone = 0, kFirstOverSecond = 1, kSecondOverFirst = 2 };

bool reduct_edge(ReductionId r, bool ab, bool ba, bool a_over_b, bool b_over_a) {
  switch (r) {
    case ReductionId::R1: return ab && !b_over_a;
    case ReductionId::R2: return (ab && !b_over_a) || (ba && !ab && a_over_b);
    case ReductionId::R3: return (ab && !b_over_a) || (ab && !ba);
    case ReductionId::R4:
      return (ab && !b_over_a) || (ba && !ab && a_over_b) || (ab && !ba);
  }
  return false;
}

struct PairConstraint {
  int x, y;                  // x < y
  bool feasible[3] = {};     // indexed by PrefState
};

struct Searcher {
  const ClaimFramework& f;
  ReductionId r;
  bool transitive;
  std::uint64_t budget;
  std::uint64_t work = 0;
  bool out_of_budget = false;

  bool tick() {
    if (++work > budget) {
      out_of_budget = true;
      return false;
    }
    return true;
  }

  // Transitive-mode assignment of preference states to pairs. Triangles are
  // checked as soon as their last pair is decided, so a complete assignment
  // is transitive.
  bool assign(std::vector<PairConstraint>& pairs, std::size_t idx, std::vector<ArgSet>& pref,
              std::vector<ArgSet>& decided_with) {
    if (!tick()) return false;
    if (idx == pairs.size()) return true;
    auto& pc = pairs[idx];
    for (int s = 0; s < 3; ++s) {
      if (!pc.feasible[s]) continue;
      if (s == kFirstOverSecond) pref[pc.x].set(pc.y);
      if (s == kSecondOverFirst) pref[pc.y].set(pc.x);
      bool ok = true;
      ArgSet common = decided_with[pc.x] & decided_with[pc.y];
      for (std::size_t z = common.find_first(); ok && z != ArgSet::npos;
           z = common.find_next(z)) {
        int t[3] = {pc.x, pc.y, static_cast<int>(z)};
        for (int i = 0; ok && i < 3; ++i)
          for (int j = 0; ok && j < 3; ++j) {
            if (i == j) continue;
            for (int k = 0; k < 3; ++k) {
              if (k == i || k == j) continue;
              if (pref[t[i]].test(t[j]) && pref[t[j]].test(t[k]) && !pref[t[i]].test(t[k])) {
                ok = false;
                break;
              }
            }
          }
      }
      if (ok) {
        decided_with[pc.x].set(pc.y);
        decided_with[pc.y].set(pc.x);
        if (assign(pairs, idx + 1, pref, decided_with)) return true;
        decided_with[pc.x].reset(pc.y);
        decided_with[pc.y].reset(pc.x);
      }
      if (s == kFirstOverSecond) pref[pc.x].reset(pc.y);
      if (s == kSecondOverFirst) pref[pc.y].reset(pc.x);
      if (out_of_budget) return false;
    }
    return false;
  }
};

std::vector<std::pair<int, int>> pref_pairs_of(const std::vector<ArgSet>& pref) {
  std::vector<std::pair<int, int>> out;
  for (std::size_t a = 0; a < pref.size(); ++a)
    for (std::size_t b = pref[a].find_first(); b != ArgSet::npos; b = pref[a].find_next(b))
      out.emplace_back(static_cast<int>(a), static_cast<int>(b));
  return out;
}

}  // namespace

PreimageResult preimage_search(const ClaimFramework& f, ReductionId r, bool require_transitive,
                               std::uint64_t budget) {
  const ArgFramework& af = f.af();
  const std::size_t n = f.size();
  const std::size_t k = f.claim_count();
  PreimageResult result;

  // Out-set skeleton per claim class: self-loops are fixed points of every
  // reduction, which pins the bit of each member inside its own class;
  // reductions 1 and 3 never add attacks, so their candidates must contain
  // the input relation.
  std::vector<ArgSet> mandatory(k, af.empty_set());
  std::vector<ArgSet> forbidden(k, af.empty_set());
  for (std::size_t t = 0; t < n; ++t) {
    if (af.attacks(t, t))
      mandatory[f.claim_of(t)].set(t);
    else
      forbidden[f.claim_of(t)].set(t);
  }
  if (r == ReductionId::R1 || r == ReductionId::R3)
    for (std::size_t c = 0; c < k; ++c) {
      const ArgSet& cls = f.args_with_claim(c);
      for (std::size_t a = cls.find_first(); a != ArgSet::npos; a = cls.find_next(a))
        mandatory[c] |= af.targets_of(a);
    }
  std::vector<std::pair<int, int>> free_bits;  // (class, target)
  for (std::size_t c = 0; c < k; ++c) {
    if ((mandatory[c] & forbidden[c]).any()) return result;  // None, nothing to try
    for (std::size_t t = 0; t < n; ++t)
      if (!mandatory[c].test(t) && !forbidden[c].test(t))
        free_bits.emplace_back(static_cast<int>(c), static_cast<int>(t));
  }

  Searcher searcher{f, r, require_transitive, budget};
  std::vector<int> odometer(free_bits.size(), 0);
  std::vector<ArgSet> outsets(k, af.empty_set());
  while (true) {
    if (!searcher.tick()) {
      result.status = PreimageResult::Status::Inconclusive;
      result.candidates = searcher.work;
      return result;
    }
    for (std::size_t c = 0; c < k; ++c) outsets[c] = mandatory[c];
    for (std::size_t i = 0; i < free_bits.size(); ++i)
      if (odometer[i]) outsets[free_bits[i].first].set(free_bits[i].second);
    auto attacksP = [&](std::size_t x, std::size_t y) {
      return outsets[f.claim_of(x)].test(y);
    };

    std::vector<ArgSet> pref(n, af.empty_set());
    bool candidate_ok = true;

    if (r == ReductionId::R1) {
      // Exact closed form: deleted candidate edges require the reverse
      // preference, kept input edges forbid it; in transitive mode the
      // closure of the requirements is the minimal admissible relation.
      for (std::size_t x = 0; x < n && candidate_ok; ++x)
        for (std::size_t y = 0; y < n && candidate_ok; ++y) {
          if (x == y) continue;
          if (attacksP(x, y) && !af.attacks(x, y)) pref[y].set(x);
          if (!attacksP(x, y) && af.attacks(x, y)) candidate_ok = false;
        }
      if (candidate_ok && require_transitive) pref = path_closure(std::move(pref));
      if (candidate_ok)
        for (std::size_t a = 0; a < n && candidate_ok; ++a) {
          if (pref[a].test(a)) candidate_ok = false;
          for (std::size_t b = pref[a].find_first(); candidate_ok && b != ArgSet::npos;
               b = pref[a].find_next(b)) {
            if (pref[b].test(a)) candidate_ok = false;
            if (af.attacks(b, a)) candidate_ok = false;  // forbidden: edge must stay
          }
        }
    } else {
      std::vector<PairConstraint> pairs;
      for (std::size_t x = 0; x < n && candidate_ok; ++x)
        for (std::size_t y = x + 1; y < n && candidate_ok; ++y) {
          PairConstraint pc{static_cast<int>(x), static_cast<int>(y), {}};
          bool any = false;
          for (int s = 0; s < 3; ++s) {
            const bool x_over_y = s == kFirstOverSecond;
            const bool y_over_x = s == kSecondOverFirst;
            if (reduct_edge(r, attacksP(x, y), attacksP(y, x), x_over_y, y_over_x) ==
                    af.attacks(x, y) &&
                reduct_edge(r, attacksP(y, x), attacksP(x, y), y_over_x, x_over_y) ==
                    af.attacks(y, x)) {
              pc.feasible[s] = true;
              any = true;
            }
          }
          if (!any) candidate_ok = false;
          pairs.push_back(pc);
        }
      if (candidate_ok) {
        if (require_transitive) {
          std::vector<ArgSet> decided(n, af.empty_set());
          candidate_ok = searcher.assign(pairs, 0, pref, decided);
          if (searcher.out_of_budget) {
            result.status = PreimageResult::Status::Inconclusive;
            result.candidates = searcher.work;
            return result;
          }
        } else {
          for (const auto& pc : pairs) {
            if (pc.feasible[kNone]) continue;
            if (pc.feasible[kFirstOverSecond])
              pref[pc.x].set(pc.y);
            else
              pref[pc.y].set(pc.x);
          }
        }
      }
    }

    if (candidate_ok) {
      std::vector<std::pair<int, int>> rel;
      for (std::size_t x = 0; x < n; ++x)
        for (std::size_t y = 0; y < n; ++y)
          if (attacksP(x, y)) rel.emplace_back(static_cast<int>(x), static_cast<int>(y));
      PrefFramework candidate =
          PrefFramework::from_indices(f.with_attacks(rel), pref_pairs_of(pref));
      if (candidate.reduce(r) == f) {
        result.status = PreimageResult::Status::Found;
        result.preimage = std::move(candidate);
        result.candidates = searcher.work;
        return result;
      }
    }

    std::size_t i = 0;
    while (i < odometer.size() && odometer[i] == 1) odometer[i++] = 0;
    if (i == odometer.size()) break;
    odometer[i] = 1;
  }
  result.status = PreimageResult::Status::None;
  result.candidates = searcher.work;
  return result;
}

PrefFramework canonical_r1_preimage(const ClaimFramework& f) {
  if (!in_image(f, ImageClassId::IM1_TR))
    throw InputError("framework is not a reduction-1 reduct with transitive preferences");
  auto wfp = f.wf_problematic();
  auto rel = f.af().attack_pairs();
  rel.insert(rel.end(), wfp.begin(), wfp.end());
  auto reach = path_closure(wfp_matrix(f));
  std::vector<std::pair<int, int>> prefs;
  for (std::size_t a = 0; a < f.size(); ++a)
    for (std::size_t b = reach[a].find_first(); b != ArgSet::npos; b = reach[a].find_next(b))
      prefs.emplace_back(static_cast<int>(b), static_cast<int>(a));
  return PrefFramework::from_indices(f.with_attacks(rel), prefs);
}

}  // namespace pcaf
