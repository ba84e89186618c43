#pragma once

// Self-contained ground truth for the test suite. The computation core works
// on plain bitmask structs and flat 2^n loops and never calls into the
// library; the adapters at the bottom only move data between representations.
// Everything here is deliberately naive so that a disagreement with the
// library points at the library.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "pcaf/pcaf.hpp"

namespace oracle {

using Mask = std::uint32_t;

enum class Sem { CF, ADM, COM, NAIVE, STB, PRF, SEMI, STG };

struct Af {
  int n = 0;
  std::vector<Mask> att;  // att[a] bit b set iff a attacks b
};

struct Caf {
  Af af;
  std::vector<int> claim;  // claim index per argument
  int claim_count = 0;
};

struct Pcaf {
  Caf caf;
  std::vector<Mask> pref;  // pref[a] bit b set iff a strictly preferred to b
};

inline Mask full_mask(int n) { return n >= 32 ? ~Mask(0) : (Mask(1) << n) - 1; }

inline Mask attacked_by(const Af& af, Mask e) {
  Mask out = 0;
  for (int a = 0; a < af.n; ++a)
    if (e >> a & 1) out |= af.att[a];
  return out;
}

inline bool conflict_free(const Af& af, Mask e) {
  for (int a = 0; a < af.n; ++a)
    if ((e >> a & 1) && (af.att[a] & e)) return false;
  return true;
}

// Every attacker of a member of e is counter-attacked by e.
inline bool defends_itself(const Af& af, Mask e) {
  Mask hit = attacked_by(af, e);
  for (int b = 0; b < af.n; ++b)
    if (!(hit >> b & 1) && (af.att[b] & e)) return false;
  return true;
}

inline bool defends_arg(const Af& af, Mask e, int x) {
  Mask hit = attacked_by(af, e);
  for (int b = 0; b < af.n; ++b)
    if ((af.att[b] >> x & 1) && !(hit >> b & 1)) return false;
  return true;
}

inline bool admissible(const Af& af, Mask e) {
  return conflict_free(af, e) && defends_itself(af, e);
}

inline bool complete(const Af& af, Mask e) {
  if (!admissible(af, e)) return false;
  for (int x = 0; x < af.n; ++x)
    if (!(e >> x & 1) && defends_arg(af, e, x)) return false;
  return true;
}

inline bool stable(const Af& af, Mask e) {
  return conflict_free(af, e) && (e | attacked_by(af, e)) == full_mask(af.n);
}

inline std::vector<Mask> subset_maximal(const std::vector<Mask>& pool) {
  std::vector<Mask> out;
  for (Mask e : pool) {
    bool dominated = false;
    for (Mask f : pool)
      if (f != e && (e | f) == f) { dominated = true; break; }
    if (!dominated) out.push_back(e);
  }
  return out;
}

inline std::vector<Mask> range_maximal(const Af& af, const std::vector<Mask>& pool) {
  std::vector<Mask> out;
  for (Mask e : pool) {
    Mask re = e | attacked_by(af, e);
    bool dominated = false;
    for (Mask f : pool) {
      Mask rf = f | attacked_by(af, f);
      if (rf != re && (re | rf) == rf) { dominated = true; break; }
    }
    if (!dominated) out.push_back(e);
  }
  return out;
}

inline std::vector<Mask> extensions(const Af& af, Sem s) {
  if (af.n > 20) throw std::logic_error("oracle limited to 20 arguments");
  std::vector<Mask> pool;
  const Mask full = full_mask(af.n);
  for (Mask e = 0;; ++e) {
    bool keep = false;
    switch (s) {
      case Sem::CF:
      case Sem::NAIVE:
      case Sem::STG: keep = conflict_free(af, e); break;
      case Sem::ADM:
      case Sem::PRF:
      case Sem::SEMI: keep = admissible(af, e); break;
      case Sem::COM: keep = complete(af, e); break;
      case Sem::STB: keep = stable(af, e); break;
    }
    if (keep) pool.push_back(e);
    if (e == full) break;
  }
  switch (s) {
    case Sem::NAIVE:
    case Sem::PRF: pool = subset_maximal(pool); break;
    case Sem::SEMI:
    case Sem::STG: pool = range_maximal(af, pool); break;
    default: break;
  }
  std::sort(pool.begin(), pool.end());
  return pool;
}

inline Mask claims_of(const Caf& f, Mask e) {
  Mask out = 0;
  for (int a = 0; a < f.af.n; ++a)
    if (e >> a & 1) out |= Mask(1) << f.claim[a];
  return out;
}

inline std::vector<Mask> claim_extensions(const Caf& f, Sem s) {
  std::vector<Mask> fam;
  for (Mask e : extensions(f.af, s)) fam.push_back(claims_of(f, e));
  std::sort(fam.begin(), fam.end());
  fam.erase(std::unique(fam.begin(), fam.end()), fam.end());
  return fam;
}

// Independent restatement of the four attack rewrites over ordered pairs.
inline Af reduce(const Pcaf& p, int r) {
  Af out;
  out.n = p.caf.af.n;
  out.att.assign(out.n, 0);
  for (int a = 0; a < out.n; ++a)
    for (int b = 0; b < out.n; ++b) {
      const bool ab = p.caf.af.att[a] >> b & 1;
      const bool ba = p.caf.af.att[b] >> a & 1;
      const bool apb = p.pref[a] >> b & 1;
      const bool bpa = p.pref[b] >> a & 1;
      bool keep = false;
      switch (r) {
        case 1: keep = ab && !bpa; break;
        case 2: keep = (ab && !bpa) || (ba && !ab && apb); break;
        case 3: keep = (ab && !bpa) || (ab && !ba); break;
        case 4: keep = (ab && !bpa) || (ba && !ab && apb) || (ab && !ba); break;
        default: throw std::logic_error("bad reduction id");
      }
      if (keep) out.att[a] |= Mask(1) << b;
    }
  return out;
}

inline std::vector<Mask> pref_claim_extensions(const Pcaf& p, int r, Sem s) {
  Caf red{reduce(p, r), p.caf.claim, p.caf.claim_count};
  return claim_extensions(red, s);
}

// ---- adapters between library objects and oracle structs ----

inline Af to_oracle(const pcaf::ArgFramework& af) {
  Af out;
  out.n = static_cast<int>(af.size());
  out.att.assign(out.n, 0);
  for (auto [a, b] : af.attack_pairs()) out.att[a] |= Mask(1) << b;
  return out;
}

inline Caf to_oracle(const pcaf::ClaimFramework& f) {
  Caf out;
  out.af = to_oracle(f.af());
  out.claim_count = static_cast<int>(f.claim_count());
  out.claim.resize(f.size());
  for (std::size_t a = 0; a < f.size(); ++a) out.claim[a] = f.claim_of(a);
  return out;
}

inline Pcaf to_oracle(const pcaf::PrefFramework& f) {
  Pcaf out;
  out.caf = to_oracle(f.caf());
  out.pref.assign(out.caf.af.n, 0);
  for (auto [a, b] : f.pref_pairs()) out.pref[a] |= Mask(1) << b;
  return out;
}

inline Sem to_oracle(pcaf::SemanticsId s) {
  switch (s) {
    case pcaf::SemanticsId::CF: return Sem::CF;
    case pcaf::SemanticsId::ADM: return Sem::ADM;
    case pcaf::SemanticsId::COM: return Sem::COM;
    case pcaf::SemanticsId::NAIVE: return Sem::NAIVE;
    case pcaf::SemanticsId::STB: return Sem::STB;
    case pcaf::SemanticsId::PRF: return Sem::PRF;
    case pcaf::SemanticsId::SEM: return Sem::SEMI;
    case pcaf::SemanticsId::STG: return Sem::STG;
  }
  throw std::logic_error("bad semantics id");
}

inline Mask arg_mask(const pcaf::ArgSet& e) {
  Mask out = 0;
  for (std::size_t i = e.find_first(); i != pcaf::ArgSet::npos; i = e.find_next(i))
    out |= Mask(1) << i;
  return out;
}

inline std::vector<Mask> arg_masks(const std::vector<pcaf::ArgSet>& sets) {
  std::vector<Mask> out;
  for (const auto& e : sets) out.push_back(arg_mask(e));
  std::sort(out.begin(), out.end());
  return out;
}

// Claims must belong to the framework's alphabet; tests only compare inside it.
inline Mask claim_mask(const pcaf::ClaimFramework& f, const pcaf::ClaimSet& c) {
  Mask out = 0;
  for (const auto& name : c) {
    int idx = f.claim_index(name);
    if (idx < 0) throw std::logic_error("claim outside alphabet in test comparison");
    out |= Mask(1) << idx;
  }
  return out;
}

inline std::vector<Mask> claim_masks(const pcaf::ClaimFramework& f,
                                     const std::vector<pcaf::ClaimSet>& fam) {
  std::vector<Mask> out;
  for (const auto& c : fam) out.push_back(claim_mask(f, c));
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

inline pcaf::ClaimSet claim_set_of(const pcaf::ClaimFramework& f, Mask m) {
  pcaf::ClaimSet out;
  for (std::size_t c = 0; c < f.claim_count(); ++c)
    if (m >> c & 1) out.insert(f.claim_name(c));
  return out;
}

inline std::string show_mask(Mask m, int n) {
  std::string out = "{";
  for (int i = 0; i < n; ++i)
    if (m >> i & 1) {
      if (out.size() > 1) out += ',';
      out += std::to_string(i);
    }
  return out + "}";
}

}  // namespace oracle
