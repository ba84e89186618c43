#include "pcaf/hardness.hpp"

#include <algorithm>
#include <sstream>

#include "pcaf/images.hpp"
#include "rng.hpp"

namespace pcaf {

using detail::uniform_int;

std::string_view to_string(Polarity p) {
  return p == Polarity::SatIffMember ? "sat-iff-member" : "valid-iff-nonmember";
}

namespace {

void check_clauses(const std::vector<std::string>& vars,
                   const std::vector<std::vector<int>>& clauses) {
  const int n = static_cast<int>(vars.size());
  for (const auto& clause : clauses) {
    if (clause.empty()) throw InputError("empty clause");
    if (clause.size() > 3) throw InputError("clause with more than 3 literals");
    for (int lit : clause)
      if (lit == 0 || std::abs(lit) > n) throw InputError("literal out of range");
  }
}

// Sorted, duplicate-free literals per clause; validates the type invariants.
CnfFormula normalized(const CnfFormula& cnf) {
  CnfFormula out = cnf;
  for (auto& clause : out.clauses) {
    std::sort(clause.begin(), clause.end(),
              [](int a, int b) { return std::abs(a) != std::abs(b) ? std::abs(a) < std::abs(b) : a < b; });
    clause.erase(std::unique(clause.begin(), clause.end()), clause.end());
  }
  check_clauses(out.vars, out.clauses);
  return out;
}

// Appends a tautological clause {v, -v} for every variable that occurs with
// at most one polarity; returns the number of clauses added.
int pad_single_polarity(CnfFormula& cnf) {
  const int n = static_cast<int>(cnf.vars.size());
  std::vector<bool> pos(n, false), neg(n, false);
  for (const auto& clause : cnf.clauses)
    for (int lit : clause) (lit > 0 ? pos : neg)[std::abs(lit) - 1] = true;
  int added = 0;
  for (int v = 0; v < n; ++v)
    if (!pos[v] || !neg[v]) {
      cnf.clauses.push_back({v + 1, -(v + 1)});
      ++added;
    }
  return added;
}

bool clause_satisfied(const std::vector<int>& clause, std::uint32_t assignment) {
  for (int lit : clause) {
    const int v = std::abs(lit) - 1;
    if (((assignment >> v) & 1u) == (lit > 0 ? 1u : 0u)) return true;
  }
  return false;
}

bool all_satisfied(const std::vector<std::vector<int>>& clauses, std::uint32_t assignment) {
  for (const auto& clause : clauses)
    if (!clause_satisfied(clause, assignment)) return false;
  return true;
}

struct FrameworkBuilder {
  std::vector<std::string> args, claims;
  std::vector<std::pair<std::string, std::string>> attacks;

  void arg(std::string name, std::string claim) {
    args.push_back(std::move(name));
    claims.push_back(std::move(claim));
  }
  void att(std::string a, std::string b) { attacks.emplace_back(std::move(a), std::move(b)); }
  ClaimFramework build() const { return ClaimFramework(ArgFramework(args, attacks), claims); }
};

std::string occ_name(const std::string& var, bool positive, int clause) {
  return var + (positive ? "_" : "bar_") + std::to_string(clause);
}

std::string lit_name(const std::string& var, bool positive) {
  return positive ? var : var + "bar";
}

ClaimSet all_claims(const ClaimFramework& caf) {
  return ClaimSet(caf.claim_names().begin(), caf.claim_names().end());
}

}  // namespace

bool sat_oracle(const CnfFormula& f) {
  if (f.vars.size() > 20) throw ResourceError("sat oracle limited to 20 variables");
  check_clauses(f.vars, f.clauses);
  const std::uint32_t space = 1u << f.vars.size();
  for (std::uint32_t a = 0; a < space; ++a)
    if (all_satisfied(f.clauses, a)) return true;
  return false;
}

bool qbf_oracle(const Qbf2Formula& f) {
  if (f.vars.size() > 20) throw ResourceError("qbf oracle limited to 20 variables");
  check_clauses(f.vars, f.clauses);
  const std::uint32_t yspace = 1u << f.universal.size();
  const std::uint32_t zspace = 1u << f.existential.size();
  for (std::uint32_t y = 0; y < yspace; ++y) {
    bool completable = false;
    for (std::uint32_t z = 0; z < zspace && !completable; ++z) {
      std::uint32_t assignment = 0;
      for (std::size_t i = 0; i < f.universal.size(); ++i)
        if ((y >> i) & 1u) assignment |= 1u << f.universal[i];
      for (std::size_t i = 0; i < f.existential.size(); ++i)
        if ((z >> i) & 1u) assignment |= 1u << f.existential[i];
      completable = all_satisfied(f.clauses, assignment);
    }
    if (!completable) return false;
  }
  return true;
}

namespace {

// Shared DIMACS scaffolding: comment stripping, the p-line, 0-terminated
// integer clauses. `quant` receives a/e lines when non-null.
struct DimacsReader {
  int var_count = 0;
  std::vector<std::vector<int>> clauses;
  std::vector<int> a_block, e_block;

  void read(const std::string& text, bool allow_quantifiers) {
    std::istringstream in(text);
    std::string line;
    bool saw_header = false, saw_e = false, in_clauses = false;
    std::vector<int> current;
    int line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      std::istringstream ls(line);
      std::string tok;
      if (!(ls >> tok) || tok == "c" || tok[0] == 'c' || tok == "%") continue;
      auto fail = [&](const std::string& msg) {
        throw InputError("line " + std::to_string(line_no) + ": " + msg);
      };
      if (tok == "p") {
        std::string kind;
        if (saw_header) fail("duplicate header");
        if (!(ls >> kind >> var_count) || kind != "cnf" || var_count < 0)
          fail("malformed header, expected 'p cnf <vars> <clauses>'");
        saw_header = true;
        continue;
      }
      if (!saw_header) fail("clause before 'p cnf' header");
      if (tok == "a" || tok == "e") {
        if (!allow_quantifiers) fail("unexpected quantifier line");
        if (in_clauses) fail("quantifier line after clauses");
        if (tok == "a" && saw_e) fail("only forall-exists prefixes are supported");
        if (tok == "e") saw_e = true;
        int v;
        bool terminated = false;
        while (ls >> v) {
          if (v == 0) {
            terminated = true;
            break;
          }
          if (v < 0 || v > var_count) fail("quantified variable out of range");
          (tok == "a" ? a_block : e_block).push_back(v - 1);
        }
        if (!terminated) fail("quantifier line must end with 0");
        continue;
      }
      in_clauses = true;
      std::istringstream nums(line);
      int lit;
      while (nums >> lit) {
        if (lit == 0) {
          clauses.push_back(current);
          current.clear();
        } else {
          if (std::abs(lit) > var_count) fail("literal out of range");
          current.push_back(lit);
        }
      }
      if (nums.fail() && !nums.eof()) fail("malformed literal");
    }
    if (!saw_header) throw InputError("missing 'p cnf' header");
    if (!current.empty()) throw InputError("unterminated final clause");
  }

  std::vector<std::string> var_names() const {
    std::vector<std::string> names;
    for (int i = 1; i <= var_count; ++i) names.push_back("x" + std::to_string(i));
    return names;
  }
};

}  // namespace

CnfFormula parse_dimacs(const std::string& text) {
  DimacsReader reader;
  reader.read(text, false);
  CnfFormula f{reader.var_names(), std::move(reader.clauses)};
  return normalized(f);
}

Qbf2Formula parse_qdimacs(const std::string& text) {
  DimacsReader reader;
  reader.read(text, true);
  Qbf2Formula f;
  f.vars = reader.var_names();
  f.universal = std::move(reader.a_block);
  f.existential = std::move(reader.e_block);
  std::vector<bool> quantified(reader.var_count, false);
  for (int v : f.universal) quantified[v] = true;
  for (int v : f.existential) {
    if (quantified[v]) throw InputError("variable quantified twice");
    quantified[v] = true;
  }
  for (int v = 0; v < reader.var_count; ++v)
    if (!quantified[v]) f.existential.push_back(v);  // free variables are innermost
  CnfFormula body{f.vars, reader.clauses};
  f.clauses = normalized(body).clauses;
  return f;
}

CnfFormula random_cnf(std::mt19937_64& rng, int max_vars, int max_clauses) {
  CnfFormula f;
  const int n = uniform_int(rng, 1, max_vars);
  for (int i = 1; i <= n; ++i) f.vars.push_back("x" + std::to_string(i));
  const int m = uniform_int(rng, 1, max_clauses);
  for (int i = 0; i < m; ++i) {
    const int len = uniform_int(rng, 1, std::min(3, n));
    std::vector<int> clause;
    while (static_cast<int>(clause.size()) < len) {
      const int v = uniform_int(rng, 1, n);
      bool fresh = true;
      for (int lit : clause) fresh = fresh && std::abs(lit) != v;
      if (fresh) clause.push_back(uniform_int(rng, 0, 1) ? v : -v);
    }
    f.clauses.push_back(std::move(clause));
  }
  return normalized(f);
}

Qbf2Formula random_qbf(std::mt19937_64& rng, int max_universal, int max_existential,
                       int max_clauses) {
  Qbf2Formula f;
  const int u = uniform_int(rng, 1, max_universal);
  const int e = uniform_int(rng, 1, max_existential);
  for (int i = 1; i <= u + e; ++i) f.vars.push_back("x" + std::to_string(i));
  for (int i = 0; i < u; ++i) f.universal.push_back(i);
  for (int i = u; i < u + e; ++i) f.existential.push_back(i);
  const int m = uniform_int(rng, 1, max_clauses);
  for (int i = 0; i < m; ++i) {
    const int len = uniform_int(rng, 1, std::min(3, u + e));
    std::vector<int> clause;
    const int zvar = f.existential[uniform_int(rng, 0, e - 1)] + 1;
    clause.push_back(uniform_int(rng, 0, 1) ? zvar : -zvar);
    while (static_cast<int>(clause.size()) < len) {
      const int v = uniform_int(rng, 1, u + e);
      bool fresh = true;
      for (int lit : clause) fresh = fresh && std::abs(lit) != v;
      if (fresh) clause.push_back(uniform_int(rng, 0, 1) ? v : -v);
    }
    f.clauses.push_back(std::move(clause));
  }
  std::vector<std::vector<int>> normalized_clauses = normalized({f.vars, f.clauses}).clauses;
  f.clauses = std::move(normalized_clauses);
  return f;
}

HardInstance gen_cf_naive(const CnfFormula& cnf) {
  CnfFormula f = normalized(cnf);
  const int padded = pad_single_polarity(f);
  FrameworkBuilder b;
  std::vector<std::pair<std::string, std::string>> prefs;
  for (const std::string& v : f.vars) {
    b.arg(v + "_T", v);
    b.arg(v + "_F", v);
  }
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    for (int lit : f.clauses[i]) {
      const std::string& v = f.vars[std::abs(lit) - 1];
      const std::string occ = occ_name(v, lit > 0, static_cast<int>(i));
      b.arg(occ, "c" + std::to_string(i));
      b.att(v + "_T", occ);
      b.att(v + "_F", occ);
      prefs.emplace_back(occ, v + (lit > 0 ? "_T" : "_F"));
    }
  }
  ClaimFramework caf = b.build();
  HardInstance inst{PrefFramework(caf, prefs),
                    ReductionId::R1,
                    SemanticsId::CF,
                    {SemanticsId::CF, SemanticsId::NAIVE},
                    all_claims(caf),
                    Polarity::SatIffMember,
                    ""};
  inst.notes = "each truth-value helper survives only against opposite-polarity occurrences; "
               "the full claim set is realizable iff the formula is satisfiable; padded " +
               std::to_string(padded) + " tautological clause(s)";
  return inst;
}

HardInstance gen_stb_adm_com(const CnfFormula& cnf) {
  CnfFormula f = normalized(cnf);
  const int padded = pad_single_polarity(f);
  FrameworkBuilder b;
  const int n = static_cast<int>(f.vars.size());
  std::vector<std::vector<int>> pos_in(n), neg_in(n);
  for (std::size_t i = 0; i < f.clauses.size(); ++i)
    for (int lit : f.clauses[i]) {
      b.arg(occ_name(f.vars[std::abs(lit) - 1], lit > 0, static_cast<int>(i)),
            "c" + std::to_string(i));
      (lit > 0 ? pos_in : neg_in)[std::abs(lit) - 1].push_back(static_cast<int>(i));
    }
  for (int v = 0; v < n; ++v)
    for (int i : pos_in[v])
      for (int j : neg_in[v]) {
        const std::string suffix = "_" + std::to_string(i) + "_" + std::to_string(j);
        std::string g[5];
        for (int k = 1; k <= 4; ++k) {
          g[k] = f.vars[v] + std::to_string(k) + suffix;
          b.arg(g[k], g[k]);
          b.arg("hat_" + g[k], g[k]);
        }
        const std::string pos_occ = occ_name(f.vars[v], true, i);
        const std::string neg_occ = occ_name(f.vars[v], false, j);
        b.att(pos_occ, g[1]);
        b.att(g[1], g[2]);
        b.att(g[2], neg_occ);
        b.att(neg_occ, g[3]);
        b.att(g[3], g[4]);
        b.att(g[4], pos_occ);
      }
  ClaimFramework caf = b.build();
  HardInstance inst{canonical_r1_preimage(caf),
                    ReductionId::R1,
                    SemanticsId::STB,
                    {SemanticsId::STB, SemanticsId::ADM, SemanticsId::COM},
                    all_claims(caf),
                    Polarity::SatIffMember,
                    ""};
  inst.notes = "six-cycles force opposite occurrences of a variable onto opposite halves; "
               "hat arguments keep gadget claims realizable; the full claim set is realizable "
               "iff the formula is satisfiable; padded " +
               std::to_string(padded) + " tautological clause(s)";
  return inst;
}

HardInstance gen_qbf(const Qbf2Formula& qbf, SemanticsId s) {
  if (s != SemanticsId::PRF && s != SemanticsId::SEM && s != SemanticsId::STG)
    throw InputError("qbf construction exists for prf, sem and stg only");
  check_clauses(qbf.vars, qbf.clauses);
  std::vector<bool> is_existential(qbf.vars.size(), false);
  for (int z : qbf.existential) is_existential[z] = true;
  if (s == SemanticsId::PRF)
    for (const auto& clause : qbf.clauses) {
      bool has_z = false;
      for (int lit : clause) has_z = has_z || is_existential[std::abs(lit) - 1];
      if (!has_z)
        throw InputError("the prf construction needs an existential literal in every clause");
    }
  if (s == SemanticsId::STG && qbf.existential.empty())
    throw InputError("the stg construction needs a nonempty existential block");

  FrameworkBuilder b;
  for (const std::string& v : qbf.vars) {
    b.arg(v, v);
    b.arg(v + "bar", v + "bar");
    b.att(v, v + "bar");
    b.att(v + "bar", v);
  }
  for (int y : qbf.universal) {
    b.arg(qbf.vars[y] + "star", qbf.vars[y]);
    b.arg(qbf.vars[y] + "barstar", qbf.vars[y] + "bar");
  }
  for (std::size_t i = 0; i < qbf.clauses.size(); ++i) {
    const std::string c = "c" + std::to_string(i);
    b.arg(c, c);
    b.att(c, c);
    for (int lit : qbf.clauses[i])
      b.att(lit_name(qbf.vars[std::abs(lit) - 1], lit > 0), c);
  }
  if (s == SemanticsId::PRF || s == SemanticsId::SEM) {
    b.arg("phi", "phi");
    b.arg("phibar", "phibar");
    for (std::size_t i = 0; i < qbf.clauses.size(); ++i) b.att("c" + std::to_string(i), "phi");
    b.att("phi", "phibar");
    b.att("phibar", "phibar");
    for (int z : qbf.existential) {
      b.att("phibar", qbf.vars[z]);
      b.att("phibar", qbf.vars[z] + "bar");
    }
  } else {
    b.arg("phibar", "phibar");
    for (std::size_t i = 0; i < qbf.clauses.size(); ++i) b.att("phibar", "c" + std::to_string(i));
    for (int z : qbf.existential) {
      b.att(qbf.vars[z], "phibar");
      b.att(qbf.vars[z] + "bar", "phibar");
    }
  }
  if (s == SemanticsId::SEM || s == SemanticsId::STG)
    for (int y : qbf.universal)
      for (bool positive : {true, false}) {
        const std::string d = "d_" + lit_name(qbf.vars[y], positive);
        b.arg(d, d);
        b.att(d, d);
        b.att(lit_name(qbf.vars[y], positive), d);
      }

  ClaimSet target;
  for (int y : qbf.universal) {
    target.insert(qbf.vars[y]);
    target.insert(qbf.vars[y] + "bar");
  }
  if (s == SemanticsId::STG) target.insert("phibar");

  ClaimFramework caf = b.build();
  HardInstance inst{canonical_r1_preimage(caf),
                    ReductionId::R1,
                    s,
                    {s},
                    std::move(target),
                    Polarity::ValidIffNonMember,
                    "the target is realized exactly by full universal assignments with no "
                    "satisfying existential completion, so membership witnesses invalidity"};
  return inst;
}

HardInstance gen_com_pref(const CnfFormula& cnf, ReductionId r) {
  if (r != ReductionId::R2 && r != ReductionId::R4)
    throw InputError("preference-based complete construction exists for reductions 2 and 4 only");
  CnfFormula f = normalized(cnf);
  FrameworkBuilder b;
  std::vector<std::pair<std::string, std::string>> prefs;
  b.arg("phi", "phi");
  for (std::size_t i = 0; i < f.clauses.size(); ++i) {
    const std::string c = "c" + std::to_string(i);
    b.arg(c, c);
    b.att(c, c);
    b.att(c, "phi");
  }
  for (const std::string& v : f.vars) {
    for (bool positive : {true, false}) {
      const std::string l = lit_name(v, positive);
      b.arg(l, v);
      b.att("d1_" + l, l);
      prefs.emplace_back(l, "d1_" + l);
      if (r == ReductionId::R2) {
        b.arg("d2_" + l, v);
        b.arg("d3_" + l, "d3_" + l);
        b.att("d1_" + l, "d2_" + l);
        b.att("d3_" + l, "d2_" + l);
        b.att("d3_" + l, l);
        b.att("d4_" + l, l);
        prefs.emplace_back("d2_" + l, "d3_" + l);
        prefs.emplace_back(l, "d4_" + l);
      }
    }
    for (bool positive : {true, false}) {
      const std::string l = lit_name(v, positive);
      b.arg("d1_" + l, "d1_" + l);
      if (r == ReductionId::R2) {
        b.arg("d4_" + l, "d4_" + l);
        b.att("d4_" + l, "d_" + v);
      } else {
        b.att("d1_" + l, "d_" + v);
      }
    }
    b.arg("d_" + v, "d_" + v);
  }
  for (std::size_t i = 0; i < f.clauses.size(); ++i)
    for (int lit : f.clauses[i]) {
      const std::string l = lit_name(f.vars[std::abs(lit) - 1], lit > 0);
      b.att("c" + std::to_string(i), l);
      prefs.emplace_back(l, "c" + std::to_string(i));
    }

  ClaimSet target;
  target.insert("phi");
  for (const std::string& v : f.vars) target.insert(v);

  ClaimFramework caf = b.build();
  HardInstance inst{PrefFramework(caf, prefs),
                    r,
                    SemanticsId::COM,
                    {SemanticsId::COM},
                    std::move(target),
                    Polarity::SatIffMember,
                    "reversed attacks tie each variable claim to one polarity; the collector "
                    "argument of a variable becomes defended, yet lies outside the target, as "
                    "soon as both polarities are used"};
  return inst;
}

}  // namespace pcaf
