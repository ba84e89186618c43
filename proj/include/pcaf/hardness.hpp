#pragma once

#include <cstdint>
#include <random>

#include "pcaf/pcaf.hpp"

namespace pcaf {

// Propositional CNF. Literal encoding: +(i+1) is variable i, -(i+1) its
// negation. Clauses are nonempty, duplicate-free and have at most 3 literals.
struct CnfFormula {
  std::vector<std::string> vars;
  std::vector<std::vector<int>> clauses;
};

// Prenex 2QBF: forall(universal) exists(existential) CNF matrix. Every
// variable belongs to exactly one block.
struct Qbf2Formula {
  std::vector<std::string> vars;
  std::vector<int> universal;              // indices into vars
  std::vector<int> existential;            // indices into vars
  std::vector<std::vector<int>> clauses;   // same literal encoding as CnfFormula
};

// Brute-force deciders used as ground truth in tests. Both throw
// ResourceError beyond 20 variables.
bool sat_oracle(const CnfFormula& f);
bool qbf_oracle(const Qbf2Formula& f);

CnfFormula parse_dimacs(const std::string& text);    // variables named x1..xN
Qbf2Formula parse_qdimacs(const std::string& text);  // a-lines, then e-lines; rest existential

CnfFormula random_cnf(std::mt19937_64& rng, int max_vars, int max_clauses);
// Both blocks are nonempty and every clause contains an existential literal,
// matching the preconditions of gen_qbf.
Qbf2Formula random_qbf(std::mt19937_64& rng, int max_universal, int max_existential,
                       int max_clauses);

// How the decision problem of the source formula maps to claim-set
// membership of `target` in the generated instance.
enum class Polarity { SatIffMember, ValidIffNonMember };
std::string_view to_string(Polarity p);

struct HardInstance {
  PrefFramework pf;
  ReductionId reduction;
  SemanticsId semantics;            // representative query semantics
  std::vector<SemanticsId> covers;  // every semantics the construction is exact for
  ClaimSet target;
  Polarity polarity;
  std::string notes;
};

// Conflict-freeness and naive verification: two helper arguments per
// variable carry its claim and attack all of its occurrence arguments; a
// preference per occurrence deletes the attack from the helper of the
// matching truth value. Variables occurring with a single polarity are
// padded with a tautological clause.
HardInstance gen_cf_naive(const CnfFormula& cnf);

// Stable, admissible and complete verification under reduction 1 with
// transitive preferences: each (positive, negative) occurrence pair of a
// variable is joined by a six-cycle whose two alternating halves encode the
// truth value; isolated hat arguments keep every gadget claim realizable.
// The returned framework is the canonical preimage of that claim framework.
HardInstance gen_stb_adm_com(const CnfFormula& cnf);

// Preferred, semi-stable and stage verification under reduction 1 with
// transitive preferences, one instance per semantics in {PRF, SEM, STG}.
// The target is realizable exactly by the counterexample assignments of the
// universal block, so membership witnesses invalidity. For PRF every clause
// must contain an existential literal.
HardInstance gen_qbf(const Qbf2Formula& qbf, SemanticsId s);

// Complete verification under reduction 2 or 4: literal gadgets built from
// reversed attacks tie each variable claim to one polarity, and a
// collector argument per variable becomes defended (but is outside the
// target) as soon as both polarities are used.
HardInstance gen_com_pref(const CnfFormula& cnf, ReductionId r);

}  // namespace pcaf
