#pragma once

#include "pcaf/pcaf.hpp"

namespace pcaf {

// Text format, one fact per line, '#' starts a comment:
//   arg(a).  claim(a,alpha).  att(a,b).  pref(a,b).
// pref(a,b) states that a is strictly preferred to b. Names are nonempty
// strings over [A-Za-z0-9_]. With implicit_claims, an argument without a
// claim fact gets its own name as claim; otherwise that is an error.

PrefFramework parse_pcaf(std::string_view text, bool implicit_claims = false);

// Same grammar without pref facts (their presence is an error) and without
// the well-formedness requirement.
ClaimFramework parse_caf(std::string_view text, bool implicit_claims = false);

// Canonical rendering: arg facts in declaration order, then claim facts,
// then sorted att facts, then sorted pref facts. parse(render(f)) == f.
std::string render_apx(const PrefFramework& f);
std::string render_apx(const ClaimFramework& f);

// "[alpha,beta]" or "alpha,beta" or "" (empty set); throws on unknown syntax.
ClaimSet parse_claim_set(std::string_view text);

}  // namespace pcaf
