#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <random>

#include "oracle.hpp"
#include "pcaf/apx.hpp"
#include "pcaf/imax.hpp"
#include "pcaf/realize.hpp"
#include "util.hpp"

using namespace pcaf;
using testutil::cs;

namespace {

PrefFramework preferred_blocker_example() {
  ArgFramework af({"a", "ap", "b"}, {{"a", "b"}, {"ap", "b"}, {"b", "a"}});
  ClaimFramework caf(std::move(af), {"alpha", "alpha", "beta"});
  return PrefFramework(std::move(caf), {{"b", "ap"}});
}

bool oracle_member(const PrefFramework& f, ReductionId r, SemanticsId s, const ClaimSet& c) {
  oracle::Pcaf of = oracle::to_oracle(f);
  auto fam = oracle::pref_claim_extensions(of, static_cast<int>(r), oracle::to_oracle(s));
  return std::binary_search(fam.begin(), fam.end(), oracle::claim_mask(f.caf(), c));
}

void check_all_claim_sets(const PrefFramework& f, const std::string& context) {
  const auto& names = f.caf().claim_names();
  const std::size_t k = names.size();
  for (std::uint32_t code = 0; code < (1u << k); ++code) {
    ClaimSet c;
    for (std::size_t i = 0; i < k; ++i)
      if (code >> i & 1) c.insert(names[i]);
    for (ReductionId r : kAllReductions)
      for (SemanticsId s : kAllSemantics) {
        CAPTURE(context);
        CAPTURE(to_string(r));
        CAPTURE(to_string(s));
        CAPTURE(to_string(c));
        CHECK(verify(f, r, s, c) == oracle_member(f, r, s, c));
      }
  }
}

}  // namespace

TEST_CASE("fixed-point chain of the blocked-preference example") {
  PrefFramework f = preferred_blocker_example();
  const ArgFramework& af = f.caf().af();

  RealizationTrace both = realization(f, ReductionId::R2, cs({"alpha", "beta"}));
  CHECK(both.e0 == af.set_of({"a", "ap", "b"}));
  CHECK(both.e1 == af.set_of({"ap"}));
  CHECK(both.chain == std::vector<ArgSet>{af.set_of({"ap"}), af.empty_set()});
  CHECK(both.estar == af.empty_set());

  RealizationTrace alpha = realization(f, ReductionId::R2, cs({"alpha"}));
  CHECK(alpha.e0 == af.set_of({"a", "ap"}));
  CHECK(alpha.e1 == af.set_of({"a", "ap"}));
  CHECK(alpha.chain == std::vector<ArgSet>{af.set_of({"a", "ap"})});
  CHECK(alpha.estar == af.set_of({"a", "ap"}));
}

TEST_CASE("no chain exists for the deleting rewrite") {
  PrefFramework f = preferred_blocker_example();
  CHECK_THROWS_AS(realization(f, ReductionId::R1, cs({"alpha"})), InputError);
}

TEST_CASE("chain invariants hold on random instances") {
  std::mt19937_64 rng(555);
  for (int iter = 0; iter < 150; ++iter) {
    PrefFramework f = random_pcaf(rng, 6, 3, iter % 2 == 0);
    const auto& names = f.caf().claim_names();
    for (std::uint32_t code = 0; code < (1u << names.size()); ++code) {
      ClaimSet c;
      for (std::size_t i = 0; i < names.size(); ++i)
        if (code >> i & 1) c.insert(names[i]);
      for (ReductionId r : {ReductionId::R2, ReductionId::R3, ReductionId::R4}) {
        RealizationTrace t = realization(f, r, c);
        CAPTURE(iter);
        CAPTURE(to_string(r));
        CAPTURE(to_string(c));
        CHECK(t.e0 == f.caf().args_for(c));
        CHECK(t.e1.is_subset_of(t.e0));
        REQUIRE(!t.chain.empty());
        CHECK(t.chain.front() == t.e1);
        CHECK(t.chain.back() == t.estar);
        for (std::size_t i = 1; i < t.chain.size(); ++i) {
          CHECK(t.chain[i].is_proper_subset_of(t.chain[i - 1]));
        }

        // The first chain element characterizes conflict-free realizability,
        // the fixpoint characterizes admissible realizability.
        CHECK((f.caf().claims_of(t.e1) == c) ==
              oracle_member(f, r, SemanticsId::CF, c));
        CHECK((f.caf().claims_of(t.estar) == c) ==
              oracle_member(f, r, SemanticsId::ADM, c));
      }
    }
  }
}

TEST_CASE("verify answers membership for every rewrite and semantics") {
  SUBCASE("exhaustively over tiny frameworks") {
    for (int n = 1; n <= 3; ++n) {
      testutil::for_each_partition(n, 2, [&](const std::vector<int>& claim) {
        const int k = 1 + *std::max_element(claim.begin(), claim.end());
        testutil::for_each_class_attack_relation(claim, k, [&](const std::vector<std::pair<int, int>>& attacks) {
          ClaimFramework caf(ArgFramework::from_indices(testutil::arg_names(n), attacks),
                             testutil::claim_names_of(claim));
          testutil::for_each_pref_relation(n, [&](const std::vector<std::pair<int, int>>& prefs) {
            PrefFramework f = PrefFramework::from_indices(caf, prefs);
            check_all_claim_sets(f, render_apx(f));
          });
        });
      });
    }
  }
  SUBCASE("on random instances") {
    std::mt19937_64 rng(909090);
    for (int iter = 0; iter < 150; ++iter) {
      PrefFramework f = random_pcaf(rng, 6, 3, iter % 2 == 0);
      check_all_claim_sets(f, "iter " + std::to_string(iter));
    }
  }
}

TEST_CASE("claims outside the alphabet are never realizable") {
  PrefFramework f = preferred_blocker_example();
  for (ReductionId r : kAllReductions)
    for (SemanticsId s : kAllSemantics)
      CHECK_FALSE(verify(f, r, s, cs({"zeta"})));
  CHECK_FALSE(verify(f, ReductionId::R2, SemanticsId::CF, cs({"alpha", "zeta"})));
}

TEST_CASE("the empty claim set is admissible but need not be stable") {
  PrefFramework f = preferred_blocker_example();
  CHECK(verify(f, ReductionId::R2, SemanticsId::ADM, cs({})));
  CHECK(verify(f, ReductionId::R1, SemanticsId::ADM, cs({})));
  CHECK_FALSE(verify(f, ReductionId::R2, SemanticsId::STB, cs({})));
}

TEST_CASE("node counters are reported for search-based verification") {
  PrefFramework f = preferred_blocker_example();
  VerifyStats stats;
  CHECK(verify(f, ReductionId::R1, SemanticsId::ADM, cs({"alpha", "beta"}), &stats));
  CHECK(stats.nodes > 0);
}
