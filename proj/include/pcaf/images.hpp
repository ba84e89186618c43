#pragma once

#include "pcaf/pcaf.hpp"

namespace pcaf {

// Classes of claim frameworks expressible as the reduct of some valid
// preference framework: IMi under reduction i with arbitrary asymmetric
// preferences, IM1_TR under reduction 1 with transitive preferences.
enum class ImageClassId { IM1, IM2, IM3, IM4, IM1_TR };

inline constexpr ImageClassId kAllImageClasses[] = {ImageClassId::IM1, ImageClassId::IM2,
                                                    ImageClassId::IM3, ImageClassId::IM4,
                                                    ImageClassId::IM1_TR};

std::string_view to_string(ImageClassId cls);
std::optional<ImageClassId> image_class_from_string(std::string_view name);

// Structural membership test on the problematic pairs of f; runs in
// polynomial time and agrees with an exhaustive preimage_search.
bool in_image(const ClaimFramework& f, ImageClassId cls);

struct PreimageResult {
  enum class Status { Found, None, Inconclusive };
  Status status = Status::None;
  std::optional<PrefFramework> preimage;  // set exactly when status == Found
  std::uint64_t candidates = 0;           // work units spent
};

// Searches for a valid preference framework over the same arguments and
// claims whose reduct under r equals f. The candidate space is every
// well-formed attack relation (one out-set per claim class) combined with a
// per-pair preference solve; exceeding `budget` work units yields
// Inconclusive rather than None. Every reported preimage is mechanically
// re-reduced and compared against f before being returned.
PreimageResult preimage_search(const ClaimFramework& f, ReductionId r,
                               bool require_transitive = false,
                               std::uint64_t budget = std::uint64_t{1} << 24);

// The standard witness for IM1_TR membership: attacks extended by every
// problematic pair, preferences read off the problematic-pair paths. Its
// reduction-1 reduct equals f; preferences are transitive. Throws InputError
// when f is not in IM1_TR.
PrefFramework canonical_r1_preimage(const ClaimFramework& f);

}  // namespace pcaf
