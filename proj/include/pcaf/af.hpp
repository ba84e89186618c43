#pragma once

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace pcaf {

// Argument sets are bitsets over the dense 0..n-1 argument indices of one framework.
using ArgSet = boost::dynamic_bitset<>;

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class SemanticsId { CF, ADM, COM, NAIVE, STB, PRF, SEM, STG };

inline constexpr SemanticsId kAllSemantics[] = {
    SemanticsId::CF,  SemanticsId::ADM, SemanticsId::COM, SemanticsId::NAIVE,
    SemanticsId::STB, SemanticsId::PRF, SemanticsId::SEM, SemanticsId::STG};

std::string_view to_string(SemanticsId s);
std::optional<SemanticsId> semantics_from_string(std::string_view name);

// A finite argumentation framework (A, Att). Arguments are identified by
// nonempty strings at the boundary and dense indices internally. Duplicate
// attack pairs collapse; attack endpoints must be declared arguments.
class ArgFramework {
 public:
  ArgFramework() = default;
  ArgFramework(std::vector<std::string> args,
               const std::vector<std::pair<std::string, std::string>>& attacks);

  // Index-level construction; pairs must reference valid indices.
  static ArgFramework from_indices(std::vector<std::string> args,
                                   const std::vector<std::pair<int, int>>& attacks);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& arg_names() const { return names_; }
  const std::string& name_of(std::size_t i) const { return names_[i]; }
  int index_of(std::string_view name) const;  // -1 when absent

  // Attack structure, one bitset per argument.
  const ArgSet& targets_of(std::size_t a) const { return targets_[a]; }
  const ArgSet& attackers_of(std::size_t a) const { return attackers_[a]; }
  bool attacks(std::size_t a, std::size_t b) const { return targets_[a].test(b); }
  std::vector<std::pair<int, int>> attack_pairs() const;
  std::size_t attack_count() const;

  ArgSet empty_set() const { return ArgSet(size()); }
  ArgSet full_set() const { return ~ArgSet(size()); }
  ArgSet set_of(const std::vector<std::string>& members) const;  // throws InputError on unknown name
  std::vector<std::string> names_of(const ArgSet& e) const;

  // E⁺ = set of arguments attacked by e.
  ArgSet attacked_set(const ArgSet& e) const;
  // E⊕ = e ∪ E⁺.
  ArgSet range_of(const ArgSet& e) const { return e | attacked_set(e); }
  // x is defended by e iff every attacker of x is attacked by e.
  bool defends(const ArgSet& e, std::size_t x) const;
  bool conflict_free(const ArgSet& e) const;

  bool is_extension(const ArgSet& e, SemanticsId s) const;
  // All σ-extensions, sorted by their argument index sequences.
  std::vector<ArgSet> extensions(SemanticsId s) const;

  bool operator==(const ArgFramework& other) const;

 private:
  void check_member_set(const ArgSet& e) const;

  std::vector<std::string> names_;
  std::unordered_map<std::string, int> index_;
  std::vector<ArgSet> targets_;
  std::vector<ArgSet> attackers_;
};

// Keeps only the ⊆-maximal sets; stable order of first appearance of survivors.
std::vector<ArgSet> maximal_sets(const std::vector<ArgSet>& sets);

// Deterministic sort key: increasing argument index sequence.
void sort_extensions(std::vector<ArgSet>& sets);

}  // namespace pcaf
