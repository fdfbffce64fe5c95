#pragma once

// Dung argumentation frameworks and their extensions.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "repairaf/argset.hpp"

namespace repairaf {

enum class ArgumentKind { Tuple, Auxiliary };

/// A tuple argument stands for one database tuple; an auxiliary argument
/// stands for "tuple violates this inclusion dependency unless defended".
struct Argument {
  std::string id;
  ArgumentKind kind = ArgumentKind::Tuple;
  std::string tuple_id;
  std::string dependency;  // empty for tuple arguments

  static Argument for_tuple(const std::string& tuple_id);
  /// Id scheme: "<tuple-id>#<dependency-label>".
  static Argument auxiliary(const std::string& tuple_id, const std::string& dependency);

  bool is_auxiliary() const noexcept { return kind == ArgumentKind::Auxiliary; }
};

using Attack = std::pair<std::string, std::string>;

/// Immutable framework. Arguments are stored sorted by id, so argument index
/// order equals canonical id order.
class ArgFramework {
 public:
  class Builder {
   public:
    /// Adding the same argument twice is a no-op; a conflicting redefinition throws.
    Builder& add_argument(Argument argument);
    /// Both endpoints must already be present. Repeated attacks merge their labels.
    Builder& add_attack(const std::string& attacker, const std::string& target,
                        const std::string& label = {});
    ArgFramework build() &&;

   private:
    std::map<std::string, Argument> arguments_;
    std::map<Attack, std::set<std::string>> attacks_;
  };

  ArgFramework() = default;

  std::size_t size() const noexcept { return arguments_.size(); }
  std::size_t attack_count() const noexcept { return attack_count_; }

  const Argument& argument(std::size_t index) const { return arguments_[index]; }
  const std::vector<Argument>& arguments() const noexcept { return arguments_; }
  std::optional<std::size_t> index_of(std::string_view id) const;
  /// Throws DomainError for an unknown id.
  std::size_t require_index(std::string_view id) const;

  const ArgSet& attackers(std::size_t index) const { return attackers_[index]; }
  const ArgSet& targets(std::size_t index) const { return targets_[index]; }
  bool attacks(std::size_t from, std::size_t to) const { return targets_[from].test(to); }
  bool self_attacking(std::size_t index) const { return attacks(index, index); }
  const ArgSet& self_attackers() const noexcept { return self_attackers_; }

  /// All attacks as id pairs, sorted.
  std::vector<Attack> attack_list() const;
  /// Dependency labels that produced the attack; empty when unannotated.
  const std::set<std::string>& provenance(const std::string& attacker,
                                          const std::string& target) const;
  const std::map<Attack, std::set<std::string>>& provenance_map() const noexcept {
    return provenance_;
  }

  /// Sub-framework induced by the kept argument indices.
  ArgFramework restrict_to(const ArgSet& keep) const;

  ArgSet to_set(std::span<const std::string> ids) const;
  std::vector<std::string> to_ids(const ArgSet& set) const;

 private:
  std::vector<Argument> arguments_;
  std::map<std::string, std::size_t, std::less<>> index_;
  std::vector<ArgSet> attackers_;
  std::vector<ArgSet> targets_;
  ArgSet self_attackers_;
  std::size_t attack_count_ = 0;
  std::map<Attack, std::set<std::string>> provenance_;
};

enum class Semantics { ConflictFree, Naive, Admissible, Preferred, Stable };

std::string_view to_string(Semantics sem);
/// Accepts "conf", "naive", "adm", "pref", "stab" and the long names.
std::optional<Semantics> parse_semantics(std::string_view name);

/// Member ids, sorted. Extensions order lexicographically on that list.
struct Extension {
  std::vector<std::string> members;

  friend auto operator<=>(const Extension&, const Extension&) = default;
};

struct EnumerationOptions {
  /// Report ∅ when it qualifies under the semantics.
  bool allow_empty = false;
};

struct AcceptanceOptions {
  bool allow_empty = false;
  /// Skeptical acceptance holds vacuously when no extension exists.
  bool vacuous_skeptical = false;
};

struct SearchStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t pruned = 0;

  SearchStats& operator+=(const SearchStats& o) {
    nodes += o.nodes;
    leaves += o.leaves;
    pruned += o.pruned;
    return *this;
  }
};

bool is_conflict_free(const ArgFramework& f, const ArgSet& s);
bool is_conflict_free(const ArgFramework& f, std::span<const std::string> s);
/// Every attacker of `a` is attacked by some member of s.
bool defends(const ArgFramework& f, const ArgSet& s, std::size_t a);
bool defends(const ArgFramework& f, std::span<const std::string> s, std::string_view a);
bool is_admissible(const ArgFramework& f, const ArgSet& s);
bool is_admissible(const ArgFramework& f, std::span<const std::string> s);
bool is_stable(const ArgFramework& f, const ArgSet& s);

/// All extensions under `sem`, canonically ordered, ∅ excluded unless
/// options.allow_empty. Conflict-free and admissible enumeration is meant
/// for small frameworks.
std::vector<Extension> enumerate_extensions(const ArgFramework& f, Semantics sem,
                                            const EnumerationOptions& options = {},
                                            SearchStats* stats = nullptr);

bool credulous(const ArgFramework& f, std::string_view a, Semantics sem,
               const AcceptanceOptions& options = {}, SearchStats* stats = nullptr);
/// False when no extension exists, unless options.vacuous_skeptical.
bool skeptical(const ArgFramework& f, std::string_view a, Semantics sem,
               const AcceptanceOptions& options = {}, SearchStats* stats = nullptr);

/// Stops at the first non-empty extension instead of enumerating.
bool exists_nonempty_extension(const ArgFramework& f, Semantics sem,
                               SearchStats* stats = nullptr);

/// The first non-empty extension the search meets, if any. Under preferred
/// semantics this is a genuine preferred extension, not just an admissible set.
std::optional<Extension> find_extension(const ArgFramework& f, Semantics sem,
                                        SearchStats* stats = nullptr);

/// Some naive extension has at least k members.
bool exists_naive_of_size(const ArgFramework& f, std::size_t k, SearchStats* stats = nullptr);

}  // namespace repairaf
