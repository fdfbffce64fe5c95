#pragma once

// Database instance → argumentation framework constructions.
//
//  * FDs: tuples are arguments; two tuples attack each other when together
//    they violate some FD (the conflict graph).
//  * IDs: each (tuple s, ID i) adds a self-attacking auxiliary argument s#i
//    that attacks s; every supporter of s for i attacks s#i.
//  * Mixed and multirelational: tuples with empty support are deleted up
//    front, then both attack layers are combined over the survivors.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "repairaf/framework.hpp"
#include "repairaf/relational.hpp"

namespace repairaf {

struct TranslationResult {
  ArgFramework framework;
  /// Tuples deleted by pre-processing, in removal order (sorted within a round).
  std::vector<TupleId> removed_tuples;
  /// Surviving tuple id → its argument id.
  std::map<TupleId, std::string> tuple_arg_map;
  std::size_t preprocess_rounds = 0;

  std::optional<TupleId> tuple_for_argument(const std::string& argument_id) const;
};

struct PreprocessStats {
  std::size_t rounds = 0;
  /// Primitive steps: one per auxiliary argument inspected, one per attack dropped.
  std::uint64_t steps = 0;
};

/// FD-only instances. Throws PreconditionError when an ID is present.
TranslationResult build_af_fd(const Instance& inst);

/// ID-only instances, without pre-processing. Throws PreconditionError when
/// an FD is present.
TranslationResult build_af_id(const Instance& inst);

/// Repeatedly deletes every tuple owning an auxiliary argument that nothing
/// but itself attacks, together with all of that tuple's auxiliary arguments.
TranslationResult preprocess(const TranslationResult& result, PreprocessStats* stats = nullptr);

/// Same fixpoint, deleting one tuple at a time in an order drawn from `seed`.
/// The survivors must match preprocess(); removed_tuples keeps the random order.
TranslationResult preprocess_in_random_order(const TranslationResult& result, std::uint64_t seed);

/// Database-level pre-processing: rounds of tuple ids deleted because some ID
/// has no supporter among the remaining tuples. Each round is sorted.
std::vector<std::vector<TupleId>> database_preprocess(const Instance& inst);

/// Unirelational instance with any mix of FDs and IDs. Pre-processes the
/// database, then combines both attack layers over the survivors.
TranslationResult build_af_combined(const Instance& inst);

/// Any number of relations. Auxiliary arguments exist only for tuples of an
/// ID's source relation; supporters come from its target relation.
TranslationResult build_af_multirel(const Instance& inst);

/// Both attack layers without any pre-processing. Diagnostic only.
TranslationResult build_af_raw(const Instance& inst);

enum class Route { FdOnly, IdOnly, Mixed };

Route route_for(const Instance& inst);

/// The framework the reasoning layer works on: build_af_fd for FD-only,
/// pre-processed build_af_id for ID-only, build_af_multirel otherwise.
TranslationResult translate(const Instance& inst);

}  // namespace repairaf
