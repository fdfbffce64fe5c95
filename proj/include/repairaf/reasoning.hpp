#pragma once

// Repair enumeration and the brave/cautious/existence questions, answered
// through the argumentation pipeline, plus a brute-force oracle.

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "repairaf/framework.hpp"
#include "repairaf/relational.hpp"
#include "repairaf/translation.hpp"

namespace repairaf {

struct RepairSet {
  /// Each repair as a sorted id list; the list itself is sorted and duplicate-free.
  std::vector<std::vector<TupleId>> repairs;
  std::string instance_digest;

  bool contains(const std::vector<TupleId>& repair) const;
};

struct ReasoningOptions {
  /// all_repair is vacuously true when no repair exists.
  bool vacuous_skeptical = false;
};

/// Effort counters reported by the CLI.
struct ReasoningStats {
  Route route = Route::FdOnly;
  std::size_t arguments = 0;
  std::size_t attacks = 0;
  std::size_t preprocess_rounds = 0;
  std::vector<TupleId> removed_tuples;
  SearchStats search;
};

inline constexpr std::size_t kDefaultOracleCeiling = 20;

/// 16 hex digits over a canonical serialization (relations, attributes,
/// tuples and dependencies sorted), so equal instances hash equally.
std::string instance_digest(const Instance& inst);

/// Semantics used on the translated framework: naive for FD-only, preferred otherwise.
Semantics routed_semantics(Route route);

RepairSet enumerate_repairs(const Instance& inst, ReasoningStats* stats = nullptr);
bool rep_exists(const Instance& inst, ReasoningStats* stats = nullptr);
/// One repair, found without enumerating the others.
std::optional<std::vector<TupleId>> find_repair(const Instance& inst, ReasoningStats* stats = nullptr);
/// Throws DomainError for an unknown tuple id.
bool some_repair(const Instance& inst, const TupleId& tuple, ReasoningStats* stats = nullptr);
bool all_repair(const Instance& inst, const TupleId& tuple, const ReasoningOptions& options = {},
                ReasoningStats* stats = nullptr);

/// FD-only instances: is there a repair with at least k tuples?
/// Throws PreconditionError when IDs are present and DomainError for k = 0.
bool repair_at_least(const Instance& inst, std::size_t k, ReasoningStats* stats = nullptr);

/// Powerset sweep: every consistent subset, then the maximal non-empty ones.
/// Throws ResourceError when the database has more than `ceiling` tuples.
RepairSet brute_force_repairs(const Instance& inst, std::size_t ceiling = kDefaultOracleCeiling);

}  // namespace repairaf
