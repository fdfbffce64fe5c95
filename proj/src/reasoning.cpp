#include "repairaf/reasoning.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <set>

#include "repairaf/error.hpp"

namespace repairaf {

namespace {

void record(ReasoningStats* stats, Route route, const TranslationResult& t) {
  if (!stats) return;
  stats->route = route;
  stats->arguments = t.framework.size();
  stats->attacks = t.framework.attack_count();
  stats->preprocess_rounds = t.preprocess_rounds;
  stats->removed_tuples = t.removed_tuples;
}

SearchStats* search_stats(ReasoningStats* stats) { return stats ? &stats->search : nullptr; }

std::vector<TupleId> tuples_of(const TranslationResult& t, const std::vector<std::string>& members) {
  std::vector<TupleId> out;
  for (const auto& m : members) {
    if (auto tuple = t.tuple_for_argument(m)) out.push_back(*tuple);
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TupleId> surviving_tuples(const TranslationResult& t) {
  std::vector<TupleId> out;
  for (const auto& [tuple, arg] : t.tuple_arg_map) out.push_back(tuple);
  return out;  // map order is sorted
}

std::uint64_t fnv1a(const std::string& text) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : text) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

void put_field(std::string& out, const std::string& field) {
  out += std::to_string(field.size());
  out += ':';
  out += field;
}

}  // namespace

bool RepairSet::contains(const std::vector<TupleId>& repair) const {
  return std::binary_search(repairs.begin(), repairs.end(), repair);
}

std::string instance_digest(const Instance& inst) {
  std::string canon;
  for (const auto& [name, rel] : inst.database().relations()) {
    canon += "R";
    put_field(canon, name);
    std::vector<std::string> attrs = rel.schema;
    std::sort(attrs.begin(), attrs.end());
    for (const auto& a : attrs) put_field(canon, a);
    std::vector<const Tuple*> tuples;
    for (const auto& t : rel.tuples) tuples.push_back(&t);
    std::sort(tuples.begin(), tuples.end(), [](const Tuple* a, const Tuple* b) { return a->id < b->id; });
    for (const Tuple* t : tuples) {
      canon += "T";
      put_field(canon, t->id);
      for (const auto& [attr, value] : t->values) {  // std::map: sorted by attribute
        put_field(canon, attr);
        put_field(canon, value);
      }
    }
  }
  std::vector<std::string> deps;
  for (const auto& d : inst.dependencies()) {
    std::string s;
    put_field(s, d.label);
    put_field(s, d.to_string());
    deps.push_back(std::move(s));
  }
  std::sort(deps.begin(), deps.end());
  for (const auto& d : deps) {
    canon += "D";
    canon += d;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(canon)));
  return buf;
}

Semantics routed_semantics(Route route) {
  return route == Route::FdOnly ? Semantics::Naive : Semantics::Preferred;
}

RepairSet enumerate_repairs(const Instance& inst, ReasoningStats* stats) {
  const Route route = route_for(inst);
  TranslationResult t = translate(inst);
  record(stats, route, t);
  RepairSet out;
  out.instance_digest = instance_digest(inst);
  if (route == Route::IdOnly) {
    // After pre-processing the surviving tuples form the unique extension.
    auto survivors = surviving_tuples(t);
    if (!survivors.empty()) out.repairs.push_back(std::move(survivors));
    return out;
  }
  for (const auto& ext : enumerate_extensions(t.framework, routed_semantics(route), {}, search_stats(stats))) {
    out.repairs.push_back(tuples_of(t, ext.members));
  }
  std::sort(out.repairs.begin(), out.repairs.end());
  out.repairs.erase(std::unique(out.repairs.begin(), out.repairs.end()), out.repairs.end());
  return out;
}

bool rep_exists(const Instance& inst, ReasoningStats* stats) {
  const Route route = route_for(inst);
  TranslationResult t = translate(inst);
  record(stats, route, t);
  // On a pre-processed ID-only framework the naive extension is the repair.
  Semantics sem = route == Route::Mixed ? Semantics::Preferred : Semantics::Naive;
  return exists_nonempty_extension(t.framework, sem, search_stats(stats));
}

std::optional<std::vector<TupleId>> find_repair(const Instance& inst, ReasoningStats* stats) {
  const Route route = route_for(inst);
  TranslationResult t = translate(inst);
  record(stats, route, t);
  if (route == Route::IdOnly) {
    auto survivors = surviving_tuples(t);
    if (survivors.empty()) return std::nullopt;
    return survivors;
  }
  auto ext = find_extension(t.framework, routed_semantics(route), search_stats(stats));
  if (!ext) return std::nullopt;
  return tuples_of(t, ext->members);
}

bool some_repair(const Instance& inst, const TupleId& tuple, ReasoningStats* stats) {
  inst.database().tuple(tuple);
  const Route route = route_for(inst);
  TranslationResult t = translate(inst);
  record(stats, route, t);
  auto it = t.tuple_arg_map.find(tuple);
  if (it == t.tuple_arg_map.end()) return false;
  switch (route) {
    case Route::FdOnly: return credulous(t.framework, it->second, Semantics::Naive, {}, search_stats(stats));
    case Route::IdOnly: return true;
    case Route::Mixed:
      return credulous(t.framework, it->second, Semantics::Preferred, {}, search_stats(stats));
  }
  return false;
}

bool all_repair(const Instance& inst, const TupleId& tuple, const ReasoningOptions& options,
                ReasoningStats* stats) {
  inst.database().tuple(tuple);
  const Route route = route_for(inst);
  TranslationResult t = translate(inst);
  record(stats, route, t);
  AcceptanceOptions accept;
  accept.vacuous_skeptical = options.vacuous_skeptical;
  auto it = t.tuple_arg_map.find(tuple);
  if (it == t.tuple_arg_map.end()) {
    if (!options.vacuous_skeptical) return false;
    Semantics sem = route == Route::Mixed ? Semantics::Preferred : Semantics::Naive;
    return !exists_nonempty_extension(t.framework, sem, search_stats(stats));
  }
  switch (route) {
    case Route::FdOnly:
      return skeptical(t.framework, it->second, Semantics::Naive, accept, search_stats(stats));
    case Route::IdOnly: return true;
    case Route::Mixed:
      return skeptical(t.framework, it->second, Semantics::Preferred, accept, search_stats(stats));
  }
  return false;
}

bool repair_at_least(const Instance& inst, std::size_t k, ReasoningStats* stats) {
  if (inst.has_ids()) {
    throw PreconditionError("repair_at_least is defined for functional dependencies only");
  }
  if (k == 0) throw DomainError("repair_at_least: k must be at least 1");
  TranslationResult t = build_af_fd(inst);
  record(stats, Route::FdOnly, t);
  return exists_naive_of_size(t.framework, k, search_stats(stats));
}

RepairSet brute_force_repairs(const Instance& inst, std::size_t ceiling) {
  constexpr std::size_t kHardLimit = 32;
  const Database& db = inst.database();
  const auto ids = db.tuple_ids();
  const std::size_t n = ids.size();
  if (n > ceiling || n > kHardLimit) {
    throw ResourceError("brute-force oracle: " + std::to_string(n) + " tuples exceed the ceiling of " +
                        std::to_string(std::min(ceiling, kHardLimit)));
  }
  using Mask = std::uint64_t;
  std::vector<const Tuple*> tuples;
  for (const auto& id : ids) tuples.push_back(&db.tuple(id));

  // Pairwise FD conflicts and, per (tuple, ID), the mask of its supporters.
  std::vector<Mask> conflict(n, 0);
  std::vector<std::vector<Mask>> needs(n);
  for (const auto& d : inst.dependencies()) {
    for (std::size_t a = 0; a < n; ++a) {
      if (tuples[a]->relation != d.source_relation) continue;
      if (d.is_fd()) {
        for (std::size_t b = 0; b < n; ++b) {
          if (b != a && tuples[b]->relation == d.source_relation && violates_pair(*tuples[a], *tuples[b], d)) {
            conflict[a] |= Mask{1} << b;
          }
        }
      } else {
        Mask sup = 0;
        auto key = tuples[a]->project(d.lhs);
        for (std::size_t b = 0; b < n; ++b) {
          if (tuples[b]->relation == d.target_relation && tuples[b]->project(d.rhs) == key) {
            sup |= Mask{1} << b;
          }
        }
        needs[a].push_back(sup);
      }
    }
  }

  const Mask limit = Mask{1} << n;
  std::vector<std::uint8_t> consistent(limit, 0);
  for (Mask m = 0; m < limit; ++m) {
    bool ok = true;
    for (std::size_t a = 0; a < n && ok; ++a) {
      if (!((m >> a) & 1U)) continue;
      if (conflict[a] & m) ok = false;
      for (Mask sup : needs[a]) {
        if (!(sup & m)) ok = false;
      }
    }
    consistent[m] = ok;
  }
  // reach[m]: m or some superset of m is consistent
  std::vector<std::uint8_t> reach(consistent);
  for (Mask m = limit; m-- > 0;) {
    for (std::size_t b = 0; b < n && !reach[m]; ++b) {
      if (!((m >> b) & 1U) && reach[m | (Mask{1} << b)]) reach[m] = 1;
    }
  }

  RepairSet out;
  out.instance_digest = instance_digest(inst);
  for (Mask m = 1; m < limit; ++m) {
    if (!consistent[m]) continue;
    bool maximal = true;
    for (std::size_t b = 0; b < n && maximal; ++b) {
      if (!((m >> b) & 1U) && reach[m | (Mask{1} << b)]) maximal = false;
    }
    if (!maximal) continue;
    std::vector<TupleId> repair;
    for (std::size_t a = 0; a < n; ++a) {
      if ((m >> a) & 1U) repair.push_back(ids[a]);
    }
    out.repairs.push_back(std::move(repair));
  }
  std::sort(out.repairs.begin(), out.repairs.end());
  return out;
}

}  // namespace repairaf
