#include "repairaf/translation.hpp"

#include <algorithm>
#include <cassert>
#include <random>
#include <set>

#include "repairaf/error.hpp"

namespace repairaf {

namespace {

using KeyIndex = std::map<std::vector<std::string>, std::vector<TupleId>>;

// Target tuples of an ID grouped by their rhs projection.
KeyIndex index_targets(const Database& db, const Dependency& id, const std::set<TupleId>& alive) {
  KeyIndex index;
  for (const auto& t : db.relation(id.target_relation).tuples) {
    if (alive.count(t.id)) index[t.project(id.rhs)].push_back(t.id);
  }
  return index;
}

std::set<TupleId> all_tuples(const Database& db) {
  auto ids = db.tuple_ids();
  return {ids.begin(), ids.end()};
}

void add_fd_layer(ArgFramework::Builder& b, const Instance& inst, const std::set<TupleId>& alive) {
  const Database& db = inst.database();
  for (const auto& d : inst.dependencies()) {
    if (!d.is_fd()) continue;
    const auto& tuples = db.relation(d.source_relation).tuples;
    for (std::size_t x = 0; x < tuples.size(); ++x) {
      if (!alive.count(tuples[x].id)) continue;
      for (std::size_t y = x + 1; y < tuples.size(); ++y) {
        if (!alive.count(tuples[y].id)) continue;
        if (violates_pair(tuples[x], tuples[y], d)) {
          b.add_attack(tuples[x].id, tuples[y].id, d.label);
          b.add_attack(tuples[y].id, tuples[x].id, d.label);
        }
      }
    }
  }
}

void add_id_layer(ArgFramework::Builder& b, const Instance& inst, const std::set<TupleId>& alive) {
  const Database& db = inst.database();
  for (const auto& i : inst.dependencies()) {
    if (!i.is_id()) continue;
    KeyIndex targets = index_targets(db, i, alive);
    for (const auto& s : db.relation(i.source_relation).tuples) {
      if (!alive.count(s.id)) continue;
      Argument aux = Argument::auxiliary(s.id, i.label);
      b.add_argument(aux);
      b.add_attack(aux.id, s.id, i.label);
      b.add_attack(aux.id, aux.id, i.label);
      auto it = targets.find(s.project(i.lhs));
      if (it == targets.end()) continue;
      for (const auto& t : it->second) b.add_attack(t, aux.id, i.label);
    }
  }
}

TranslationResult assemble(const Instance& inst, const std::set<TupleId>& alive, bool fd_layer,
                           bool id_layer) {
  ArgFramework::Builder b;
  TranslationResult result;
  for (const auto& id : alive) {
    b.add_argument(Argument::for_tuple(id));
    result.tuple_arg_map.emplace(id, id);
  }
  if (fd_layer) add_fd_layer(b, inst, alive);
  if (id_layer) add_id_layer(b, inst, alive);
  result.framework = std::move(b).build();
  return result;
}

TranslationResult remove_tuples(const TranslationResult& result,
                                const std::set<TupleId>& doomed) {
  const ArgFramework& f = result.framework;
  ArgSet keep = ArgSet::full(f.size());
  for (std::size_t a = 0; a < f.size(); ++a) {
    if (doomed.count(f.argument(a).tuple_id)) keep.reset(a);
  }
  TranslationResult out;
  out.framework = f.restrict_to(keep);
  out.removed_tuples = result.removed_tuples;
  out.preprocess_rounds = result.preprocess_rounds;
  for (const auto& [tuple, arg] : result.tuple_arg_map) {
    if (!doomed.count(tuple)) out.tuple_arg_map.emplace(tuple, arg);
  }
  return out;
}

// Tuples owning an auxiliary argument attacked by nothing but itself.
std::set<TupleId> undefendable(const ArgFramework& f, std::uint64_t* steps) {
  std::set<TupleId> out;
  for (std::size_t a = 0; a < f.size(); ++a) {
    const Argument& arg = f.argument(a);
    if (!arg.is_auxiliary()) continue;
    if (steps) ++*steps;
    ArgSet external = f.attackers(a);
    external.reset(a);
    if (external.empty()) out.insert(arg.tuple_id);
  }
  return out;
}

}  // namespace

std::optional<TupleId> TranslationResult::tuple_for_argument(const std::string& argument_id) const {
  auto idx = framework.index_of(argument_id);
  if (!idx) return std::nullopt;
  const Argument& arg = framework.argument(*idx);
  if (arg.is_auxiliary()) return std::nullopt;
  return arg.tuple_id;
}

TranslationResult build_af_fd(const Instance& inst) {
  if (inst.has_ids()) throw PreconditionError("build_af_fd: instance contains inclusion dependencies");
  return assemble(inst, all_tuples(inst.database()), true, false);
}

TranslationResult build_af_id(const Instance& inst) {
  if (inst.has_fds()) throw PreconditionError("build_af_id: instance contains functional dependencies");
  return assemble(inst, all_tuples(inst.database()), false, true);
}

TranslationResult preprocess(const TranslationResult& result, PreprocessStats* stats) {
  TranslationResult current = result;
  PreprocessStats local;
  for (;;) {
    auto doomed = undefendable(current.framework, &local.steps);
    if (doomed.empty()) break;
    const ArgFramework& f = current.framework;
    for (std::size_t a = 0; a < f.size(); ++a) {
      if (doomed.count(f.argument(a).tuple_id)) {
        local.steps += f.targets(a).count() + f.attackers(a).count();
      }
    }
    current = remove_tuples(current, doomed);
    current.removed_tuples.insert(current.removed_tuples.end(), doomed.begin(), doomed.end());
    ++current.preprocess_rounds;
    ++local.rounds;
  }
  if (stats) *stats = local;
  return current;
}

TranslationResult preprocess_in_random_order(const TranslationResult& result, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  TranslationResult current = result;
  for (;;) {
    auto doomed = undefendable(current.framework, nullptr);
    if (doomed.empty()) break;
    std::vector<TupleId> pool(doomed.begin(), doomed.end());
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    TupleId victim = pool[pick(rng)];
    current = remove_tuples(current, {victim});
    current.removed_tuples.push_back(victim);
    ++current.preprocess_rounds;
  }
  return current;
}

std::vector<std::vector<TupleId>> database_preprocess(const Instance& inst) {
  const Database& db = inst.database();
  std::set<TupleId> alive = all_tuples(db);
  std::vector<std::vector<TupleId>> rounds;
  for (;;) {
    std::set<TupleId> doomed;
    for (const auto& i : inst.dependencies()) {
      if (!i.is_id()) continue;
      KeyIndex targets = index_targets(db, i, alive);
      for (const auto& s : db.relation(i.source_relation).tuples) {
        if (alive.count(s.id) && !targets.count(s.project(i.lhs))) doomed.insert(s.id);
      }
    }
    if (doomed.empty()) break;
    for (const auto& id : doomed) alive.erase(id);
    rounds.emplace_back(doomed.begin(), doomed.end());
  }
  return rounds;
}

TranslationResult build_af_multirel(const Instance& inst) {
  for (const auto& d : inst.dependencies()) {
    if (d.is_fd() && d.source_relation != d.target_relation) {
      throw PreconditionError("functional dependency " + d.label + " spans two relations");
    }
  }
  auto rounds = database_preprocess(inst);
  std::set<TupleId> alive = all_tuples(inst.database());
  std::vector<TupleId> removed;
  for (const auto& round : rounds) {
    for (const auto& id : round) {
      alive.erase(id);
      removed.push_back(id);
    }
  }
  TranslationResult result = assemble(inst, alive, true, true);
  result.removed_tuples = std::move(removed);
  result.preprocess_rounds = rounds.size();
#ifndef NDEBUG
  {
    // Database-level and framework-level pre-processing must agree.
    TranslationResult check = preprocess(assemble(inst, all_tuples(inst.database()), false, true));
    assert(check.removed_tuples == result.removed_tuples);
  }
#endif
  return result;
}

TranslationResult build_af_combined(const Instance& inst) {
  if (!inst.is_unirelational()) {
    throw PreconditionError("build_af_combined expects a single relation; use build_af_multirel");
  }
  return build_af_multirel(inst);
}

TranslationResult build_af_raw(const Instance& inst) {
  return assemble(inst, all_tuples(inst.database()), true, true);
}

Route route_for(const Instance& inst) {
  if (!inst.has_ids()) return Route::FdOnly;
  if (!inst.has_fds()) return Route::IdOnly;
  return Route::Mixed;
}

TranslationResult translate(const Instance& inst) {
  switch (route_for(inst)) {
    case Route::FdOnly: return build_af_fd(inst);
    case Route::IdOnly: return preprocess(build_af_id(inst));
    case Route::Mixed: return build_af_multirel(inst);
  }
  return build_af_multirel(inst);
}

}  // namespace repairaf
