#include "repairaf/relational.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_set>

#include "repairaf/error.hpp"

namespace repairaf {

namespace {

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    if (k) out += ",";
    out += parts[k];
  }
  return out;
}

void require_attributes(const Relation& rel, const std::vector<std::string>& attrs,
                        const std::string& label) {
  for (const auto& a : attrs) {
    if (!rel.has_attribute(a)) {
      throw SchemaError("dependency " + label + ": unknown attribute '" + a + "' in relation '" +
                        rel.name + "'");
    }
  }
}

std::vector<const Tuple*> resolve(const Database& db, std::span<const TupleId> subset) {
  std::vector<const Tuple*> out;
  out.reserve(subset.size());
  for (const auto& id : subset) out.push_back(&db.tuple(id));
  return out;
}

bool fd_compatible(const Tuple& s, const Tuple& t, const std::vector<Dependency>& deps) {
  for (const auto& d : deps) {
    if (d.is_fd() && s.relation == d.source_relation && t.relation == d.source_relation &&
        violates_pair(s, t, d)) {
      return false;
    }
  }
  return true;
}

// Greatest subset of `members` satisfying every ID, where supporters are drawn
// from the same subset. Union-closure of ID satisfaction makes this unique.
std::set<TupleId> id_fixpoint(const Database& db, std::set<TupleId> members,
                              const std::vector<Dependency>& deps) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto it = members.begin(); it != members.end();) {
      const Tuple& s = db.tuple(*it);
      bool supported = true;
      for (const auto& d : deps) {
        if (!d.is_id() || s.relation != d.source_relation) continue;
        auto key = s.project(d.lhs);
        bool found = false;
        for (const auto& cand : db.relation(d.target_relation).tuples) {
          if (members.count(cand.id) && cand.project(d.rhs) == key) {
            found = true;
            break;
          }
        }
        if (!found) {
          supported = false;
          break;
        }
      }
      if (!supported) {
        it = members.erase(it);
        changed = true;
      } else {
        ++it;
      }
    }
  }
  return members;
}

}  // namespace

const std::string& Tuple::at(const std::string& attribute) const {
  auto it = values.find(attribute);
  if (it == values.end()) {
    throw SchemaError("tuple '" + id + "' has no attribute '" + attribute + "'");
  }
  return it->second;
}

std::vector<std::string> Tuple::project(std::span<const std::string> attributes) const {
  std::vector<std::string> out;
  out.reserve(attributes.size());
  for (const auto& a : attributes) out.push_back(at(a));
  return out;
}

bool Relation::has_attribute(const std::string& attribute) const {
  return std::find(schema.begin(), schema.end(), attribute) != schema.end();
}

void Database::add_relation(const std::string& name, std::vector<std::string> schema) {
  if (name.empty()) throw SchemaError("relation name must not be empty");
  if (relations_.count(name)) throw SchemaError("duplicate relation '" + name + "'");
  std::set<std::string> seen;
  for (const auto& a : schema) {
    if (!seen.insert(a).second) {
      throw SchemaError("duplicate attribute '" + a + "' in relation '" + name + "'");
    }
  }
  relations_.emplace(name, Relation{name, std::move(schema), {}});
}

void Database::add_relation(Relation relation) {
  std::vector<Tuple> tuples = std::move(relation.tuples);
  add_relation(relation.name, std::move(relation.schema));
  for (auto& t : tuples) {
    t.relation = relation.name;
    add_tuple(std::move(t));
  }
}

void Database::add_tuple(Tuple tuple) {
  auto rel = relations_.find(tuple.relation);
  if (rel == relations_.end()) {
    throw SchemaError("tuple '" + tuple.id + "' refers to unknown relation '" + tuple.relation + "'");
  }
  if (tuple.id.empty()) throw SchemaError("tuple id must not be empty");
  // '#' separates tuple ids from dependency labels in auxiliary argument ids.
  if (tuple.id.find('#') != std::string::npos) {
    throw SchemaError("tuple id '" + tuple.id + "' must not contain '#'");
  }
  if (index_.count(tuple.id)) throw SchemaError("duplicate tuple id '" + tuple.id + "'");
  const auto& schema = rel->second.schema;
  if (tuple.values.size() != schema.size()) {
    throw SchemaError("tuple '" + tuple.id + "' does not match the schema of '" + tuple.relation +
                      "'");
  }
  for (const auto& a : schema) {
    if (!tuple.values.count(a)) {
      throw SchemaError("tuple '" + tuple.id + "' lacks attribute '" + a + "'");
    }
  }
  index_.emplace(tuple.id, std::make_pair(tuple.relation, rel->second.tuples.size()));
  rel->second.tuples.push_back(std::move(tuple));
}

const Relation* Database::find_relation(const std::string& name) const {
  auto it = relations_.find(name);
  return it == relations_.end() ? nullptr : &it->second;
}

const Relation& Database::relation(const std::string& name) const {
  if (const Relation* rel = find_relation(name)) return *rel;
  throw SchemaError("unknown relation '" + name + "'");
}

const Tuple& Database::tuple(const TupleId& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) throw DomainError("unknown tuple id '" + id + "'");
  return relations_.at(it->second.first).tuples[it->second.second];
}

std::vector<TupleId> Database::tuple_ids() const {
  std::vector<TupleId> out;
  out.reserve(index_.size());
  for (const auto& [id, loc] : index_) out.push_back(id);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> Database::active_domain() const {
  std::set<std::string> values;
  for (const auto& [name, rel] : relations_) {
    for (const auto& t : rel.tuples) {
      for (const auto& [attr, value] : t.values) values.insert(value);
    }
  }
  return {values.begin(), values.end()};
}

Dependency Dependency::functional(std::string relation, std::vector<std::string> lhs,
                                  std::vector<std::string> rhs, std::string label) {
  Dependency d;
  d.kind = DependencyKind::Functional;
  d.lhs = std::move(lhs);
  d.rhs = std::move(rhs);
  d.source_relation = relation;
  d.target_relation = std::move(relation);
  d.label = std::move(label);
  return d;
}

Dependency Dependency::inclusion(std::string source, std::vector<std::string> lhs,
                                 std::string target, std::vector<std::string> rhs,
                                 std::string label) {
  Dependency d;
  d.kind = DependencyKind::Inclusion;
  d.lhs = std::move(lhs);
  d.rhs = std::move(rhs);
  d.source_relation = std::move(source);
  d.target_relation = std::move(target);
  d.label = std::move(label);
  return d;
}

std::vector<AttributeRef> Dependency::lhs_refs() const {
  std::vector<AttributeRef> out;
  for (const auto& a : lhs) out.push_back({source_relation, a});
  return out;
}

std::vector<AttributeRef> Dependency::rhs_refs() const {
  std::vector<AttributeRef> out;
  for (const auto& a : rhs) out.push_back({target_relation, a});
  return out;
}

std::string Dependency::to_string() const {
  if (is_fd()) return "fd " + source_relation + ": " + join(lhs) + " -> " + join(rhs);
  return "id " + source_relation + "[" + join(lhs) + "] <= " + target_relation + "[" + join(rhs) +
         "]";
}

void validate_dependency(const Database& db, const Dependency& d) {
  if (d.label.empty()) throw DependencyError("dependency label must not be empty");
  if (d.label.find('#') != std::string::npos) {
    throw DependencyError("dependency label '" + d.label + "' must not contain '#'");
  }
  if (d.is_fd()) {
    if (d.source_relation != d.target_relation) {
      throw DependencyError("functional dependency " + d.label + " spans two relations");
    }
    const Relation& rel = db.relation(d.source_relation);
    require_attributes(rel, d.lhs, d.label);
    require_attributes(rel, d.rhs, d.label);
  } else {
    if (d.lhs.size() != d.rhs.size()) {
      throw DependencyError("inclusion dependency " + d.label + ": sequences differ in length (" +
                            std::to_string(d.lhs.size()) + " vs " + std::to_string(d.rhs.size()) +
                            ")");
    }
    require_attributes(db.relation(d.source_relation), d.lhs, d.label);
    require_attributes(db.relation(d.target_relation), d.rhs, d.label);
  }
}

Instance::Instance(Database database, std::vector<Dependency> dependencies)
    : database_(std::move(database)), dependencies_(std::move(dependencies)) {
  std::set<std::string> labels;
  for (const auto& d : dependencies_) {
    validate_dependency(database_, d);
    if (!labels.insert(d.label).second) {
      throw DependencyError("duplicate dependency label '" + d.label + "'");
    }
  }
}

bool Instance::has_fds() const {
  return std::any_of(dependencies_.begin(), dependencies_.end(),
                     [](const Dependency& d) { return d.is_fd(); });
}

bool Instance::has_ids() const {
  return std::any_of(dependencies_.begin(), dependencies_.end(),
                     [](const Dependency& d) { return d.is_id(); });
}

bool violates_pair(const Tuple& s, const Tuple& t, const Dependency& fd) {
  for (const auto& a : fd.lhs) {
    if (s.at(a) != t.at(a)) return false;
  }
  for (const auto& a : fd.rhs) {
    if (s.at(a) != t.at(a)) return true;
  }
  return false;
}

bool satisfies_fd(const Database& db, std::span<const TupleId> subset, const Dependency& fd) {
  if (!fd.is_fd()) throw PreconditionError("satisfies_fd: " + fd.label + " is not an FD");
  validate_dependency(db, fd);
  auto tuples = resolve(db, subset);
  for (const Tuple* t : tuples) {
    if (t->relation != fd.source_relation) {
      throw DomainError("tuple '" + t->id + "' is not in relation '" + fd.source_relation + "'");
    }
  }
  for (std::size_t a = 0; a < tuples.size(); ++a) {
    for (std::size_t b = a + 1; b < tuples.size(); ++b) {
      if (violates_pair(*tuples[a], *tuples[b], fd)) return false;
    }
  }
  return true;
}

bool satisfies_id(const Database& db, std::span<const TupleId> subset, const Dependency& id) {
  if (!id.is_id()) throw PreconditionError("satisfies_id: " + id.label + " is not an ID");
  validate_dependency(db, id);
  auto tuples = resolve(db, subset);
  for (const Tuple* s : tuples) {
    if (s->relation != id.source_relation) continue;
    auto key = s->project(id.lhs);
    bool found = std::any_of(tuples.begin(), tuples.end(), [&](const Tuple* t) {
      return t->relation == id.target_relation && t->project(id.rhs) == key;
    });
    if (!found) return false;
  }
  return true;
}

std::vector<TupleId> support(const Database& db, const TupleId& s, const Dependency& id) {
  if (!id.is_id()) throw PreconditionError("support: " + id.label + " is not an ID");
  validate_dependency(db, id);
  const Tuple& src = db.tuple(s);
  if (src.relation != id.source_relation) {
    throw DomainError("tuple '" + s + "' is not in source relation '" + id.source_relation +
                      "' of " + id.label);
  }
  auto key = src.project(id.lhs);
  std::vector<TupleId> out;
  for (const auto& t : db.relation(id.target_relation).tuples) {
    if (t.project(id.rhs) == key) out.push_back(t.id);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool is_consistent(std::span<const TupleId> subset, const Instance& inst) {
  const Database& db = inst.database();
  for (const auto& d : inst.dependencies()) {
    if (d.is_fd()) {
      std::vector<TupleId> local;
      for (const auto& id : subset) {
        if (db.tuple(id).relation == d.source_relation) local.push_back(id);
      }
      if (!satisfies_fd(db, local, d)) return false;
    } else if (!satisfies_id(db, subset, d)) {
      return false;
    }
  }
  return true;
}

bool is_repair(std::span<const TupleId> subset, const Instance& inst) {
  if (subset.empty()) return false;
  const Database& db = inst.database();
  std::set<TupleId> members;
  for (const auto& id : subset) {
    db.tuple(id);
    if (!members.insert(id).second) return false;
  }
  if (!is_consistent(subset, inst)) return false;

  const auto& deps = inst.dependencies();
  // Tuples that can join the subset without an FD conflict.
  std::vector<const Tuple*> candidates;
  for (const auto& id : db.tuple_ids()) {
    if (members.count(id)) continue;
    const Tuple& t = db.tuple(id);
    bool ok = std::all_of(members.begin(), members.end(), [&](const TupleId& m) {
      return fd_compatible(db.tuple(m), t, deps);
    });
    if (ok) candidates.push_back(&t);
  }
  if (candidates.empty()) return true;
  if (!inst.has_ids()) return false;  // any single compatible tuple extends the subset

  // A larger consistent set exists iff, for some maximal pairwise-compatible
  // group of candidates, the ID fixpoint of subset ∪ group keeps the whole
  // subset and gains at least one tuple.
  const std::size_t n = candidates.size();
  std::vector<bool> chosen(n, false);
  std::function<bool(std::size_t)> search = [&](std::size_t k) -> bool {
    if (k == n) {
      for (std::size_t j = 0; j < n; ++j) {
        if (chosen[j]) continue;
        bool blocked = false;
        for (std::size_t i = 0; i < n && !blocked; ++i) {
          blocked = chosen[i] && !fd_compatible(*candidates[i], *candidates[j], deps);
        }
        if (!blocked) return false;  // not a maximal group; its superset is visited elsewhere
      }
      std::set<TupleId> pool = members;
      for (std::size_t j = 0; j < n; ++j) {
        if (chosen[j]) pool.insert(candidates[j]->id);
      }
      auto fix = id_fixpoint(db, pool, deps);
      bool keeps = std::includes(fix.begin(), fix.end(), members.begin(), members.end());
      return keeps && fix.size() > members.size();
    }
    bool compatible = true;
    for (std::size_t i = 0; i < k && compatible; ++i) {
      compatible = !chosen[i] || fd_compatible(*candidates[i], *candidates[k], deps);
    }
    if (compatible) {
      chosen[k] = true;
      if (search(k + 1)) return true;
      chosen[k] = false;
    }
    return search(k + 1);
  };
  return !search(0);
}

}  // namespace repairaf
