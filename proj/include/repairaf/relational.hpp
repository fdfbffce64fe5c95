#pragma once

// Relational databases, functional and inclusion dependencies, and the
// subset-repair predicate. Everything else in the library is checked against
// the definitions in this header.

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <unordered_map>
#include <vector>

namespace repairaf {

using TupleId = std::string;

struct AttributeRef {
  std::string relation;
  std::string attribute;

  friend auto operator<=>(const AttributeRef&, const AttributeRef&) = default;
};

/// A row. Values are opaque strings compared by exact equality.
struct Tuple {
  TupleId id;
  std::string relation;
  std::map<std::string, std::string> values;

  /// Throws SchemaError when the attribute is not part of the tuple.
  const std::string& at(const std::string& attribute) const;
  /// s(x) for an attribute sequence x.
  std::vector<std::string> project(std::span<const std::string> attributes) const;
};

struct Relation {
  std::string name;
  std::vector<std::string> schema;
  std::vector<Tuple> tuples;

  bool has_attribute(const std::string& attribute) const;
};

/// A collection of named relations. Tuple ids are unique across the whole
/// database; every set operation in the library works on ids.
class Database {
 public:
  /// Throws SchemaError on a duplicate relation or duplicate attribute.
  void add_relation(const std::string& name, std::vector<std::string> schema);
  /// The tuple's value keys must equal the relation schema exactly.
  void add_tuple(Tuple tuple);
  /// Adds a parsed relation (schema plus tuples) in one go.
  void add_relation(Relation relation);

  const std::map<std::string, Relation>& relations() const noexcept { return relations_; }
  const Relation* find_relation(const std::string& name) const;
  const Relation& relation(const std::string& name) const;

  bool contains(const TupleId& id) const { return index_.count(id) != 0; }
  /// Throws DomainError for an unknown id.
  const Tuple& tuple(const TupleId& id) const;

  /// All tuple ids, sorted.
  std::vector<TupleId> tuple_ids() const;
  std::size_t size() const noexcept { return index_.size(); }
  bool empty() const noexcept { return index_.empty(); }

  /// dom(T): every value occurring in some tuple, sorted.
  std::vector<std::string> active_domain() const;

 private:
  std::map<std::string, Relation> relations_;
  std::unordered_map<TupleId, std::pair<std::string, std::size_t>> index_;
};

enum class DependencyKind { Functional, Inclusion };

/// dep(lhs; rhs) for FDs, lhs ⊆ rhs for IDs. For an FD source and target
/// relation coincide.
struct Dependency {
  DependencyKind kind = DependencyKind::Functional;
  std::vector<std::string> lhs;
  std::vector<std::string> rhs;
  std::string source_relation;
  std::string target_relation;
  std::string label;

  static Dependency functional(std::string relation, std::vector<std::string> lhs,
                               std::vector<std::string> rhs, std::string label);
  static Dependency inclusion(std::string source, std::vector<std::string> lhs, std::string target,
                              std::vector<std::string> rhs, std::string label);

  bool is_fd() const noexcept { return kind == DependencyKind::Functional; }
  bool is_id() const noexcept { return kind == DependencyKind::Inclusion; }

  std::vector<AttributeRef> lhs_refs() const;
  std::vector<AttributeRef> rhs_refs() const;

  /// Dependency-file syntax, without the label.
  std::string to_string() const;
};

/// Throws DependencyError for malformed dependencies (ID length mismatch,
/// cross-relation FD) and SchemaError for unknown relations or attributes.
void validate_dependency(const Database& db, const Dependency& d);

/// A database together with the dependencies it should satisfy.
class Instance {
 public:
  /// Validates every dependency against the database; labels must be unique.
  Instance(Database database, std::vector<Dependency> dependencies);

  const Database& database() const noexcept { return database_; }
  const std::vector<Dependency>& dependencies() const noexcept { return dependencies_; }

  bool has_fds() const;
  bool has_ids() const;
  bool is_unirelational() const { return database_.relations().size() <= 1; }

 private:
  Database database_;
  std::vector<Dependency> dependencies_;
};

/// True iff the two tuples alone violate the FD, i.e. {s,t} ⊭ d.
bool violates_pair(const Tuple& s, const Tuple& t, const Dependency& fd);

bool satisfies_fd(const Database& db, std::span<const TupleId> subset, const Dependency& fd);
bool satisfies_id(const Database& db, std::span<const TupleId> subset, const Dependency& id);

/// Tuples of target(i) whose rhs values equal s's lhs values. May contain s.
/// Throws DomainError when s is not in source(i).
std::vector<TupleId> support(const Database& db, const TupleId& s, const Dependency& id);

bool is_consistent(std::span<const TupleId> subset, const Instance& inst);

/// Non-empty, consistent, and no strictly larger subset of the database is
/// consistent. With IDs present every candidate superset is searched.
bool is_repair(std::span<const TupleId> subset, const Instance& inst);

}  // namespace repairaf
