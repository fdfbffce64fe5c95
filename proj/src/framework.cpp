#include "repairaf/framework.hpp"

#include <algorithm>

#include "repairaf/error.hpp"

namespace repairaf {

Argument Argument::for_tuple(const std::string& tuple_id) {
  return Argument{tuple_id, ArgumentKind::Tuple, tuple_id, {}};
}

Argument Argument::auxiliary(const std::string& tuple_id, const std::string& dependency) {
  return Argument{tuple_id + "#" + dependency, ArgumentKind::Auxiliary, tuple_id, dependency};
}

ArgFramework::Builder& ArgFramework::Builder::add_argument(Argument argument) {
  auto [it, inserted] = arguments_.emplace(argument.id, argument);
  if (!inserted) {
    const Argument& prev = it->second;
    if (prev.kind != argument.kind || prev.tuple_id != argument.tuple_id ||
        prev.dependency != argument.dependency) {
      throw DomainError("argument '" + argument.id + "' redefined");
    }
  }
  return *this;
}

ArgFramework::Builder& ArgFramework::Builder::add_attack(const std::string& attacker,
                                                         const std::string& target,
                                                         const std::string& label) {
  if (!arguments_.count(attacker)) throw DomainError("attack from unknown argument '" + attacker + "'");
  if (!arguments_.count(target)) throw DomainError("attack on unknown argument '" + target + "'");
  auto& labels = attacks_[{attacker, target}];
  if (!label.empty()) labels.insert(label);
  return *this;
}

ArgFramework ArgFramework::Builder::build() && {
  ArgFramework f;
  const std::size_t n = arguments_.size();
  f.arguments_.reserve(n);
  for (auto& [id, arg] : arguments_) {
    f.index_.emplace(id, f.arguments_.size());
    f.arguments_.push_back(std::move(arg));
  }
  f.attackers_.assign(n, ArgSet(n));
  f.targets_.assign(n, ArgSet(n));
  f.self_attackers_ = ArgSet(n);
  for (auto& [attack, labels] : attacks_) {
    std::size_t from = f.index_.find(attack.first)->second;
    std::size_t to = f.index_.find(attack.second)->second;
    f.targets_[from].set(to);
    f.attackers_[to].set(from);
    if (from == to) f.self_attackers_.set(from);
    if (!labels.empty()) f.provenance_.emplace(attack, std::move(labels));
  }
  f.attack_count_ = attacks_.size();
  return f;
}

std::optional<std::size_t> ArgFramework::index_of(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t ArgFramework::require_index(std::string_view id) const {
  if (auto idx = index_of(id)) return *idx;
  throw DomainError("unknown argument '" + std::string(id) + "'");
}

std::vector<Attack> ArgFramework::attack_list() const {
  std::vector<Attack> out;
  out.reserve(attack_count_);
  for (std::size_t from = 0; from < size(); ++from) {
    targets_[from].for_each([&](std::size_t to) {
      out.emplace_back(arguments_[from].id, arguments_[to].id);
    });
  }
  return out;  // index order is id order, so this is already sorted
}

const std::set<std::string>& ArgFramework::provenance(const std::string& attacker,
                                                      const std::string& target) const {
  static const std::set<std::string> kNone;
  auto it = provenance_.find({attacker, target});
  return it == provenance_.end() ? kNone : it->second;
}

ArgFramework ArgFramework::restrict_to(const ArgSet& keep) const {
  Builder b;
  keep.for_each([&](std::size_t i) { b.add_argument(arguments_[i]); });
  keep.for_each([&](std::size_t from) {
    targets_[from].for_each([&](std::size_t to) {
      if (!keep.test(to)) return;
      const auto& labels = provenance(arguments_[from].id, arguments_[to].id);
      if (labels.empty()) {
        b.add_attack(arguments_[from].id, arguments_[to].id);
      }
      for (const auto& l : labels) b.add_attack(arguments_[from].id, arguments_[to].id, l);
    });
  });
  return std::move(b).build();
}

ArgSet ArgFramework::to_set(std::span<const std::string> ids) const {
  ArgSet out(size());
  for (const auto& id : ids) out.set(require_index(id));
  return out;
}

std::vector<std::string> ArgFramework::to_ids(const ArgSet& set) const {
  std::vector<std::string> out;
  set.for_each([&](std::size_t i) { out.push_back(arguments_[i].id); });
  return out;
}

std::string_view to_string(Semantics sem) {
  switch (sem) {
    case Semantics::ConflictFree: return "conf";
    case Semantics::Naive: return "naive";
    case Semantics::Admissible: return "adm";
    case Semantics::Preferred: return "pref";
    case Semantics::Stable: return "stab";
  }
  return "unknown";
}

std::optional<Semantics> parse_semantics(std::string_view name) {
  if (name == "conf" || name == "conflict-free") return Semantics::ConflictFree;
  if (name == "naive") return Semantics::Naive;
  if (name == "adm" || name == "admissible") return Semantics::Admissible;
  if (name == "pref" || name == "preferred") return Semantics::Preferred;
  if (name == "stab" || name == "stable") return Semantics::Stable;
  return std::nullopt;
}

bool is_conflict_free(const ArgFramework& f, const ArgSet& s) {
  bool ok = true;
  s.for_each([&](std::size_t i) { ok = ok && !f.targets(i).intersects(s); });
  return ok;
}

bool is_conflict_free(const ArgFramework& f, std::span<const std::string> s) {
  return is_conflict_free(f, f.to_set(s));
}

bool defends(const ArgFramework& f, const ArgSet& s, std::size_t a) {
  ArgSet reach(f.size());
  s.for_each([&](std::size_t i) { reach |= f.targets(i); });
  return f.attackers(a).is_subset_of(reach);
}

bool defends(const ArgFramework& f, std::span<const std::string> s, std::string_view a) {
  return defends(f, f.to_set(s), f.require_index(a));
}

bool is_admissible(const ArgFramework& f, const ArgSet& s) {
  if (!is_conflict_free(f, s)) return false;
  ArgSet reach(f.size());
  ArgSet threats(f.size());
  s.for_each([&](std::size_t i) {
    reach |= f.targets(i);
    threats |= f.attackers(i);
  });
  return threats.is_subset_of(reach);
}

bool is_admissible(const ArgFramework& f, std::span<const std::string> s) {
  return is_admissible(f, f.to_set(s));
}

bool is_stable(const ArgFramework& f, const ArgSet& s) {
  if (!is_conflict_free(f, s)) return false;
  ArgSet reach(f.size());
  s.for_each([&](std::size_t i) { reach |= f.targets(i); });
  ArgSet outside = ArgSet::full(f.size());
  outside.subtract(s);
  return outside.is_subset_of(reach);
}

}  // namespace repairaf
