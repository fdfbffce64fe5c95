// Backtracking extension search over in/out/undecided labellings.
//
// Arguments are decided in index order. Each node holds the IN set, the
// still-undecided candidates (arguments neither in nor in conflict with IN),
// and the arguments explicitly labelled OUT. Branch IN is explored before
// branch OUT, so leaves appear in descending order of their characteristic
// bit vectors: a strict superset is always reached before any of its
// subsets. Preferred enumeration relies on this to decide maximality by
// comparing against the extensions already found.

#include <algorithm>
#include <cassert>
#include <functional>

#include "repairaf/error.hpp"
#include "repairaf/framework.hpp"

namespace repairaf {
namespace {

enum class Mode { ConflictFree, Naive, Admissible, Preferred, Stable };

Mode mode_for(Semantics sem) {
  switch (sem) {
    case Semantics::ConflictFree: return Mode::ConflictFree;
    case Semantics::Naive: return Mode::Naive;
    case Semantics::Admissible: return Mode::Admissible;
    case Semantics::Preferred: return Mode::Preferred;
    case Semantics::Stable: return Mode::Stable;
  }
  return Mode::ConflictFree;
}

class ExtensionSearch {
 public:
  using Visitor = std::function<bool(const ArgSet&)>;  // false stops the search

  ExtensionSearch(const ArgFramework& f, Mode mode) : f_(f), mode_(mode), n_(f.size()) {
    conflicts_.reserve(n_);
    for (std::size_t i = 0; i < n_; ++i) {
      ArgSet c = f.attackers(i);
      c |= f.targets(i);
      conflicts_.push_back(std::move(c));
    }
    all_ = ArgSet::full(n_);
    eligible_ = all_;
    eligible_.subtract(f.self_attackers());
  }

  void set_forced(std::size_t a) { forced_ = a; }
  void set_min_size(std::size_t k) { min_size_ = k; }

  void run(const Visitor& visit) {
    assert(!(forced_ && mode_ == Mode::Preferred));
    visit_ = &visit;
    found_.clear();
    stopped_ = false;
    Node root{ArgSet(n_), eligible_, ArgSet(n_), ArgSet(n_), ArgSet(n_), ArgSet(n_)};
    if (forced_) {
      if (f_.self_attacking(*forced_)) return;
      add_in(root, *forced_);
    }
    descend(root);
  }

  const SearchStats& stats() const { return stats_; }

 private:
  struct Node {
    ArgSet in;
    ArgSet candidates;
    ArgSet out;          // labelled OUT by choice
    ArgSet in_targets;   // arguments attacked by IN
    ArgSet in_threats;   // arguments attacking IN
    ArgSet in_conflict;  // in_targets ∪ in_threats
  };

  void add_in(Node& node, std::size_t a) const {
    node.in.set(a);
    node.in_targets |= f_.targets(a);
    node.in_threats |= f_.attackers(a);
    node.in_conflict |= conflicts_[a];
    node.candidates.reset(a);
    node.candidates.subtract(conflicts_[a]);
  }

  // False when no admissible leaf under this node can satisfy the mode.
  bool feasible(const Node& node) const {
    if (min_size_ && node.in.count() + node.candidates.count() < min_size_) return false;
    switch (mode_) {
      case Mode::ConflictFree: return true;
      case Mode::Naive: {
        ArgSet reach = node.in_conflict;
        node.candidates.for_each([&](std::size_t c) { reach |= conflicts_[c]; });
        return node.out.is_subset_of(reach);
      }
      case Mode::Admissible:
      case Mode::Preferred: {
        ArgSet reach = node.in_targets;
        node.candidates.for_each([&](std::size_t c) { reach |= f_.targets(c); });
        if (!node.in_threats.is_subset_of(reach)) return false;
        if (mode_ == Mode::Preferred) {
          ArgSet upper = node.in;
          upper |= node.candidates;
          for (const auto& e : found_) {
            if (upper.is_subset_of(e)) return false;
          }
        }
        return true;
      }
      case Mode::Stable: {
        ArgSet reach = node.in_targets;
        node.candidates.for_each([&](std::size_t c) { reach |= f_.targets(c); });
        ArgSet decided_out = all_;
        decided_out.subtract(node.in);
        decided_out.subtract(node.candidates);
        return decided_out.is_subset_of(reach);
      }
    }
    return true;
  }

  bool accept_leaf(const Node& node) {
    if (min_size_ && node.in.count() < min_size_) return false;
    switch (mode_) {
      case Mode::ConflictFree: return true;
      case Mode::Naive: {
        ArgSet rest = eligible_;
        rest.subtract(node.in);
        return rest.is_subset_of(node.in_conflict);
      }
      case Mode::Admissible: return node.in_threats.is_subset_of(node.in_targets);
      case Mode::Preferred: {
        if (!node.in_threats.is_subset_of(node.in_targets)) return false;
        for (const auto& e : found_) {
          if (node.in.is_subset_of(e)) return false;
        }
        found_.push_back(node.in);
        return true;
      }
      case Mode::Stable: {
        ArgSet rest = all_;
        rest.subtract(node.in);
        return rest.is_subset_of(node.in_targets);
      }
    }
    return false;
  }

  void descend(const Node& node) {
    if (stopped_) return;
    ++stats_.nodes;
    if (!feasible(node)) {
      ++stats_.pruned;
      return;
    }
    auto next = node.candidates.first();
    if (!next) {
      ++stats_.leaves;
      if (accept_leaf(node) && !(*visit_)(node.in)) stopped_ = true;
      return;
    }
    Node with = node;
    add_in(with, *next);
    descend(with);
    if (stopped_) return;
    Node without = node;
    without.candidates.reset(*next);
    without.out.set(*next);
    descend(without);
  }

  const ArgFramework& f_;
  Mode mode_;
  std::size_t n_;
  std::vector<ArgSet> conflicts_;
  ArgSet all_;
  ArgSet eligible_;
  std::optional<std::size_t> forced_;
  std::size_t min_size_ = 0;
  std::vector<ArgSet> found_;
  const Visitor* visit_ = nullptr;
  bool stopped_ = false;
  SearchStats stats_;
};

void merge_stats(SearchStats* into, const ExtensionSearch& search) {
  if (into) *into += search.stats();
}

bool has_eligible_argument(const ArgFramework& f) {
  ArgSet eligible = ArgSet::full(f.size());
  eligible.subtract(f.self_attackers());
  return !eligible.empty();
}

}  // namespace

std::vector<Extension> enumerate_extensions(const ArgFramework& f, Semantics sem,
                                            const EnumerationOptions& options,
                                            SearchStats* stats) {
  std::vector<Extension> out;
  ExtensionSearch search(f, mode_for(sem));
  search.run([&](const ArgSet& s) {
    if (s.empty() && !options.allow_empty) return true;
    out.push_back(Extension{f.to_ids(s)});
    return true;
  });
  merge_stats(stats, search);
  std::sort(out.begin(), out.end());
  return out;
}

bool credulous(const ArgFramework& f, std::string_view a, Semantics sem,
               const AcceptanceOptions& /*options*/, SearchStats* stats) {
  const std::size_t idx = f.require_index(a);
  if (f.self_attacking(idx)) return false;
  switch (sem) {
    case Semantics::ConflictFree:
    case Semantics::Naive:
      return true;  // {a} is conflict-free and extends to a naive set
    case Semantics::Admissible:
    case Semantics::Preferred: {
      // a is in a preferred extension iff it is in an admissible one
      ExtensionSearch search(f, Mode::Admissible);
      search.set_forced(idx);
      bool found = false;
      search.run([&](const ArgSet&) { return !(found = true); });
      merge_stats(stats, search);
      return found;
    }
    case Semantics::Stable: {
      ExtensionSearch search(f, Mode::Stable);
      search.set_forced(idx);
      bool found = false;
      search.run([&](const ArgSet&) { return !(found = true); });
      merge_stats(stats, search);
      return found;
    }
  }
  return false;
}

bool skeptical(const ArgFramework& f, std::string_view a, Semantics sem,
               const AcceptanceOptions& options, SearchStats* stats) {
  const std::size_t idx = f.require_index(a);
  if (sem == Semantics::Naive) {
    if (!has_eligible_argument(f)) {
      // the only naive set is ∅
      return options.allow_empty ? false : options.vacuous_skeptical;
    }
    if (f.self_attacking(idx)) return false;
    // a is in every naive set iff it conflicts with no other eligible argument
    ArgSet rivals = f.attackers(idx);
    rivals |= f.targets(idx);
    rivals.subtract(f.self_attackers());
    return rivals.empty();
  }
  auto exts = enumerate_extensions(f, sem, EnumerationOptions{options.allow_empty}, stats);
  if (exts.empty()) return options.vacuous_skeptical;
  const std::string& id = f.argument(idx).id;
  return std::all_of(exts.begin(), exts.end(), [&](const Extension& e) {
    return std::binary_search(e.members.begin(), e.members.end(), id);
  });
}

bool exists_nonempty_extension(const ArgFramework& f, Semantics sem, SearchStats* stats) {
  Mode mode = Mode::Admissible;
  switch (sem) {
    case Semantics::ConflictFree:
    case Semantics::Naive:
      return has_eligible_argument(f);
    case Semantics::Admissible:
    case Semantics::Preferred:
      mode = Mode::Admissible;  // a non-empty admissible set extends to a preferred one
      break;
    case Semantics::Stable:
      mode = Mode::Stable;
      break;
  }
  ExtensionSearch search(f, mode);
  bool found = false;
  search.run([&](const ArgSet& s) {
    if (s.empty()) return true;
    found = true;
    return false;
  });
  merge_stats(stats, search);
  return found;
}

std::optional<Extension> find_extension(const ArgFramework& f, Semantics sem, SearchStats* stats) {
  ExtensionSearch search(f, mode_for(sem));
  std::optional<Extension> out;
  search.run([&](const ArgSet& s) {
    if (s.empty()) return true;
    out = Extension{f.to_ids(s)};
    return false;
  });
  merge_stats(stats, search);
  return out;
}

bool exists_naive_of_size(const ArgFramework& f, std::size_t k, SearchStats* stats) {
  if (k == 0) return true;
  ExtensionSearch search(f, Mode::Naive);
  search.set_min_size(k);
  bool found = false;
  search.run([&](const ArgSet&) { return !(found = true); });
  merge_stats(stats, search);
  return found;
}

}  // namespace repairaf
