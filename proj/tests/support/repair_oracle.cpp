#include "repair_oracle.hpp"

#include <algorithm>
#include <cstdint>
#include <set>
#include <stdexcept>

namespace testsupport {

using repairaf::Dependency;
using repairaf::Instance;
using repairaf::Tuple;

namespace {

std::vector<std::string> values(const Tuple& t, const std::vector<std::string>& attrs) {
  std::vector<std::string> out;
  for (const auto& a : attrs) out.push_back(t.values.at(a));
  return out;
}

}  // namespace

bool consistent_by_definition(const Instance& inst, const std::vector<std::string>& subset) {
  const auto& db = inst.database();
  std::vector<const Tuple*> rows;
  for (const auto& id : subset) rows.push_back(&db.tuple(id));
  for (const Dependency& d : inst.dependencies()) {
    if (d.is_fd()) {
      for (const Tuple* s : rows)
        for (const Tuple* t : rows) {
          if (s->relation != d.source_relation || t->relation != d.source_relation) continue;
          if (values(*s, d.lhs) == values(*t, d.lhs) && values(*s, d.rhs) != values(*t, d.rhs)) return false;
        }
    } else {
      std::set<std::vector<std::string>> present;
      for (const Tuple* t : rows)
        if (t->relation == d.target_relation) present.insert(values(*t, d.rhs));
      for (const Tuple* s : rows)
        if (s->relation == d.source_relation && !present.count(values(*s, d.lhs))) return false;
    }
  }
  return true;
}

std::vector<std::vector<std::string>> repairs_by_definition(const Instance& inst) {
  const auto ids = inst.database().tuple_ids();
  const std::size_t n = ids.size();
  if (n > 16) throw std::invalid_argument("repairs_by_definition: too many tuples");
  const std::uint32_t limit = 1u << n;
  std::vector<char> ok(limit);
  for (std::uint32_t m = 0; m < limit; ++m) {
    std::vector<std::string> subset;
    for (std::size_t a = 0; a < n; ++a)
      if ((m >> a) & 1u) subset.push_back(ids[a]);
    ok[m] = consistent_by_definition(inst, subset);
  }
  std::vector<std::vector<std::string>> out;
  for (std::uint32_t m = 1; m < limit; ++m) {
    if (!ok[m]) continue;
    bool maximal = true;
    for (std::uint32_t s = 0; s < limit && maximal; ++s)
      if (s != m && (s & m) == m && ok[s]) maximal = false;
    if (!maximal) continue;
    std::vector<std::string> r;
    for (std::size_t a = 0; a < n; ++a)
      if ((m >> a) & 1u) r.push_back(ids[a]);
    out.push_back(std::move(r));
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace testsupport
