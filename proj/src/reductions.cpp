#include "repairaf/reductions.hpp"

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <cstdlib>
#include <set>

#include "repairaf/error.hpp"

namespace repairaf {

namespace {

// Which role the extra column pair t{m+1}/u{m+1} plays, if present.
enum class ExtraColumn { None, ForceDistinguished, SupportExistentials };

bool looks_like_constant(const std::string& name) {
  if (name == "0" || name == "1") return true;
  if (name.size() < 2 || name[0] != 'c') return false;
  return std::all_of(name.begin() + 1, name.end(), [](unsigned char ch) { return std::isdigit(ch); });
}

std::string constant(std::size_t i) { return "c" + std::to_string(i); }

std::vector<std::set<int>> normalized_clauses(const CnfFormula& phi) {
  std::vector<std::set<int>> out;
  for (const auto& clause : phi.clauses) out.emplace_back(clause.begin(), clause.end());
  return out;
}

EncodedInstance encode(const CnfFormula& phi, const std::vector<int>& variables, ExtraColumn extra,
                       const std::set<int>& existential) {
  phi.validate();
  const auto clauses = normalized_clauses(phi);
  const std::size_t m = clauses.size();
  const std::size_t columns = extra == ExtraColumn::None ? m : m + 1;

  std::vector<std::string> schema;
  for (std::size_t i = 0; i <= columns; ++i) {
    schema.push_back("t" + std::to_string(i));
    schema.push_back("u" + std::to_string(i));
  }
  const std::string rel = kEncodedRelation;
  Database db;
  db.add_relation(rel, schema);

  auto row = [&](const TupleId& id) {
    Tuple t{id, rel, {}};
    for (const auto& a : schema) t.values[a] = "0";
    return t;
  };
  auto put = [](Tuple& t, std::size_t i, const std::string& tv, const std::string& uv) {
    t.values["t" + std::to_string(i)] = tv;
    t.values["u" + std::to_string(i)] = uv;
  };

  Tuple distinguished = row(kDistinguishedTuple);
  for (std::size_t i = 1; i <= m; ++i) put(distinguished, i, constant(i), "0");
  if (extra != ExtraColumn::None) put(distinguished, m + 1, constant(m + 1), constant(m + 1));
  db.add_tuple(std::move(distinguished));

  EncodedInstance out{Instance(Database{}, {}), kDistinguishedTuple, {}};
  for (int v : variables) {
    const std::string name = phi.variable_name(v);
    Tuple pos = row("s_" + name);
    Tuple neg = row("ns_" + name);
    put(pos, 0, name, "1");
    put(neg, 0, name, "0");
    for (std::size_t i = 1; i <= m; ++i) {
      if (clauses[i - 1].count(v)) put(pos, i, constant(i), constant(i));
      if (clauses[i - 1].count(-v)) put(neg, i, constant(i), constant(i));
    }
    bool supported_by_phi = extra == ExtraColumn::ForceDistinguished ||
                            (extra == ExtraColumn::SupportExistentials && existential.count(v));
    if (supported_by_phi) {
      put(pos, m + 1, constant(m + 1), "0");
      put(neg, m + 1, constant(m + 1), "0");
    }
    out.variable_tuples.emplace(name, std::make_pair(pos.id, neg.id));
    db.add_tuple(std::move(pos));
    db.add_tuple(std::move(neg));
  }

  std::vector<Dependency> deps;
  deps.push_back(Dependency::functional(rel, {"t0"}, {"u0"}, "fd0"));
  for (std::size_t i = 1; i <= columns; ++i) {
    deps.push_back(Dependency::inclusion(rel, {"t" + std::to_string(i)}, rel,
                                         {"u" + std::to_string(i)}, "id" + std::to_string(i)));
  }
  out.instance = Instance(std::move(db), std::move(deps));
  return out;
}

std::vector<int> all_variables(const CnfFormula& phi) {
  std::vector<int> out;
  for (int v = 1; v <= phi.num_vars; ++v) out.push_back(v);
  return out;
}

}  // namespace

std::string CnfFormula::variable_name(int v) const {
  if (v >= 1 && static_cast<std::size_t>(v) <= names.size()) return names[v - 1];
  return "x" + std::to_string(v);
}

void CnfFormula::validate() const {
  if (num_vars < 0) throw DomainError("negative variable count");
  for (std::size_t c = 0; c < clauses.size(); ++c) {
    if (clauses[c].empty()) throw DomainError("clause " + std::to_string(c + 1) + " is empty");
    for (int lit : clauses[c]) {
      if (lit == 0 || std::abs(lit) > num_vars) {
        throw DomainError("clause " + std::to_string(c + 1) + ": literal " + std::to_string(lit) +
                          " outside variables 1.." + std::to_string(num_vars));
      }
    }
  }
  if (!names.empty() && names.size() != static_cast<std::size_t>(num_vars)) {
    throw DomainError("variable names must cover every variable");
  }
  std::set<std::string> seen;
  for (int v = 1; v <= num_vars; ++v) {
    std::string name = variable_name(v);
    if (name.empty() || looks_like_constant(name) || name == "phi" ||
        name.find('#') != std::string::npos) {
      throw DomainError("variable name '" + name + "' is reserved or invalid");
    }
    if (!seen.insert(name).second) throw DomainError("duplicate variable name '" + name + "'");
  }
}

void Qbf2Formula::validate() const {
  matrix.validate();
  std::set<int> quantified;
  for (int v : universal) {
    if (v < 1 || v > matrix.num_vars) throw DomainError("universal variable out of range");
    if (!quantified.insert(v).second) throw DomainError("variable quantified twice: " + std::to_string(v));
  }
  for (int v : existential) {
    if (v < 1 || v > matrix.num_vars) throw DomainError("existential variable out of range");
    if (!quantified.insert(v).second) throw DomainError("variable quantified twice: " + std::to_string(v));
  }
  for (const auto& clause : matrix.clauses) {
    for (int lit : clause) {
      if (!quantified.count(std::abs(lit))) {
        throw DomainError("matrix variable " + std::to_string(std::abs(lit)) + " is not quantified");
      }
    }
  }
}

EncodedInstance encode_sat_somerepair(const CnfFormula& phi) {
  return encode(phi, all_variables(phi), ExtraColumn::None, {});
}

EncodedInstance encode_sat_rep(const CnfFormula& phi) {
  return encode(phi, all_variables(phi), ExtraColumn::ForceDistinguished, {});
}

EncodedInstance encode_qbf_allrepair(const Qbf2Formula& phi) {
  phi.validate();
  std::vector<int> vars(phi.universal);
  vars.insert(vars.end(), phi.existential.begin(), phi.existential.end());
  std::sort(vars.begin(), vars.end());
  std::set<int> existential(phi.existential.begin(), phi.existential.end());
  return encode(phi.matrix, vars, ExtraColumn::SupportExistentials, existential);
}

bool eval_cnf(const CnfFormula& phi, const Assignment& assignment) {
  for (int v = 1; v <= phi.num_vars; ++v) {
    if (!assignment.count(v)) throw DomainError("assignment misses variable " + std::to_string(v));
  }
  for (const auto& clause : phi.clauses) {
    bool sat = std::any_of(clause.begin(), clause.end(), [&](int lit) {
      return assignment.at(std::abs(lit)) == (lit > 0);
    });
    if (!sat) return false;
  }
  return true;
}

bool cnf_satisfiable(const CnfFormula& phi, std::size_t ceiling) {
  const auto n = static_cast<std::size_t>(phi.num_vars);
  if (n > ceiling) throw ResourceError("cnf sweep: too many variables");
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    Assignment a;
    for (std::size_t v = 1; v <= n; ++v) a[static_cast<int>(v)] = (bits >> (v - 1)) & 1U;
    if (eval_cnf(phi, a)) return true;
  }
  return false;
}

bool eval_qbf2(const Qbf2Formula& phi, std::size_t ceiling) {
  phi.validate();
  const std::size_t ny = phi.universal.size();
  const std::size_t nz = phi.existential.size();
  if (ny + nz > ceiling) {
    throw ResourceError("qbf sweep: " + std::to_string(ny + nz) + " variables exceed the ceiling of " +
                        std::to_string(ceiling));
  }
  Assignment base;
  for (int v = 1; v <= phi.matrix.num_vars; ++v) base[v] = false;  // unquantified, unused
  for (std::uint64_t ybits = 0; ybits < (std::uint64_t{1} << ny); ++ybits) {
    Assignment a = base;
    for (std::size_t k = 0; k < ny; ++k) a[phi.universal[k]] = (ybits >> k) & 1U;
    bool witness = false;
    for (std::uint64_t zbits = 0; zbits < (std::uint64_t{1} << nz) && !witness; ++zbits) {
      for (std::size_t k = 0; k < nz; ++k) a[phi.existential[k]] = (zbits >> k) & 1U;
      witness = eval_cnf(phi.matrix, a);
    }
    if (!witness) return false;
  }
  return true;
}

}  // namespace repairaf
