#pragma once

// Hardness encodings as instance generators:
//
//  * CNF satisfiability → brave reasoning (is s_phi in some repair?)
//  * CNF satisfiability → repair existence
//  * ∀Y ∃Z φ  → cautious reasoning (is s_phi in every repair?)
//
// All three build a single relation "T" over attributes t0,u0,...,tm,um
// (plus t{m+1},u{m+1} for the last two), one FD t0 -> u0 and one ID
// t_i <= u_i per clause.

#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "repairaf/relational.hpp"

namespace repairaf {

/// Clauses over variables 1..num_vars; literal v means v, -v means ¬v.
struct CnfFormula {
  int num_vars = 0;
  std::vector<std::vector<int>> clauses;
  /// Optional display names, names[v-1] for variable v. Defaults to "x<v>".
  std::vector<std::string> names;

  std::string variable_name(int v) const;
  /// Throws DomainError: empty clause, literal 0, literal out of range, bad names.
  void validate() const;
};

struct Qbf2Formula {
  std::vector<int> universal;
  std::vector<int> existential;
  CnfFormula matrix;

  /// Throws DomainError when the blocks overlap or a matrix variable is unquantified.
  void validate() const;
};

struct EncodedInstance {
  Instance instance;
  TupleId distinguished;
  /// Variable name → (tuple for the positive literal, tuple for the negative one).
  std::map<std::string, std::pair<TupleId, TupleId>> variable_tuples;
};

inline constexpr const char* kEncodedRelation = "T";
inline constexpr const char* kDistinguishedTuple = "s_phi";

EncodedInstance encode_sat_somerepair(const CnfFormula& phi);
EncodedInstance encode_sat_rep(const CnfFormula& phi);
/// Tuple pairs are created for the quantified variables in increasing order.
EncodedInstance encode_qbf_allrepair(const Qbf2Formula& phi);

using Assignment = std::map<int, bool>;

/// Throws DomainError when some variable of the formula is unassigned.
bool eval_cnf(const CnfFormula& phi, const Assignment& assignment);

/// Any satisfying assignment, by exhaustive sweep.
bool cnf_satisfiable(const CnfFormula& phi, std::size_t ceiling = 20);

inline constexpr std::size_t kDefaultQbfCeiling = 16;

/// ∀Y ∃Z φ by exhaustive sweep. Throws ResourceError above `ceiling` variables.
bool eval_qbf2(const Qbf2Formula& phi, std::size_t ceiling = kDefaultQbfCeiling);

}  // namespace repairaf
