#pragma once

// File formats: CSV relations, dependency files, APX export with a JSON
// sidecar, DIMACS CNF and a two-block QDIMACS subset.

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

#include "repairaf/reductions.hpp"
#include "repairaf/relational.hpp"
#include "repairaf/translation.hpp"

namespace repairaf::io {

using nlohmann::json;

/// Column holding explicit tuple ids. Without it ids become "<relation>:<row>".
inline constexpr std::string_view kIdColumn = "#id";

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view content);

/// RFC 4180 style: comma separated, double-quoted fields with "" escapes.
/// The first row is the header; blank lines are skipped.
Relation parse_csv_relation_text(std::string_view text, const std::string& relation_name);
Relation parse_csv_relation(const std::filesystem::path& path, const std::string& relation_name);
/// Always writes the "#id" column first.
std::string write_csv_relation(const Relation& relation);

/// One dependency per line:
///   fd <rel>: a1,...,ak -> b1,...,bl [@name]
///   id <rel1>[a1,...,ak] <= <rel2>[b1,...,bk] [@name]
/// '#' starts a comment. Default labels are "fd<line>" / "id<line>".
std::vector<Dependency> parse_dependencies_text(std::string_view text);
std::vector<Dependency> parse_dependencies(const std::filesystem::path& path);
std::string write_dependencies(const std::vector<Dependency>& deps);

/// Argument id as written to APX: "<tuple>_<label>" for auxiliary arguments.
std::string apx_name(const Argument& argument);
/// arg(...) lines sorted, then att(...) lines sorted. Throws DomainError when
/// two arguments render to the same name.
std::string export_apx(const TranslationResult& result);
void export_apx(const TranslationResult& result, const std::filesystem::path& path);

/// tuple_arg_map, removed_tuples and attack provenance, keyed by APX names.
json translation_sidecar(const TranslationResult& result);

/// "p cnf <vars> <clauses>" then 0-terminated clauses; 'c' lines are comments.
CnfFormula parse_dimacs(std::string_view text);
/// DIMACS with exactly one "a ... 0" line followed by one "e ... 0" line.
/// Universal variable v is named "y<v>", existential "z<v>".
Qbf2Formula parse_qdimacs(std::string_view text);

}  // namespace repairaf::io
