#include "repairaf/io.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "repairaf/error.hpp"

namespace repairaf::io {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0;
  std::size_t e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_list(std::string_view s, std::size_t line) {
  std::vector<std::string> out;
  std::string body = trim(s);
  if (body.empty()) return out;
  std::size_t start = 0;
  for (;;) {
    std::size_t comma = body.find(',', start);
    std::string item = trim(std::string_view(body).substr(start, comma == std::string::npos ? std::string::npos : comma - start));
    if (item.empty()) throw ParseError("empty attribute name in list '" + body + "'", line);
    out.push_back(std::move(item));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

struct CsvRecord {
  std::size_t line;
  std::vector<std::string> fields;
};

std::vector<CsvRecord> read_csv_records(std::string_view text) {
  std::vector<CsvRecord> records;
  std::size_t i = 0;
  std::size_t line = 1;
  if (text.substr(0, 3) == "\xEF\xBB\xBF") i = 3;  // UTF-8 byte order mark
  while (i < text.size()) {
    CsvRecord rec{line, {}};
    std::string field;
    bool quoted_field = false;
    bool end_of_record = false;
    while (!end_of_record) {
      if (i >= text.size()) {
        end_of_record = true;
        break;
      }
      char c = text[i];
      if (c == '"' && field.empty() && !quoted_field) {
        quoted_field = true;
        ++i;
        for (;;) {
          if (i >= text.size()) throw ParseError("unterminated quoted field", rec.line);
          char q = text[i++];
          if (q == '"') {
            if (i < text.size() && text[i] == '"') {
              field += '"';
              ++i;
            } else {
              break;
            }
          } else {
            if (q == '\n') ++line;
            field += q;
          }
        }
        if (i < text.size() && text[i] != ',' && text[i] != '\n' && text[i] != '\r') {
          throw ParseError("unexpected character after closing quote", line);
        }
        continue;
      }
      if (c == ',') {
        rec.fields.push_back(std::move(field));
        field.clear();
        quoted_field = false;
        ++i;
      } else if (c == '\r' || c == '\n') {
        if (c == '\r' && i + 1 < text.size() && text[i + 1] == '\n') ++i;
        ++i;
        ++line;
        end_of_record = true;
      } else {
        if (quoted_field) throw ParseError("unexpected character after closing quote", line);
        field += c;
        ++i;
      }
    }
    bool blank = rec.fields.empty() && field.empty() && !quoted_field;
    if (!blank) {
      rec.fields.push_back(std::move(field));
      records.push_back(std::move(rec));
    }
  }
  return records;
}

std::string csv_field(const std::string& value) {
  bool needs_quotes = value.find_first_of(",\"\r\n") != std::string::npos || value.empty() ||
                      value.front() == ' ' || value.back() == ' ';
  if (!needs_quotes) return value;
  std::string out = "\"";
  for (char c : value) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string strip_comment(std::string_view line) {
  std::size_t hash = line.find('#');
  return trim(line.substr(0, hash));
}

Dependency parse_dependency_line(const std::string& body, std::size_t line) {
  std::string text = body;
  std::string label;
  if (std::size_t at = text.rfind('@'); at != std::string::npos) {
    label = trim(std::string_view(text).substr(at + 1));
    if (label.empty() || label.find_first_of(" \t") != std::string::npos) {
      throw ParseError("malformed dependency name after '@'", line);
    }
    text = trim(std::string_view(text).substr(0, at));
  }
  auto keyword_end = text.find_first_of(" \t");
  std::string keyword = text.substr(0, keyword_end);
  std::string rest = keyword_end == std::string::npos ? "" : trim(std::string_view(text).substr(keyword_end));

  if (keyword == "fd") {
    auto colon = rest.find(':');
    auto arrow = rest.find("->");
    if (colon == std::string::npos || arrow == std::string::npos || arrow < colon) {
      throw ParseError("expected 'fd <relation>: <attrs> -> <attrs>'", line);
    }
    std::string rel = trim(std::string_view(rest).substr(0, colon));
    if (rel.empty()) throw ParseError("missing relation name", line);
    auto lhs = split_list(std::string_view(rest).substr(colon + 1, arrow - colon - 1), line);
    auto rhs = split_list(std::string_view(rest).substr(arrow + 2), line);
    if (label.empty()) label = "fd" + std::to_string(line);
    return Dependency::functional(rel, std::move(lhs), std::move(rhs), label);
  }
  if (keyword == "id") {
    auto le = rest.find("<=");
    if (le == std::string::npos) throw ParseError("expected 'id <rel>[...] <= <rel>[...]'", line);
    auto side = [&](std::string_view part) {
      std::string s = trim(part);
      auto open = s.find('[');
      if (open == std::string::npos || s.empty() || s.back() != ']') {
        throw ParseError("expected '<relation>[<attrs>]' but found '" + s + "'", line);
      }
      std::string rel = trim(std::string_view(s).substr(0, open));
      if (rel.empty()) throw ParseError("missing relation name", line);
      return std::make_pair(rel, split_list(std::string_view(s).substr(open + 1, s.size() - open - 2), line));
    };
    auto [src, lhs] = side(std::string_view(rest).substr(0, le));
    auto [tgt, rhs] = side(std::string_view(rest).substr(le + 2));
    if (lhs.size() != rhs.size()) {
      throw ParseError("inclusion dependency sequences differ in length (" + std::to_string(lhs.size()) +
                           " vs " + std::to_string(rhs.size()) + ")",
                       line);
    }
    if (label.empty()) label = "id" + std::to_string(line);
    return Dependency::inclusion(src, std::move(lhs), tgt, std::move(rhs), label);
  }
  throw ParseError("unknown dependency syntax '" + body + "'", line);
}

std::vector<std::string> tokens(std::string_view line) {
  std::istringstream in{std::string(line)};
  std::vector<std::string> out;
  for (std::string tok; in >> tok;) out.push_back(tok);
  return out;
}

int parse_int(const std::string& tok, std::size_t line) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    throw ParseError("expected an integer, found '" + tok + "'", line);
  }
}

struct DimacsBody {
  int num_vars = 0;
  int num_clauses = 0;
  std::vector<std::vector<std::string>> prefix_lines;  // tokens of a/e lines, in order
  std::vector<std::size_t> prefix_line_numbers;
  std::vector<std::vector<int>> clauses;
};

DimacsBody parse_dimacs_body(std::string_view text, bool allow_prefix) {
  DimacsBody body;
  bool header = false;
  std::vector<int> current;
  std::size_t line_no = 0;
  std::istringstream in{std::string(text)};
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    auto toks = tokens(raw);
    if (toks.empty() || toks[0] == "c") continue;
    if (toks[0] == "%") break;
    if (toks[0] == "p") {
      if (header) throw ParseError("duplicate problem line", line_no);
      if (toks.size() != 4 || toks[1] != "cnf") throw ParseError("expected 'p cnf <vars> <clauses>'", line_no);
      body.num_vars = parse_int(toks[2], line_no);
      body.num_clauses = parse_int(toks[3], line_no);
      if (body.num_vars < 0 || body.num_clauses < 0) throw ParseError("negative count in problem line", line_no);
      header = true;
      continue;
    }
    if (!header) throw ParseError("clause before problem line", line_no);
    if (toks[0] == "a" || toks[0] == "e") {
      if (!allow_prefix) throw ParseError("quantifier line in plain DIMACS input", line_no);
      if (!body.clauses.empty() || !current.empty()) {
        throw ParseError("quantifier line after clauses", line_no);
      }
      body.prefix_lines.push_back(toks);
      body.prefix_line_numbers.push_back(line_no);
      continue;
    }
    for (const auto& tok : toks) {
      int lit = parse_int(tok, line_no);
      if (lit == 0) {
        if (current.empty()) throw ParseError("empty clause", line_no);
        body.clauses.push_back(std::move(current));
        current.clear();
        continue;
      }
      if (std::abs(lit) > body.num_vars) {
        throw ParseError("literal " + tok + " exceeds declared variable count", line_no);
      }
      current.push_back(lit);
    }
  }
  if (!header) throw ParseError("missing problem line");
  if (!current.empty()) throw ParseError("last clause is not terminated by 0", line_no);
  if (static_cast<int>(body.clauses.size()) != body.num_clauses) {
    throw ParseError("problem line declares " + std::to_string(body.num_clauses) + " clauses, found " +
                     std::to_string(body.clauses.size()));
  }
  return body;
}

std::vector<int> parse_block(const std::vector<std::string>& toks, int num_vars, std::size_t line) {
  if (toks.size() < 2 || toks.back() != "0") throw ParseError("quantifier block must end with 0", line);
  std::vector<int> out;
  for (std::size_t k = 1; k + 1 < toks.size(); ++k) {
    int v = parse_int(toks[k], line);
    if (v <= 0 || v > num_vars) throw ParseError("quantified variable out of range: " + toks[k], line);
    out.push_back(v);
  }
  return out;
}

}  // namespace

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open '" + path.string() + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, std::string_view content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << content;
  if (!out) throw IoError("write failed for '" + path.string() + "'");
}

Relation parse_csv_relation_text(std::string_view text, const std::string& relation_name) {
  auto records = read_csv_records(text);
  if (records.empty()) throw ParseError("missing header row", 1);
  const auto& header = records.front().fields;
  bool explicit_ids = !header.empty() && header.front() == kIdColumn;
  Relation rel{relation_name, {}, {}};
  std::set<std::string> seen;
  for (std::size_t k = explicit_ids ? 1 : 0; k < header.size(); ++k) {
    const auto& name = header[k];
    if (name.empty()) throw ParseError("empty attribute name in header", records.front().line);
    if (name == kIdColumn) throw ParseError("'#id' must be the first column", records.front().line);
    if (!seen.insert(name).second) {
      throw ParseError("duplicate header name '" + name + "'", records.front().line);
    }
    rel.schema.push_back(name);
  }
  std::set<std::string> ids;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.fields.size() != header.size()) {
      throw ParseError("row has " + std::to_string(rec.fields.size()) + " fields, header has " +
                           std::to_string(header.size()),
                       rec.line);
    }
    Tuple t;
    t.relation = relation_name;
    t.id = explicit_ids ? rec.fields.front() : relation_name + ":" + std::to_string(r);
    if (t.id.empty()) throw ParseError("empty tuple id", rec.line);
    if (!ids.insert(t.id).second) throw ParseError("duplicate tuple id '" + t.id + "'", rec.line);
    for (std::size_t k = 0; k < rel.schema.size(); ++k) {
      t.values[rel.schema[k]] = rec.fields[k + (explicit_ids ? 1 : 0)];
    }
    rel.tuples.push_back(std::move(t));
  }
  return rel;
}

Relation parse_csv_relation(const std::filesystem::path& path, const std::string& relation_name) {
  return parse_csv_relation_text(read_file(path), relation_name);
}

std::string write_csv_relation(const Relation& relation) {
  std::string out(kIdColumn);
  for (const auto& a : relation.schema) out += "," + csv_field(a);
  out += "\n";
  for (const auto& t : relation.tuples) {
    out += csv_field(t.id);
    for (const auto& a : relation.schema) out += "," + csv_field(t.values.at(a));
    out += "\n";
  }
  return out;
}

std::vector<Dependency> parse_dependencies_text(std::string_view text) {
  std::vector<Dependency> deps;
  std::istringstream in{std::string(text)};
  std::size_t line_no = 0;
  for (std::string raw; std::getline(in, raw);) {
    ++line_no;
    std::string body = strip_comment(raw);
    if (body.empty()) continue;
    deps.push_back(parse_dependency_line(body, line_no));
  }
  return deps;
}

std::vector<Dependency> parse_dependencies(const std::filesystem::path& path) {
  return parse_dependencies_text(read_file(path));
}

std::string write_dependencies(const std::vector<Dependency>& deps) {
  std::string out;
  for (const auto& d : deps) out += d.to_string() + " @" + d.label + "\n";
  return out;
}

std::string apx_name(const Argument& argument) {
  if (!argument.is_auxiliary()) return argument.id;
  return argument.tuple_id + "_" + argument.dependency;
}

std::string export_apx(const TranslationResult& result) {
  const ArgFramework& f = result.framework;
  std::vector<std::string> names;
  names.reserve(f.size());
  for (const auto& a : f.arguments()) names.push_back(apx_name(a));
  std::vector<std::string> sorted_names = names;
  std::sort(sorted_names.begin(), sorted_names.end());
  if (std::adjacent_find(sorted_names.begin(), sorted_names.end()) != sorted_names.end()) {
    throw DomainError("two arguments share the APX name '" +
                      *std::adjacent_find(sorted_names.begin(), sorted_names.end()) + "'");
  }
  std::vector<std::pair<std::string, std::string>> attacks;
  for (std::size_t from = 0; from < f.size(); ++from) {
    f.targets(from).for_each([&](std::size_t to) { attacks.emplace_back(names[from], names[to]); });
  }
  std::sort(attacks.begin(), attacks.end());
  std::string out;
  for (const auto& n : sorted_names) out += "arg(" + n + ").\n";
  for (const auto& [a, b] : attacks) out += "att(" + a + "," + b + ").\n";
  return out;
}

void export_apx(const TranslationResult& result, const std::filesystem::path& path) {
  write_file(path, export_apx(result));
}

json translation_sidecar(const TranslationResult& result) {
  const ArgFramework& f = result.framework;
  json map = json::object();
  for (const auto& [tuple, arg] : result.tuple_arg_map) {
    map[tuple] = apx_name(f.argument(f.require_index(arg)));
  }
  json provenance = json::array();
  for (const auto& [attack, labels] : f.provenance_map()) {
    const Argument& from = f.argument(f.require_index(attack.first));
    const Argument& to = f.argument(f.require_index(attack.second));
    provenance.push_back({{"attacker", apx_name(from)},
                          {"target", apx_name(to)},
                          {"dependencies", std::vector<std::string>(labels.begin(), labels.end())}});
  }
  return json{{"arguments", f.size()},
              {"attacks", f.attack_count()},
              {"tuple_arg_map", map},
              {"removed_tuples", result.removed_tuples},
              {"preprocess_rounds", result.preprocess_rounds},
              {"provenance", provenance}};
}

CnfFormula parse_dimacs(std::string_view text) {
  auto body = parse_dimacs_body(text, false);
  CnfFormula phi;
  phi.num_vars = body.num_vars;
  phi.clauses = std::move(body.clauses);
  return phi;
}

Qbf2Formula parse_qdimacs(std::string_view text) {
  auto body = parse_dimacs_body(text, true);
  if (body.prefix_lines.size() != 2 || body.prefix_lines[0][0] != "a" || body.prefix_lines[1][0] != "e") {
    throw ParseError("expected exactly one 'a' line followed by one 'e' line");
  }
  Qbf2Formula phi;
  phi.universal = parse_block(body.prefix_lines[0], body.num_vars, body.prefix_line_numbers[0]);
  phi.existential = parse_block(body.prefix_lines[1], body.num_vars, body.prefix_line_numbers[1]);
  phi.matrix.num_vars = body.num_vars;
  phi.matrix.clauses = std::move(body.clauses);
  std::set<int> universal(phi.universal.begin(), phi.universal.end());
  std::set<int> existential(phi.existential.begin(), phi.existential.end());
  for (int v = 1; v <= body.num_vars; ++v) {
    std::string prefix = universal.count(v) ? "y" : existential.count(v) ? "z" : "x";
    phi.matrix.names.push_back(prefix + std::to_string(v));
  }
  try {
    phi.validate();
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
  return phi;
}

}  // namespace repairaf::io
