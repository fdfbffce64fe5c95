#include "repairaf/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <set>

#include "repairaf/error.hpp"
#include "repairaf/reasoning.hpp"
#include "repairaf/reductions.hpp"
#include "repairaf/translation.hpp"

namespace repairaf::cli {

namespace {

using io::json;

struct CommandName {
  Command command;
  const char* name;
};

constexpr CommandName kCommands[] = {
    {Command::Repairs, "repairs"},
    {Command::Exists, "exists"},
    {Command::Brave, "brave"},
    {Command::Cautious, "cautious"},
    {Command::SizeAtLeast, "size-atleast"},
    {Command::Translate, "translate"},
    {Command::EncodeSat, "encode-sat"},
    {Command::EncodeSatRep, "encode-sat-rep"},
    {Command::EncodeQbf, "encode-qbf"},
    {Command::Oracle, "oracle"},
    {Command::Verify, "verify"},
};

bool is_encode(Command c) {
  return c == Command::EncodeSat || c == Command::EncodeSatRep || c == Command::EncodeQbf;
}

std::string_view route_name(Route r) {
  switch (r) {
    case Route::FdOnly: return "fd-only";
    case Route::IdOnly: return "id-only";
    case Route::Mixed: return "mixed";
  }
  return "";
}

json stats_json(const ReasoningStats& s) {
  return json{{"route", route_name(s.route)},
              {"arguments", s.arguments},
              {"attacks", s.attacks},
              {"preprocess_rounds", s.preprocess_rounds},
              {"search_nodes", s.search.nodes},
              {"search_leaves", s.search.leaves},
              {"search_pruned", s.search.pruned}};
}

json document(const JobConfig& cfg, const std::string& digest) {
  return json{{"command", to_string(cfg.command)},
              {"instance_digest", digest},
              {"answer", nullptr},
              {"repairs", json::array()},
              {"removed_tuples", json::array()},
              {"stats", json::object()}};
}

void fill_reasoning(json& doc, const ReasoningStats& stats) {
  doc["removed_tuples"] = stats.removed_tuples;
  doc["stats"] = stats_json(stats);
}

std::vector<TupleId> tuples_of(const TranslationResult& t, const std::vector<std::string>& members) {
  std::vector<TupleId> out;
  for (const auto& m : members) {
    if (auto tuple = t.tuple_for_argument(m)) out.push_back(*tuple);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// repairs/exists/brave/cautious evaluated under an explicit semantics on the
// routed (pre-processed) framework instead of the routing choice.
json run_with_semantics(const JobConfig& cfg, const Instance& inst, Semantics sem) {
  json doc = document(cfg, instance_digest(inst));
  ReasoningStats stats;
  stats.route = route_for(inst);
  TranslationResult t = translate(inst);
  stats.arguments = t.framework.size();
  stats.attacks = t.framework.attack_count();
  stats.preprocess_rounds = t.preprocess_rounds;
  stats.removed_tuples = t.removed_tuples;
  const EnumerationOptions enumerate{cfg.allow_empty};
  AcceptanceOptions accept;
  accept.allow_empty = cfg.allow_empty;
  accept.vacuous_skeptical = cfg.vacuous_skeptical;

  switch (cfg.command) {
    case Command::Repairs:
    case Command::Exists: {
      std::vector<std::vector<TupleId>> repairs;
      for (const auto& ext : enumerate_extensions(t.framework, sem, enumerate, &stats.search)) {
        repairs.push_back(tuples_of(t, ext.members));
      }
      std::sort(repairs.begin(), repairs.end());
      repairs.erase(std::unique(repairs.begin(), repairs.end()), repairs.end());
      doc["answer"] = !repairs.empty();
      doc["repairs"] = repairs;
      break;
    }
    case Command::Brave:
    case Command::Cautious: {
      inst.database().tuple(cfg.tuple);
      auto it = t.tuple_arg_map.find(cfg.tuple);
      if (it == t.tuple_arg_map.end()) {
        bool none = !exists_nonempty_extension(t.framework, sem, &stats.search);
        doc["answer"] = cfg.command == Command::Cautious && cfg.vacuous_skeptical && none;
      } else if (cfg.command == Command::Brave) {
        doc["answer"] = credulous(t.framework, it->second, sem, accept, &stats.search);
      } else {
        doc["answer"] = skeptical(t.framework, it->second, sem, accept, &stats.search);
      }
      doc["tuple"] = cfg.tuple;
      break;
    }
    default:
      throw PreconditionError("--semantics applies to repairs, exists, brave and cautious only");
  }
  fill_reasoning(doc, stats);
  doc["stats"]["semantics"] = repairaf::to_string(sem);
  return doc;
}

json run_translate(const JobConfig& cfg, const Instance& inst) {
  json doc = document(cfg, instance_digest(inst));
  TranslationResult t = cfg.raw ? build_af_raw(inst) : translate(inst);
  const std::string apx = io::export_apx(t);
  json sidecar = io::translation_sidecar(t);
  doc["removed_tuples"] = t.removed_tuples;
  doc["stats"] = json{{"route", route_name(route_for(inst))},
                      {"arguments", t.framework.size()},
                      {"attacks", t.framework.attack_count()},
                      {"preprocess_rounds", t.preprocess_rounds},
                      {"raw", cfg.raw}};
  doc["framework"] = sidecar;
  if (cfg.output_dir.empty()) {
    doc["apx"] = apx;
  } else {
    std::filesystem::path dir(cfg.output_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    io::write_file(dir / "framework.apx", apx);
    io::write_file(dir / "framework.json", sidecar.dump(2) + "\n");
    doc["files"] = {(dir / "framework.apx").string(), (dir / "framework.json").string()};
  }
  return doc;
}

json run_encode(const JobConfig& cfg) {
  const std::string text = io::read_file(cfg.formula_path);
  EncodedInstance enc = [&] {
    if (cfg.command == Command::EncodeQbf) return encode_qbf_allrepair(io::parse_qdimacs(text));
    CnfFormula phi = io::parse_dimacs(text);
    return cfg.command == Command::EncodeSat ? encode_sat_somerepair(phi) : encode_sat_rep(phi);
  }();
  json doc = document(cfg, instance_digest(enc.instance));
  const std::string csv = io::write_csv_relation(enc.instance.database().relation(kEncodedRelation));
  const std::string deps = io::write_dependencies(enc.instance.dependencies());
  json vars = json::object();
  for (const auto& [name, pair] : enc.variable_tuples) vars[name] = {pair.first, pair.second};
  doc["distinguished_tuple"] = enc.distinguished;
  doc["variable_tuples"] = vars;
  doc["stats"] = json{{"tuples", enc.instance.database().size()},
                      {"dependencies", enc.instance.dependencies().size()}};
  if (cfg.output_dir.empty()) {
    doc["csv"] = csv;
    doc["dependencies"] = deps;
  } else {
    std::filesystem::path dir(cfg.output_dir);
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    const auto csv_path = dir / (std::string(kEncodedRelation) + ".csv");
    io::write_file(csv_path, csv);
    io::write_file(dir / "deps.txt", deps);
    doc["files"] = {csv_path.string(), (dir / "deps.txt").string()};
  }
  return doc;
}

std::set<TupleId> survivors(const TranslationResult& t) {
  std::set<TupleId> out;
  for (const auto& [tuple, arg] : t.tuple_arg_map) out.insert(tuple);
  return out;
}

json run_verify(const JobConfig& cfg, const Instance& inst) {
  ReasoningStats stats;
  RepairSet pipeline = enumerate_repairs(inst, &stats);
  RepairSet oracle = brute_force_repairs(inst, cfg.oracle_ceiling);
  bool valid = std::all_of(pipeline.repairs.begin(), pipeline.repairs.end(),
                           [&](const std::vector<TupleId>& r) { return is_repair(r, inst); });
  bool order_independent = true;
  if (inst.has_ids()) {
    TranslationResult raw = build_af_raw(inst);
    TranslationResult sorted = preprocess(raw);
    TranslationResult shuffled = preprocess_in_random_order(raw, cfg.seed);
    order_independent = survivors(sorted) == survivors(shuffled) &&
                        sorted.framework.arguments().size() == shuffled.framework.arguments().size() &&
                        sorted.framework.attack_list() == shuffled.framework.attack_list();
  }
  const bool agree = pipeline.repairs == oracle.repairs;
  json doc = document(cfg, pipeline.instance_digest);
  doc["answer"] = agree && valid && order_independent;
  doc["repairs"] = pipeline.repairs;
  doc["oracle_repairs"] = oracle.repairs;
  doc["checks"] = json{{"oracle_agreement", agree},
                       {"repairs_valid", valid},
                       {"preprocess_order_independent", order_independent}};
  doc["seed"] = cfg.seed;
  fill_reasoning(doc, stats);
  return doc;
}

}  // namespace

std::string_view to_string(Command command) {
  for (const auto& c : kCommands) {
    if (c.command == command) return c.name;
  }
  return "";
}

std::optional<Command> parse_command(std::string_view name) {
  for (const auto& c : kCommands) {
    if (name == c.name) return c.command;
  }
  return std::nullopt;
}

const std::vector<std::string>& command_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& c : kCommands) out.emplace_back(c.name);
    return out;
  }();
  return names;
}

void apply_environment(JobConfig& cfg) {
  const char* env = std::getenv("REPAIRAF_SEED");
  if (!env || !*env) return;
  try {
    std::size_t used = 0;
    std::string text(env);
    if (text.front() == '-') throw std::invalid_argument(text);
    unsigned long long v = std::stoull(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
    cfg.seed = v;
  } catch (const std::exception&) {
    throw ParseError(std::string("REPAIRAF_SEED is not an unsigned integer: '") + env + "'");
  }
}

void validate(const JobConfig& cfg) {
  const std::string name(to_string(cfg.command));
  if (is_encode(cfg.command)) {
    if (cfg.formula_path.empty()) throw PreconditionError(name + " needs a formula file");
    return;
  }
  if (cfg.database_paths.empty()) throw PreconditionError(name + " needs at least one --db file");
  if ((cfg.command == Command::Brave || cfg.command == Command::Cautious) && cfg.tuple.empty()) {
    throw PreconditionError(name + " needs a tuple id");
  }
  if (cfg.command == Command::SizeAtLeast && cfg.k == 0) {
    throw DomainError("size-atleast needs k >= 1");
  }
  if (cfg.semantics_override) {
    auto s = *cfg.semantics_override;
    if (s != Semantics::Naive && s != Semantics::Preferred && s != Semantics::Stable) {
      throw DomainError("--semantics must be naive, pref or stab");
    }
  }
}

Instance load_instance(const JobConfig& cfg) {
  Database db;
  for (const auto& entry : cfg.database_paths) {
    std::string name;
    std::string path = entry;
    if (auto eq = entry.find('='); eq != std::string::npos && eq > 0 &&
                                   entry.substr(0, eq).find('/') == std::string::npos) {
      name = entry.substr(0, eq);
      path = entry.substr(eq + 1);
    } else {
      name = std::filesystem::path(entry).stem().string();
    }
    if (db.find_relation(name)) throw SchemaError("relation '" + name + "' given twice");
    db.add_relation(io::parse_csv_relation(path, name));
  }
  std::vector<Dependency> deps;
  if (!cfg.dependency_path.empty()) deps = io::parse_dependencies(cfg.dependency_path);
  return Instance(std::move(db), std::move(deps));
}

json run_command(const JobConfig& cfg) {
  validate(cfg);
  if (is_encode(cfg.command)) return run_encode(cfg);

  const Instance inst = load_instance(cfg);
  if (cfg.semantics_override) return run_with_semantics(cfg, inst, *cfg.semantics_override);

  ReasoningStats stats;
  json doc = document(cfg, instance_digest(inst));
  switch (cfg.command) {
    case Command::Repairs: {
      RepairSet rs = enumerate_repairs(inst, &stats);
      doc["answer"] = !rs.repairs.empty();
      doc["repairs"] = rs.repairs;
      break;
    }
    case Command::Exists: {
      // at most one witness; the answer does not need the full enumeration
      auto witness = find_repair(inst, &stats);
      doc["answer"] = witness.has_value();
      if (witness) doc["repairs"] = json::array({*witness});
      break;
    }
    case Command::Brave:
      doc["answer"] = some_repair(inst, cfg.tuple, &stats);
      doc["tuple"] = cfg.tuple;
      break;
    case Command::Cautious:
      doc["answer"] = all_repair(inst, cfg.tuple, ReasoningOptions{cfg.vacuous_skeptical}, &stats);
      doc["tuple"] = cfg.tuple;
      break;
    case Command::SizeAtLeast:
      doc["answer"] = repair_at_least(inst, cfg.k, &stats);
      doc["k"] = cfg.k;
      break;
    case Command::Translate:
      return run_translate(cfg, inst);
    case Command::Oracle: {
      RepairSet rs = brute_force_repairs(inst, cfg.oracle_ceiling);
      doc["answer"] = !rs.repairs.empty();
      doc["repairs"] = rs.repairs;
      doc["stats"] = json{{"tuples", inst.database().size()}, {"oracle_ceiling", cfg.oracle_ceiling}};
      return doc;
    }
    case Command::Verify:
      return run_verify(cfg, inst);
    default:
      break;
  }
  fill_reasoning(doc, stats);
  return doc;
}

int exit_code(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::Parse: return 2;
    case ErrorKind::Schema: return 3;
    case ErrorKind::Dependency: return 4;
    case ErrorKind::Domain: return 5;
    case ErrorKind::Resource: return 6;
    case ErrorKind::Precondition: return 7;
    case ErrorKind::Io: return 8;
  }
  return 1;
}

json error_document(ErrorKind kind, const std::string& message) {
  return json{{"error", {{"kind", repairaf::to_string(kind)}, {"message", message}, {"exit_code", exit_code(kind)}}}};
}

}  // namespace repairaf::cli
