#include <chrono>
#include <cstdlib>
#include <filesystem>

#include "doctest.h"
#include "fixtures.hpp"
#include "repairaf/cli.hpp"
#include "repairaf/error.hpp"
#include "repairaf/io.hpp"
#include "repairaf/reasoning.hpp"

using namespace repairaf;
using repairaf::cli::Command;
using repairaf::cli::JobConfig;
namespace fs = std::filesystem;

namespace {

JobConfig job(Command c, const std::string& example) {
  JobConfig cfg;
  cfg.command = c;
  cfg.database_paths = {testsupport::fixture(example + "/T.csv").string()};
  cfg.dependency_path = testsupport::fixture(example + "/deps.txt").string();
  return cfg;
}

ErrorKind kind_of(const JobConfig& cfg) {
  try {
    cli::run_command(cfg);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an error");
  return ErrorKind::Io;
}

fs::path scratch_dir(const std::string& tag) {
  auto stamp = std::chrono::steady_clock::now().time_since_epoch().count();
  fs::path dir = fs::temp_directory_path() / ("repairaf_" + tag + "_" + std::to_string(stamp));
  fs::create_directories(dir);
  return dir;
}

using IdSets = std::vector<std::vector<std::string>>;

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("command names round trip") {
    for (const auto& name : cli::command_names()) {
      auto c = cli::parse_command(name);
      REQUIRE(c);
      CHECK(cli::to_string(*c) == name);
    }
    CHECK_FALSE(cli::parse_command("nope"));
    CHECK(cli::command_names().size() == 11);
  }

  TEST_CASE("repairs document") {
    io::json doc = cli::run_command(job(Command::Repairs, "example1"));
    CHECK(doc["command"] == "repairs");
    CHECK(doc["answer"] == true);
    CHECK(doc["repairs"].get<IdSets>() == IdSets{{"s", "u"}, {"s", "v"}, {"t", "u"}});
    CHECK(doc["stats"]["route"] == "fd-only");
    CHECK(doc["stats"]["arguments"] == 4);
    CHECK(doc["stats"]["attacks"] == 6);
    CHECK(doc["instance_digest"].get<std::string>().size() == 16);

    io::json two = cli::run_command(job(Command::Repairs, "example2"));
    CHECK(two["repairs"].get<IdSets>() == IdSets{{"s", "t"}});
    CHECK(two["removed_tuples"] == io::json::array({"v", "u"}));
    CHECK(two["stats"]["route"] == "id-only");
    CHECK(two["stats"]["preprocess_rounds"] == 2);

    io::json three = cli::run_command(job(Command::Repairs, "example3"));
    CHECK(three["repairs"].get<IdSets>() == IdSets{{"t"}});
    CHECK(three["stats"]["route"] == "mixed");
  }

  TEST_CASE("decision commands") {
    JobConfig cfg = job(Command::Brave, "example1");
    cfg.tuple = "v";
    io::json brave = cli::run_command(cfg);
    CHECK(brave["answer"] == true);
    CHECK(brave["tuple"] == "v");

    cfg.command = Command::Cautious;
    CHECK(cli::run_command(cfg)["answer"] == false);

    JobConfig c3 = job(Command::Cautious, "example3");
    c3.tuple = "t";
    CHECK(cli::run_command(c3)["answer"] == true);

    JobConfig size = job(Command::SizeAtLeast, "example1");
    size.k = 2;
    io::json sz = cli::run_command(size);
    CHECK(sz["answer"] == true);
    CHECK(sz["k"] == 2);
    size.k = 3;
    CHECK(cli::run_command(size)["answer"] == false);

    io::json ex = cli::run_command(job(Command::Exists, "example2"));
    CHECK(ex["answer"] == true);
    CHECK(ex["repairs"].get<IdSets>() == IdSets{{"s", "t"}});

    io::json none = cli::run_command(job(Command::Exists, "empty_support"));
    CHECK(none["answer"] == false);
    CHECK(none["repairs"].empty());

    JobConfig vac = job(Command::Cautious, "empty_support");
    vac.tuple = "a";
    CHECK(cli::run_command(vac)["answer"] == false);
    vac.vacuous_skeptical = true;
    CHECK(cli::run_command(vac)["answer"] == true);
  }

  TEST_CASE("oracle and verify") {
    io::json o = cli::run_command(job(Command::Oracle, "example1"));
    CHECK(o["repairs"].get<IdSets>() == IdSets{{"s", "u"}, {"s", "v"}, {"t", "u"}});
    CHECK(o["stats"]["tuples"] == 4);
    for (const char* ex : {"example1", "example2", "example3", "empty_support"}) {
      CAPTURE(ex);
      JobConfig cfg = job(Command::Verify, ex);
      cfg.seed = 99;
      io::json v = cli::run_command(cfg);
      CHECK(v["answer"] == true);
      CHECK(v["seed"] == 99);
      CHECK(v["repairs"] == v["oracle_repairs"]);
    }
    JobConfig small = job(Command::Oracle, "example1");
    small.oracle_ceiling = 3;
    CHECK(kind_of(small) == ErrorKind::Resource);
  }

  TEST_CASE("translate inline and to a directory") {
    JobConfig cfg = job(Command::Translate, "example2");
    io::json doc = cli::run_command(cfg);
    CHECK(doc["apx"].get<std::string>().find("arg(s).") != std::string::npos);
    CHECK(doc["framework"]["tuple_arg_map"].size() == 2);

    cfg.raw = true;
    io::json raw = cli::run_command(cfg);
    CHECK(raw["framework"]["arguments"] == 12);
    CHECK(raw["removed_tuples"].empty());

    fs::path dir = scratch_dir("translate");
    cfg.output_dir = dir.string();
    io::json written = cli::run_command(cfg);
    CHECK(written["files"].size() == 2);
    CHECK(io::read_file(dir / "framework.apx") == raw["apx"].get<std::string>());
    io::json side = io::json::parse(io::read_file(dir / "framework.json"));
    CHECK(side["arguments"] == 12);
    fs::remove_all(dir);
  }

  TEST_CASE("encode commands") {
    JobConfig cfg;
    cfg.command = Command::EncodeSat;
    cfg.formula_path = testsupport::fixture("example4/formula.cnf").string();
    io::json doc = cli::run_command(cfg);
    CHECK(doc["distinguished_tuple"] == "s_phi");
    CHECK(doc["stats"]["tuples"] == 5);
    CHECK(doc["stats"]["dependencies"] == 4);
    CHECK(doc["variable_tuples"]["x1"] == io::json::array({"s_x1", "ns_x1"}));
    CHECK(doc["csv"].get<std::string>().rfind("#id,t0,u0", 0) == 0);

    fs::path dir = scratch_dir("encode");
    cfg.command = Command::EncodeQbf;
    cfg.formula_path = testsupport::fixture("example5/formula.qdimacs").string();
    cfg.output_dir = dir.string();
    io::json qbf = cli::run_command(cfg);
    CHECK(qbf["files"].size() == 2);
    CHECK(io::read_file(dir / "T.csv") == io::read_file(testsupport::fixture("example5/table3.csv")));

    // the written instance goes straight back into the reasoning commands
    JobConfig back;
    back.command = Command::Cautious;
    back.database_paths = {(dir / "T.csv").string()};
    back.dependency_path = (dir / "deps.txt").string();
    back.tuple = "s_phi";
    CHECK(cli::run_command(back)["answer"] == true);
    fs::remove_all(dir);

    cfg = JobConfig{};
    cfg.command = Command::EncodeSatRep;
    cfg.formula_path = testsupport::fixture("example4/formula.cnf").string();
    CHECK(cli::run_command(cfg)["stats"]["tuples"] == 5);
  }

  TEST_CASE("semantics override") {
    JobConfig cfg = job(Command::Repairs, "example2");
    cfg.semantics_override = Semantics::Naive;
    io::json naive = cli::run_command(cfg);
    CHECK(naive["stats"]["semantics"] == "naive");
    cfg.semantics_override = Semantics::Preferred;
    io::json pref = cli::run_command(cfg);
    CHECK(pref["repairs"].get<IdSets>() == IdSets{{"s", "t"}});
    cfg.semantics_override = Semantics::Admissible;
    CHECK(kind_of(cfg) == ErrorKind::Domain);
    JobConfig tr = job(Command::Translate, "example2");
    tr.semantics_override = Semantics::Stable;
    CHECK(kind_of(tr) == ErrorKind::Precondition);
  }

  TEST_CASE("relation naming and multiple files") {
    JobConfig cfg = job(Command::Repairs, "example1");
    cfg.database_paths = {"T=" + testsupport::fixture("example1/T.csv").string()};
    CHECK(cli::run_command(cfg)["repairs"].size() == 3);
    cfg.database_paths.push_back(testsupport::fixture("example2/T.csv").string());
    CHECK(kind_of(cfg) == ErrorKind::Schema);
  }

  TEST_CASE("error kinds map to exit codes") {
    JobConfig missing = job(Command::Repairs, "example1");
    missing.database_paths = {"/nonexistent/T.csv"};
    CHECK(kind_of(missing) == ErrorKind::Io);

    JobConfig no_db;
    CHECK(kind_of(no_db) == ErrorKind::Precondition);

    JobConfig no_tuple = job(Command::Brave, "example1");
    CHECK(kind_of(no_tuple) == ErrorKind::Precondition);

    JobConfig unknown = job(Command::Brave, "example1");
    unknown.tuple = "zz";
    CHECK(kind_of(unknown) == ErrorKind::Domain);

    JobConfig ids = job(Command::SizeAtLeast, "example2");
    ids.k = 1;
    CHECK(kind_of(ids) == ErrorKind::Precondition);

    JobConfig bad_deps = job(Command::Repairs, "example1");
    bad_deps.dependency_path = testsupport::fixture("example4/formula.cnf").string();
    CHECK(kind_of(bad_deps) == ErrorKind::Parse);

    JobConfig bad_attr = job(Command::Repairs, "example1");
    bad_attr.dependency_path = testsupport::fixture("example2/deps.txt").string();
    CHECK(kind_of(bad_attr) == ErrorKind::Schema);

    CHECK(cli::exit_code(ErrorKind::Parse) == 2);
    CHECK(cli::exit_code(ErrorKind::Schema) == 3);
    CHECK(cli::exit_code(ErrorKind::Dependency) == 4);
    CHECK(cli::exit_code(ErrorKind::Domain) == 5);
    CHECK(cli::exit_code(ErrorKind::Resource) == 6);
    CHECK(cli::exit_code(ErrorKind::Precondition) == 7);
    CHECK(cli::exit_code(ErrorKind::Io) == 8);

    io::json err = cli::error_document(ErrorKind::Io, "gone");
    CHECK(err["error"]["kind"] == "io");
    CHECK(err["error"]["message"] == "gone");
    CHECK(err["error"]["exit_code"] == 8);
  }

  TEST_CASE("seed from the environment") {
    JobConfig cfg;
    ::setenv("REPAIRAF_SEED", "1234", 1);
    cli::apply_environment(cfg);
    CHECK(cfg.seed == 1234);
    ::setenv("REPAIRAF_SEED", "-5", 1);
    CHECK_THROWS_AS(cli::apply_environment(cfg), ParseError);
    ::setenv("REPAIRAF_SEED", "12x", 1);
    CHECK_THROWS_AS(cli::apply_environment(cfg), ParseError);
    ::unsetenv("REPAIRAF_SEED");
    cfg.seed = 7;
    cli::apply_environment(cfg);
    CHECK(cfg.seed == 7);
  }

  TEST_CASE("output is deterministic") {
    for (const char* ex : {"example1", "example2", "example3"}) {
      JobConfig cfg = job(Command::Verify, ex);
      CHECK(cli::run_command(cfg).dump() == cli::run_command(cfg).dump());
      cfg.command = Command::Translate;
      CHECK(cli::run_command(cfg).dump() == cli::run_command(cfg).dump());
    }
  }
}
