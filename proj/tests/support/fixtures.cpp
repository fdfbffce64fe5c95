#include "fixtures.hpp"

#include "repairaf/io.hpp"

namespace testsupport {

std::filesystem::path fixture_dir() { return REPAIRAF_FIXTURE_DIR; }

std::filesystem::path fixture(const std::string& relative) { return fixture_dir() / relative; }

repairaf::Instance load_example(const std::string& dir) {
  repairaf::Database db;
  db.add_relation(repairaf::io::parse_csv_relation(fixture(dir) / "T.csv", "T"));
  return repairaf::Instance(std::move(db), repairaf::io::parse_dependencies(fixture(dir) / "deps.txt"));
}

}  // namespace testsupport
