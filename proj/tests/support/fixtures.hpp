#pragma once

#include <filesystem>
#include <string>

#include "repairaf/relational.hpp"

namespace testsupport {

/// tests/fixtures, baked in at configure time.
std::filesystem::path fixture_dir();
std::filesystem::path fixture(const std::string& relative);

/// <dir>/T.csv as relation "T" plus <dir>/deps.txt.
repairaf::Instance load_example(const std::string& dir);

}  // namespace testsupport
