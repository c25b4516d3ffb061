#pragma once

#include <string>
#include <vector>

namespace flowgraph::testing {

// Absolute path of a file under tests/fixtures.
std::string fixture_path(const std::string& rel);

// Whole file contents; throws std::runtime_error if unreadable.
std::string read_fixture(const std::string& rel);

// Sorted absolute paths of tests/fixtures/corpus/*.java.
std::vector<std::string> corpus_files();

std::string read_file(const std::string& path);

}  // namespace flowgraph::testing
