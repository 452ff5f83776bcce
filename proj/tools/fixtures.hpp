#pragma once

#include <string>
#include <vector>

namespace rbd::cli {

struct FixtureCheck {
  std::string what;
  std::string expected;
  std::string actual;
  bool ok() const { return expected == actual; }
};

struct FixtureResult {
  std::string name;
  std::string title;
  std::vector<FixtureCheck> checks;
  std::vector<std::string> details;  // human-readable reproduction

  bool ok() const;
};

std::vector<std::string> fixture_names();

// Throws rbd::Error(InvalidArgument) for an unknown name.
FixtureResult run_fixture(const std::string& name);

// Ambient data shipped with the blow-down fixtures, in the ambient file format.
std::string ambient_e2_text();
std::string ambient_e3_text();
std::string ambient_e2_wahl_text();

}  // namespace rbd::cli
