#pragma once

#include <string>
#include <vector>

#include "vlink/diagram.hpp"

namespace vlink {

/// One named Gauss code from the fixture manifest. Entries whose code
/// is still to be transcribed ship as placeholders (code empty).
struct Fixture {
  std::string name;
  std::string code;
  std::string notes;
  bool placeholder = false;
};

/// Loads a tab-separated manifest: name, code, notes per line; blank
/// lines and lines starting with '#' are skipped; a code of "-" marks a
/// placeholder. Throws std::runtime_error on I/O or format errors.
std::vector<Fixture> load_fixtures(const std::string& path);

}  // namespace vlink
