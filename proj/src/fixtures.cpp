#include "vlink/fixtures.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

namespace vlink {

std::vector<Fixture> load_fixtures(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::runtime_error("cannot open fixture manifest: " + path);
  }
  std::vector<Fixture> fixtures;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    std::istringstream fields(line);
    Fixture f;
    std::string code;
    if (!std::getline(fields, f.name, '\t') ||
        !std::getline(fields, code, '\t')) {
      throw std::runtime_error("malformed manifest line " +
                               std::to_string(line_no) + " in " + path);
    }
    std::getline(fields, f.notes, '\t');
    if (code == "-") {
      f.placeholder = true;
    } else {
      f.code = code;
    }
    fixtures.push_back(std::move(f));
  }
  return fixtures;
}

}  // namespace vlink
