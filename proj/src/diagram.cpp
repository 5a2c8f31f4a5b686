#include "vlink/diagram.hpp"

#include <algorithm>
#include <array>
#include <limits>
#include <unordered_map>

namespace vlink {

namespace {

template <typename T>
bool cyclic_equal(const std::vector<T>& a, const std::vector<T>& b) {
  if (a.size() != b.size()) return false;
  const std::size_t n = a.size();
  if (n == 0) return true;
  for (std::size_t off = 0; off < n; ++off) {
    bool match = true;
    for (std::size_t k = 0; k < n; ++k) {
      if (!(a[k] == b[(off + k) % n])) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

// Lexicographic order key for one pass: role first (O < U), then the
// numeric crossing id, then sign (+ < -).
std::array<int, 3> pass_key(const Pass& p) {
  return {p.role == Role::over ? 0 : 1, p.crossing_id, p.sign > 0 ? 0 : 1};
}

void append_pass(std::string& out, const Pass& p) {
  out += (p.role == Role::over) ? 'O' : 'U';
  out += std::to_string(p.crossing_id);
  out += (p.sign > 0) ? '+' : '-';
}

}  // namespace

bool operator==(const LinkDiagram& a, const LinkDiagram& b) {
  if (a.components.size() != b.components.size()) return false;
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    if (!cyclic_equal(a.components[i], b.components[i])) return false;
  }
  return true;
}

bool operator==(const Universe& a, const Universe& b) {
  if (a.components.size() != b.components.size()) return false;
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    if (!cyclic_equal(a.components[i], b.components[i])) return false;
  }
  return true;
}

const char* to_string(ValidationReport::Kind kind) {
  switch (kind) {
    case ValidationReport::Kind::ok: return "ok";
    case ValidationReport::Kind::bad_id: return "bad-id";
    case ValidationReport::Kind::bad_sign: return "bad-sign";
    case ValidationReport::Kind::duplicate_role: return "duplicate-role";
    case ValidationReport::Kind::sign_mismatch: return "sign-mismatch";
    case ValidationReport::Kind::odd_occurrence: return "odd-occurrence";
  }
  return "unknown";
}

LinkDiagram parse_raw(std::string_view text) {
  LinkDiagram d;
  std::size_t pos = 0;
  const std::size_t n = text.size();
  auto fail = [&](const std::string& what) -> void {
    throw ParseError(pos + 1, what);
  };

  if (n == 0) fail("empty input");

  auto parse_pass = [&]() -> Pass {
    Pass p;
    if (pos >= n || (text[pos] != 'O' && text[pos] != 'U')) {
      fail("expected 'O' or 'U'");
    }
    p.role = (text[pos] == 'O') ? Role::over : Role::under;
    ++pos;
    if (pos >= n || text[pos] < '1' || text[pos] > '9') {
      fail("expected crossing id starting with a nonzero digit");
    }
    long long id = 0;
    while (pos < n && text[pos] >= '0' && text[pos] <= '9') {
      id = id * 10 + (text[pos] - '0');
      if (id > std::numeric_limits<int>::max()) fail("crossing id too large");
      ++pos;
    }
    p.crossing_id = static_cast<int>(id);
    if (pos >= n || (text[pos] != '+' && text[pos] != '-')) {
      fail("expected '+' or '-'");
    }
    p.sign = (text[pos] == '+') ? +1 : -1;
    ++pos;
    return p;
  };

  while (true) {
    Strand strand;
    if (pos < n && text[pos] == '@') {
      ++pos;  // crossingless loop
    } else {
      strand.push_back(parse_pass());
      while (pos < n && text[pos] == ',') {
        ++pos;
        strand.push_back(parse_pass());
      }
    }
    d.components.push_back(std::move(strand));
    if (pos == n) break;
    if (text[pos] != '/') fail("expected ',', '/' or end of input");
    ++pos;
  }
  return d;
}

LinkDiagram parse(std::string_view text) {
  LinkDiagram d = parse_raw(text);
  ValidationReport report = validate(d);
  if (!report.ok()) throw ValidationError(std::move(report));
  return d;
}

ValidationReport validate(const LinkDiagram& d) {
  struct Seen {
    int sign = 0;
    Role role = Role::over;
    int count = 0;
  };
  std::unordered_map<int, Seen> seen;
  std::vector<int> order;  // ids in first-occurrence order

  auto report = [](ValidationReport::Kind kind, int id, std::string msg) {
    return ValidationReport{kind, id, std::move(msg)};
  };

  for (const Strand& strand : d.components) {
    for (const Pass& p : strand) {
      if (p.crossing_id <= 0) {
        return report(ValidationReport::Kind::bad_id, p.crossing_id,
                      "crossing id must be positive");
      }
      if (p.sign != +1 && p.sign != -1) {
        return report(ValidationReport::Kind::bad_sign, p.crossing_id,
                      "sign must be +1 or -1 on crossing " +
                          std::to_string(p.crossing_id));
      }
      Seen& s = seen[p.crossing_id];
      if (s.count == 0) {
        order.push_back(p.crossing_id);
        s = Seen{p.sign, p.role, 1};
      } else if (s.count == 1) {
        if (s.role == p.role) {
          return report(ValidationReport::Kind::duplicate_role, p.crossing_id,
                        "crossing " + std::to_string(p.crossing_id) +
                            " seen twice with the same role");
        }
        if (s.sign != p.sign) {
          return report(ValidationReport::Kind::sign_mismatch, p.crossing_id,
                        "crossing " + std::to_string(p.crossing_id) +
                            " seen with both signs");
        }
        s.count = 2;
      } else {
        return report(ValidationReport::Kind::odd_occurrence, p.crossing_id,
                      "crossing " + std::to_string(p.crossing_id) +
                          " seen more than twice");
      }
    }
  }
  for (int id : order) {
    if (seen[id].count == 1) {
      return report(ValidationReport::Kind::odd_occurrence, id,
                    "crossing " + std::to_string(id) + " seen only once");
    }
  }
  return ValidationReport{ValidationReport::Kind::ok, 0, "ok"};
}

std::size_t canonical_rotation(const Strand& s) {
  const std::size_t n = s.size();
  if (n <= 1) return 0;
  std::size_t best = 0;
  for (std::size_t off = 1; off < n; ++off) {
    for (std::size_t k = 0; k < n; ++k) {
      auto a = pass_key(s[(off + k) % n]);
      auto b = pass_key(s[(best + k) % n]);
      if (a < b) {
        best = off;
        break;
      }
      if (b < a) break;
    }
  }
  return best;
}

std::string serialize(const LinkDiagram& d) {
  std::string out;
  bool first_component = true;
  for (const Strand& strand : d.components) {
    if (!first_component) out += '/';
    first_component = false;
    if (strand.empty()) {
      out += '@';
      continue;
    }
    const std::size_t n = strand.size();
    const std::size_t off = canonical_rotation(strand);
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0) out += ',';
      append_pass(out, strand[(off + k) % n]);
    }
  }
  return out;
}

Universe universe(const LinkDiagram& d) {
  Universe u;
  u.components.reserve(d.components.size());
  for (const Strand& strand : d.components) {
    std::vector<int> ids;
    ids.reserve(strand.size());
    for (const Pass& p : strand) ids.push_back(p.crossing_id);
    u.components.push_back(std::move(ids));
  }
  return u;
}

std::string serialize(const Universe& u) {
  std::string out;
  bool first_component = true;
  for (const std::vector<int>& ids : u.components) {
    if (!first_component) out += '/';
    first_component = false;
    if (ids.empty()) {
      out += '@';
      continue;
    }
    const std::size_t n = ids.size();
    std::size_t best = 0;
    for (std::size_t off = 1; off < n; ++off) {
      for (std::size_t k = 0; k < n; ++k) {
        int a = ids[(off + k) % n];
        int b = ids[(best + k) % n];
        if (a < b) {
          best = off;
          break;
        }
        if (b < a) break;
      }
    }
    for (std::size_t k = 0; k < n; ++k) {
      if (k > 0) out += ',';
      out += std::to_string(ids[(best + k) % n]);
    }
  }
  return out;
}

int crossing_count(const LinkDiagram& d) {
  std::size_t passes = 0;
  for (const Strand& s : d.components) passes += s.size();
  return static_cast<int>(passes / 2);
}

int max_crossing_id(const LinkDiagram& d) {
  int best = 0;
  for (const Strand& s : d.components) {
    for (const Pass& p : s) best = std::max(best, p.crossing_id);
  }
  return best;
}

std::size_t total_passes(const LinkDiagram& d) {
  std::size_t passes = 0;
  for (const Strand& s : d.components) passes += s.size();
  return passes;
}

}  // namespace vlink
