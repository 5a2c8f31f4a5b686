#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace vlink {

enum class Role : std::uint8_t { over, under };

/// One traversal of a classical crossing by a component strand.
/// Virtual crossings never appear in a Gauss code.
struct Pass {
  int crossing_id = 0;
  Role role = Role::over;
  int sign = +1;  // +1 or -1

  friend bool operator==(const Pass&, const Pass&) = default;
};

/// A component: cyclic sequence of passes. Empty = crossingless loop.
using Strand = std::vector<Pass>;

/// Multi-component Gauss code of a virtual link diagram.
///
/// Invariants (checked by validate, not by construction):
///   - every crossing_id occurs exactly twice across all components,
///   - the two occurrences carry the same sign and opposite roles,
///   - crossing ids are positive.
///
/// Equality is cyclic per component: component order matters, the
/// starting point of each cyclic sequence does not.
struct LinkDiagram {
  std::vector<Strand> components;

  friend bool operator==(const LinkDiagram& a, const LinkDiagram& b);
};

/// The shadow: same cyclic structure with role and sign erased.
struct Universe {
  std::vector<std::vector<int>> components;

  friend bool operator==(const Universe& a, const Universe& b);
};

struct ParseError : std::runtime_error {
  ParseError(std::size_t column_, const std::string& what_)
      : std::runtime_error("syntax error at column " + std::to_string(column_) +
                           ": " + what_),
        column(column_) {}
  std::size_t column;  // 1-based
};

struct ValidationReport {
  enum class Kind {
    ok,
    bad_id,
    bad_sign,
    duplicate_role,
    sign_mismatch,
    odd_occurrence,
  };
  Kind kind = Kind::ok;
  int crossing_id = 0;
  std::string message;

  bool ok() const { return kind == Kind::ok; }
};

const char* to_string(ValidationReport::Kind kind);

struct ValidationError : std::runtime_error {
  explicit ValidationError(ValidationReport report_)
      : std::runtime_error(report_.message), report(std::move(report_)) {}
  ValidationReport report;
};

/// Parses the Gauss-code grammar without checking diagram invariants.
/// Grammar: diagram := component ("/" component)*;
///          component := "@" | pass ("," pass)*;
///          pass := ("O"|"U") [1-9][0-9]* ("+"|"-").
/// Throws ParseError with a 1-based column on any syntax violation.
LinkDiagram parse_raw(std::string_view text);

/// parse_raw followed by validation; throws ValidationError on an
/// invalid diagram. parse(serialize(d)) == d for every valid d.
LinkDiagram parse(std::string_view text);

/// Checks the LinkDiagram invariants in component/position order and
/// reports the first violation.
ValidationReport validate(const LinkDiagram& d);

/// Canonical text form: components in stored order, each cyclic
/// sequence starting at the rotation minimizing the (role, id, sign)
/// tuple sequence, with O < U and + < -. Crossing ids are preserved.
std::string serialize(const LinkDiagram& d);

/// Offset at which the canonical rotation of this strand starts.
std::size_t canonical_rotation(const Strand& s);

Universe universe(const LinkDiagram& d);

/// Universe text form: ids only, each component canonically rotated.
std::string serialize(const Universe& u);

int crossing_count(const LinkDiagram& d);
int max_crossing_id(const LinkDiagram& d);
std::size_t total_passes(const LinkDiagram& d);

}  // namespace vlink
