#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "vlink/diagram.hpp"

namespace vlink {

/// Wirtinger-style presentation read off a Gauss code, unsimplified.
///
/// Generators are arcs: maximal runs between under-passes along a
/// component; a component with no under-pass (in particular a
/// crossingless loop) is a single arc. Group relations are words over
/// signed generators that equal the identity; quandle relations are
/// triples (a, b, c) meaning a . b = c for the quandle operation.
struct Presentation {
  enum class Kind { group, quandle };

  Kind kind = Kind::group;
  std::vector<std::string> generators;
  // kind == group: each relation is a word of (generator, exponent).
  std::vector<std::vector<std::pair<std::string, int>>> word_relations;
  // kind == quandle: triples (a, b, c).
  std::vector<std::array<std::string, 3>> triple_relations;

  std::size_t relation_count() const {
    return kind == Kind::group ? word_relations.size()
                               : triple_relations.size();
  }
};

struct Presentations {
  Presentation group;
  Presentation quandle;
};

/// Emits the group and quandle presentations of a valid diagram.
///
/// Conventions: arcs are numbered from the canonical rotation of each
/// component, starting with the arc that begins after the first
/// under-pass. At a positive crossing with over-arc b, incoming
/// under-arc a and outgoing under-arc c the group relation is
/// c = b a b^-1 (relator c b a^-1 b^-1) and the quandle triple is
/// (a, b, c); at a negative crossing c = b^-1 a b and the triple is
/// (c, b, a).
Presentations presentations(const LinkDiagram& d);

}  // namespace vlink
