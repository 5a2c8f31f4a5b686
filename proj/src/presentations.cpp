#include "vlink/presentations.hpp"

#include <algorithm>
#include <map>

namespace vlink {

namespace {

struct ArcIndex {
  // generator index of each arc, component-local arc -> global generator
  std::vector<int> arc_generator;
  // sorted rotated positions of the under-passes of this component
  std::vector<std::size_t> unders;
};

}  // namespace

Presentations presentations(const LinkDiagram& d) {
  Presentations out;
  out.group.kind = Presentation::Kind::group;
  out.quandle.kind = Presentation::Kind::quandle;

  struct CrossingArcs {
    int sign = 0;
    int over_arc = -1;
    int under_in = -1;
    int under_out = -1;
  };
  std::map<int, CrossingArcs> crossings;  // ordered by id for relation order

  std::vector<std::string>& generators = out.group.generators;
  std::vector<ArcIndex> per_component(d.components.size());

  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const Strand& strand = d.components[c];
    const std::size_t len = strand.size();
    const std::size_t off = len == 0 ? 0 : canonical_rotation(strand);
    ArcIndex& idx = per_component[c];

    for (std::size_t k = 0; k < len; ++k) {
      if (strand[(off + k) % len].role == Role::under) idx.unders.push_back(k);
    }
    const std::size_t arc_count = idx.unders.empty() ? 1 : idx.unders.size();
    idx.arc_generator.resize(arc_count);
    for (std::size_t a = 0; a < arc_count; ++a) {
      idx.arc_generator[a] = static_cast<int>(generators.size());
      generators.push_back("a" + std::to_string(generators.size() + 1));
    }

    // Arc holding the over-pass at rotated position k: arcs run
    // (u_i, u_{i+1}] between consecutive under-passes; positions before
    // the first or after the last under-pass sit on the wrap-around
    // arc. With no under-pass the whole component is one arc.
    auto arc_at = [&](std::size_t k) -> int {
      if (idx.unders.empty()) return idx.arc_generator[0];
      auto it = std::upper_bound(idx.unders.begin(), idx.unders.end(), k);
      std::size_t i = (it == idx.unders.begin() || it == idx.unders.end())
                          ? idx.unders.size() - 1
                          : static_cast<std::size_t>(it - idx.unders.begin()) - 1;
      return idx.arc_generator[i];
    };

    for (std::size_t k = 0; k < len; ++k) {
      const Pass& p = strand[(off + k) % len];
      CrossingArcs& ca = crossings[p.crossing_id];
      ca.sign = p.sign;
      if (p.role == Role::over) {
        ca.over_arc = arc_at(k);
      } else {
        auto at = std::lower_bound(idx.unders.begin(), idx.unders.end(), k);
        std::size_t j = static_cast<std::size_t>(at - idx.unders.begin());
        const std::size_t m = idx.unders.size();
        ca.under_in = idx.arc_generator[(j + m - 1) % m];
        ca.under_out = idx.arc_generator[j % m];
      }
    }
  }
  out.quandle.generators = generators;

  for (const auto& [id, ca] : crossings) {
    (void)id;
    const std::string& a = generators[static_cast<std::size_t>(ca.under_in)];
    const std::string& b = generators[static_cast<std::size_t>(ca.over_arc)];
    const std::string& c = generators[static_cast<std::size_t>(ca.under_out)];
    if (ca.sign > 0) {
      // c = b a b^-1
      out.group.word_relations.push_back({{c, +1}, {b, +1}, {a, -1}, {b, -1}});
      out.quandle.triple_relations.push_back({a, b, c});
    } else {
      // c = b^-1 a b
      out.group.word_relations.push_back({{c, +1}, {b, -1}, {a, -1}, {b, +1}});
      out.quandle.triple_relations.push_back({c, b, a});
    }
  }
  return out;
}

}  // namespace vlink
