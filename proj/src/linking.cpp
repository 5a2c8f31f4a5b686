#include "vlink/linking.hpp"

#include <map>
#include <stdexcept>

namespace vlink {

namespace {

struct CrossingSides {
  int over_component = -1;
  int under_component = -1;
  int sign = 0;
};

// Crossing id -> which components carry its over and under pass.
std::map<int, CrossingSides> crossing_sides(const LinkDiagram& d) {
  std::map<int, CrossingSides> sides;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    for (const Pass& p : d.components[c]) {
      CrossingSides& cs = sides[p.crossing_id];
      cs.sign = p.sign;
      if (p.role == Role::over) {
        cs.over_component = static_cast<int>(c);
      } else {
        cs.under_component = static_cast<int>(c);
      }
    }
  }
  return sides;
}

void check_index(const LinkDiagram& d, int j) {
  if (j < 0 || j >= static_cast<int>(d.components.size())) {
    throw std::out_of_range("component index out of range");
  }
}

}  // namespace

const char* to_string(ClassicalityCertificate::Verdict v) {
  return v == ClassicalityCertificate::Verdict::non_classical ? "non_classical"
                                                              : "inconclusive";
}

const char* to_string(HomologyComparison c) {
  switch (c) {
    case HomologyComparison::homologous: return "homologous";
    case HomologyComparison::not_homologous: return "not homologous";
    case HomologyComparison::incomparable: return "incomparable";
  }
  return "unknown";
}

int linking_number(const LinkDiagram& d, int j, int k) {
  check_index(d, j);
  check_index(d, k);
  if (j == k) {
    throw std::invalid_argument("linking_number requires j != k; use self_writhe");
  }
  int total = 0;
  for (const auto& [id, cs] : crossing_sides(d)) {
    (void)id;
    if (cs.over_component == j && cs.under_component == k) total += cs.sign;
  }
  return total;
}

int self_writhe(const LinkDiagram& d, int j) {
  check_index(d, j);
  int total = 0;
  for (const auto& [id, cs] : crossing_sides(d)) {
    (void)id;
    if (cs.over_component == j && cs.under_component == j) total += cs.sign;
  }
  return total;
}

LinkingMatrix linking_matrix(const LinkDiagram& d) {
  const int n = static_cast<int>(d.components.size());
  LinkingMatrix m;
  m.n = n;
  m.entries.assign(static_cast<std::size_t>(n),
                   std::vector<int>(static_cast<std::size_t>(n), 0));
  for (const auto& [id, cs] : crossing_sides(d)) {
    (void)id;
    m.entries[static_cast<std::size_t>(cs.over_component)]
             [static_cast<std::size_t>(cs.under_component)] += cs.sign;
  }
  return m;
}

HomologyClass homology_class(const LinkDiagram& d) {
  LinkingMatrix m = linking_matrix(d);
  HomologyClass h;
  h.n = m.n;
  h.pairwise = std::move(m.entries);
  for (int j = 0; j < h.n; ++j) {
    h.pairwise[static_cast<std::size_t>(j)][static_cast<std::size_t>(j)] = 0;
  }
  return h;
}

HomologyComparison compare_homology(const LinkDiagram& a, const LinkDiagram& b) {
  const HomologyClass ha = homology_class(a);
  const HomologyClass hb = homology_class(b);
  if (ha.n != hb.n) return HomologyComparison::incomparable;
  return ha == hb ? HomologyComparison::homologous
                  : HomologyComparison::not_homologous;
}

PseudoHopfDecomposition pseudo_hopf_decomposition(const LinkDiagram& d) {
  const int n = static_cast<int>(d.components.size());
  PseudoHopfDecomposition out;
  out.components = n;
  out.positive.assign(static_cast<std::size_t>(n),
                      std::vector<int>(static_cast<std::size_t>(n), 0));
  out.negative = out.positive;
  out.net = out.positive;
  out.self_positive.assign(static_cast<std::size_t>(n), 0);
  out.self_negative = out.self_positive;
  out.self_surplus = out.self_positive;

  // Stage 1: split off one pseudo-Hopf atom per crossing, bucketed by
  // (over component, under component), visiting crossings in canonical
  // serialization order. Every component is left crossingless and capped.
  std::vector<int> visit_order;
  {
    std::map<int, bool> seen;
    for (const Strand& strand : d.components) {
      const std::size_t len = strand.size();
      const std::size_t off = len == 0 ? 0 : canonical_rotation(strand);
      for (std::size_t k = 0; k < len; ++k) {
        const Pass& p = strand[(off + k) % len];
        if (!seen[p.crossing_id]) {
          seen[p.crossing_id] = true;
          visit_order.push_back(p.crossing_id);
        }
      }
    }
  }
  const auto sides = crossing_sides(d);
  for (int id : visit_order) {
    const CrossingSides& cs = sides.at(id);
    const std::size_t j = static_cast<std::size_t>(cs.over_component);
    const std::size_t k = static_cast<std::size_t>(cs.under_component);
    if (j == k) {
      (cs.sign > 0 ? out.self_positive : out.self_negative)[j] += 1;
    } else {
      (cs.sign > 0 ? out.positive : out.negative)[j][k] += 1;
    }
  }
  out.capped_trivial_components = n;

  // Stage 2: same-component atoms cancel in +- pairs once R1 moves have
  // evened the counts; the signed surplus is what R1 normalization
  // absorbed (the self-writhe).
  for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
    out.self_surplus[j] = out.self_positive[j] - out.self_negative[j];
  }

  // Stage 3: per ordered pair, +- atom pairs cancel; the net count is
  // the linking number.
  for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
    for (std::size_t k = 0; k < static_cast<std::size_t>(n); ++k) {
      if (j == k) continue;
      out.net[j][k] = out.positive[j][k] - out.negative[j][k];
    }
  }
  return out;
}

ClassicalityCertificate classicality_certificate(const LinkDiagram& d) {
  const LinkingMatrix m = linking_matrix(d);
  ClassicalityCertificate cert;
  for (int j = 0; j < m.n; ++j) {
    for (int k = j + 1; k < m.n; ++k) {
      if (m.entries[static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] !=
          m.entries[static_cast<std::size_t>(k)][static_cast<std::size_t>(j)]) {
        cert.verdict = ClassicalityCertificate::Verdict::non_classical;
        cert.witness_j = j;
        cert.witness_k = k;
        return cert;
      }
    }
  }
  return cert;
}

}  // namespace vlink
