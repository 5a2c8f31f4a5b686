#pragma once

#include <vector>

#include "vlink/diagram.hpp"

namespace vlink {

/// n x n integer matrix: entry (j,k), j != k, is Link(D_j, D_k) — the
/// signed count of crossings where component j is over and k is under.
/// Entry (j,j) is the self-writhe of component j. Off-diagonal entries
/// are invariant under all Reidemeister moves; the diagonal changes by
/// +-1 under R1 and is otherwise invariant.
struct LinkingMatrix {
  int n = 0;
  std::vector<std::vector<int>> entries;

  friend bool operator==(const LinkingMatrix&, const LinkingMatrix&) = default;
};

/// Complete virtual link-homology invariant: component count plus the
/// off-diagonal linking numbers (diagonal forced to 0 here).
struct HomologyClass {
  int n = 0;
  std::vector<std::vector<int>> pairwise;

  friend bool operator==(const HomologyClass&, const HomologyClass&) = default;
};

enum class HomologyComparison { homologous, not_homologous, incomparable };

/// Result of the crossing-elimination normal form: every crossing is
/// split off as a pseudo-Hopf link, opposite-sign atoms cancel per
/// ordered component pair, same-component atoms cancel after R1
/// normalization, and the leftover crossingless loops are capped.
struct PseudoHopfDecomposition {
  int components = 0;
  std::vector<std::vector<int>> positive;  // per ordered pair, 0 diagonal
  std::vector<std::vector<int>> negative;
  std::vector<std::vector<int>> net;       // positive - negative
  std::vector<int> self_positive;          // same-component atoms
  std::vector<int> self_negative;
  std::vector<int> self_surplus;           // signed leftovers after pairing
  int capped_trivial_components = 0;
};

struct ClassicalityCertificate {
  enum class Verdict { non_classical, inconclusive };
  Verdict verdict = Verdict::inconclusive;
  // 0-based component pair with Link(j,k) != Link(k,j); -1 when unset.
  int witness_j = -1;
  int witness_k = -1;
};

const char* to_string(ClassicalityCertificate::Verdict v);
const char* to_string(HomologyComparison c);

/// Link(D_j, D_k) for j != k, 0-based indices. Throws
/// std::invalid_argument on j == k and std::out_of_range on bad indices.
int linking_number(const LinkDiagram& d, int j, int k);

/// Signed count of crossings with both passes on component j.
int self_writhe(const LinkDiagram& d, int j);

LinkingMatrix linking_matrix(const LinkDiagram& d);

HomologyClass homology_class(const LinkDiagram& d);

/// Diagrams with different component counts are incomparable.
HomologyComparison compare_homology(const LinkDiagram& a, const LinkDiagram& b);

PseudoHopfDecomposition pseudo_hopf_decomposition(const LinkDiagram& d);

/// Sound, not complete: non_classical comes with an asymmetric-linking
/// witness; inconclusive never asserts classicality.
ClassicalityCertificate classicality_certificate(const LinkDiagram& d);

}  // namespace vlink
