#include "doctest.h"

#include <random>

#include "support.hpp"
#include "vlink/linking.hpp"
#include "vlink/moves.hpp"
#include "vlink/surface.hpp"

using namespace vlink;
using vlink::testing::make;
using vlink::testing::random_braid_closure;
using vlink::testing::random_diagram;

namespace {

using Matrix = std::vector<std::vector<int>>;

}  // namespace

TEST_CASE("linking_number: pseudo-Hopf is asymmetric") {
  const LinkDiagram d = make("O1+/U1+");
  CHECK(linking_number(d, 0, 1) == 1);
  CHECK(linking_number(d, 1, 0) == 0);
}

TEST_CASE("linking_number: classical Hopf is symmetric") {
  const LinkDiagram d = make("O1+,U2+/U1+,O2+");
  CHECK(linking_number(d, 0, 1) == 1);
  CHECK(linking_number(d, 1, 0) == 1);
}

TEST_CASE("linking_number: split union and error cases") {
  const LinkDiagram d = make("@/@");
  CHECK(linking_number(d, 0, 1) == 0);
  CHECK_THROWS_AS(linking_number(d, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(linking_number(d, 0, 2), std::out_of_range);
}

TEST_CASE("linking_matrix: named diagrams") {
  CHECK(linking_matrix(make("O1+/U1+")).entries == Matrix{{0, 1}, {0, 0}});
  CHECK(linking_matrix(make("O1+,O2+,U1+,U2+")).entries == Matrix{{2}});
  CHECK(linking_matrix(make("O1+,U2+/U1+,O2+")).entries ==
        Matrix{{0, 1}, {1, 0}});
  CHECK(self_writhe(make("O1+,O2+,U1+,U2+"), 0) == 2);
  CHECK(self_writhe(make("O1-,U2-,O3-,U1-,O2-,U3-"), 0) == -3);
}

TEST_CASE("homology_class: examples") {
  CHECK_FALSE(homology_class(make("O1+/U1+")) ==
              homology_class(make("O1+,U2+/U1+,O2+")));
  CHECK(homology_class(make("O1+,U1+")) == homology_class(make("@")));
  CHECK(compare_homology(make("O1+/U1+"), make("O1+/U1+")) ==
        HomologyComparison::homologous);
  CHECK(compare_homology(make("O1+/U1+"), make("O1+,U2+/U1+,O2+")) ==
        HomologyComparison::not_homologous);
  CHECK(compare_homology(make("@"), make("@/@")) ==
        HomologyComparison::incomparable);
}

TEST_CASE("pseudo_hopf_decomposition: pseudo-Hopf atom") {
  const PseudoHopfDecomposition dec =
      pseudo_hopf_decomposition(make("O1+/U1+"));
  CHECK(dec.net == Matrix{{0, 1}, {0, 0}});
  CHECK(dec.positive == Matrix{{0, 1}, {0, 0}});
  CHECK(dec.negative == Matrix{{0, 0}, {0, 0}});
  CHECK(dec.self_surplus == std::vector<int>{0, 0});
  CHECK(dec.capped_trivial_components == 2);
}

TEST_CASE("pseudo_hopf_decomposition: full cancellation") {
  // two + and two - inter-component crossings, arranged to cancel
  const LinkDiagram d = make("O1+,U2+,O3-,U4-/U1+,O2+,U3-,O4-");
  const LinkingMatrix m = linking_matrix(d);
  CHECK(m.entries == Matrix{{0, 0}, {0, 0}});
  const PseudoHopfDecomposition dec = pseudo_hopf_decomposition(d);
  CHECK(dec.net == Matrix{{0, 0}, {0, 0}});
  CHECK(dec.positive == Matrix{{0, 1}, {1, 0}});
  CHECK(dec.negative == Matrix{{0, 1}, {1, 0}});
}

TEST_CASE("pseudo_hopf_decomposition: self-crossing surplus") {
  const PseudoHopfDecomposition dec =
      pseudo_hopf_decomposition(make("O1+,O2+,U1+,U2+"));
  CHECK(dec.net == Matrix{{0}});
  CHECK(dec.self_positive == std::vector<int>{2});
  CHECK(dec.self_negative == std::vector<int>{0});
  CHECK(dec.self_surplus == std::vector<int>{2});
  CHECK(dec.capped_trivial_components == 1);
}

TEST_CASE("decomposition net counts equal the linking matrix") {
  std::mt19937 rng(60902);
  for (int trial = 0; trial < 600; ++trial) {
    const LinkDiagram d = random_diagram(rng, 8, 4);
    const LinkingMatrix m = linking_matrix(d);
    const PseudoHopfDecomposition dec = pseudo_hopf_decomposition(d);
    const int n = m.n;
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        const auto sj = static_cast<std::size_t>(j);
        const auto sk = static_cast<std::size_t>(k);
        if (j == k) {
          CHECK(dec.self_surplus[sj] == m.entries[sj][sj]);
        } else {
          CHECK(dec.net[sj][sk] == m.entries[sj][sk]);
        }
      }
    }
  }
}

TEST_CASE("certificate: examples") {
  const ClassicalityCertificate hopf =
      classicality_certificate(make("O1+/U1+"));
  CHECK(hopf.verdict == ClassicalityCertificate::Verdict::non_classical);
  CHECK(hopf.witness_j == 0);
  CHECK(hopf.witness_k == 1);

  CHECK(classicality_certificate(make("O1+,U2+/U1+,O2+")).verdict ==
        ClassicalityCertificate::Verdict::inconclusive);
  CHECK(classicality_certificate(make("O1+,O2+,U1+,U2+")).verdict ==
        ClassicalityCertificate::Verdict::inconclusive);
}

TEST_CASE("certificate is never non_classical on classical codes") {
  std::mt19937 rng(8675309);
  for (int trial = 0; trial < 400; ++trial) {
    const LinkDiagram d = random_braid_closure(rng, 4, 10);
    REQUIRE(is_classically_realizable(d));
    const ClassicalityCertificate cert = classicality_certificate(d);
    REQUIRE(cert.verdict == ClassicalityCertificate::Verdict::inconclusive);
    // classical linking numbers are symmetric by construction
    const LinkingMatrix m = linking_matrix(d);
    for (int j = 0; j < m.n; ++j) {
      for (int k = 0; k < m.n; ++k) {
        REQUIRE(m.entries[static_cast<std::size_t>(j)]
                         [static_cast<std::size_t>(k)] ==
                m.entries[static_cast<std::size_t>(k)]
                         [static_cast<std::size_t>(j)]);
      }
    }
  }
}

TEST_CASE("move invariance of the linking matrix") {
  std::mt19937 rng(123581321);
  int trials = 0;
  while (trials < 1000) {
    const LinkDiagram d = random_diagram(rng, 6, 3);
    const std::vector<Move> moves = enumerate_moves(d, MoveKinds::all());
    if (moves.empty()) continue;
    const Move& m = moves[std::uniform_int_distribution<std::size_t>(
        0, moves.size() - 1)(rng)];
    const LinkDiagram after = apply_move(d, m);
    const LinkingMatrix before_m = linking_matrix(d);
    const LinkingMatrix after_m = linking_matrix(after);
    REQUIRE(before_m.n == after_m.n);
    int diagonal_changes = 0;
    for (int j = 0; j < before_m.n; ++j) {
      for (int k = 0; k < before_m.n; ++k) {
        const auto sj = static_cast<std::size_t>(j);
        const auto sk = static_cast<std::size_t>(k);
        if (j == k) {
          const int delta = after_m.entries[sj][sj] - before_m.entries[sj][sj];
          if (m.kind == MoveKind::r1_add || m.kind == MoveKind::r1_remove) {
            REQUIRE((delta == 0 || delta == 1 || delta == -1));
            diagonal_changes += delta != 0;
          } else {
            REQUIRE(delta == 0);
          }
        } else {
          REQUIRE(after_m.entries[sj][sk] == before_m.entries[sj][sk]);
        }
      }
    }
    if (m.kind == MoveKind::r1_add || m.kind == MoveKind::r1_remove) {
      REQUIRE(diagonal_changes == 1);
    }
    ++trials;
  }
}

TEST_CASE("homology class is move invariant") {
  std::mt19937 rng(1701);
  int trials = 0;
  while (trials < 300) {
    const LinkDiagram d = random_diagram(rng, 6, 3);
    const std::vector<Move> moves = enumerate_moves(d, MoveKinds::all());
    if (moves.empty()) continue;
    const Move& m = moves[std::uniform_int_distribution<std::size_t>(
        0, moves.size() - 1)(rng)];
    REQUIRE(compare_homology(d, apply_move(d, m)) ==
            HomologyComparison::homologous);
    ++trials;
  }
}
