#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "vlink/diagram.hpp"

namespace vlink {

enum class MoveKind : std::uint8_t {
  r1_add,
  r1_remove,
  r2_add,
  r2_remove,
  r3,
};

const char* to_string(MoveKind kind);

/// A pass position (component, index) — or an insertion gap for the
/// add moves, where gap i sits between positions i and i+1 (cyclically)
/// and a crossingless loop has the single gap 0.
struct SitePos {
  int component = 0;
  int index = 0;

  friend bool operator==(const SitePos&, const SitePos&) = default;
};

/// One Reidemeister move, tied to the diagram it was enumerated on.
///
/// Field use by kind:
///   r1_remove  positions[2]: the crossing's two adjacent passes.
///   r2_remove  positions[4]: adjacent over-pair then adjacent
///              under-pair of two opposite-sign crossings.
///   r3         positions[6]: three cyclically-ordered adjacent pairs
///              (over/over, mixed, under/under); applying swaps each.
///   r1_add     gaps[1], sign, over_first (kink order O-then-U or
///              U-then-O). The fresh crossing takes max id + 1.
///   r2_add     gaps[2] = over gap, under gap; sign is the leading
///              crossing's sign (its partner gets the opposite);
///              parallel picks the under-strand direction; over_first
///              orders the two blocks when both gaps coincide. Fresh
///              crossings take max id + 1 and + 2.
struct Move {
  MoveKind kind = MoveKind::r1_add;
  std::vector<SitePos> positions;
  std::vector<SitePos> gaps;
  int sign = +1;
  bool over_first = true;
  bool parallel = true;

  friend bool operator==(const Move&, const Move&) = default;
};

struct MoveKinds {
  bool r1_add = false;
  bool r1_remove = false;
  bool r2_add = false;
  bool r2_remove = false;
  bool r3 = false;

  static MoveKinds all() { return {true, true, true, true, true}; }
  static MoveKinds removes() { return {false, true, false, true, true}; }
  static MoveKinds only(MoveKind k) {
    MoveKinds ks;
    switch (k) {
      case MoveKind::r1_add: ks.r1_add = true; break;
      case MoveKind::r1_remove: ks.r1_remove = true; break;
      case MoveKind::r2_add: ks.r2_add = true; break;
      case MoveKind::r2_remove: ks.r2_remove = true; break;
      case MoveKind::r3: ks.r3 = true; break;
    }
    return ks;
  }
};

/// Move does not match the diagram it is applied to.
struct MoveError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Triangle-move template: three crossings ab, ac, bc where one local
/// strand (A) runs over both others, one (C) under both, and one (B)
/// under A but over C. Each strand holds a cyclically adjacent pass
/// pair; flip_* reverses that pair's base order (A: ab,ac; B: bc,ab;
/// C: bc,ac) and sign_* pins each crossing's sign. The sixteen rows
/// are the eight oriented triangle moves, each present as its before
/// and after configuration; completeness beyond these is not claimed.
struct R3Template {
  bool flip_a = false;
  bool flip_b = false;
  bool flip_c = false;
  int sign_ab = +1;
  int sign_ac = +1;
  int sign_bc = +1;
};

const std::array<R3Template, 16>& r3_catalog();

/// All applicable moves of the requested kinds, in deterministic order
/// (kind, then site scan order).
std::vector<Move> enumerate_moves(const LinkDiagram& d, const MoveKinds& kinds);

/// Applies a move enumerated against d (re-validated here); throws
/// MoveError on a stale or malformed site. Crossing ids of untouched
/// crossings are preserved.
LinkDiagram apply_move(const LinkDiagram& d, const Move& m);

}  // namespace vlink
