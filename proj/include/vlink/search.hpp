#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "vlink/moves.hpp"

namespace vlink {

/// Canonical serialization used as search-state identity: component
/// order fixed, crossing ids renamed by first occurrence, and the
/// joint minimum over all component rotations. Two diagrams get equal
/// keys iff they agree up to rotation and crossing relabeling.
std::string canonical_key(const LinkDiagram& d);

/// The diagram the key denotes (ids 1..c in first-occurrence order).
LinkDiagram canonical_representative(const LinkDiagram& d);

std::uint64_t fnv1a64(std::string_view text);

/// One step of a witness: the move applies to the canonical
/// representative of the previous snapshot (the start diagram's for the
/// first step); result_key/result_hash identify the outcome.
struct MoveStep {
  Move move;
  std::string result_key;
  std::uint64_t result_hash = 0;
};

struct MoveSequence {
  std::vector<MoveStep> steps;
};

enum class SearchOutcome {
  found,
  frontier_exhausted,     // a full reachable set within the crossing
                          // bound was enumerated: conclusive negative
  step_bound_exhausted,   // no witness within max_steps moves
  node_budget_exhausted,  // expansion budget ran out
};

const char* to_string(SearchOutcome outcome);

struct SearchOptions {
  int max_crossings = 8;
  int max_steps = 6;
  std::uint64_t max_nodes = 1'000'000;  // expansion budget, deterministic
};

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::step_bound_exhausted;
  MoveSequence sequence;  // only meaningful when found
  std::uint64_t nodes_expanded = 0;
  std::string note;
};

/// Bidirectional breadth-first search for a Reidemeister witness from
/// a to b, over canonical keys, never visiting diagrams with more than
/// max_crossings crossings. Witnesses are at most max_steps moves and
/// are verified by replay before being returned. Deterministic: level
/// order expansion, lexicographically least meeting key.
///
/// Component count and off-diagonal linking numbers are move-invariant,
/// so mismatched endpoints are rejected up front as frontier_exhausted.
SearchResult search_equivalent(const LinkDiagram& a, const LinkDiagram& b,
                               const SearchOptions& options);

/// Replays a witness: applies each step to the canonical representative
/// of the previous snapshot and checks every key and hash, ending at
/// expect_final_key. Returns false on any mismatch.
bool replay_sequence(const LinkDiagram& start, const MoveSequence& sequence,
                     const std::string& expect_final_key);

/// Minimum canonical genus over every diagram reachable from d within
/// the bounds (d included): an upper bound for the ground genus.
int ground_genus_upper_bound(const LinkDiagram& d, int max_crossings,
                             int max_steps);

}  // namespace vlink
