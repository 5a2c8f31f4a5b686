#include "vlink/search.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "vlink/linking.hpp"
#include "vlink/surface.hpp"

namespace vlink {

namespace {

int move_crossing_delta(MoveKind kind) {
  switch (kind) {
    case MoveKind::r1_add: return +1;
    case MoveKind::r2_add: return +2;
    case MoveKind::r1_remove: return -1;
    case MoveKind::r2_remove: return -2;
    case MoveKind::r3: return 0;
  }
  return 0;
}

std::string key_from_encoding(const std::vector<int>& lens,
                              const std::vector<std::array<int, 3>>& enc) {
  std::string out;
  std::size_t idx = 0;
  for (std::size_t c = 0; c < lens.size(); ++c) {
    if (c > 0) out += '/';
    if (lens[c] == 0) {
      out += '@';
      continue;
    }
    for (int k = 0; k < lens[c]; ++k, ++idx) {
      if (k > 0) out += ',';
      out += enc[idx][0] == 0 ? 'O' : 'U';
      out += std::to_string(enc[idx][1]);
      out += enc[idx][2] == 0 ? '+' : '-';
    }
  }
  return out;
}

}  // namespace

std::string canonical_key(const LinkDiagram& d) {
  const std::size_t ncomp = d.components.size();
  std::vector<int> lens(ncomp, 0);
  std::size_t total = 0;
  for (std::size_t c = 0; c < ncomp; ++c) {
    lens[c] = static_cast<int>(d.components[c].size());
    total += d.components[c].size();
  }
  if (total == 0) return serialize(d);

  const int max_id = max_crossing_id(d);
  std::vector<int> new_id(static_cast<std::size_t>(max_id) + 1, 0);
  std::vector<int> stamp(static_cast<std::size_t>(max_id) + 1, 0);
  int version = 0;

  std::vector<std::array<int, 3>> best, cur;
  best.reserve(total);
  cur.reserve(total);
  std::vector<int> off(ncomp, 0);
  bool have_best = false;

  auto advance = [&]() -> bool {
    for (std::size_t c = 0; c < ncomp; ++c) {
      if (lens[c] <= 1) continue;
      if (++off[c] < lens[c]) return true;
      off[c] = 0;
    }
    return false;
  };

  do {
    ++version;
    int counter = 0;
    cur.clear();
    for (std::size_t c = 0; c < ncomp; ++c) {
      const Strand& s = d.components[c];
      const int len = lens[c];
      for (int k = 0; k < len; ++k) {
        const Pass& p = s[static_cast<std::size_t>((off[c] + k) % len)];
        const std::size_t id = static_cast<std::size_t>(p.crossing_id);
        if (stamp[id] != version) {
          stamp[id] = version;
          new_id[id] = ++counter;
        }
        cur.push_back({p.role == Role::over ? 0 : 1, new_id[id],
                       p.sign > 0 ? 0 : 1});
      }
    }
    if (!have_best || cur < best) {
      best = cur;
      have_best = true;
    }
  } while (advance());

  return key_from_encoding(lens, best);
}

LinkDiagram canonical_representative(const LinkDiagram& d) {
  return parse_raw(canonical_key(d));
}

std::uint64_t fnv1a64(std::string_view text) {
  std::uint64_t hash = 1469598103934665603ULL;
  for (unsigned char ch : text) {
    hash ^= ch;
    hash *= 1099511628211ULL;
  }
  return hash;
}

const char* to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::found: return "found";
    case SearchOutcome::frontier_exhausted: return "frontier-exhausted";
    case SearchOutcome::step_bound_exhausted: return "step-bound-exhausted";
    case SearchOutcome::node_budget_exhausted: return "node-budget-exhausted";
  }
  return "unknown";
}

bool replay_sequence(const LinkDiagram& start, const MoveSequence& sequence,
                     const std::string& expect_final_key) {
  std::string key = canonical_key(start);
  LinkDiagram cur = parse_raw(key);
  for (const MoveStep& step : sequence.steps) {
    LinkDiagram next;
    try {
      next = apply_move(cur, step.move);
    } catch (const MoveError&) {
      return false;
    }
    const std::string next_key = canonical_key(next);
    if (next_key != step.result_key ||
        fnv1a64(next_key) != step.result_hash) {
      return false;
    }
    cur = parse_raw(next_key);
    key = next_key;
  }
  return key == expect_final_key;
}

namespace {

struct Frontier {
  std::unordered_map<std::string, std::string> parent;  // key -> parent key
  std::vector<std::string> level;
  int depth = 0;
};

// Expands one whole BFS level of `side`. Returns meets discovered in
// `other` and leaves the new level in place; stops early only on the
// node budget.
struct LevelResult {
  std::vector<std::string> meets;
  bool budget_hit = false;
};

LevelResult expand_level(Frontier& side, const Frontier& other,
                         int max_crossings, std::uint64_t max_nodes,
                         std::uint64_t& nodes_expanded) {
  LevelResult result;
  std::vector<std::string> next;
  for (const std::string& key : side.level) {
    if (nodes_expanded >= max_nodes) {
      result.budget_hit = true;
      break;
    }
    ++nodes_expanded;
    const LinkDiagram rep = parse_raw(key);
    const int crossings = crossing_count(rep);
    for (const Move& m : enumerate_moves(rep, MoveKinds::all())) {
      if (crossings + move_crossing_delta(m.kind) > max_crossings) continue;
      const std::string child = canonical_key(apply_move(rep, m));
      if (side.parent.contains(child)) continue;
      side.parent.emplace(child, key);
      next.push_back(child);
      if (other.parent.contains(child)) result.meets.push_back(child);
    }
  }
  side.level = std::move(next);
  side.depth += 1;
  return result;
}

std::vector<std::string> chain_to_root(
    const std::unordered_map<std::string, std::string>& parent,
    const std::string& from) {
  std::vector<std::string> chain{from};
  std::string cur = from;
  while (true) {
    const std::string& p = parent.at(cur);
    if (p.empty()) break;
    chain.push_back(p);
    cur = p;
  }
  return chain;
}

// First enumerated move on `from` leading to `to`, by canonical key.
Move derive_move(const LinkDiagram& from, const std::string& to) {
  for (const Move& m : enumerate_moves(from, MoveKinds::all())) {
    if (canonical_key(apply_move(from, m)) == to) return m;
  }
  throw std::logic_error("no move connects adjacent search states");
}

}  // namespace

SearchResult search_equivalent(const LinkDiagram& a, const LinkDiagram& b,
                               const SearchOptions& options) {
  SearchResult result;
  const std::string key_a = canonical_key(a);
  const std::string key_b = canonical_key(b);

  if (key_a == key_b) {
    result.outcome = SearchOutcome::found;
    return result;
  }
  if (a.components.size() != b.components.size()) {
    result.outcome = SearchOutcome::frontier_exhausted;
    result.note = "component counts differ (move-invariant)";
    return result;
  }
  if (homology_class(a) != homology_class(b)) {
    result.outcome = SearchOutcome::frontier_exhausted;
    result.note = "off-diagonal linking numbers differ (move-invariant)";
    return result;
  }
  if (crossing_count(a) > options.max_crossings ||
      crossing_count(b) > options.max_crossings) {
    result.outcome = SearchOutcome::frontier_exhausted;
    result.note = "an endpoint exceeds the crossing bound";
    return result;
  }

  Frontier forward, backward;
  forward.parent.emplace(key_a, "");
  forward.level = {key_a};
  backward.parent.emplace(key_b, "");
  backward.level = {key_b};

  std::vector<std::string> meets;
  bool budget_hit = false;
  while (forward.depth + backward.depth < options.max_steps) {
    const bool expand_forward = forward.level.size() <= backward.level.size();
    Frontier& side = expand_forward ? forward : backward;
    const Frontier& other = expand_forward ? backward : forward;
    LevelResult level = expand_level(side, other, options.max_crossings,
                                     options.max_nodes, result.nodes_expanded);
    meets = std::move(level.meets);
    budget_hit = level.budget_hit;
    if (!meets.empty() || budget_hit) break;
    if (side.level.empty()) {
      result.outcome = SearchOutcome::frontier_exhausted;
      return result;
    }
  }

  if (meets.empty()) {
    result.outcome = budget_hit ? SearchOutcome::node_budget_exhausted
                                : SearchOutcome::step_bound_exhausted;
    return result;
  }

  const std::string meet = *std::min_element(meets.begin(), meets.end());

  // key_a .. meet .. key_b as one node chain, then re-derive each edge.
  std::vector<std::string> chain = chain_to_root(forward.parent, meet);
  std::reverse(chain.begin(), chain.end());
  {
    std::vector<std::string> tail = chain_to_root(backward.parent, meet);
    chain.insert(chain.end(), tail.begin() + 1, tail.end());
  }

  MoveSequence sequence;
  for (std::size_t i = 0; i + 1 < chain.size(); ++i) {
    const LinkDiagram rep = parse_raw(chain[i]);
    MoveStep step;
    step.move = derive_move(rep, chain[i + 1]);
    step.result_key = chain[i + 1];
    step.result_hash = fnv1a64(step.result_key);
    sequence.steps.push_back(std::move(step));
  }
  if (!replay_sequence(a, sequence, key_b)) {
    throw std::logic_error("witness replay failed");
  }
  result.outcome = SearchOutcome::found;
  result.sequence = std::move(sequence);
  return result;
}

int ground_genus_upper_bound(const LinkDiagram& d, int max_crossings,
                             int max_steps) {
  int best = surface_report(d).genus;
  std::unordered_set<std::string> visited;
  std::vector<std::string> level{canonical_key(d)};
  visited.insert(level.front());

  for (int depth = 0; depth < max_steps && best > 0 && !level.empty();
       ++depth) {
    std::vector<std::string> next;
    for (const std::string& key : level) {
      const LinkDiagram rep = parse_raw(key);
      const int crossings = crossing_count(rep);
      for (const Move& m : enumerate_moves(rep, MoveKinds::all())) {
        if (crossings + move_crossing_delta(m.kind) > max_crossings) continue;
        const LinkDiagram child = apply_move(rep, m);
        std::string child_key = canonical_key(child);
        if (!visited.insert(child_key).second) continue;
        best = std::min(best, surface_report(child).genus);
        if (best == 0) return 0;
        next.push_back(std::move(child_key));
      }
    }
    level = std::move(next);
  }
  return best;
}

}  // namespace vlink
