#pragma once

// Shared test helpers: random diagram generation, braid closures (a
// source of guaranteed-classical Gauss codes), and an independent
// shadow-level move oracle.

#include <algorithm>
#include <numeric>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "vlink/diagram.hpp"
#include "vlink/moves.hpp"

namespace vlink::testing {

inline LinkDiagram make(const std::string& code) { return parse(code); }

// Any placement of c crossings (each one over-pass and one under-pass,
// equal signs) across n cyclic components is a valid virtual diagram.
inline LinkDiagram random_diagram(std::mt19937& rng, int max_crossings,
                                  int max_components) {
  std::uniform_int_distribution<int> crossings_dist(0, max_crossings);
  std::uniform_int_distribution<int> components_dist(1, max_components);
  const int c = crossings_dist(rng);
  const int n = components_dist(rng);

  std::vector<Pass> pool;
  for (int id = 1; id <= c; ++id) {
    const int sign = std::uniform_int_distribution<int>(0, 1)(rng) ? +1 : -1;
    pool.push_back({id, Role::over, sign});
    pool.push_back({id, Role::under, sign});
  }
  std::shuffle(pool.begin(), pool.end(), rng);

  std::vector<int> cuts{0, 2 * c};
  std::uniform_int_distribution<int> cut_dist(0, 2 * c);
  for (int i = 0; i < n - 1; ++i) cuts.push_back(cut_dist(rng));
  std::sort(cuts.begin(), cuts.end());

  LinkDiagram d;
  for (int i = 0; i < n; ++i) {
    d.components.emplace_back(pool.begin() + cuts[static_cast<std::size_t>(i)],
                              pool.begin() + cuts[static_cast<std::size_t>(i) + 1]);
  }
  return d;
}

struct BraidLetter {
  int position;  // 1-based, crossing between strands position, position+1
  int sign;      // +1: left strand passes over; -1: under
};

// Gauss code of the closure of a braid word. Braid closures are planar
// diagrams, so these codes are classical by construction.
inline LinkDiagram braid_closure(int strands,
                                 const std::vector<BraidLetter>& word) {
  if (strands < 1) throw std::invalid_argument("braid needs >= 1 strand");
  std::vector<int> at_position(static_cast<std::size_t>(strands));
  std::iota(at_position.begin(), at_position.end(), 0);
  std::vector<Strand> passes(static_cast<std::size_t>(strands));

  int crossing_id = 0;
  for (const BraidLetter& letter : word) {
    if (letter.position < 1 || letter.position >= strands) {
      throw std::invalid_argument("braid letter out of range");
    }
    const std::size_t i = static_cast<std::size_t>(letter.position - 1);
    const int lo = at_position[i];
    const int hi = at_position[i + 1];
    const int over = letter.sign > 0 ? lo : hi;
    const int under = letter.sign > 0 ? hi : lo;
    ++crossing_id;
    passes[static_cast<std::size_t>(over)].push_back(
        {crossing_id, Role::over, letter.sign});
    passes[static_cast<std::size_t>(under)].push_back(
        {crossing_id, Role::under, letter.sign});
    std::swap(at_position[i], at_position[i + 1]);
  }

  // Strand s exits at the bottom position holding s; the closure joins
  // it to the strand that started there.
  std::vector<int> next(static_cast<std::size_t>(strands));
  for (int p = 0; p < strands; ++p) {
    next[static_cast<std::size_t>(at_position[static_cast<std::size_t>(p)])] = p;
  }
  LinkDiagram d;
  std::vector<bool> used(static_cast<std::size_t>(strands), false);
  for (int s = 0; s < strands; ++s) {
    if (used[static_cast<std::size_t>(s)]) continue;
    Strand component;
    int cur = s;
    do {
      used[static_cast<std::size_t>(cur)] = true;
      const Strand& part = passes[static_cast<std::size_t>(cur)];
      component.insert(component.end(), part.begin(), part.end());
      cur = next[static_cast<std::size_t>(cur)];
    } while (cur != s);
    d.components.push_back(std::move(component));
  }
  return d;
}

inline LinkDiagram random_braid_closure(std::mt19937& rng, int max_strands,
                                        int max_letters) {
  std::uniform_int_distribution<int> strands_dist(2, max_strands);
  const int strands = strands_dist(rng);
  std::uniform_int_distribution<int> letters_dist(0, max_letters);
  const int letters = letters_dist(rng);
  std::vector<BraidLetter> word;
  std::uniform_int_distribution<int> position_dist(1, strands - 1);
  for (int i = 0; i < letters; ++i) {
    word.push_back({position_dist(rng),
                    std::uniform_int_distribution<int>(0, 1)(rng) ? +1 : -1});
  }
  return braid_closure(strands, word);
}

// Independent shadow-level oracle: applies the id-only projection of a
// move directly to a universe. fresh_base is the max crossing id of the
// diagram the move was enumerated on.
inline Universe shadow_apply(const Universe& u, const Move& m, int fresh_base) {
  Universe out = u;
  auto insert_block = [](std::vector<int>& ids, int gap,
                         const std::vector<int>& block) {
    if (ids.empty()) {
      ids = block;
      return;
    }
    ids.insert(ids.begin() + gap + 1, block.begin(), block.end());
  };
  switch (m.kind) {
    case MoveKind::r1_add: {
      const int f = fresh_base + 1;
      insert_block(out.components[static_cast<std::size_t>(m.gaps[0].component)],
                   m.gaps[0].index, {f, f});
      return out;
    }
    case MoveKind::r2_add: {
      const int x = fresh_base + 1;
      const int y = fresh_base + 2;
      const std::vector<int> over_block{x, y};
      const std::vector<int> under_block =
          m.parallel ? std::vector<int>{x, y} : std::vector<int>{y, x};
      const SitePos go = m.gaps[0];
      const SitePos gu = m.gaps[1];
      if (go == gu) {
        std::vector<int> block = m.over_first ? over_block : under_block;
        const std::vector<int>& tail = m.over_first ? under_block : over_block;
        block.insert(block.end(), tail.begin(), tail.end());
        insert_block(out.components[static_cast<std::size_t>(go.component)],
                     go.index, block);
      } else if (go.component == gu.component) {
        auto& ids = out.components[static_cast<std::size_t>(go.component)];
        // splice the later gap first so indices stay valid
        if (go.index > gu.index) {
          insert_block(ids, go.index, over_block);
          insert_block(ids, gu.index, under_block);
        } else {
          insert_block(ids, gu.index, under_block);
          insert_block(ids, go.index, over_block);
        }
      } else {
        insert_block(out.components[static_cast<std::size_t>(go.component)],
                     go.index, over_block);
        insert_block(out.components[static_cast<std::size_t>(gu.component)],
                     gu.index, under_block);
      }
      return out;
    }
    case MoveKind::r1_remove:
    case MoveKind::r2_remove: {
      std::vector<SitePos> sorted = m.positions;
      std::sort(sorted.begin(), sorted.end(), [](SitePos a, SitePos b) {
        return a.component != b.component ? a.component < b.component
                                          : a.index > b.index;
      });
      for (const SitePos& p : sorted) {
        auto& ids = out.components[static_cast<std::size_t>(p.component)];
        ids.erase(ids.begin() + p.index);
      }
      return out;
    }
    case MoveKind::r3: {
      for (int pair = 0; pair < 3; ++pair) {
        const SitePos p = m.positions[static_cast<std::size_t>(2 * pair)];
        const SitePos q = m.positions[static_cast<std::size_t>(2 * pair + 1)];
        auto& ids = out.components[static_cast<std::size_t>(p.component)];
        std::swap(ids[static_cast<std::size_t>(p.index)],
                  ids[static_cast<std::size_t>(q.index)]);
      }
      return out;
    }
  }
  throw std::logic_error("unknown move kind");
}

}  // namespace vlink::testing
