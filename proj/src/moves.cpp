#include "vlink/moves.hpp"

#include <algorithm>
#include <optional>

namespace vlink {

namespace {

struct AdjPair {
  int component = 0;
  int first = 0;   // position
  int second = 0;  // cyclic successor of `first`
};

const Pass& pass_at(const LinkDiagram& d, SitePos p) {
  if (p.component < 0 ||
      p.component >= static_cast<int>(d.components.size())) {
    throw MoveError("site component out of range");
  }
  const Strand& s = d.components[static_cast<std::size_t>(p.component)];
  if (p.index < 0 || p.index >= static_cast<int>(s.size())) {
    throw MoveError("site index out of range");
  }
  return s[static_cast<std::size_t>(p.index)];
}

int succ(const LinkDiagram& d, int component, int index) {
  const int len = static_cast<int>(
      d.components[static_cast<std::size_t>(component)].size());
  return (index + 1) % len;
}

bool gap_valid(const LinkDiagram& d, SitePos g) {
  if (g.component < 0 ||
      g.component >= static_cast<int>(d.components.size())) {
    return false;
  }
  const int len = static_cast<int>(
      d.components[static_cast<std::size_t>(g.component)].size());
  const int gaps = std::max(1, len);
  return g.index >= 0 && g.index < gaps;
}

// All cyclically ordered adjacent position pairs. A two-pass component
// contributes both (0,1) and (1,0).
std::vector<AdjPair> adjacent_pairs(const LinkDiagram& d) {
  std::vector<AdjPair> pairs;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const int len = static_cast<int>(d.components[c].size());
    if (len < 2) continue;
    for (int i = 0; i < len; ++i) {
      pairs.push_back({static_cast<int>(c), i, (i + 1) % len});
    }
  }
  return pairs;
}

struct R3Match {
  int x = 0, y = 0, z = 0;  // crossing ids ab, ac, bc
};

// Checks one candidate triple of adjacent pairs against the catalog.
// pa must hold two over-passes, pb one over and one under, pc two
// under-passes; returns the resolved crossing ids on success.
std::optional<R3Match> match_r3(const LinkDiagram& d, const AdjPair& pa,
                                const AdjPair& pb, const AdjPair& pc) {
  const SitePos a0{pa.component, pa.first}, a1{pa.component, pa.second};
  const SitePos b0{pb.component, pb.first}, b1{pb.component, pb.second};
  const SitePos c0{pc.component, pc.first}, c1{pc.component, pc.second};
  const SitePos all[6] = {a0, a1, b0, b1, c0, c1};
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      if (all[i] == all[j]) return std::nullopt;
    }
  }
  const Pass& pa0 = pass_at(d, a0);
  const Pass& pa1 = pass_at(d, a1);
  const Pass& pb0 = pass_at(d, b0);
  const Pass& pb1 = pass_at(d, b1);
  const Pass& pc0 = pass_at(d, c0);
  const Pass& pc1 = pass_at(d, c1);

  if (pa0.role != Role::over || pa1.role != Role::over) return std::nullopt;
  if (pc0.role != Role::under || pc1.role != Role::under) return std::nullopt;
  if (pa0.crossing_id == pa1.crossing_id) return std::nullopt;
  if (pc0.crossing_id == pc1.crossing_id) return std::nullopt;
  const bool b0_over = pb0.role == Role::over;
  if (b0_over == (pb1.role == Role::over)) return std::nullopt;
  const Pass& b_over = b0_over ? pb0 : pb1;
  const Pass& b_under = b0_over ? pb1 : pb0;
  if (b_over.crossing_id == b_under.crossing_id) return std::nullopt;

  const int x = b_under.crossing_id;
  const int z = b_over.crossing_id;
  int y = 0;
  if (pa0.crossing_id == x) {
    y = pa1.crossing_id;
  } else if (pa1.crossing_id == x) {
    y = pa0.crossing_id;
  } else {
    return std::nullopt;
  }
  if (z == x || z == y) return std::nullopt;
  const bool c_holds = (pc0.crossing_id == y && pc1.crossing_id == z) ||
                       (pc0.crossing_id == z && pc1.crossing_id == y);
  if (!c_holds) return std::nullopt;

  const bool flip_a = pa0.crossing_id != x;      // base order (ab, ac)
  const bool flip_b = !b0_over;                  // base order (bc, ab)
  const bool flip_c = pc0.crossing_id != z;      // base order (bc, ac)
  const int sx = pa0.crossing_id == x ? pa0.sign : pa1.sign;
  const int sy = pa0.crossing_id == y ? pa0.sign : pa1.sign;
  const int sz = b_over.sign;

  for (const R3Template& t : r3_catalog()) {
    if (t.flip_a == flip_a && t.flip_b == flip_b && t.flip_c == flip_c &&
        t.sign_ab == sx && t.sign_ac == sy && t.sign_bc == sz) {
      return R3Match{x, y, z};
    }
  }
  return std::nullopt;
}

Strand with_insertions(
    const Strand& s,
    const std::vector<std::pair<int, std::vector<Pass>>>& blocks) {
  Strand out;
  out.reserve(s.size() + 4);
  if (s.empty()) {
    for (const auto& [gap, block] : blocks) {
      (void)gap;
      out.insert(out.end(), block.begin(), block.end());
    }
    return out;
  }
  for (int i = 0; i < static_cast<int>(s.size()); ++i) {
    out.push_back(s[static_cast<std::size_t>(i)]);
    for (const auto& [gap, block] : blocks) {
      if (gap == i) out.insert(out.end(), block.begin(), block.end());
    }
  }
  return out;
}

LinkDiagram with_removals(const LinkDiagram& d,
                          const std::vector<SitePos>& positions) {
  LinkDiagram out = d;
  std::vector<SitePos> sorted = positions;
  std::sort(sorted.begin(), sorted.end(), [](SitePos a, SitePos b) {
    return a.component != b.component ? a.component < b.component
                                      : a.index > b.index;
  });
  for (const SitePos& p : sorted) {
    Strand& s = out.components[static_cast<std::size_t>(p.component)];
    s.erase(s.begin() + p.index);
  }
  return out;
}

}  // namespace

const char* to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::r1_add: return "r1_add";
    case MoveKind::r1_remove: return "r1_remove";
    case MoveKind::r2_add: return "r2_add";
    case MoveKind::r2_remove: return "r2_remove";
    case MoveKind::r3: return "r3";
  }
  return "unknown";
}

const std::array<R3Template, 16>& r3_catalog() {
  // Rows grouped by strand-orientation flips, each in both chiralities.
  static const std::array<R3Template, 16> catalog = {{
      {false, false, false, +1, +1, -1},
      {false, false, false, -1, -1, +1},
      {false, false, true, +1, -1, +1},
      {false, false, true, -1, +1, -1},
      {false, true, false, -1, +1, +1},
      {false, true, false, +1, -1, -1},
      {false, true, true, -1, -1, -1},
      {false, true, true, +1, +1, +1},
      {true, false, false, -1, -1, -1},
      {true, false, false, +1, +1, +1},
      {true, false, true, -1, +1, +1},
      {true, false, true, +1, -1, -1},
      {true, true, false, +1, -1, +1},
      {true, true, false, -1, +1, -1},
      {true, true, true, +1, +1, -1},
      {true, true, true, -1, -1, +1},
  }};
  return catalog;
}

std::vector<Move> enumerate_moves(const LinkDiagram& d,
                                  const MoveKinds& kinds) {
  std::vector<Move> moves;

  // Gap list shared by the add moves.
  std::vector<SitePos> gaps;
  for (std::size_t c = 0; c < d.components.size(); ++c) {
    const int len = static_cast<int>(d.components[c].size());
    for (int g = 0; g < std::max(1, len); ++g) {
      gaps.push_back({static_cast<int>(c), g});
    }
  }

  if (kinds.r1_add) {
    for (const SitePos& g : gaps) {
      for (int sign : {+1, -1}) {
        for (bool over_first : {true, false}) {
          Move m;
          m.kind = MoveKind::r1_add;
          m.gaps = {g};
          m.sign = sign;
          m.over_first = over_first;
          moves.push_back(std::move(m));
        }
      }
    }
  }

  if (kinds.r1_remove) {
    for (std::size_t c = 0; c < d.components.size(); ++c) {
      const Strand& s = d.components[c];
      const int len = static_cast<int>(s.size());
      if (len < 2) continue;
      for (int i = 0; i < len; ++i) {
        if (len == 2 && i == 1) break;  // (1,0) duplicates (0,1)
        const int j = (i + 1) % len;
        if (s[static_cast<std::size_t>(i)].crossing_id !=
            s[static_cast<std::size_t>(j)].crossing_id) {
          continue;
        }
        Move m;
        m.kind = MoveKind::r1_remove;
        m.positions = {{static_cast<int>(c), std::min(i, j)},
                       {static_cast<int>(c), std::max(i, j)}};
        moves.push_back(std::move(m));
      }
    }
  }

  if (kinds.r2_add) {
    for (const SitePos& go : gaps) {
      for (const SitePos& gu : gaps) {
        const bool same = go == gu;
        for (bool parallel : {true, false}) {
          for (int sign : {+1, -1}) {
            for (bool over_first : {true, false}) {
              if (!same && !over_first) continue;  // only meaningful same-gap
              Move m;
              m.kind = MoveKind::r2_add;
              m.gaps = {go, gu};
              m.parallel = parallel;
              m.sign = sign;
              m.over_first = over_first;
              moves.push_back(std::move(m));
            }
          }
        }
      }
    }
  }

  const std::vector<AdjPair> pairs =
      (kinds.r2_remove || kinds.r3) ? adjacent_pairs(d) : std::vector<AdjPair>{};

  if (kinds.r2_remove) {
    std::vector<AdjPair> overs, unders;
    for (const AdjPair& p : pairs) {
      const Strand& s = d.components[static_cast<std::size_t>(p.component)];
      if (s.size() == 2 && p.first == 1) continue;  // unordered duplicate
      const Pass& u = s[static_cast<std::size_t>(p.first)];
      const Pass& v = s[static_cast<std::size_t>(p.second)];
      if (u.crossing_id == v.crossing_id) continue;
      if (u.role == Role::over && v.role == Role::over) overs.push_back(p);
      if (u.role == Role::under && v.role == Role::under) unders.push_back(p);
    }
    for (const AdjPair& o : overs) {
      const Strand& so = d.components[static_cast<std::size_t>(o.component)];
      const Pass& o1 = so[static_cast<std::size_t>(o.first)];
      const Pass& o2 = so[static_cast<std::size_t>(o.second)];
      if (o1.sign == o2.sign) continue;
      for (const AdjPair& u : unders) {
        const Strand& su = d.components[static_cast<std::size_t>(u.component)];
        const Pass& u1 = su[static_cast<std::size_t>(u.first)];
        const Pass& u2 = su[static_cast<std::size_t>(u.second)];
        const bool ids_match =
            (u1.crossing_id == o1.crossing_id &&
             u2.crossing_id == o2.crossing_id) ||
            (u1.crossing_id == o2.crossing_id &&
             u2.crossing_id == o1.crossing_id);
        if (!ids_match) continue;
        Move m;
        m.kind = MoveKind::r2_remove;
        m.positions = {{o.component, std::min(o.first, o.second)},
                       {o.component, std::max(o.first, o.second)},
                       {u.component, std::min(u.first, u.second)},
                       {u.component, std::max(u.first, u.second)}};
        moves.push_back(std::move(m));
      }
    }
  }

  if (kinds.r3) {
    std::vector<AdjPair> oo, mixed, uu;
    for (const AdjPair& p : pairs) {
      const Strand& s = d.components[static_cast<std::size_t>(p.component)];
      const Pass& u = s[static_cast<std::size_t>(p.first)];
      const Pass& v = s[static_cast<std::size_t>(p.second)];
      if (u.crossing_id == v.crossing_id) continue;
      const bool uo = u.role == Role::over;
      const bool vo = v.role == Role::over;
      if (uo && vo) {
        oo.push_back(p);
      } else if (!uo && !vo) {
        uu.push_back(p);
      } else {
        mixed.push_back(p);
      }
    }
    for (const AdjPair& pa : oo) {
      for (const AdjPair& pb : mixed) {
        for (const AdjPair& pc : uu) {
          if (!match_r3(d, pa, pb, pc)) continue;
          Move m;
          m.kind = MoveKind::r3;
          m.positions = {{pa.component, pa.first}, {pa.component, pa.second},
                         {pb.component, pb.first}, {pb.component, pb.second},
                         {pc.component, pc.first}, {pc.component, pc.second}};
          moves.push_back(std::move(m));
        }
      }
    }
  }
  return moves;
}

LinkDiagram apply_move(const LinkDiagram& d, const Move& m) {
  switch (m.kind) {
    case MoveKind::r1_add: {
      if (m.gaps.size() != 1 || !gap_valid(d, m.gaps[0])) {
        throw MoveError("r1_add: bad gap");
      }
      const int id = max_crossing_id(d) + 1;
      std::vector<Pass> block;
      if (m.over_first) {
        block = {{id, Role::over, m.sign}, {id, Role::under, m.sign}};
      } else {
        block = {{id, Role::under, m.sign}, {id, Role::over, m.sign}};
      }
      LinkDiagram out = d;
      Strand& s = out.components[static_cast<std::size_t>(m.gaps[0].component)];
      s = with_insertions(s, {{m.gaps[0].index, block}});
      return out;
    }

    case MoveKind::r2_add: {
      if (m.gaps.size() != 2 || !gap_valid(d, m.gaps[0]) ||
          !gap_valid(d, m.gaps[1])) {
        throw MoveError("r2_add: bad gaps");
      }
      const int x = max_crossing_id(d) + 1;
      const int y = x + 1;
      const std::vector<Pass> over_block = {{x, Role::over, m.sign},
                                            {y, Role::over, -m.sign}};
      const std::vector<Pass> under_block =
          m.parallel
              ? std::vector<Pass>{{x, Role::under, m.sign},
                                  {y, Role::under, -m.sign}}
              : std::vector<Pass>{{y, Role::under, -m.sign},
                                  {x, Role::under, m.sign}};
      LinkDiagram out = d;
      const SitePos go = m.gaps[0];
      const SitePos gu = m.gaps[1];
      if (go == gu) {
        std::vector<Pass> block;
        if (m.over_first) {
          block = over_block;
          block.insert(block.end(), under_block.begin(), under_block.end());
        } else {
          block = under_block;
          block.insert(block.end(), over_block.begin(), over_block.end());
        }
        Strand& s = out.components[static_cast<std::size_t>(go.component)];
        s = with_insertions(s, {{go.index, block}});
      } else if (go.component == gu.component) {
        Strand& s = out.components[static_cast<std::size_t>(go.component)];
        s = with_insertions(s, {{go.index, over_block}, {gu.index, under_block}});
      } else {
        Strand& so = out.components[static_cast<std::size_t>(go.component)];
        so = with_insertions(so, {{go.index, over_block}});
        Strand& su = out.components[static_cast<std::size_t>(gu.component)];
        su = with_insertions(su, {{gu.index, under_block}});
      }
      return out;
    }

    case MoveKind::r1_remove: {
      if (m.positions.size() != 2) throw MoveError("r1_remove: bad site");
      const SitePos p = m.positions[0];
      const SitePos q = m.positions[1];
      const Pass& pp = pass_at(d, p);
      const Pass& qq = pass_at(d, q);
      const bool adjacent =
          p.component == q.component &&
          (succ(d, p.component, p.index) == q.index ||
           succ(d, q.component, q.index) == p.index);
      if (!adjacent || pp.crossing_id != qq.crossing_id ||
          pp.role == qq.role) {
        throw MoveError("r1_remove: site does not match a kink");
      }
      return with_removals(d, m.positions);
    }

    case MoveKind::r2_remove: {
      if (m.positions.size() != 4) throw MoveError("r2_remove: bad site");
      const Pass& o1 = pass_at(d, m.positions[0]);
      const Pass& o2 = pass_at(d, m.positions[1]);
      const Pass& u1 = pass_at(d, m.positions[2]);
      const Pass& u2 = pass_at(d, m.positions[3]);
      auto adjacent = [&](SitePos p, SitePos q) {
        return p.component == q.component &&
               (succ(d, p.component, p.index) == q.index ||
                succ(d, q.component, q.index) == p.index);
      };
      const bool shape =
          adjacent(m.positions[0], m.positions[1]) &&
          adjacent(m.positions[2], m.positions[3]) &&
          o1.role == Role::over && o2.role == Role::over &&
          u1.role == Role::under && u2.role == Role::under &&
          o1.crossing_id != o2.crossing_id && o1.sign == -o2.sign &&
          ((u1.crossing_id == o1.crossing_id &&
            u2.crossing_id == o2.crossing_id) ||
           (u1.crossing_id == o2.crossing_id &&
            u2.crossing_id == o1.crossing_id));
      if (!shape) throw MoveError("r2_remove: site does not match");
      std::vector<SitePos> distinct = m.positions;
      std::sort(distinct.begin(), distinct.end(), [](SitePos a, SitePos b) {
        return a.component != b.component ? a.component < b.component
                                          : a.index < b.index;
      });
      if (std::adjacent_find(distinct.begin(), distinct.end()) !=
          distinct.end()) {
        throw MoveError("r2_remove: repeated site position");
      }
      return with_removals(d, m.positions);
    }

    case MoveKind::r3: {
      if (m.positions.size() != 6) throw MoveError("r3: bad site");
      auto ordered = [&](SitePos p, SitePos q) {
        return p.component == q.component &&
               succ(d, p.component, p.index) == q.index;
      };
      if (!ordered(m.positions[0], m.positions[1]) ||
          !ordered(m.positions[2], m.positions[3]) ||
          !ordered(m.positions[4], m.positions[5])) {
        throw MoveError("r3: pairs are not cyclically ordered");
      }
      const AdjPair pa{m.positions[0].component, m.positions[0].index,
                       m.positions[1].index};
      const AdjPair pb{m.positions[2].component, m.positions[2].index,
                       m.positions[3].index};
      const AdjPair pc{m.positions[4].component, m.positions[4].index,
                       m.positions[5].index};
      if (!match_r3(d, pa, pb, pc)) {
        throw MoveError("r3: site does not match the catalog");
      }
      LinkDiagram out = d;
      for (int pair = 0; pair < 3; ++pair) {
        const SitePos p = m.positions[static_cast<std::size_t>(2 * pair)];
        const SitePos q = m.positions[static_cast<std::size_t>(2 * pair + 1)];
        Strand& s = out.components[static_cast<std::size_t>(p.component)];
        std::swap(s[static_cast<std::size_t>(p.index)],
                  s[static_cast<std::size_t>(q.index)]);
      }
      return out;
    }
  }
  throw MoveError("unknown move kind");
}

}  // namespace vlink
