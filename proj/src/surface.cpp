#include "vlink/surface.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <numeric>
#include <stdexcept>

namespace vlink {

namespace {

int slot_of(int sign, Role role, bool outgoing) {
  if (sign > 0) {
    // ccw: over-in, under-in, over-out, under-out
    if (role == Role::over) return outgoing ? 2 : 0;
    return outgoing ? 3 : 1;
  }
  // ccw: over-in, under-out, over-out, under-in
  if (role == Role::over) return outgoing ? 2 : 0;
  return outgoing ? 1 : 3;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }
  void unite(int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); }
};

}  // namespace

RibbonSurface build_ribbon(const LinkDiagram& d) {
  RibbonSurface s;

  // Disks in ascending crossing-id order.
  std::map<int, int> disk_of;
  for (const Strand& strand : d.components) {
    for (const Pass& p : strand) disk_of.emplace(p.crossing_id, 0);
  }
  for (auto& [id, disk] : disk_of) {
    disk = s.disk_count();
    s.disk_crossing_id.push_back(id);
  }
  s.slots.assign(disk_of.size(), {-1, -1, -1, -1});

  for (const Strand& strand : d.components) {
    const std::size_t len = strand.size();
    if (len == 0) {
      ++s.annuli;
      continue;
    }
    for (std::size_t i = 0; i < len; ++i) {
      const Pass& a = strand[i];
      const Pass& b = strand[(i + 1) % len];
      RibbonSurface::Band band;
      band.from = {disk_of[a.crossing_id], slot_of(a.sign, a.role, true)};
      band.to = {disk_of[b.crossing_id], slot_of(b.sign, b.role, false)};
      const int idx = s.band_count();
      s.bands.push_back(band);
      // dart 2*idx leaves `from`; dart 2*idx+1 leaves `to`.
      auto& from_slot = s.slots[static_cast<std::size_t>(band.from.disk)]
                               [static_cast<std::size_t>(band.from.slot)];
      auto& to_slot = s.slots[static_cast<std::size_t>(band.to.disk)]
                             [static_cast<std::size_t>(band.to.slot)];
      if (from_slot != -1 || to_slot != -1) {
        throw std::logic_error("ribbon slot used twice; diagram invalid?");
      }
      from_slot = 2 * idx;
      to_slot = 2 * idx + 1;
    }
  }
  return s;
}

std::vector<std::vector<BandSide>> boundary_walk(const RibbonSurface& s) {
  const std::size_t darts = 2 * static_cast<std::size_t>(s.band_count());
  std::vector<bool> visited(darts, false);
  std::vector<std::vector<BandSide>> circles;

  auto arrival = [&](int dart) -> RibbonSurface::End {
    const RibbonSurface::Band& b =
        s.bands[static_cast<std::size_t>(dart / 2)];
    return (dart % 2 == 0) ? b.to : b.from;
  };

  for (std::size_t start = 0; start < darts; ++start) {
    if (visited[start]) continue;
    std::vector<BandSide> circle;
    int dart = static_cast<int>(start);
    do {
      visited[static_cast<std::size_t>(dart)] = true;
      circle.push_back({dart / 2, dart % 2 == 0});
      RibbonSurface::End end = arrival(dart);
      const int next_slot = (end.slot + 1) % 4;
      dart = s.slots[static_cast<std::size_t>(end.disk)]
                    [static_cast<std::size_t>(next_slot)];
      assert(dart >= 0);
    } while (dart != static_cast<int>(start));
    circles.push_back(std::move(circle));
  }
  for (int i = 0; i < s.annuli; ++i) {
    circles.emplace_back();
    circles.emplace_back();
  }
  return circles;
}

SurfaceReport surface_report(const LinkDiagram& d) {
  const RibbonSurface s = build_ribbon(d);
  const auto circles = boundary_walk(s);

  UnionFind uf(static_cast<std::size_t>(s.disk_count()));
  for (const auto& band : s.bands) uf.unite(band.from.disk, band.to.disk);

  // Piece ids in order of smallest member disk.
  std::vector<int> piece_of_disk(static_cast<std::size_t>(s.disk_count()), -1);
  std::vector<PieceReport> pieces;
  std::vector<int> root_piece(static_cast<std::size_t>(s.disk_count()), -1);
  for (int disk = 0; disk < s.disk_count(); ++disk) {
    const int root = uf.find(disk);
    if (root_piece[static_cast<std::size_t>(root)] == -1) {
      root_piece[static_cast<std::size_t>(root)] =
          static_cast<int>(pieces.size());
      pieces.emplace_back();
    }
    piece_of_disk[static_cast<std::size_t>(disk)] =
        root_piece[static_cast<std::size_t>(root)];
    pieces[static_cast<std::size_t>(
               piece_of_disk[static_cast<std::size_t>(disk)])]
        .chi += 1;
  }
  for (const auto& band : s.bands) {
    pieces[static_cast<std::size_t>(
               piece_of_disk[static_cast<std::size_t>(band.from.disk)])]
        .chi -= 1;
  }
  for (const auto& circle : circles) {
    if (circle.empty()) continue;  // annulus circles handled below
    const int disk = s.bands[static_cast<std::size_t>(circle[0].band)].from.disk;
    pieces[static_cast<std::size_t>(piece_of_disk[static_cast<std::size_t>(disk)])]
        .boundary += 1;
  }
  for (int i = 0; i < s.annuli; ++i) {
    pieces.push_back(PieceReport{0, 2, 0});
  }

  SurfaceReport report;
  for (PieceReport& piece : pieces) {
    const int capped = 2 - piece.chi - piece.boundary;
    assert(capped >= 0 && capped % 2 == 0);
    piece.genus = capped / 2;
    report.chi += piece.chi;
    report.boundary += piece.boundary;
    report.genus += piece.genus;
  }
  report.connected_pieces = static_cast<int>(pieces.size());
  report.pieces = std::move(pieces);
  return report;
}

bool is_classically_realizable(const LinkDiagram& d) {
  return surface_report(d).genus == 0;
}

}  // namespace vlink
