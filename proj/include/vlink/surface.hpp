#pragma once

#include <array>
#include <vector>

#include "vlink/diagram.hpp"

namespace vlink {

/// Disk-band surface of a diagram: one 4-slot disk per crossing with a
/// counterclockwise rotation system, one band per edge between
/// consecutive passes along a component, one annulus per crossingless
/// loop.
///
/// Slots, counterclockwise, at a positive crossing:
///   0 over-in, 1 under-in, 2 over-out, 3 under-out;
/// at a negative crossing:
///   0 over-in, 1 under-out, 2 over-out, 3 under-in.
/// This is the planar rotation of a crossing with the under-strand
/// entering from the right/left according to the sign, so classical
/// codes close up to genus-0 surfaces.
struct RibbonSurface {
  struct End {
    int disk = -1;
    int slot = -1;
  };
  struct Band {
    End from;  // out-slot of the earlier pass
    End to;    // in-slot of the next pass
  };

  std::vector<int> disk_crossing_id;       // disk -> crossing id
  std::vector<std::array<int, 4>> slots;   // disk -> slot -> dart leaving it
  std::vector<Band> bands;
  int annuli = 0;

  int disk_count() const { return static_cast<int>(disk_crossing_id.size()); }
  int band_count() const { return static_cast<int>(bands.size()); }
  int euler_characteristic() const { return disk_count() - band_count(); }
};

/// One side of a band inside a boundary walk; `forward` walks from the
/// band's `from` end to its `to` end.
struct BandSide {
  int band = -1;
  bool forward = true;

  friend bool operator==(const BandSide&, const BandSide&) = default;
};

struct PieceReport {
  int chi = 0;
  int boundary = 0;
  int genus = 0;
};

struct SurfaceReport {
  int chi = 0;
  int boundary = 0;
  int genus = 0;  // canonical genus: capped boundary circles, summed over pieces
  int connected_pieces = 0;
  std::vector<PieceReport> pieces;
};

RibbonSurface build_ribbon(const LinkDiagram& d);

/// Partitions band sides into boundary circles. Walk rule: after
/// arriving at a disk slot, leave along the next slot counterclockwise.
/// Each annulus contributes two circles, listed last as empty orbits.
std::vector<std::vector<BandSide>> boundary_walk(const RibbonSurface& s);

SurfaceReport surface_report(const LinkDiagram& d);

/// True iff every connected piece of the canonical surface has genus 0,
/// i.e. the code is drawable in the plane or sphere.
bool is_classically_realizable(const LinkDiagram& d);

}  // namespace vlink
