// Copyright (c) 2026 The ufuse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "ufuse/error.hpp"

namespace ufuse {

/// 2D position in meters. `x` runs horizontally, `z` runs downward into the
/// medium (depth under the top array).
struct Vec2 {
  double x = 0.0;
  double z = 0.0;
};

double distance(const Vec2& a, const Vec2& b);

/// Regular imaging grid of square pixels. Pixel center (ix, iz) sits at
/// origin + (ix*dx, iz*dx).
struct Grid {
  int nx = 0;
  int nz = 0;
  double dx = 0.0;
  Vec2 origin;

  Vec2 pixel_center(int ix, int iz) const {
    return {origin.x + ix * dx, origin.z + iz * dx};
  }
  int n_pixels() const { return nx * nz; }
  // Flat pixel index, row-major with z fastest; matches image layout.
  int pixel_index(int ix, int iz) const { return ix * nz + iz; }

  void validate() const;
};

enum class View { Top, Right };

const char* view_name(View v);

struct TransducerArray {
  View view = View::Top;
  int n_elem = 0;
  double pitch = 0.0;
  std::vector<Vec2> positions;
};

/// Reflective boundary line: Bottom is the horizontal line z = coord,
/// Left the vertical line x = coord.
struct Boundary {
  enum class Kind { Bottom, Left };
  Kind kind = Kind::Bottom;
  double coord = 0.0;

  static Boundary bottom(double z_b) { return {Kind::Bottom, z_b}; }
  static Boundary left(double x_b) { return {Kind::Left, x_b}; }
};

/// One insonification mode: a view plus either the direct path or a single
/// bounce off a reflective boundary on the transmit leg.
struct ModeSpec {
  View view = View::Top;
  std::optional<Boundary> bounce;  // empty = direct path

  bool is_direct() const { return !bounce.has_value(); }
  static ModeSpec direct(View v) { return {v, std::nullopt}; }
  static ModeSpec bounced(View v, Boundary b) { return {v, b}; }
};

/// Canonical mode order used throughout: top0, top1, right0, right1.
enum class ModeId : int { Top0 = 0, Top1 = 1, Right0 = 2, Right1 = 3 };

constexpr int kNumModes = 4;

const char* mode_name(ModeId id);
View mode_view(ModeId id);
bool mode_is_bounce(ModeId id);

/// Travel times tau(s, r, p) in seconds for one mode, stored as a dense
/// (n_s, n_r, nx*nz) table. Carries the grid dims so DAS can shape images.
struct TravelTimeTable {
  ModeSpec mode;
  int n_s = 0;
  int n_r = 0;
  int nx = 0;
  int nz = 0;
  double c = 0.0;
  std::vector<double> times;

  double at(int s, int r, int p) const {
    return times[(static_cast<std::size_t>(s) * n_r + r) * (nx * nz) + p];
  }
  int n_pixels() const { return nx * nz; }
};

/// Places a linear array against the grid. Top arrays are centered
/// horizontally at z = origin.z - standoff; Right arrays are centered
/// vertically at x = origin.x + (nx-1)*dx + standoff. Elements are ordered
/// by increasing coordinate along the array axis.
TransducerArray build_array(View view, int n_elem, double pitch,
                            const Grid& grid, double standoff);

/// Mirror image of a point across a boundary line.
Vec2 mirror_position(const Vec2& pos, const Boundary& boundary);

/// Travel-time table for every (source, receiver, pixel) triple.
/// Direct: tau = (|x_s - p| + |p - x_r|) / c. Bounce: the transmit leg is
/// replaced by the path from the mirrored source, tau = (|mirror(x_s) - p|
/// + |p - x_r|) / c.
TravelTimeTable compute_travel_times(const TransducerArray& array,
                                     const Grid& grid, const ModeSpec& mode,
                                     double c);

}  // namespace ufuse
