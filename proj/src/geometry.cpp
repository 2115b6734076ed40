// Copyright (c) 2026 The ufuse authors
// SPDX-License-Identifier: Apache-2.0

#include "ufuse/geometry.hpp"

#include <cmath>
#include <sstream>

namespace ufuse {

double distance(const Vec2& a, const Vec2& b) {
  return std::hypot(a.x - b.x, a.z - b.z);
}

void Grid::validate() const {
  check_arg(nx >= 1 && nz >= 1, "grid must have nx >= 1 and nz >= 1");
  check_arg(dx > 0.0, "grid spacing dx must be positive");
}

const char* view_name(View v) { return v == View::Top ? "top" : "right"; }

const char* mode_name(ModeId id) {
  switch (id) {
    case ModeId::Top0:
      return "top0";
    case ModeId::Top1:
      return "top1";
    case ModeId::Right0:
      return "right0";
    case ModeId::Right1:
      return "right1";
  }
  return "?";
}

View mode_view(ModeId id) {
  return (id == ModeId::Top0 || id == ModeId::Top1) ? View::Top : View::Right;
}

bool mode_is_bounce(ModeId id) {
  return id == ModeId::Top1 || id == ModeId::Right1;
}

TransducerArray build_array(View view, int n_elem, double pitch,
                            const Grid& grid, double standoff) {
  grid.validate();
  check_arg(n_elem >= 1, "array needs at least one element");
  check_arg(pitch > 0.0, "element pitch must be positive");

  const double axis_extent =
      (view == View::Top ? grid.nx : grid.nz) * grid.dx;
  if (n_elem * pitch > 2.0 * axis_extent) {
    std::ostringstream os;
    os << "array span " << n_elem * pitch
       << " m exceeds twice the grid extent " << axis_extent
       << " m along the array axis";
    throw Error(ErrorKind::InvalidArgument, os.str());
  }

  TransducerArray array;
  array.view = view;
  array.n_elem = n_elem;
  array.pitch = pitch;
  array.positions.resize(n_elem);

  const double offset0 = -0.5 * (n_elem - 1) * pitch;
  if (view == View::Top) {
    const double center_x = grid.origin.x + 0.5 * (grid.nx - 1) * grid.dx;
    const double z = grid.origin.z - standoff;
    for (int e = 0; e < n_elem; ++e) {
      array.positions[e] = {center_x + offset0 + e * pitch, z};
    }
  } else {
    const double center_z = grid.origin.z + 0.5 * (grid.nz - 1) * grid.dx;
    const double x = grid.origin.x + (grid.nx - 1) * grid.dx + standoff;
    for (int e = 0; e < n_elem; ++e) {
      array.positions[e] = {x, center_z + offset0 + e * pitch};
    }
  }
  return array;
}

Vec2 mirror_position(const Vec2& pos, const Boundary& boundary) {
  if (boundary.kind == Boundary::Kind::Bottom) {
    return {pos.x, 2.0 * boundary.coord - pos.z};
  }
  return {2.0 * boundary.coord - pos.x, pos.z};
}

TravelTimeTable compute_travel_times(const TransducerArray& array,
                                     const Grid& grid, const ModeSpec& mode,
                                     double c) {
  grid.validate();
  check_arg(c > 0.0, "sound speed must be positive");
  check_arg(mode.view == array.view,
            "mode view does not match the transducer array view");
  check_arg(array.n_elem >= 1 && !array.positions.empty(),
            "transducer array has no elements");

  const int n_elem = array.n_elem;
  const int n_pix = grid.n_pixels();

  // Per-element pixel distances: direct for the receive leg, mirrored for
  // the transmit leg of bounce modes. Computing tau as (d_tx + d_rx)/c makes
  // direct tables exchange-symmetric by construction.
  std::vector<double> d_rx(static_cast<std::size_t>(n_elem) * n_pix);
  std::vector<double> d_tx;

#pragma omp parallel for schedule(static)
  for (int e = 0; e < n_elem; ++e) {
    const Vec2 pos = array.positions[e];
    double* row = d_rx.data() + static_cast<std::size_t>(e) * n_pix;
    for (int ix = 0; ix < grid.nx; ++ix) {
      for (int iz = 0; iz < grid.nz; ++iz) {
        row[grid.pixel_index(ix, iz)] = distance(pos, grid.pixel_center(ix, iz));
      }
    }
  }

  if (mode.is_direct()) {
    d_tx = d_rx;
  } else {
    d_tx.resize(d_rx.size());
#pragma omp parallel for schedule(static)
    for (int e = 0; e < n_elem; ++e) {
      const Vec2 pos = mirror_position(array.positions[e], *mode.bounce);
      double* row = d_tx.data() + static_cast<std::size_t>(e) * n_pix;
      for (int ix = 0; ix < grid.nx; ++ix) {
        for (int iz = 0; iz < grid.nz; ++iz) {
          row[grid.pixel_index(ix, iz)] =
              distance(pos, grid.pixel_center(ix, iz));
        }
      }
    }
  }

  TravelTimeTable table;
  table.mode = mode;
  table.n_s = n_elem;
  table.n_r = n_elem;
  table.nx = grid.nx;
  table.nz = grid.nz;
  table.c = c;
  table.times.resize(static_cast<std::size_t>(n_elem) * n_elem * n_pix);

#pragma omp parallel for schedule(static)
  for (int s = 0; s < n_elem; ++s) {
    for (int r = 0; r < n_elem; ++r) {
      const double* ts = d_tx.data() + static_cast<std::size_t>(s) * n_pix;
      const double* tr = d_rx.data() + static_cast<std::size_t>(r) * n_pix;
      double* out = table.times.data() +
                    (static_cast<std::size_t>(s) * n_elem + r) * n_pix;
      for (int p = 0; p < n_pix; ++p) {
        out[p] = (ts[p] + tr[p]) / c;
      }
    }
  }
  return table;
}

}  // namespace ufuse
