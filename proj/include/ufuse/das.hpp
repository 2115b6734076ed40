// Copyright (c) 2026 The ufuse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "ufuse/geometry.hpp"

namespace ufuse {

/// Full-matrix-capture data volume, shape (n_t, n_s, n_r) row-major with
/// the receiver index fastest.
struct DataVolume {
  int n_t = 0;
  int n_s = 0;
  int n_r = 0;
  double fs = 0.0;  // sampling frequency, Hz
  double t0 = 0.0;  // time of sample 0, seconds
  std::vector<double> values;

  static DataVolume zeros(int n_t, int n_s, int n_r, double fs,
                          double t0 = 0.0);

  double& at(int t, int s, int r) {
    return values[(static_cast<std::size_t>(t) * n_s + s) * n_r + r];
  }
  double at(int t, int s, int r) const {
    return values[(static_cast<std::size_t>(t) * n_s + s) * n_r + r];
  }
  std::size_t size() const { return values.size(); }
  void validate() const;
};

/// Beamformed image for one mode, shape (nx, nz) row-major (z fastest),
/// flat index matching Grid::pixel_index.
struct ModeImage {
  ModeSpec mode;
  int nx = 0;
  int nz = 0;
  std::vector<double> values;

  static ModeImage zeros(int nx, int nz, const ModeSpec& mode = {});

  double& at(int ix, int iz) {
    return values[static_cast<std::size_t>(ix) * nz + iz];
  }
  double at(int ix, int iz) const {
    return values[static_cast<std::size_t>(ix) * nz + iz];
  }
  std::size_t size() const { return values.size(); }
};

/// How recorded samples are looked up at a fractional time index.
/// Nearest rounds to one sample; Linear blends the two neighbors and is the
/// differentiable default inside the network.
enum class InterpKind { Nearest, Linear };

const char* interp_name(InterpKind k);

/// DAS operator B: u_p = sum_s sum_r f(k(tau(s,r,p)), s, r). Out-of-window
/// time indices contribute zero.
ModeImage das_forward(const DataVolume& f, const TravelTimeTable& tt,
                      InterpKind interp);

/// Exact transpose of das_forward as a linear map; scatters image pixels
/// into the data volume with the same index/weight rule as the forward
/// gather.
DataVolume das_adjoint(const ModeImage& u, const TravelTimeTable& tt,
                       InterpKind interp, int n_t, double fs, double t0 = 0.0);

/// Relative residual |<Bf,u> - <f,B'u>| / (|Bf|*|u| + eps) for seeded random
/// f and u. Deterministic for a fixed seed.
double dot_product_check(const TravelTimeTable& tt, InterpKind interp, int n_t,
                         double fs, double t0, std::uint64_t seed);

}  // namespace ufuse
