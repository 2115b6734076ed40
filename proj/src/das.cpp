// Copyright (c) 2026 The ufuse authors
// SPDX-License-Identifier: Apache-2.0

#include "ufuse/das.hpp"

#include <cmath>
#include <random>
#include <sstream>

namespace ufuse {

DataVolume DataVolume::zeros(int n_t, int n_s, int n_r, double fs, double t0) {
  DataVolume f;
  f.n_t = n_t;
  f.n_s = n_s;
  f.n_r = n_r;
  f.fs = fs;
  f.t0 = t0;
  f.values.assign(static_cast<std::size_t>(n_t) * n_s * n_r, 0.0);
  return f;
}

void DataVolume::validate() const {
  check_arg(n_t >= 1 && n_s >= 1 && n_r >= 1,
            "data volume dimensions must be positive");
  check_arg(fs > 0.0, "sampling frequency must be positive");
  check_arg(values.size() == static_cast<std::size_t>(n_t) * n_s * n_r,
            "data volume storage does not match its dimensions");
}

ModeImage ModeImage::zeros(int nx, int nz, const ModeSpec& mode) {
  ModeImage u;
  u.mode = mode;
  u.nx = nx;
  u.nz = nz;
  u.values.assign(static_cast<std::size_t>(nx) * nz, 0.0);
  return u;
}

const char* interp_name(InterpKind k) {
  return k == InterpKind::Nearest ? "nearest" : "linear";
}

namespace {

void check_dims(const TravelTimeTable& tt, int n_s, int n_r) {
  if (tt.n_s != n_s || tt.n_r != n_r) {
    std::ostringstream os;
    os << "travel-time table is (" << tt.n_s << "," << tt.n_r
       << ") elements but the data volume is (" << n_s << "," << n_r << ")";
    throw Error(ErrorKind::InvalidArgument, os.str());
  }
  check_arg(tt.nx >= 1 && tt.nz >= 1, "travel-time table has an empty grid");
  check_arg(tt.times.size() == static_cast<std::size_t>(tt.n_s) * tt.n_r *
                                   tt.n_pixels(),
            "travel-time table storage does not match its dimensions");
}

}  // namespace

ModeImage das_forward(const DataVolume& f, const TravelTimeTable& tt,
                      InterpKind interp) {
  f.validate();
  check_dims(tt, f.n_s, f.n_r);

  const int n_pix = tt.n_pixels();
  const int n_t = f.n_t;
  const double fs = f.fs;
  const double t0 = f.t0;

  ModeImage u = ModeImage::zeros(tt.nx, tt.nz, tt.mode);

#pragma omp parallel for schedule(static)
  for (int p = 0; p < n_pix; ++p) {
    double acc = 0.0;
    for (int s = 0; s < f.n_s; ++s) {
      for (int r = 0; r < f.n_r; ++r) {
        const double a = (tt.at(s, r, p) - t0) * fs;
        if (interp == InterpKind::Nearest) {
          const long long k = std::llround(a);
          if (k >= 0 && k < n_t) {
            acc += f.at(static_cast<int>(k), s, r);
          }
        } else {
          const double kf = std::floor(a);
          const long long k0 = static_cast<long long>(kf);
          const double alpha = a - kf;
          if (k0 >= 0 && k0 < n_t) {
            acc += (1.0 - alpha) * f.at(static_cast<int>(k0), s, r);
          }
          if (k0 + 1 >= 0 && k0 + 1 < n_t) {
            acc += alpha * f.at(static_cast<int>(k0 + 1), s, r);
          }
        }
      }
    }
    u.values[p] = acc;
  }
  return u;
}

DataVolume das_adjoint(const ModeImage& u, const TravelTimeTable& tt,
                       InterpKind interp, int n_t, double fs, double t0) {
  check_arg(n_t >= 1, "adjoint output needs at least one time sample");
  check_arg(fs > 0.0, "sampling frequency must be positive");
  check_arg(u.nx == tt.nx && u.nz == tt.nz,
            "image dimensions do not match the travel-time table grid");
  check_dims(tt, tt.n_s, tt.n_r);

  const int n_pix = tt.n_pixels();
  DataVolume f = DataVolume::zeros(n_t, tt.n_s, tt.n_r, fs, t0);

  // Parallel over (s, r): each worker owns disjoint traces and scatters
  // pixels in a fixed order, so results do not depend on the schedule.
#pragma omp parallel for collapse(2) schedule(static)
  for (int s = 0; s < tt.n_s; ++s) {
    for (int r = 0; r < tt.n_r; ++r) {
      for (int p = 0; p < n_pix; ++p) {
        const double a = (tt.at(s, r, p) - t0) * fs;
        const double up = u.values[p];
        if (interp == InterpKind::Nearest) {
          const long long k = std::llround(a);
          if (k >= 0 && k < n_t) {
            f.at(static_cast<int>(k), s, r) += up;
          }
        } else {
          const double kf = std::floor(a);
          const long long k0 = static_cast<long long>(kf);
          const double alpha = a - kf;
          if (k0 >= 0 && k0 < n_t) {
            f.at(static_cast<int>(k0), s, r) += (1.0 - alpha) * up;
          }
          if (k0 + 1 >= 0 && k0 + 1 < n_t) {
            f.at(static_cast<int>(k0 + 1), s, r) += alpha * up;
          }
        }
      }
    }
  }
  return f;
}

double dot_product_check(const TravelTimeTable& tt, InterpKind interp, int n_t,
                         double fs, double t0, std::uint64_t seed) {
  check_arg(tt.n_pixels() >= 1, "dot-product check needs a non-empty image");
  check_arg(n_t >= 1 && tt.n_s >= 1 && tt.n_r >= 1,
            "dot-product check needs non-empty volume dimensions");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> dist(-1.0, 1.0);

  DataVolume f = DataVolume::zeros(n_t, tt.n_s, tt.n_r, fs, t0);
  for (double& v : f.values) v = dist(rng);
  ModeImage u = ModeImage::zeros(tt.nx, tt.nz, tt.mode);
  for (double& v : u.values) v = dist(rng);

  const ModeImage bf = das_forward(f, tt, interp);
  const DataVolume btu = das_adjoint(u, tt, interp, n_t, fs, t0);

  double lhs = 0.0, rhs = 0.0, norm_bf = 0.0, norm_u = 0.0;
  for (std::size_t i = 0; i < bf.values.size(); ++i) {
    lhs += bf.values[i] * u.values[i];
    norm_bf += bf.values[i] * bf.values[i];
    norm_u += u.values[i] * u.values[i];
  }
  for (std::size_t i = 0; i < f.values.size(); ++i) {
    rhs += f.values[i] * btu.values[i];
  }
  return std::abs(lhs - rhs) /
         (std::sqrt(norm_bf) * std::sqrt(norm_u) + 1e-30);
}

}  // namespace ufuse
