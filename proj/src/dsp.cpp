// Copyright (c) 2026 The ufuse authors
// SPDX-License-Identifier: Apache-2.0

#include "ufuse/dsp.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace ufuse {

SegmentationMap SegmentationMap::zeros(int nx, int nz) {
  SegmentationMap m;
  m.nx = nx;
  m.nz = nz;
  m.labels.assign(static_cast<std::size_t>(nx) * nz, 0);
  return m;
}

void SegmentationMap::validate() const {
  check_arg(labels.size() == static_cast<std::size_t>(nx) * nz,
            "segmentation map storage does not match its dimensions");
  for (std::uint8_t v : labels) {
    check_arg(v == 0 || v == 1, "segmentation labels must be 0 or 1");
  }
}

std::vector<double> analytic_envelope(const std::vector<double>& line) {
  const int n = static_cast<int>(line.size());
  check_arg(n >= 2, "envelope needs a line of at least two samples");

  // Direct DFT; line lengths here are small and the result is
  // bit-reproducible.
  std::vector<std::complex<double>> spec(n);
  const double w = -2.0 * M_PI / n;
  for (int k = 0; k < n; ++k) {
    std::complex<double> acc(0.0, 0.0);
    for (int t = 0; t < n; ++t) {
      const long long m = (static_cast<long long>(k) * t) % n;
      acc += line[t] * std::polar(1.0, w * static_cast<double>(m));
    }
    spec[k] = acc;
  }

  // Analytic-signal spectrum: DC and Nyquist unchanged, positive
  // frequencies doubled, negative frequencies zeroed.
  for (int k = 1; k < n; ++k) {
    if (2 * k < n) {
      spec[k] *= 2.0;
    } else if (2 * k > n) {
      spec[k] = 0.0;
    }
  }

  std::vector<double> env(n);
  const double wi = 2.0 * M_PI / n;
  for (int t = 0; t < n; ++t) {
    std::complex<double> acc(0.0, 0.0);
    for (int k = 0; k < n; ++k) {
      if (spec[k] == std::complex<double>(0.0, 0.0)) continue;
      const long long m = (static_cast<long long>(k) * t) % n;
      acc += spec[k] * std::polar(1.0, wi * static_cast<double>(m));
    }
    env[t] = std::abs(acc) / n;
  }
  return env;
}

EnvelopeImage hilbert_envelope(const ModeImage& u, EnvelopeAxis) {
  EnvelopeImage out;
  out.nx = u.nx;
  out.nz = u.nz;
  out.values.assign(u.values.size(), 0.0);

  if (u.mode.view == View::Top) {
    // Depth runs along z: one line per image column.
    check_arg(u.nz >= 2, "envelope along z needs nz >= 2");
    std::vector<double> line(u.nz);
    for (int ix = 0; ix < u.nx; ++ix) {
      for (int iz = 0; iz < u.nz; ++iz) line[iz] = u.at(ix, iz);
      const std::vector<double> env = analytic_envelope(line);
      for (int iz = 0; iz < u.nz; ++iz) {
        out.values[static_cast<std::size_t>(ix) * u.nz + iz] = env[iz];
      }
    }
  } else {
    // Depth runs along x for the right view.
    check_arg(u.nx >= 2, "envelope along x needs nx >= 2");
    std::vector<double> line(u.nx);
    for (int iz = 0; iz < u.nz; ++iz) {
      for (int ix = 0; ix < u.nx; ++ix) line[ix] = u.at(ix, iz);
      const std::vector<double> env = analytic_envelope(line);
      for (int ix = 0; ix < u.nx; ++ix) {
        out.values[static_cast<std::size_t>(ix) * u.nz + iz] = env[ix];
      }
    }
  }
  return out;
}

std::vector<double> minmax_normalize(const std::vector<double>& values) {
  std::vector<double> out(values.size(), 0.0);
  if (values.empty()) return out;
  const auto [lo_it, hi_it] = std::minmax_element(values.begin(), values.end());
  const double lo = *lo_it;
  const double hi = *hi_it;
  if (hi == lo) return out;  // constant image maps to zeros
  const double scale = hi - lo;
  for (std::size_t i = 0; i < values.size(); ++i) {
    out[i] = (values[i] - lo) / scale;
  }
  return out;
}

SegmentationMap threshold(const std::vector<double>& values, int nx, int nz,
                          double theta) {
  check_arg(std::isfinite(theta), "threshold must be finite");
  check_arg(values.size() == static_cast<std::size_t>(nx) * nz,
            "image storage does not match its dimensions");
  SegmentationMap m = SegmentationMap::zeros(nx, nz);
  for (std::size_t i = 0; i < values.size(); ++i) {
    m.labels[i] = values[i] > theta ? 1 : 0;
  }
  return m;
}

SegmentationMap threshold(const EnvelopeImage& img, double theta) {
  return threshold(img.values, img.nx, img.nz, theta);
}

}  // namespace ufuse
