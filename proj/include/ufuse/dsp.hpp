// Copyright (c) 2026 The ufuse authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "ufuse/das.hpp"
#include "ufuse/geometry.hpp"

namespace ufuse {

/// Non-negative envelope image, same layout as ModeImage.
struct EnvelopeImage {
  int nx = 0;
  int nz = 0;
  std::vector<double> values;

  double at(int ix, int iz) const {
    return values[static_cast<std::size_t>(ix) * nz + iz];
  }
};

/// Per-pixel class labels in {0, 1}, same layout as ModeImage.
struct SegmentationMap {
  int nx = 0;
  int nz = 0;
  std::vector<std::uint8_t> labels;

  static SegmentationMap zeros(int nx, int nz);

  std::uint8_t& at(int ix, int iz) {
    return labels[static_cast<std::size_t>(ix) * nz + iz];
  }
  std::uint8_t at(int ix, int iz) const {
    return labels[static_cast<std::size_t>(ix) * nz + iz];
  }
  std::size_t size() const { return labels.size(); }
  void validate() const;
};

enum class EnvelopeAxis { AlongDepth };

/// Magnitude of the analytic signal of a 1-D line, built in the frequency
/// domain: keep DC and Nyquist, double positive frequencies, zero negative
/// ones. DFT length equals the line length.
std::vector<double> analytic_envelope(const std::vector<double>& line);

/// Envelope of a mode image, taken line by line along the depth axis of the
/// generating view: z for Top images, x for Right images.
EnvelopeImage hilbert_envelope(const ModeImage& u,
                               EnvelopeAxis axis = EnvelopeAxis::AlongDepth);

/// Affine map onto [0, 1]; a constant input maps to all zeros.
std::vector<double> minmax_normalize(const std::vector<double>& values);

/// label = 1 iff value > theta (strict).
SegmentationMap threshold(const EnvelopeImage& img, double theta);
SegmentationMap threshold(const std::vector<double>& values, int nx, int nz,
                          double theta);

}  // namespace ufuse
