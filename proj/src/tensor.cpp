// Copyright (c) 2026 The ufuse authors
// SPDX-License-Identifier: Apache-2.0

#include "ufuse/tensor.hpp"

#include <cmath>
#include <sstream>

namespace ufuse {

bool Tensor::all_finite() const {
  for (double v : data_) {
    if (!std::isfinite(v)) return false;
  }
  return true;
}

std::string Tensor::shape_str() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < shape_.size(); ++i) {
    if (i) os << ",";
    os << shape_[i];
  }
  os << ")";
  return os.str();
}

}  // namespace ufuse
