#pragma once

#include <vector>

#include "stod/matrix.hpp"
#include "stod/stream.hpp"

namespace stod {

// K consecutive records, transposed to one row per sensor. A segment is
// positive if any record inside it is.
struct Segment {
  long start = 0;
  int label = 0;
  Matrix values;  // N x K
};

// Non-overlapping segments of length k; a trailing partial window is dropped.
std::vector<Segment> partition(const SensorStream& stream, int k);

// [S | S' | S''] per row: raw values, first differences, second
// differences. N x K in, N x (3K-3) out; needs k >= 3.
Matrix augment(const Matrix& segment);

// Min-max scaling to [0,1], fitted per sensor and per derivative order
// (raw / first / second differences form separate column groups). Apply
// clips out-of-range values; a group with no spread in the fit data maps
// to a flat 0.5.
struct Scaler {
  int k = 0;
  Matrix lo, hi;  // N x 3

  static Scaler fit(const std::vector<Matrix>& augmented, int k);
  Matrix apply(const Matrix& augmented) const;
  Matrix apply_raw(const Matrix& raw) const;  // group-0 bounds only, N x K
};

}  // namespace stod
