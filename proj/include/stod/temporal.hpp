#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "stod/exec.hpp"
#include "stod/matrix.hpp"

namespace stod {

// Gated recurrent memory cell. Gate pre-activations are W·[x; h_prev] + b
// with rows packed in [input, forget, candidate, output] order, each
// block `hidden` wide.
struct LstmCell {
  int input = 0;
  int hidden = 0;
  Matrix w;  // 4*hidden x (input + hidden)
  Vector b;  // 4*hidden
};

// Per-sensor seq2seq autoencoder with shared weights. The encoder reads a
// sensor's scaled raw series one value at a time; the first hidden state
// is sigmoid(w_e*v1 + b_e) elementwise and the cell state starts at zero.
// The decoder starts from the encoder's final hidden state (zero cell
// state), is conditioned on the sensor's embedding row at every step, and
// emits sigmoid outputs reconstructing the scaled augmented series.
struct TemporalModelParams {
  int d_t = 0;
  int k = 0;
  bool concat_states = false;  // embedding row = all K hidden states instead of the last
  Vector w_e, b_e;             // d_t each: first-state map
  LstmCell enc;                // input dim 1
  LstmCell dec;                // input dim 1 + row_dim()
  Vector w_d;                  // d_t: output map
  double b_d = 0.0;

  int row_dim() const { return concat_states ? k * d_t : d_t; }
  void validate() const;
};

TemporalModelParams init_temporal_params(int d_t, int k, bool concat_states, std::uint64_t seed);

// One embedding row per sensor: N x row_dim.
Matrix encode_segment(const Matrix& scaled_raw, const TemporalModelParams& params);

// Batch form; segments are independent, so the parallel path is bitwise
// identical to the serial one.
std::vector<Matrix> encode_segments(const std::vector<Matrix>& scaled_raw,
                                    const TemporalModelParams& params, Exec exec = Exec::Serial);

// Unrolls the decoder for `steps` outputs; all outputs lie in (0,1).
Vector decode_embedding(std::span<const double> u_row, const TemporalModelParams& params, int steps);

// Sum of squared reconstruction error over all sensors and all 3K-3
// target positions of one segment.
double reconstruction_loss(const TemporalModelParams& params, const Matrix& scaled_raw,
                           const Matrix& scaled_aug);

// Gradient tensors mirror TemporalModelParams.
struct TemporalGrads {
  Vector w_e, b_e;
  Matrix enc_w;
  Vector enc_b;
  Matrix dec_w;
  Vector dec_b;
  Vector w_d;
  double b_d = 0.0;

  void add(const TemporalGrads& o);
  void scale(double s);
};

TemporalGrads reconstruction_gradients(const TemporalModelParams& params, const Matrix& scaled_raw,
                                       const Matrix& scaled_aug);

struct TemporalHyper {
  int d_t = 8;
  int epochs = 30;
  double learning_rate = 1e-3;
  int batch = 32;
  bool concat_states = false;
  std::uint64_t seed = 1;
};

struct TemporalTrainResult {
  TemporalModelParams params;
  double initial_loss = 0.0;          // mean per-sample loss before any update
  std::vector<double> epoch_loss;     // mean per-sample loss seen during each epoch
};

// Trains on (segment, sensor) scalar-series samples drawn from aligned
// raw/augmented scaled segments. Deterministic for a given seed; the
// parallel path accumulates per-sample gradients in a fixed order and is
// bitwise identical to the serial one.
TemporalTrainResult train_temporal(const std::vector<Matrix>& scaled_raw,
                                   const std::vector<Matrix>& scaled_aug,
                                   const TemporalHyper& hyper, Exec exec = Exec::Serial);

}  // namespace stod
