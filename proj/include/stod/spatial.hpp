#pragma once

#include <cstdint>
#include <vector>

#include "stod/exec.hpp"
#include "stod/matrix.hpp"
#include "stod/stg.hpp"

namespace stod {

// Two-layer variational graph autoencoder: shared relu layer, then mean
// and log-variance heads; inner-product decoder.
struct GcnParams {
  int d_in = 0, d_h = 0, d_z = 0;
  Matrix w0;       // d_in x d_h
  Matrix w_mu;     // d_h x d_z
  Matrix w_sigma;  // d_h x d_z
  void validate() const;
};

GcnParams init_gcn_params(int d_in, int d_h, int d_z, std::uint64_t seed);

// D^{-1/2} (A + I) D^{-1/2} with self-loop-inclusive degrees.
Matrix normalize_adjacency(const Matrix& a);

enum class Activation { Relu, Identity };

// activation(a_norm * x * w)
Matrix gcn_layer(const Matrix& x, const Matrix& a_norm, const Matrix& w, Activation act,
                 Exec exec = Exec::Serial);

struct GraphEmbedding {
  Matrix mu, logvar;  // N x d_z
  Matrix z_node;      // N x d_z
  Vector z_graph;     // d_z, column mean of z_node
};

// eps = nullptr means inference mode (z_node = mu); otherwise z_node =
// mu + exp(logvar/2) .* eps with eps the caller's N x d_z noise.
GraphEmbedding encode_graph(const SpatioTemporalGraph& stg, const GcnParams& params,
                            const Matrix* eps = nullptr, Exec exec = Exec::Serial);

// sigmoid(z_node * z_node^T); exactly symmetric, entries in (0,1).
Matrix decode_graph(const Matrix& z_node);

// kl_weight * KL(q || N(0,I)) + rec_weight * sum((A + I - decoded)^2).
double vgae_loss(const SpatioTemporalGraph& stg, const GraphEmbedding& emb, double kl_weight = 1.0,
                 double rec_weight = 1.0);

struct SpatialGrads {
  Matrix w0, w_mu, w_sigma;
  void add(const SpatialGrads& o);
  void scale(double s);
};

SpatialGrads spatial_gradients(const GcnParams& params, const SpatioTemporalGraph& stg,
                               const Matrix* eps, double kl_weight, double rec_weight);

struct SpatialHyper {
  int d_h = 16;
  int d_z = 8;
  int epochs = 60;
  double learning_rate = 1e-3;
  int batch = 16;
  double kl_weight = 1.0;
  double rec_weight = 1.0;
  std::uint64_t seed = 1;
};

struct SpatialTrainResult {
  GcnParams params;
  double initial_loss = 0.0;
  std::vector<double> epoch_loss;  // mean per-graph loss per epoch
};

SpatialTrainResult train_spatial(const std::vector<SpatioTemporalGraph>& stgs,
                                 const SpatialHyper& hyper, Exec exec = Exec::Serial);

// Inference-mode pooled embeddings, one row per graph: m x d_z.
Matrix embed_graphs(const std::vector<SpatioTemporalGraph>& stgs, const GcnParams& params,
                    Exec exec = Exec::Serial);

}  // namespace stod
