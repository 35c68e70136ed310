#pragma once

#include <memory>
#include <string>
#include <vector>

#include "stod/detector.hpp"
#include "stod/exec.hpp"
#include "stod/matrix.hpp"
#include "stod/spatial.hpp"
#include "stod/temporal.hpp"

namespace stod {

struct DetectionReport {
  std::string variant;
  long tp = 0, fp = 0, tn = 0, fn = 0;
  double accuracy = 0.0, precision = 0.0, recall = 0.0, f_measure = 0.0, auc = 0.0;
  double fit_seconds = 0.0, score_seconds = 0.0;
};

// predicted/truth are 0/1; scores feed the AUC with lower = more
// anomalous = positive class.
DetectionReport compute_metrics(const std::vector<int>& predicted, const std::vector<int>& truth,
                                const Vector& scores);

double auc_lower_positive(const Vector& scores, const std::vector<int>& truth);

struct RocPoint {
  double threshold = 0.0, fpr = 0.0, tpr = 0.0;
};

// One point per distinct score; a row counts scores <= threshold as
// predicted attacks.
std::vector<RocPoint> roc_points(const Vector& scores, const std::vector<int>& truth);

// Everything a variant run needs: scaled segments, the adjacency, and the
// already-trained full-pipeline models.
struct EvalDataset {
  std::vector<Matrix> train_raw;  // scaled raw segments, normal only
  std::vector<Matrix> test_raw;   // scaled raw segments
  std::vector<int> test_labels;
  std::shared_ptr<const Matrix> adjacency;
  TemporalModelParams temporal;
  GcnParams spatial;
  // Optional precomputed full-pipeline embeddings; non-empty matrices are
  // used as-is so several variants can share one encoding pass.
  Matrix cached_z_train, cached_z_test;
};

// Full-pipeline (temporal + spatial) pooled embeddings for both splits,
// honoring the dataset cache.
void stod_embeddings(const EvalDataset& ds, Exec exec, Matrix& z_train, Matrix& z_test);

struct VariantConfig {
  KernelConfig kernel;  // pairwise except for the kernel:* variants
  double nu = 0.1;
  long max_iterations = 0;  // 0 = solver default
  SpatialHyper p3_spatial;  // hyperparameters for the STODP3 graph autoencoder
  Exec exec = Exec::Serial;
};

// variant: STOD | STODP1 | STODP2 | STODP3 | kernel:linear | kernel:poly
// | kernel:rbf | kernel:sigmoid. Ablations drop pipeline stages (P1: mean
// raw segment rows; P2: mean temporal rows; P3: raw rows as node
// attributes into a freshly trained graph autoencoder); kernel:* swaps
// the detector kernel. fit_seconds covers detector fitting only (gamma /
// ridge resolution, Gram, solver); representation training is not timed
// here. Detector is refit from scratch for every variant.
DetectionReport run_variant(const std::string& variant, const EvalDataset& ds,
                            const VariantConfig& cfg, Vector* out_scores = nullptr,
                            std::vector<int>* out_predicted = nullptr);

struct FoldTiming {
  long begin = 0, count = 0;
  double fit_seconds = 0.0, score_seconds = 0.0;
};

// Splits the test set into `folds` contiguous folds; per fold, refits the
// STOD detector on the full training embeddings and scores the fold.
std::vector<FoldTiming> time_folds(const EvalDataset& ds, int folds, const VariantConfig& cfg);

// Centers Z, projects onto the top-2 principal directions, writes
// `x,y,label` rows. Needs >= 3 embeddings.
void project_embeddings(const Matrix& z, const std::vector<int>& labels, const std::string& path);

void write_report_csv(const std::vector<DetectionReport>& reports, const std::string& path);
void write_roc_csv(const std::vector<RocPoint>& points, const std::string& path);

}  // namespace stod
