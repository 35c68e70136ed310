#pragma once

#include <span>
#include <string>
#include <vector>

#include "stod/exec.hpp"
#include "stod/matrix.hpp"

namespace stod {

enum class KernelKind { Pairwise, Linear, Poly, Rbf, Sigmoid };

const char* to_string(KernelKind k);
KernelKind kernel_kind_from(const std::string& s);

// gamma_auto resolves gamma from the training embeddings at fit time;
// ridge_auto sets the diagonal regularizer to 1e-3 times the mean
// training-Gram diagonal. The ridge only enters the dual QP, never the
// decision function.
struct KernelConfig {
  KernelKind kind = KernelKind::Pairwise;
  double c = 0.0;
  bool gamma_auto = true;
  double gamma = 1.0;
  int degree = 3;
  bool ridge_auto = true;
  double ridge = 0.0;
  void validate() const;
};

// Single kernel evaluation with a resolved gamma.
double kernel_value(std::span<const double> a, std::span<const double> b,
                    const KernelConfig& config);

// Gram block K[i][j] = k(za_i, zb_j). Entries of a square symmetric block
// (za == zb) are computed once and mirrored, so symmetry is exact.
Matrix kernel_block(const Matrix& za, const Matrix& zb, const KernelConfig& config,
                    Exec exec = Exec::Serial);

// Named aliases: the bespoke pairwise kernel vs the stock baselines.
Matrix pairwise_kernel(const Matrix& za, const Matrix& zb, const KernelConfig& config,
                       Exec exec = Exec::Serial);
Matrix baseline_kernel(const Matrix& za, const Matrix& zb, const KernelConfig& config,
                       Exec exec = Exec::Serial);

// gamma = 1 / (d_z * mean per-dimension population variance); 1 when the
// data is constant.
double resolve_gamma(const Matrix& z_train);

struct OcSvmModel {
  Matrix support;        // rows of Z_train with alpha > 1e-9
  Vector alpha;          // matching dual coefficients
  double rho = 0.0;
  double nu = 0.0;
  KernelConfig kernel;   // gamma and ridge frozen to their resolved values
  bool converged = false;
  long iterations = 0;
  double residual = 0.0;  // final max KKT violation
};

// nu-one-class SVM dual solved by sequential minimal optimization on the
// ridged Gram. Non-convergence at the iteration cap is reported on stderr
// and in the model, not thrown.
OcSvmModel fit_ocsvm(const Matrix& z_train, double nu, KernelConfig config,
                     Exec exec = Exec::Serial, long max_iterations = 0);

// f(x) = sum_j alpha_j k(s_j, x) - rho; attack iff f(x) < 0.
Vector decision_scores(const OcSvmModel& model, const Matrix& z_test, Exec exec = Exec::Serial);

std::vector<int> predict_labels(const Vector& scores);

}  // namespace stod
