#pragma once

#include <memory>
#include <vector>

#include "stod/matrix.hpp"

namespace stod {

// Topology graph with one temporal-embedding row attached per node. The
// adjacency is time-invariant, so a batch of graphs shares one matrix.
struct SpatioTemporalGraph {
  Matrix u;                         // N x d node attributes
  std::shared_ptr<const Matrix> a;  // N x N adjacency
  long index = 0;
  int label = 0;
};

SpatioTemporalGraph build_stg(Matrix u, std::shared_ptr<const Matrix> a, long index, int label);

std::vector<SpatioTemporalGraph> build_stgs(const std::vector<Matrix>& u,
                                            std::shared_ptr<const Matrix> a,
                                            const std::vector<int>& labels);

}  // namespace stod
