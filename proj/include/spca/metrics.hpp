#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "spca/basis.hpp"
#include "spca/dataset.hpp"
#include "spca/run.hpp"

namespace spca {

/// Checkpointed explained-variance trajectory of one run.
struct EvCurve {
  std::string dataset;
  std::string algorithm;
  std::vector<std::pair<std::int64_t, double>> points;  // (samples_seen, ev)
};

/// ||X W||_F^2 / ||X||_F^2, accumulated blockwise. This evaluation pass may
/// re-read the data; only the estimators are single-pass.
double explained_variance(const DataSet& data, const Basis& basis);

enum class TopkMethod {
  Auto,            // DenseEig for d <= 4000, OrthoIteration above
  DenseEig,        // form the d x d Gram matrix, dense symmetric eigensolver
  OrthoIteration,  // orthogonal iteration with X-products, no Gram matrix
};

/// Top-k eigenvectors of the sample covariance (1/n) X^T X — the offline
/// reference every curve is compared against.
Basis offline_topk(const DataSet& data, Index k,
                   TopkMethod method = TopkMethod::Auto);

/// Explained variance at every checkpoint of a run, against the full dataset.
EvCurve eval_curve(const DataSet& data, const RunResult& result,
                   const std::string& dataset_label = "");

}  // namespace spca
