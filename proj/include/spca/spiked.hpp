#pragma once

#include <cstdint>
#include <memory>

#include "spca/sample_stream.hpp"

namespace spca {

/// Spiked covariance model: samples x = A0 diag(w) z + sigma * eps with
/// z ~ N(0, I_k_true) and eps ~ N(0, I_d), so that
/// Cov(x) = A0 diag(w)^2 A0^T + sigma^2 I. Sampling goes through this factor
/// form; the d x d covariance is never formed.
struct SpikedModel {
  Index d = 0;
  Index k_true = 0;
  double sigma = 0.0;
  std::uint64_t seed = 0;
  Matrix a0;  // d x k_true, orthonormal columns
  Vector w;   // nonincreasing weights, w[0] == 1, all > 0

  /// A0 is the orthonormalization of a seeded Gaussian matrix; w is drawn
  /// U(0,1), sorted descending and scaled so w[0] == 1.
  static SpikedModel make(Index d, Index k_true, double sigma,
                          std::uint64_t seed);
};

/// Emits n samples in blocks of `batch` (last block may be smaller). Streams
/// built from the same model are identical; block boundaries do not affect
/// the sample sequence.
std::unique_ptr<SampleStream> gen_spiked(const SpikedModel& model, Index n,
                                         Index batch);

}  // namespace spca
