#pragma once

#include "spca/types.hpp"

namespace spca {

/// A d x k column-orthonormal subspace estimate.
struct Basis {
  Matrix q;

  Index dim() const { return q.rows(); }
  Index rank() const { return q.cols(); }

  /// max entrywise |q^T q - I|.
  double orthonormality_error() const;
};

/// Per-column adaptive step-size accumulators: eta[i] = 1 / b[i].
struct AdaRateState {
  Vector b;
  double b0 = 1e-5;

  static AdaRateState init(Index k, double b0);
};

}  // namespace spca
