#pragma once

#include "spca/basis.hpp"
#include "spca/sample_block.hpp"

namespace spca {

/// G = (1/B) X^T (X W), evaluated as two matrix-panel products. The d x d
/// Gram matrix is never materialized.
Matrix block_gradient(const SampleBlock& block, const Basis& basis);

}  // namespace spca
