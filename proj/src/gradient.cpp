#include "spca/gradient.hpp"

#include <string>

#include "spca/errors.hpp"

namespace spca {

Matrix block_gradient(const SampleBlock& block, const Basis& basis) {
  if (block.dim() != basis.dim())
    throw ContractViolation("block_gradient: block dim " +
                            std::to_string(block.dim()) + " != basis dim " +
                            std::to_string(basis.dim()));
  const Matrix y = block.times(basis.q);  // B x k
  return block.transpose_times(y) / static_cast<double>(block.rows());
}

}  // namespace spca
