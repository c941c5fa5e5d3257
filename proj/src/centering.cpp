#include "spca/centering.hpp"

#include "spca/errors.hpp"

namespace spca {

CenteringStats center(RowMatrix& data) {
  if (data.rows() < 1)
    throw ContractViolation("center: need at least one sample");
  CenteringStats stats;
  stats.mean = data.colwise().mean().transpose();
  stats.count = data.rows();
  data.rowwise() -= stats.mean.transpose();
  return stats;
}

}  // namespace spca
