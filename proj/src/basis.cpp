#include "spca/basis.hpp"

#include <string>

#include "spca/errors.hpp"

namespace spca {

double Basis::orthonormality_error() const {
  const Matrix gram = q.transpose() * q;
  return (gram - Matrix::Identity(rank(), rank())).cwiseAbs().maxCoeff();
}

AdaRateState AdaRateState::init(Index k, double b0) {
  if (k < 1) throw ContractViolation("adarate: k must be >= 1");
  if (!(b0 > 0.0))
    throw ContractViolation("adarate: b0 must be positive, got " +
                            std::to_string(b0));
  AdaRateState s;
  s.b = Vector::Constant(k, b0);
  s.b0 = b0;
  return s;
}

}  // namespace spca
