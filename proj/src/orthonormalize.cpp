#include "spca/orthonormalize.hpp"

#include <Eigen/QR>
#include <cmath>
#include <string>

#include "spca/errors.hpp"

namespace spca {

namespace {
// Relative threshold on |R[i,i]| below which a column counts as dependent.
constexpr double kRankTol = 1e-12;
}  // namespace

Basis orthonormalize(const Matrix& m) {
  const Index d = m.rows();
  const Index k = m.cols();
  if (d < 1 || k < 1)
    throw ContractViolation("orthonormalize: empty input");
  if (k > d)
    throw ContractViolation("orthonormalize: more columns than rows (" +
                            std::to_string(k) + " > " + std::to_string(d) + ")");
  if (!m.allFinite())
    throw NumericalFault("orthonormalize: non-finite input");
  const double scale = m.norm();
  if (!(scale > 0.0))
    throw NumericalFault("orthonormalize: rank-deficient input at column 0 (zero matrix)");

  Eigen::HouseholderQR<Matrix> qr(m);
  Matrix q = qr.householderQ() * Matrix::Identity(d, k);
  const Matrix r = qr.matrixQR().topRows(k).triangularView<Eigen::Upper>();
  for (Index i = 0; i < k; ++i) {
    if (std::abs(r(i, i)) < kRankTol * scale)
      throw NumericalFault("orthonormalize: rank-deficient input at column " +
                           std::to_string(i));
    // Fix signs so diag(R) >= 0; makes Q unique and runs reproducible.
    if (r(i, i) < 0.0) q.col(i) = -q.col(i);
  }
  return Basis{std::move(q)};
}

Vector normalize_vector(const Vector& v) {
  if (v.size() < 1) throw ContractViolation("normalize_vector: empty input");
  const double n = v.norm();
  if (!std::isfinite(n))
    throw NumericalFault("normalize_vector: non-finite input");
  if (!(n > 0.0))
    throw NumericalFault("normalize_vector: zero vector");
  return v / n;
}

}  // namespace spca
