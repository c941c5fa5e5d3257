#pragma once

#include "spca/basis.hpp"

namespace spca {

/// Thin QR orthonormalization. Columns of Q are flipped so the corresponding
/// diagonal entry of R is nonnegative, which makes the result deterministic
/// and entrywise comparable across runs. Throws NumericalFault when the input
/// is numerically rank deficient, naming the offending column.
Basis orthonormalize(const Matrix& m);

/// v / ||v||. Throws NumericalFault on a zero or non-finite vector.
Vector normalize_vector(const Vector& v);

}  // namespace spca
