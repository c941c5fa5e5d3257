#pragma once

#include "spca/types.hpp"

namespace spca {

struct CenteringStats {
  Vector mean;
  Index count = 0;
};

/// Subtracts per-attribute means in place and returns them. This is a data
/// preparation pre-pass, not part of any single-pass run.
CenteringStats center(RowMatrix& data);

}  // namespace spca
