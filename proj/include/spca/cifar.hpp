#pragma once

#include <string>
#include <vector>

#include "spca/types.hpp"

namespace spca {

/// Loads CIFAR-10 binary batches (3073-byte records: 1 label byte + 3 color
/// planes of 1024 pixels). Each record becomes one grayscale row of dimension
/// 1024, the per-pixel average of the three planes on the raw 0..255 scale.
/// Labels are discarded.
RowMatrix load_cifar(const std::vector<std::string>& batch_files);

}  // namespace spca
