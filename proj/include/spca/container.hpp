#pragma once

#include <string>

#include "spca/types.hpp"

namespace spca {

/// Simple binary container for dense datasets, little-endian:
///   magic "SPCA" | version u32 | n u64 | d u64 | dtype u32 | payload
/// dtype 1 means f64; the payload is n*d doubles, row-major.
void write_spca_file(const std::string& path, const RowMatrix& data);
RowMatrix read_spca_file(const std::string& path);

}  // namespace spca
