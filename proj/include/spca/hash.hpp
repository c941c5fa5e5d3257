#pragma once

#include <cstddef>
#include <cstdint>
#include <string>

namespace spca {

/// Incremental FNV-1a (64-bit). Used for stream checksums and output digests;
/// not cryptographic.
class Fnv1a {
public:
  Fnv1a& update(const void* data, std::size_t len);
  Fnv1a& update(double v);
  Fnv1a& update(std::uint64_t v);
  std::uint64_t digest() const { return state_; }

private:
  std::uint64_t state_ = 0xcbf29ce484222325ull;
};

std::uint64_t fnv1a_file(const std::string& path);
std::string to_hex(std::uint64_t v);

}  // namespace spca
