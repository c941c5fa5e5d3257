#include "spca/hash.hpp"

#include <cstring>
#include <fstream>
#include <vector>

#include "spca/errors.hpp"

namespace spca {

namespace {
constexpr std::uint64_t kPrime = 1099511628211ull;
}

Fnv1a& Fnv1a::update(const void* data, std::size_t len) {
  const auto* p = static_cast<const unsigned char*>(data);
  for (std::size_t i = 0; i < len; ++i) {
    state_ ^= p[i];
    state_ *= kPrime;
  }
  return *this;
}

Fnv1a& Fnv1a::update(double v) {
  std::uint64_t bits;
  std::memcpy(&bits, &v, sizeof bits);
  return update(bits);
}

Fnv1a& Fnv1a::update(std::uint64_t v) {
  return update(&v, sizeof v);
}

std::uint64_t fnv1a_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("fnv1a_file: cannot open '" + path + "'");
  Fnv1a h;
  std::vector<char> buf(1 << 16);
  while (in) {
    in.read(buf.data(), static_cast<std::streamsize>(buf.size()));
    h.update(buf.data(), static_cast<std::size_t>(in.gcount()));
  }
  return h.digest();
}

std::string to_hex(std::uint64_t v) {
  static const char* digits = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = digits[v & 0xf];
    v >>= 4;
  }
  return out;
}

}  // namespace spca
