#include "spca/cifar.hpp"

#include <cstdint>
#include <fstream>
#include <string>
#include <vector>

#include "spca/errors.hpp"

namespace spca {

namespace {
constexpr Index kPixels = 1024;                 // 32 x 32
constexpr Index kRecordBytes = 1 + 3 * kPixels;  // label + R, G, B planes
}  // namespace

RowMatrix load_cifar(const std::vector<std::string>& batch_files) {
  if (batch_files.empty())
    throw ContractViolation("load_cifar: no batch files given");

  std::vector<std::pair<std::ifstream, Index>> inputs;
  Index total = 0;
  for (const auto& path : batch_files) {
    std::ifstream in(path, std::ios::binary | std::ios::ate);
    if (!in) throw DataError("cifar: cannot open '" + path + "'");
    const auto size = static_cast<std::int64_t>(in.tellg());
    if (size % kRecordBytes != 0)
      throw DataError("cifar: '" + path + "' has size " +
                      std::to_string(size) + ", not a multiple of " +
                      std::to_string(kRecordBytes));
    in.seekg(0);
    const Index records = size / kRecordBytes;
    total += records;
    inputs.emplace_back(std::move(in), records);
  }

  RowMatrix out(total, kPixels);
  std::vector<unsigned char> buf(kRecordBytes);
  Index row = 0;
  for (auto& [in, records] : inputs) {
    for (Index r = 0; r < records; ++r, ++row) {
      if (!in.read(reinterpret_cast<char*>(buf.data()), kRecordBytes))
        throw DataError("cifar: short read");
      // buf[0] is the label; grayscale = mean of the three color planes.
      for (Index p = 0; p < kPixels; ++p) {
        out(row, p) = (static_cast<double>(buf[1 + p]) +
                       static_cast<double>(buf[1 + kPixels + p]) +
                       static_cast<double>(buf[1 + 2 * kPixels + p])) /
                      3.0;
      }
    }
  }
  return out;
}

}  // namespace spca
