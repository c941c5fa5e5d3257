#pragma once

#include <cstdint>
#include <memory>
#include <optional>

#include "spca/sample_block.hpp"

namespace spca {

/// Pull-based, single-pass source of sample blocks. End of stream is sticky:
/// once next() returns nullopt it keeps doing so. The base class counts every
/// block pulled and maintains an order-sensitive checksum of the pulled data,
/// so runs over supposedly identical streams can be verified cheaply.
class SampleStream {
public:
  virtual ~SampleStream() = default;

  Index dim() const { return dim_; }
  Index batch() const { return batch_; }
  std::optional<Index> total_samples() const { return total_; }

  std::optional<SampleBlock> next();

  std::int64_t blocks_pulled() const { return blocks_; }
  std::int64_t samples_pulled() const { return samples_; }
  std::uint64_t checksum() const { return hash_.digest(); }

protected:
  SampleStream(Index dim, Index batch, std::optional<Index> total);

private:
  virtual std::optional<SampleBlock> fetch() = 0;

  Index dim_;
  Index batch_;
  std::optional<Index> total_;
  std::int64_t blocks_ = 0;
  std::int64_t samples_ = 0;
  bool done_ = false;
  Fnv1a hash_;
};

/// Streams a dense in-memory dataset in row blocks. The referenced matrix
/// must outlive the stream.
class DenseStream final : public SampleStream {
public:
  DenseStream(const RowMatrix& data, Index batch);

private:
  std::optional<SampleBlock> fetch() override;

  const RowMatrix& data_;
  Index pos_ = 0;
};

/// Streams a CSR dataset in row blocks; blocks stay sparse.
class CsrStream final : public SampleStream {
public:
  CsrStream(const CsrMatrix& data, Index batch);

private:
  std::optional<SampleBlock> fetch() override;

  const CsrMatrix& data_;
  Index pos_ = 0;
};

/// Drains a stream of dense blocks into one matrix. Throws ContractViolation
/// if the stream produces sparse blocks (sparse data must not be densified).
RowMatrix collect_dense(SampleStream& stream);

}  // namespace spca
