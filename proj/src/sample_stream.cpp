#include "spca/sample_stream.hpp"

#include <algorithm>
#include <string>
#include <vector>

#include "spca/errors.hpp"

namespace spca {

SampleStream::SampleStream(Index dim, Index batch, std::optional<Index> total)
    : dim_(dim), batch_(batch), total_(total) {
  if (dim < 1) throw ContractViolation("stream: dim must be >= 1");
  if (batch < 1) throw ContractViolation("stream: batch must be >= 1");
}

std::optional<SampleBlock> SampleStream::next() {
  if (done_) return std::nullopt;
  auto block = fetch();
  if (!block) {
    done_ = true;
    return std::nullopt;
  }
  if (block->dim() != dim_)
    throw ContractViolation("stream: produced block of dim " +
                            std::to_string(block->dim()) + ", expected " +
                            std::to_string(dim_));
  ++blocks_;
  samples_ += block->rows();
  block->hash_into(hash_);
  return block;
}

DenseStream::DenseStream(const RowMatrix& data, Index batch)
    : SampleStream(data.cols(), batch, data.rows()), data_(data) {}

std::optional<SampleBlock> DenseStream::fetch() {
  if (pos_ >= data_.rows()) return std::nullopt;
  const Index take = std::min<Index>(batch(), data_.rows() - pos_);
  RowMatrix x = data_.middleRows(pos_, take);
  pos_ += take;
  return SampleBlock::dense(std::move(x));
}

CsrStream::CsrStream(const CsrMatrix& data, Index batch)
    : SampleStream(data.cols, batch, data.rows), data_(data) {}

std::optional<SampleBlock> CsrStream::fetch() {
  if (pos_ >= data_.rows) return std::nullopt;
  const Index take = std::min<Index>(batch(), data_.rows - pos_);
  CsrMatrix x = data_.middle_rows(pos_, take);
  pos_ += take;
  return SampleBlock::sparse(std::move(x));
}

RowMatrix collect_dense(SampleStream& stream) {
  std::vector<RowMatrix> blocks;
  Index n = 0;
  while (auto block = stream.next()) {
    if (block->is_sparse())
      throw ContractViolation("collect_dense: stream produced a sparse block");
    n += block->rows();
    blocks.push_back(block->dense_payload());
  }
  RowMatrix out(n, stream.dim());
  Index at = 0;
  for (const auto& b : blocks) {
    out.middleRows(at, b.rows()) = b;
    at += b.rows();
  }
  return out;
}

}  // namespace spca
