#include "spca/sample_block.hpp"

#include <string>
#include <utility>

#include "spca/errors.hpp"

namespace spca {

void CsrMatrix::validate() const {
  if (rows < 0 || cols < 0)
    throw ContractViolation("csr: negative shape");
  if (row_offsets.size() != static_cast<std::size_t>(rows) + 1)
    throw ContractViolation("csr: row_offsets must have rows+1 entries");
  if (row_offsets.front() != 0)
    throw ContractViolation("csr: row_offsets must start at 0");
  for (Index r = 0; r < rows; ++r) {
    if (row_offsets[static_cast<std::size_t>(r) + 1] <
        row_offsets[static_cast<std::size_t>(r)])
      throw ContractViolation("csr: row_offsets must be nondecreasing (row " +
                              std::to_string(r) + ")");
  }
  const auto nnz = static_cast<std::size_t>(row_offsets.back());
  if (col_indices.size() != nnz || values.size() != nnz)
    throw ContractViolation("csr: last offset must equal nnz");
  for (std::size_t i = 0; i < nnz; ++i) {
    if (col_indices[i] < 0 || col_indices[i] >= cols)
      throw ContractViolation("csr: column index " +
                              std::to_string(col_indices[i]) +
                              " out of range [0, " + std::to_string(cols) + ")");
  }
}

RowMatrix CsrMatrix::to_dense() const {
  RowMatrix out = RowMatrix::Zero(rows, cols);
  for (Index r = 0; r < rows; ++r) {
    for (auto i = row_offsets[static_cast<std::size_t>(r)];
         i < row_offsets[static_cast<std::size_t>(r) + 1]; ++i) {
      out(r, col_indices[static_cast<std::size_t>(i)]) =
          values[static_cast<std::size_t>(i)];
    }
  }
  return out;
}

CsrMatrix CsrMatrix::middle_rows(Index start, Index count) const {
  if (start < 0 || count < 0 || start + count > rows)
    throw ContractViolation("csr: row slice out of range");
  CsrMatrix out;
  out.rows = count;
  out.cols = cols;
  const auto lo = row_offsets[static_cast<std::size_t>(start)];
  const auto hi = row_offsets[static_cast<std::size_t>(start + count)];
  out.row_offsets.resize(static_cast<std::size_t>(count) + 1);
  for (Index r = 0; r <= count; ++r)
    out.row_offsets[static_cast<std::size_t>(r)] =
        row_offsets[static_cast<std::size_t>(start + r)] - lo;
  out.col_indices.assign(col_indices.begin() + lo, col_indices.begin() + hi);
  out.values.assign(values.begin() + lo, values.begin() + hi);
  return out;
}

SampleBlock::SampleBlock(RowMatrix x)
    : rows_(x.rows()), dim_(x.cols()), payload_(std::move(x)) {
  if (rows_ < 1 || dim_ < 1)
    throw ContractViolation("sample block: need at least 1 row and 1 column");
}

SampleBlock::SampleBlock(CsrMatrix x)
    : rows_(x.rows), dim_(x.cols), payload_(std::move(x)) {
  if (rows_ < 1 || dim_ < 1)
    throw ContractViolation("sample block: need at least 1 row and 1 column");
  std::get<CsrMatrix>(payload_).validate();
}

SampleBlock SampleBlock::dense(RowMatrix x) { return SampleBlock(std::move(x)); }
SampleBlock SampleBlock::sparse(CsrMatrix x) { return SampleBlock(std::move(x)); }

const RowMatrix& SampleBlock::dense_payload() const {
  if (is_sparse()) throw ContractViolation("sample block: payload is sparse");
  return std::get<RowMatrix>(payload_);
}

const CsrMatrix& SampleBlock::sparse_payload() const {
  if (!is_sparse()) throw ContractViolation("sample block: payload is dense");
  return std::get<CsrMatrix>(payload_);
}

Matrix SampleBlock::times(const Matrix& m) const {
  if (m.rows() != dim_)
    throw ContractViolation("sample block: dimension mismatch in X * M");
  if (!is_sparse()) return std::get<RowMatrix>(payload_) * m;

  const CsrMatrix& x = std::get<CsrMatrix>(payload_);
  Matrix y = Matrix::Zero(rows_, m.cols());
  for (Index r = 0; r < rows_; ++r) {
    for (auto i = x.row_offsets[static_cast<std::size_t>(r)];
         i < x.row_offsets[static_cast<std::size_t>(r) + 1]; ++i) {
      y.row(r) += x.values[static_cast<std::size_t>(i)] *
                  m.row(x.col_indices[static_cast<std::size_t>(i)]);
    }
  }
  return y;
}

Matrix SampleBlock::transpose_times(const Matrix& y) const {
  if (y.rows() != rows_)
    throw ContractViolation("sample block: dimension mismatch in X^T * Y");
  if (!is_sparse())
    return std::get<RowMatrix>(payload_).transpose() * y;

  const CsrMatrix& x = std::get<CsrMatrix>(payload_);
  Matrix g = Matrix::Zero(dim_, y.cols());
  for (Index r = 0; r < rows_; ++r) {
    for (auto i = x.row_offsets[static_cast<std::size_t>(r)];
         i < x.row_offsets[static_cast<std::size_t>(r) + 1]; ++i) {
      g.row(x.col_indices[static_cast<std::size_t>(i)]) +=
          x.values[static_cast<std::size_t>(i)] * y.row(r);
    }
  }
  return g;
}

double SampleBlock::squared_frobenius() const {
  if (!is_sparse()) return std::get<RowMatrix>(payload_).squaredNorm();
  const CsrMatrix& x = std::get<CsrMatrix>(payload_);
  double s = 0.0;
  for (double v : x.values) s += v * v;
  return s;
}

void SampleBlock::hash_into(Fnv1a& h) const {
  h.update(static_cast<std::uint64_t>(rows_));
  h.update(static_cast<std::uint64_t>(dim_));
  if (!is_sparse()) {
    const RowMatrix& x = std::get<RowMatrix>(payload_);
    for (Index r = 0; r < rows_; ++r)
      for (Index c = 0; c < dim_; ++c) h.update(x(r, c));
    return;
  }
  const CsrMatrix& x = std::get<CsrMatrix>(payload_);
  for (auto o : x.row_offsets) h.update(static_cast<std::uint64_t>(o));
  for (auto c : x.col_indices) h.update(static_cast<std::uint64_t>(c));
  for (double v : x.values) h.update(v);
}

}  // namespace spca
