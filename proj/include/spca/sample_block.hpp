#pragma once

#include <cstdint>
#include <variant>
#include <vector>

#include "spca/hash.hpp"
#include "spca/types.hpp"

namespace spca {

/// Compressed sparse row matrix; rows are samples, values are real.
struct CsrMatrix {
  Index rows = 0;
  Index cols = 0;
  std::vector<std::int64_t> row_offsets;  // size rows+1, nondecreasing, back() == nnz
  std::vector<std::int32_t> col_indices;  // size nnz, each < cols
  std::vector<double> values;             // size nnz

  Index nnz() const { return static_cast<Index>(values.size()); }
  void validate() const;
  RowMatrix to_dense() const;
  CsrMatrix middle_rows(Index start, Index count) const;
};

/// One mini-batch of samples in d dimensions, dense or sparse.
class SampleBlock {
public:
  static SampleBlock dense(RowMatrix x);
  static SampleBlock sparse(CsrMatrix x);

  Index rows() const { return rows_; }
  Index dim() const { return dim_; }
  bool is_sparse() const { return payload_.index() == 1; }
  const RowMatrix& dense_payload() const;
  const CsrMatrix& sparse_payload() const;

  /// X * m, shape rows x m.cols(). Sparse payloads are traversed row by row;
  /// no densification.
  Matrix times(const Matrix& m) const;
  /// X^T * y, shape dim x y.cols().
  Matrix transpose_times(const Matrix& y) const;
  double squared_frobenius() const;

  void hash_into(Fnv1a& h) const;

private:
  explicit SampleBlock(RowMatrix x);
  explicit SampleBlock(CsrMatrix x);

  Index rows_ = 0;
  Index dim_ = 0;
  std::variant<RowMatrix, CsrMatrix> payload_;
};

}  // namespace spca
