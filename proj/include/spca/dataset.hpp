#pragma once

#include <memory>
#include <variant>

#include "spca/sample_stream.hpp"

namespace spca {

/// A full in-memory dataset, dense or sparse. Sparse data stays sparse
/// through every pipeline stage.
using DataSet = std::variant<RowMatrix, CsrMatrix>;

Index data_rows(const DataSet& data);
Index data_dim(const DataSet& data);

/// A fresh stream over the dataset. The dataset must outlive the stream.
std::unique_ptr<SampleStream> make_stream(const DataSet& data, Index batch);

}  // namespace spca
