#pragma once

#include <iosfwd>
#include <string>

#include "spca/sample_block.hpp"

namespace spca {

/// Bag-of-words dataset: one document per CSR row, values are word counts
/// (positive integers, stored as doubles). Entries within a row are sorted by
/// word id and unique.
struct BowDataset {
  CsrMatrix counts;

  Index n_docs() const { return counts.rows; }
  Index vocab() const { return counts.cols; }
  Index nnz() const { return counts.nnz(); }
};

/// Parses the UCI docword format: three header lines (D, W, NNZ) followed by
/// NNZ lines "docID wordID count" with 1-based ids and nondecreasing docIDs.
/// max_docs > 0 reads only the first max_docs documents (the remaining body
/// is not validated). Errors carry the offending line number.
BowDataset parse_docword(std::istream& in, Index max_docs = 0);
BowDataset parse_docword_file(const std::string& path, Index max_docs = 0);

/// Inverse of parse_docword; rows are written in sorted order, so
/// parse(serialize(ds)) reproduces the CSR arrays exactly.
void serialize_docword(const BowDataset& ds, std::ostream& out);

}  // namespace spca
