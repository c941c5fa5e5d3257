#include "spca/docword.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "spca/errors.hpp"

namespace spca {

namespace {

[[noreturn]] void fail(std::int64_t line_no, const std::string& what) {
  throw DataError("docword: line " + std::to_string(line_no) + ": " + what);
}

const char* skip_space(const char* p, const char* end) {
  while (p != end && (*p == ' ' || *p == '\t' || *p == '\r')) ++p;
  return p;
}

// Parses exactly `n` whitespace-separated nonnegative integers.
void parse_ints(const std::string& line, std::int64_t line_no,
                std::int64_t* out, int n) {
  const char* p = line.data();
  const char* end = line.data() + line.size();
  for (int i = 0; i < n; ++i) {
    p = skip_space(p, end);
    auto [next, ec] = std::from_chars(p, end, out[i]);
    if (ec != std::errc{} || next == p) fail(line_no, "expected an integer");
    p = next;
  }
  p = skip_space(p, end);
  if (p != end) fail(line_no, "trailing characters");
}

bool next_line(std::istream& in, std::string& line, std::int64_t& line_no) {
  while (std::getline(in, line)) {
    ++line_no;
    auto begin = line.find_first_not_of(" \t\r");
    if (begin != std::string::npos) return true;  // skip blank lines
  }
  return false;
}

}  // namespace

BowDataset parse_docword(std::istream& in, Index max_docs) {
  if (max_docs < 0)
    throw ContractViolation("parse_docword: max_docs must be >= 0");

  std::string line;
  std::int64_t line_no = 0;
  std::int64_t header[3];  // D, W, NNZ
  static const char* header_names[3] = {"document count", "vocabulary size",
                                        "entry count"};
  for (int i = 0; i < 3; ++i) {
    if (!next_line(in, line, line_no))
      throw DataError("docword: missing header line for " +
                      std::string(header_names[i]));
    parse_ints(line, line_no, &header[i], 1);
  }
  const std::int64_t n_docs = header[0], vocab = header[1], nnz = header[2];
  if (n_docs < 1) fail(1, "document count must be >= 1");
  if (vocab < 1) fail(2, "vocabulary size must be >= 1");
  if (nnz < 0) fail(3, "entry count must be >= 0");

  const std::int64_t limit =
      max_docs > 0 ? std::min<std::int64_t>(n_docs, max_docs) : n_docs;

  CsrMatrix csr;
  csr.rows = limit;
  csr.cols = vocab;
  csr.row_offsets.assign(1, 0);
  csr.col_indices.reserve(static_cast<std::size_t>(std::min(nnz, limit * 64)));
  csr.values.reserve(csr.col_indices.capacity());

  std::vector<std::pair<std::int32_t, double>> row;  // current document
  std::int64_t current_doc = 1;
  std::int64_t entries = 0;
  bool truncated_at_limit = false;

  auto close_rows_until = [&](std::int64_t doc) {
    // Flush the current document and emit empty rows up to (excluding) doc.
    std::sort(row.begin(), row.end());
    for (std::size_t i = 1; i < row.size(); ++i)
      if (row[i].first == row[i - 1].first)
        fail(line_no, "duplicate word id " + std::to_string(row[i].first + 1) +
                          " in document " + std::to_string(current_doc));
    for (const auto& [col, v] : row) {
      csr.col_indices.push_back(col);
      csr.values.push_back(v);
    }
    row.clear();
    while (current_doc < doc) {
      csr.row_offsets.push_back(static_cast<std::int64_t>(csr.values.size()));
      ++current_doc;
    }
  };

  while (next_line(in, line, line_no)) {
    std::int64_t f[3];  // docID wordID count
    parse_ints(line, line_no, f, 3);
    ++entries;
    if (f[0] < current_doc)
      fail(line_no, "document ids must be nondecreasing");
    if (f[0] > n_docs)
      fail(line_no, "document id " + std::to_string(f[0]) +
                        " exceeds declared count " + std::to_string(n_docs));
    if (f[0] > limit) {
      truncated_at_limit = true;  // prefix read: ignore the rest of the body
      --entries;
      break;
    }
    if (f[1] < 1 || f[1] > vocab)
      fail(line_no, "word id " + std::to_string(f[1]) +
                        " out of range [1, " + std::to_string(vocab) + "]");
    if (f[2] < 1) fail(line_no, "count must be a positive integer");
    if (f[0] > current_doc) close_rows_until(f[0]);
    row.emplace_back(static_cast<std::int32_t>(f[1] - 1),
                     static_cast<double>(f[2]));
  }
  close_rows_until(limit + 1);  // flushes the last document, pads empty rows

  if (max_docs == 0 && !truncated_at_limit && entries != nnz)
    throw DataError("docword: header declares " + std::to_string(nnz) +
                    " entries, body has " + std::to_string(entries));

  csr.validate();
  return BowDataset{std::move(csr)};
}

BowDataset parse_docword_file(const std::string& path, Index max_docs) {
  std::ifstream in(path);
  if (!in) throw DataError("docword: cannot open '" + path + "'");
  return parse_docword(in, max_docs);
}

void serialize_docword(const BowDataset& ds, std::ostream& out) {
  ds.counts.validate();
  out << ds.n_docs() << '\n' << ds.vocab() << '\n' << ds.nnz() << '\n';
  for (Index r = 0; r < ds.n_docs(); ++r) {
    for (auto i = ds.counts.row_offsets[static_cast<std::size_t>(r)];
         i < ds.counts.row_offsets[static_cast<std::size_t>(r) + 1]; ++i) {
      const double v = ds.counts.values[static_cast<std::size_t>(i)];
      if (!(v >= 1.0) || v != std::floor(v))
        throw ContractViolation("serialize_docword: counts must be positive integers");
      out << (r + 1) << ' '
          << (ds.counts.col_indices[static_cast<std::size_t>(i)] + 1) << ' '
          << static_cast<long long>(v) << '\n';
    }
  }
}

}  // namespace spca
