#include "cobweb/boolmat.hpp"

#include <bit>
#include <string>

#include "cobweb/error.hpp"

namespace cobweb {

namespace {

std::size_t stride_for(std::size_t cols) {
  return (cols + BoolMatrix::kWordBits - 1) / BoolMatrix::kWordBits;
}

}  // namespace

BoolMatrix::BoolMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), stride_(stride_for(cols)), words_(rows * stride_for(cols), 0) {}

BoolMatrix::BoolMatrix(std::initializer_list<std::initializer_list<int>> rows) {
  std::size_t c = rows.size() ? rows.begin()->size() : 0;
  *this = BoolMatrix(rows.size(), c);
  std::size_t i = 0;
  for (const auto& r : rows) {
    if (r.size() != c) throw ShapeError("ragged matrix literal");
    std::size_t j = 0;
    for (int v : r) set(i, j++, v != 0);
    ++i;
  }
}

BoolMatrix BoolMatrix::identity(std::size_t n) {
  BoolMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BoolMatrix BoolMatrix::ones(std::size_t rows, std::size_t cols) {
  BoolMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m.set(i, j);
  return m;
}

bool BoolMatrix::get(std::size_t i, std::size_t j) const {
  if (i >= rows_ || j >= cols_) {
    throw RangeError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                     std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  return (words_[i * stride_ + j / kWordBits] >> (j % kWordBits)) & 1U;
}

void BoolMatrix::set(std::size_t i, std::size_t j, bool value) {
  if (i >= rows_ || j >= cols_) {
    throw RangeError("entry (" + std::to_string(i) + "," + std::to_string(j) + ") outside " +
                     std::to_string(rows_) + "x" + std::to_string(cols_));
  }
  Word& w = words_[i * stride_ + j / kWordBits];
  const Word bit = Word{1} << (j % kWordBits);
  w = value ? (w | bit) : (w & ~bit);
}

bool BoolMatrix::any() const noexcept {
  for (Word w : words_)
    if (w) return true;
  return false;
}

bool BoolMatrix::row_any(std::size_t i) const {
  for (Word w : row(i))
    if (w) return true;
  return false;
}

std::size_t BoolMatrix::count() const noexcept {
  std::size_t n = 0;
  for (Word w : words_) n += static_cast<std::size_t>(std::popcount(w));
  return n;
}

BoolMatrix BoolMatrix::transpose() const {
  BoolMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if (get(i, j)) t.set(j, i);
  return t;
}

BoolMatrix BoolMatrix::slice(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw RangeError("slice outside matrix");
  BoolMatrix s(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j)
      if (get(r0 + i, c0 + j)) s.set(i, j);
  return s;
}

void BoolMatrix::paste(const BoolMatrix& src, std::size_t r0, std::size_t c0) {
  if (r0 + src.rows_ > rows_ || c0 + src.cols_ > cols_) throw RangeError("paste outside matrix");
  for (std::size_t i = 0; i < src.rows_; ++i)
    for (std::size_t j = 0; j < src.cols_; ++j)
      if (src.get(i, j)) set(r0 + i, c0 + j);
}

BoolMatrix& BoolMatrix::operator|=(const BoolMatrix& other) {
  if (rows_ != other.rows_ || cols_ != other.cols_) throw ShapeError("OR of mismatched matrices");
  for (std::size_t w = 0; w < words_.size(); ++w) words_[w] |= other.words_[w];
  return *this;
}

bool entrywise_leq(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw ShapeError("comparison of mismatched matrices");
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto ra = a.row(i);
    auto rb = b.row(i);
    for (std::size_t w = 0; w < ra.size(); ++w)
      if (ra[w] & ~rb[w]) return false;
  }
  return true;
}

BoolMatrix ones_block(std::size_t rows, std::size_t cols) {
  if (rows == 0 || cols == 0) throw ShapeError("ones block needs positive dimensions");
  return BoolMatrix::ones(rows, cols);
}

bool is_dag(const BoolMatrix& a) {
  if (!a.is_square()) throw ShapeError("is_dag needs a square matrix");
  const std::size_t n = a.rows();
  std::vector<std::size_t> indegree(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a.get(i, j)) ++indegree[j];
  std::vector<std::size_t> ready;
  for (std::size_t v = 0; v < n; ++v)
    if (indegree[v] == 0) ready.push_back(v);
  std::size_t removed = 0;
  while (!ready.empty()) {
    std::size_t v = ready.back();
    ready.pop_back();
    ++removed;
    for (std::size_t j = 0; j < n; ++j)
      if (a.get(v, j) && --indegree[j] == 0) ready.push_back(j);
  }
  return removed == n;
}

}  // namespace cobweb
