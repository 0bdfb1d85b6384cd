#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace cobweb {

/// Rectangular 0/1 matrix with bit-packed rows (64 columns per word).
///
/// Bits past `cols()` in the last word of a row are always zero, so whole-row
/// word operations never need masking on read.
class BoolMatrix {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  BoolMatrix() = default;
  BoolMatrix(std::size_t rows, std::size_t cols);
  BoolMatrix(std::initializer_list<std::initializer_list<int>> rows);

  static BoolMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }
  static BoolMatrix identity(std::size_t n);
  static BoolMatrix ones(std::size_t rows, std::size_t cols);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t words_per_row() const noexcept { return stride_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  bool get(std::size_t i, std::size_t j) const;
  void set(std::size_t i, std::size_t j, bool value = true);
  bool operator()(std::size_t i, std::size_t j) const { return get(i, j); }

  std::span<Word> row(std::size_t i) { return {words_.data() + i * stride_, stride_}; }
  std::span<const Word> row(std::size_t i) const { return {words_.data() + i * stride_, stride_}; }

  bool any() const noexcept;
  bool row_any(std::size_t i) const;
  std::size_t count() const noexcept;

  BoolMatrix transpose() const;
  /// Copy of the sub-block [r0, r0+nr) x [c0, c0+nc).
  BoolMatrix slice(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  /// Writes `src` with its top-left corner at (r0, c0); OR-ed into existing bits.
  void paste(const BoolMatrix& src, std::size_t r0, std::size_t c0);

  BoolMatrix& operator|=(const BoolMatrix& other);
  friend BoolMatrix operator|(BoolMatrix a, const BoolMatrix& b) { return a |= b; }

  friend bool operator==(const BoolMatrix&, const BoolMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t stride_ = 0;
  std::vector<Word> words_;
};

/// A <= B entrywise, i.e. every 1 of A is a 1 of B.
bool entrywise_leq(const BoolMatrix& a, const BoolMatrix& b);

BoolMatrix ones_block(std::size_t rows, std::size_t cols);

// OpenMP row-parallel kernels. Results are bit-identical to the serial
// reference in cobweb::serial for any thread count.
BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b);
BoolMatrix bool_power(const BoolMatrix& a, std::size_t k);
BoolMatrix transitive_closure(const BoolMatrix& a);
BoolMatrix reflexive_transitive_closure(const BoolMatrix& a);

/// I | A | A^2 | ... accumulated until the powers vanish. Throws CycleError
/// unless `a` is acyclic.
BoolMatrix zeta_geometric(const BoolMatrix& a);

/// Kahn elimination; self-loops count as cycles.
bool is_dag(const BoolMatrix& a);

namespace serial {

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b);
BoolMatrix transitive_closure(const BoolMatrix& a);
BoolMatrix reflexive_transitive_closure(const BoolMatrix& a);

}  // namespace serial

}  // namespace cobweb
