#include <string>
#include <utility>

#include "cobweb/boolmat.hpp"
#include "cobweb/error.hpp"

namespace cobweb {

namespace {

void require_square(const BoolMatrix& a, const char* op) {
  if (!a.is_square()) {
    throw ShapeError(std::string(op) + " needs a square matrix, got " + std::to_string(a.rows()) +
                     "x" + std::to_string(a.cols()));
  }
}

}  // namespace

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("product of " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                     " and " + std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  }
  BoolMatrix c(a.rows(), b.cols());
  const auto rows = static_cast<std::ptrdiff_t>(a.rows());
  const std::size_t inner = a.cols();
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t i = 0; i < rows; ++i) {
    auto out = c.row(static_cast<std::size_t>(i));
    auto lhs = a.row(static_cast<std::size_t>(i));
    for (std::size_t t = 0; t < inner; ++t) {
      if (!((lhs[t / BoolMatrix::kWordBits] >> (t % BoolMatrix::kWordBits)) & 1U)) continue;
      auto rhs = b.row(t);
      for (std::size_t w = 0; w < out.size(); ++w) out[w] |= rhs[w];
    }
  }
  return c;
}

BoolMatrix bool_power(const BoolMatrix& a, std::size_t k) {
  require_square(a, "bool_power");
  BoolMatrix result = BoolMatrix::identity(a.rows());
  BoolMatrix base = a;
  while (k) {
    if (k & 1U) result = bool_product(result, base);
    k >>= 1U;
    if (k) base = bool_product(base, base);
  }
  return result;
}

// Warshall elimination on packed rows: after pivot k, row i holds every vertex
// reachable from i through intermediates <= k. Row k is never written while
// pivoting on k, so rows can be updated concurrently.
BoolMatrix transitive_closure(const BoolMatrix& a) {
  require_square(a, "transitive_closure");
  BoolMatrix c = a;
  const std::size_t n = c.rows();
  const auto rows = static_cast<std::ptrdiff_t>(n);
  for (std::size_t k = 0; k < n; ++k) {
    const std::size_t kw = k / BoolMatrix::kWordBits;
    const BoolMatrix::Word kbit = BoolMatrix::Word{1} << (k % BoolMatrix::kWordBits);
    auto pivot = std::as_const(c).row(k);
#pragma omp parallel for schedule(static)
    for (std::ptrdiff_t i = 0; i < rows; ++i) {
      if (static_cast<std::size_t>(i) == k) continue;
      auto r = c.row(static_cast<std::size_t>(i));
      if (!(r[kw] & kbit)) continue;
      for (std::size_t w = 0; w < r.size(); ++w) r[w] |= pivot[w];
    }
  }
  return c;
}

BoolMatrix reflexive_transitive_closure(const BoolMatrix& a) {
  return transitive_closure(a) | BoolMatrix::identity(a.rows());
}

BoolMatrix zeta_geometric(const BoolMatrix& a) {
  require_square(a, "zeta_geometric");
  if (!is_dag(a)) throw CycleError("geometric series diverges on a cyclic digraph");
  BoolMatrix sum = BoolMatrix::identity(a.rows());
  BoolMatrix term = a;
  // Nilpotent: A^n = 0 for an acyclic A on n vertices.
  while (term.any()) {
    sum |= term;
    term = bool_product(term, a);
  }
  return sum;
}

}  // namespace cobweb
