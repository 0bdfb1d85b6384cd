// Scalar reference kernels, kept for cross-checking the packed OpenMP ones.

#include "cobweb/boolmat.hpp"
#include "cobweb/error.hpp"

namespace cobweb::serial {

BoolMatrix bool_product(const BoolMatrix& a, const BoolMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("product dimension mismatch");
  BoolMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) {
      bool v = false;
      for (std::size_t t = 0; t < a.cols() && !v; ++t) v = a.get(i, t) && b.get(t, j);
      if (v) c.set(i, j);
    }
  return c;
}

BoolMatrix transitive_closure(const BoolMatrix& a) {
  if (!a.is_square()) throw ShapeError("transitive_closure needs a square matrix");
  const std::size_t n = a.rows();
  std::vector<char> c(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) c[i * n + j] = a.get(i, j);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (c[i * n + k])
        for (std::size_t j = 0; j < n; ++j) c[i * n + j] |= c[k * n + j];
  BoolMatrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (c[i * n + j]) out.set(i, j);
  return out;
}

BoolMatrix reflexive_transitive_closure(const BoolMatrix& a) {
  BoolMatrix c = serial::transitive_closure(a);
  for (std::size_t i = 0; i < c.rows(); ++i) c.set(i, i);
  return c;
}

}  // namespace cobweb::serial
