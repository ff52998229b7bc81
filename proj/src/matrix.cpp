#include "elt/matrix.hpp"

#include "instantiate.hpp"

namespace elt {

template <LayerRing L>
Elt<L> det(const Matrix<L>& a, const Limits& limits) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "determinant needs a square matrix");
  const std::size_t n = a.rows();
  if (n > limits.max_det_size) {
    throw Error(ErrorKind::SizeBound, "n=" + std::to_string(n) + " exceeds determinant bound " +
                                          std::to_string(limits.max_det_size));
  }
  Elt<L> sum = Elt<L>::neg_inf();
  for_each_permutation(n, [&](const std::vector<std::size_t>& perm, bool odd) {
    Elt<L> track = odd ? Elt<L>::minus_one() : Elt<L>::one();
    for (std::size_t i = 0; i < n && track.is_finite(); ++i) track = mul(track, a(i, perm[i]));
    sum = add(sum, track);
  });
  return sum;
}

template <LayerRing L>
bool is_singular(const Matrix<L>& a, const Limits& limits) {
  return det(a, limits).is_zero_layer();
}

template <LayerRing L>
Elt<L> minor(const Matrix<L>& a, std::span<const std::size_t> row_set,
             std::span<const std::size_t> col_set, const Limits& limits) {
  if (row_set.size() != col_set.size() || row_set.empty()) {
    throw Error(ErrorKind::NotSquareSelection, "row and column selections must be equal and nonempty");
  }
  for (auto i : row_set)
    if (i >= a.rows()) throw Error(ErrorKind::BadIndex, "row " + std::to_string(i));
  for (auto j : col_set)
    if (j >= a.cols()) throw Error(ErrorKind::BadIndex, "column " + std::to_string(j));
  return det(a.submatrix(row_set, col_set), limits);
}

template <LayerRing L>
Matrix<L> add(const Matrix<L>& a, const Matrix<L>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw Error(ErrorKind::DimensionMismatch, "matrix sum");
  Matrix<L> c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = add(a(i, j), b(i, j));
  return c;
}

template <LayerRing L>
Matrix<L> multiply(const Matrix<L>& a, const Matrix<L>& b) {
  if (a.cols() != b.rows()) throw Error(ErrorKind::DimensionMismatch, "matrix product");
  Matrix<L> c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      Elt<L> acc;
      for (std::size_t k = 0; k < a.cols(); ++k) acc = add(acc, mul(a(i, k), b(k, j)));
      c(i, j) = acc;
    }
  }
  return c;
}

template <LayerRing L>
Matrix<L> scale(const Elt<L>& c, const Matrix<L>& a) {
  Matrix<L> out(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out(i, j) = mul(c, a(i, j));
  return out;
}

template <LayerRing L>
bool matrix_surpasses(const Matrix<L>& a, const Matrix<L>& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw Error(ErrorKind::DimensionMismatch, "surpassing needs equal shapes");
  }
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!surpasses(a(i, j), b(i, j))) return false;
  return true;
}

template <LayerRing L>
EltVector<L> linear_combination(std::span<const Elt<L>> coefficients,
                                const std::vector<EltVector<L>>& vectors) {
  if (coefficients.size() != vectors.size()) {
    throw Error(ErrorKind::DimensionMismatch, "coefficient count differs from vector count");
  }
  const std::size_t n = vectors.empty() ? 0 : vectors.front().size();
  EltVector<L> out(n);
  for (std::size_t k = 0; k < vectors.size(); ++k) {
    if (vectors[k].size() != n) throw Error(ErrorKind::DimensionMismatch, "vector lengths differ");
    for (std::size_t j = 0; j < n; ++j) out[j] = add(out[j], mul(coefficients[k], vectors[k][j]));
  }
  return out;
}

#define ELT_INSTANTIATE(L)                                                                           \
  template Elt<L> det(const Matrix<L>&, const Limits&);                                             \
  template bool is_singular(const Matrix<L>&, const Limits&);                                       \
  template Elt<L> minor(const Matrix<L>&, std::span<const std::size_t>, std::span<const std::size_t>, \
                        const Limits&);                                                             \
  template Matrix<L> add(const Matrix<L>&, const Matrix<L>&);                                       \
  template Matrix<L> multiply(const Matrix<L>&, const Matrix<L>&);                                  \
  template Matrix<L> scale(const Elt<L>&, const Matrix<L>&);                                        \
  template bool matrix_surpasses(const Matrix<L>&, const Matrix<L>&);                               \
  template EltVector<L> linear_combination(std::span<const Elt<L>>, const std::vector<EltVector<L>>&);
ELT_FOR_EACH_RING(ELT_INSTANTIATE)
#undef ELT_INSTANTIATE

}  // namespace elt
