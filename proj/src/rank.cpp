#include "elt/rank.hpp"

#include <algorithm>

#include "instantiate.hpp"

namespace elt {

template <LayerRing L>
std::size_t submatrix_rank(const Matrix<L>& a, const Limits& limits, std::vector<std::size_t>* rows,
                           std::vector<std::size_t>* cols) {
  const std::size_t top = std::min(a.rows(), a.cols());
  if (top > limits.max_det_size) {
    throw Error(ErrorKind::SizeBound, "min dimension " + std::to_string(top) + " exceeds determinant bound");
  }
  for (std::size_t k = top; k >= 1; --k) {
    bool found = false;
    detail::for_each_combination(a.rows(), k, [&](const std::vector<std::size_t>& r) {
      detail::for_each_combination(a.cols(), k, [&](const std::vector<std::size_t>& c) {
        if (!is_singular(a.submatrix(r, c), limits)) {
          found = true;
          if (rows) *rows = r;
          if (cols) *cols = c;
        }
        return !found;
      });
      return !found;
    });
    if (found) return k;
  }
  if (rows) rows->clear();
  if (cols) cols->clear();
  return 0;
}

template <LayerRing L>
std::size_t independence_rank(const std::vector<EltVector<L>>& vectors, const Limits& limits,
                              std::vector<std::size_t>* chosen) {
  for (std::size_t k = vectors.size(); k >= 1; --k) {
    bool found = false;
    detail::for_each_combination(vectors.size(), k, [&](const std::vector<std::size_t>& idx) {
      std::vector<EltVector<L>> subset;
      for (auto i : idx) subset.push_back(vectors[i]);
      if (!find_dependence_witness(subset, limits)) {
        found = true;
        if (chosen) *chosen = idx;
      }
      return !found;
    });
    if (found) return k;
  }
  if (chosen) chosen->clear();
  return 0;
}

template <LayerRing L>
std::size_t row_rank(const Matrix<L>& a, const Limits& limits) {
  return independence_rank(a.row_vectors(), limits);
}

template <LayerRing L>
std::size_t column_rank(const Matrix<L>& a, const Limits& limits) {
  return independence_rank(a.column_vectors(), limits);
}

template <LayerRing L>
RankReport rank_report(const Matrix<L>& a, const Limits& limits) {
  RankReport r;
  r.submatrix_rank = submatrix_rank(a, limits, &r.minor_rows, &r.minor_cols);
  r.row_rank = independence_rank(a.row_vectors(), limits, &r.independent_rows);
  r.column_rank = independence_rank(a.column_vectors(), limits, &r.independent_cols);
  return r;
}

template <LayerRing L>
bool is_rank_one(const Matrix<L>& a, const Limits& limits) {
  return submatrix_rank(a, limits) == 1;
}

template <LayerRing L>
bool verify_barvinok_decomposition(const Matrix<L>& a, const std::vector<Matrix<L>>& parts,
                                   const Limits& limits) {
  Matrix<L> sum(a.rows(), a.cols());
  for (const auto& p : parts) {
    if (p.rows() != a.rows() || p.cols() != a.cols()) {
      throw Error(ErrorKind::DimensionMismatch, "decomposition part has a different shape");
    }
    sum = add(sum, p);
  }
  if (!(sum == a)) return false;
  return std::all_of(parts.begin(), parts.end(), [&](const Matrix<L>& p) { return is_rank_one(p, limits); });
}

template <LayerRing L>
bool is_generalized_permutation(const Matrix<L>& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "generalized permutation test");
  const std::size_t n = a.rows();
  std::vector<std::size_t> per_col(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t per_row = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const auto& x = a(i, j);
      if (x.is_neg_inf()) continue;
      if (!x.layer_ref().is_unit()) return false;
      ++per_row;
      ++per_col[j];
    }
    if (per_row != 1) return false;
  }
  return std::all_of(per_col.begin(), per_col.end(), [](std::size_t c) { return c == 1; });
}

template <LayerRing L>
std::optional<Matrix<L>> invert_matrix(const Matrix<L>& a) {
  if (!is_generalized_permutation(a)) return std::nullopt;
  Matrix<L> b(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) {
      const auto& x = a(i, j);
      if (x.is_finite()) b(j, i) = Elt<L>(-x.t(), *x.layer_ref().unit_inverse());
    }
  }
  return b;
}

#define ELT_INSTANTIATE(L)                                                                              \
  template std::size_t submatrix_rank(const Matrix<L>&, const Limits&, std::vector<std::size_t>*,        \
                                      std::vector<std::size_t>*);                                       \
  template std::size_t independence_rank(const std::vector<EltVector<L>>&, const Limits&,                \
                                         std::vector<std::size_t>*);                                    \
  template std::size_t row_rank(const Matrix<L>&, const Limits&);                                       \
  template std::size_t column_rank(const Matrix<L>&, const Limits&);                                    \
  template RankReport rank_report(const Matrix<L>&, const Limits&);                                     \
  template bool is_rank_one(const Matrix<L>&, const Limits&);                                           \
  template bool verify_barvinok_decomposition(const Matrix<L>&, const std::vector<Matrix<L>>&,           \
                                              const Limits&);                                           \
  template bool is_generalized_permutation(const Matrix<L>&);                                           \
  template std::optional<Matrix<L>> invert_matrix(const Matrix<L>&);
ELT_FOR_EACH_RING(ELT_INSTANTIATE)
#undef ELT_INSTANTIATE

}  // namespace elt
