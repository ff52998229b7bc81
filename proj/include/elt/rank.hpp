#pragma once

#include <cstddef>
#include <vector>

#include "elt/dependence.hpp"
#include "elt/matrix.hpp"

namespace elt {

/// Row, column and submatrix rank of one matrix, with certificates: a
/// nonsingular minor of maximal size and maximal independent row and column
/// sets.
struct RankReport {
  std::size_t row_rank = 0;
  std::size_t column_rank = 0;
  std::size_t submatrix_rank = 0;
  std::vector<std::size_t> minor_rows;
  std::vector<std::size_t> minor_cols;
  std::vector<std::size_t> independent_rows;
  std::vector<std::size_t> independent_cols;
};

/// Largest k with a nonsingular k x k minor, and one such minor's indices.
template <LayerRing L>
std::size_t submatrix_rank(const Matrix<L>& a, const Limits& limits = {},
                           std::vector<std::size_t>* rows = nullptr, std::vector<std::size_t>* cols = nullptr);

/// Largest number of vectors admitting no dependence witness; `chosen`
/// receives the lexicographically first such set.
template <LayerRing L>
std::size_t independence_rank(const std::vector<EltVector<L>>& vectors, const Limits& limits = {},
                              std::vector<std::size_t>* chosen = nullptr);

template <LayerRing L>
std::size_t row_rank(const Matrix<L>& a, const Limits& limits = {});

template <LayerRing L>
std::size_t column_rank(const Matrix<L>& a, const Limits& limits = {});

template <LayerRing L>
RankReport rank_report(const Matrix<L>& a, const Limits& limits = {});

template <LayerRing L>
bool is_rank_one(const Matrix<L>& a, const Limits& limits = {});

/// Every part has submatrix rank 1 and the parts sum to A.
template <LayerRing L>
bool verify_barvinok_decomposition(const Matrix<L>& a, const std::vector<Matrix<L>>& parts,
                                   const Limits& limits = {});

/// Exactly one entry per row and per column has an invertible layer; every
/// other entry is -inf.
template <LayerRing L>
bool is_generalized_permutation(const Matrix<L>& a);

/// The two-sided inverse, which exists exactly for generalized permutation
/// matrices.
template <LayerRing L>
std::optional<Matrix<L>> invert_matrix(const Matrix<L>& a);

}  // namespace elt
