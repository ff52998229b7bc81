#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "elt/value.hpp"

namespace elt {

template <LayerRing L>
using EltVector = std::vector<Elt<L>>;

/// Size limits for the exponential desk-scale algorithms.
struct Limits {
  /// Largest n for permutation-expansion determinants.
  std::size_t max_det_size = 8;
  /// Largest vector count handed to the dependence-witness search.
  std::size_t max_witness_vectors = 6;
  /// Largest vector dimension handed to the dependence-witness search.
  std::size_t max_witness_dim = 6;
};

/// Dense row-major rectangular matrix over the ELT algebra with layer ring L.
template <LayerRing L>
class Matrix {
 public:
  using Value = Elt<L>;

  Matrix() = default;
  /// rows x cols matrix filled with -inf.
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  Matrix(std::size_t rows, std::size_t cols, std::vector<Value> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) {
      throw Error(ErrorKind::DimensionMismatch, "entry count does not match rows*cols");
    }
  }

  static Matrix from_rows(const std::vector<EltVector<L>>& rows) {
    const std::size_t cols = rows.empty() ? 0 : rows.front().size();
    Matrix m(rows.size(), cols);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged rows");
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<EltVector<L>>& columns) {
    return from_rows(columns).transpose();
  }

  /// 0~1 on the diagonal, -inf elsewhere.
  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Value::one();
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  Value& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Value& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<const Value> entries() const { return data_; }

  EltVector<L> row(std::size_t i) const {
    return EltVector<L>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                        data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  EltVector<L> column(std::size_t j) const {
    EltVector<L> out;
    out.reserve(rows_);
    for (std::size_t i = 0; i < rows_; ++i) out.push_back((*this)(i, j));
    return out;
  }
  std::vector<EltVector<L>> row_vectors() const {
    std::vector<EltVector<L>> out;
    for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
    return out;
  }
  std::vector<EltVector<L>> column_vectors() const {
    std::vector<EltVector<L>> out;
    for (std::size_t j = 0; j < cols_; ++j) out.push_back(column(j));
    return out;
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix submatrix(std::span<const std::size_t> row_idx, std::span<const std::size_t> col_idx) const {
    Matrix s(row_idx.size(), col_idx.size());
    for (std::size_t i = 0; i < row_idx.size(); ++i) {
      for (std::size_t j = 0; j < col_idx.size(); ++j) {
        if (row_idx[i] >= rows_ || col_idx[j] >= cols_) throw Error(ErrorKind::BadIndex, "submatrix index");
        s(i, j) = (*this)(row_idx[i], col_idx[j]);
      }
    }
    return s;
  }

  /// No finite zero-layered entries.
  bool is_pure() const {
    for (const auto& x : data_)
      if (!x.is_pure()) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Value> data_;
};

/// ELT determinant: sum over permutations of [0]^sign(sigma) times the track.
template <LayerRing L>
Elt<L> det(const Matrix<L>& a, const Limits& limits = {});

/// s(det A) = 0, including det A = -inf.
template <LayerRing L>
bool is_singular(const Matrix<L>& a, const Limits& limits = {});

/// Determinant of the submatrix selected by the given row and column indices.
template <LayerRing L>
Elt<L> minor(const Matrix<L>& a, std::span<const std::size_t> row_set,
             std::span<const std::size_t> col_set, const Limits& limits = {});

template <LayerRing L>
Matrix<L> add(const Matrix<L>& a, const Matrix<L>& b);

template <LayerRing L>
Matrix<L> multiply(const Matrix<L>& a, const Matrix<L>& b);

template <LayerRing L>
Matrix<L> scale(const Elt<L>& c, const Matrix<L>& a);

/// Entrywise surpassing; equivalent to A = B + C with s(C) = 0.
template <LayerRing L>
bool matrix_surpasses(const Matrix<L>& a, const Matrix<L>& b);

/// Sum of coefficients[k] * vectors[k] over all k.
template <LayerRing L>
EltVector<L> linear_combination(std::span<const Elt<L>> coefficients,
                                const std::vector<EltVector<L>>& vectors);

/// Calls visit(permutation, is_odd) for every permutation of {0..n-1} in
/// lexicographic order.
template <class Visit>
void for_each_permutation(std::size_t n, Visit&& visit);

}  // namespace elt

#include "elt/detail/permutations.hpp"
