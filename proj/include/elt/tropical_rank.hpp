#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "elt/matrix.hpp"

namespace elt {

/// Max-plus matrix with rational entries or -inf (std::nullopt).
class TropicalMatrix {
 public:
  TropicalMatrix() = default;
  TropicalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  TropicalMatrix(std::size_t rows, std::size_t cols, std::vector<std::optional<Rational>> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw Error(ErrorKind::DimensionMismatch, "entry count");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  std::optional<Rational>& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const std::optional<Rational>& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  /// Attaches the given layer to every finite entry.
  template <LayerRing L>
  Matrix<L> with_layers(const std::vector<L>& layers_row_major) const;

  friend bool operator==(const TropicalMatrix&, const TropicalMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::optional<Rational>> data_;
};

struct EltRankOptions {
  enum class Mode { Auto, Exact, Sampled };
  Mode mode = Mode::Auto;
  /// Exact enumeration is allowed up to this many entries.
  std::size_t exact_max_entries = 9;
  std::size_t samples = 2000;
  std::uint64_t seed = 0x5eed;
};

/// Minimal submatrix rank over layer assignments from {-3..-1, 1..3}.
///
/// `lower` is always a proven bound (the tropical rank, or the analytic
/// answer when rank <= 1). `upper` is the rank achieved by `witness`. The
/// range is `exact` when both agree.
struct EltRankResult {
  std::size_t lower = 0;
  std::size_t upper = 0;
  bool exact = false;
  Matrix<Rational> witness;
};

/// The pool the exact mode enumerates, in enumeration order.
const std::vector<long>& elt_rank_layer_pool();

/// Largest k with a k x k submatrix whose maximal track is attained by a
/// single permutation.
std::size_t tropical_rank(const TropicalMatrix& t, const Limits& limits = {});

EltRankResult elt_rank_tropical(const TropicalMatrix& t, const EltRankOptions& options = {},
                                const Limits& limits = {});

template <LayerRing L>
Matrix<L> TropicalMatrix::with_layers(const std::vector<L>& layers_row_major) const {
  Matrix<L> m(rows_, cols_);
  for (std::size_t k = 0; k < data_.size(); ++k)
    if (data_[k]) m(k / cols_, k % cols_) = Elt<L>(*data_[k], layers_row_major[k]);
  return m;
}

}  // namespace elt
