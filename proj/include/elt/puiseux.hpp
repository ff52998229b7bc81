#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "elt/matrix.hpp"

namespace elt {

/// Finite sum of terms c * t^e with rational exponents e and nonzero
/// coefficients c in L. The zero series has no terms.
template <LayerRing L>
class PuiseuxPoly {
 public:
  using Terms = std::map<Rational, L>;

  PuiseuxPoly() = default;
  /// Drops zero coefficients.
  explicit PuiseuxPoly(Terms terms) : terms_(std::move(terms)) { prune(); }

  static PuiseuxPoly monomial(L coefficient, Rational exponent) {
    Terms t;
    t.emplace(std::move(exponent), std::move(coefficient));
    return PuiseuxPoly(std::move(t));
  }
  static PuiseuxPoly constant(L c) { return monomial(std::move(c), Rational(0)); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  /// Minimal exponent; std::nullopt stands for +infinity (the zero series).
  std::optional<Rational> valuation() const {
    if (terms_.empty()) return std::nullopt;
    return terms_.begin()->first;
  }

  /// Coefficient of the minimal exponent; zero for the zero series.
  L leading_coefficient() const { return terms_.empty() ? L::zero() : terms_.begin()->second; }

  PuiseuxPoly operator-() const {
    PuiseuxPoly out = *this;
    for (auto& [e, c] : out.terms_) c = -c;
    return out;
  }

  PuiseuxPoly& operator+=(const PuiseuxPoly& o) {
    for (const auto& [e, c] : o.terms_) {
      auto [it, inserted] = terms_.try_emplace(e, c);
      if (!inserted) {
        it->second = it->second + c;
        if (it->second.is_zero()) terms_.erase(it);
      }
    }
    return *this;
  }
  PuiseuxPoly& operator-=(const PuiseuxPoly& o) { return *this += -o; }

  friend PuiseuxPoly operator+(PuiseuxPoly a, const PuiseuxPoly& b) { return a += b; }
  friend PuiseuxPoly operator-(PuiseuxPoly a, const PuiseuxPoly& b) { return a -= b; }
  friend PuiseuxPoly operator*(const PuiseuxPoly& a, const PuiseuxPoly& b) {
    Terms out;
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        auto [it, inserted] = out.try_emplace(ea + eb, ca * cb);
        if (!inserted) it->second = it->second + ca * cb;
      }
    }
    return PuiseuxPoly(std::move(out));
  }
  PuiseuxPoly& operator*=(const PuiseuxPoly& o) { return *this = *this * o; }

  /// c * x for a ring scalar c.
  friend PuiseuxPoly scale(const L& c, const PuiseuxPoly& x) {
    Terms out;
    for (const auto& [e, v] : x.terms_) out.emplace(e, c * v);
    return PuiseuxPoly(std::move(out));
  }

  friend bool operator==(const PuiseuxPoly&, const PuiseuxPoly&) = default;

 private:
  void prune() {
    for (auto it = terms_.begin(); it != terms_.end();) it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  }

  Terms terms_;
};

/// [-a]^l for the leading monomial l t^a; -inf for the zero series.
template <LayerRing L>
Elt<L> eltrop(const PuiseuxPoly<L>& x) {
  if (x.is_zero()) return Elt<L>::neg_inf();
  const auto& [e, c] = *x.terms().begin();
  return Elt<L>(-e, c);
}

/// l t^(-a) for [a]^l, and 0 for -inf. Zero-layered values have no lift.
template <LayerRing L>
PuiseuxPoly<L> monomial_lift(const Elt<L>& x) {
  if (x.is_neg_inf()) return {};
  if (x.is_zero_layer()) throw Error(ErrorKind::ZeroLayerEntry, "zero-layered value has no monomial lift");
  return PuiseuxPoly<L>::monomial(x.layer_ref(), -x.t());
}

template <LayerRing L>
class PuiseuxMatrix {
 public:
  using Value = PuiseuxPoly<L>;

  PuiseuxMatrix() = default;
  /// rows x cols zero matrix.
  PuiseuxMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
  PuiseuxMatrix(std::size_t rows, std::size_t cols, std::vector<Value> entries)
      : rows_(rows), cols_(cols), data_(std::move(entries)) {
    if (data_.size() != rows_ * cols_) throw Error(ErrorKind::DimensionMismatch, "entry count does not match");
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Value& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Value& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  PuiseuxMatrix transpose() const {
    PuiseuxMatrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  friend bool operator==(const PuiseuxMatrix&, const PuiseuxMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Value> data_;
};

template <LayerRing L>
Matrix<L> eltrop_matrix(const PuiseuxMatrix<L>& m);

/// Leibniz expansion; exact in the series ring.
template <LayerRing L>
PuiseuxPoly<L> puiseux_det(const PuiseuxMatrix<L>& m, const Limits& limits = {});

/// Rank over the fraction field: the largest k with a nonzero k x k minor.
template <LayerRing L>
std::size_t puiseux_rank(const PuiseuxMatrix<L>& m, const Limits& limits = {});

}  // namespace elt
