#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "elt/numbers.hpp"

namespace elt::detail {

/// Feasibility of x_to - x_from <= w + e*eps over the rationals, where eps is
/// a symbolic positive infinitesimal (e = -1 encodes a strict inequality).
/// Keeps the shortest-path closure up to date as constraints are added.
class DifferenceSystem {
 public:
  struct Constraint {
    std::size_t from;
    std::size_t to;
    Rational w;
    int e;
  };

  explicit DifferenceSystem(std::size_t k) : k_(k), dist_(k * k) {
    for (std::size_t i = 0; i < k; ++i) dist_[i * k + i] = Bound{false, Rational(0), 0};
  }

  /// Returns false once the system has become infeasible.
  bool add(const Constraint& c) {
    constraints_.push_back(c);
    const Bound edge{false, c.w, c.e};
    if (!less(edge, at(c.from, c.to))) return true;
    std::vector<Bound> next = dist_;
    for (std::size_t i = 0; i < k_; ++i) {
      const Bound& head = at(i, c.from);
      if (head.infinite) continue;
      for (std::size_t j = 0; j < k_; ++j) {
        const Bound& tail = at(c.to, j);
        if (tail.infinite) continue;
        Bound cand{false, head.w + edge.w + tail.w, head.e + edge.e + tail.e};
        if (less(cand, next[i * k_ + j])) next[i * k_ + j] = std::move(cand);
      }
    }
    dist_ = std::move(next);
    const Bound zero{false, Rational(0), 0};
    for (std::size_t i = 0; i < k_; ++i)
      if (less(at(i, i), zero)) return false;
    return true;
  }

  /// A concrete rational solution, shifted so that x_0 = 0. Only meaningful
  /// while the system is feasible.
  std::vector<Rational> solution() const {
    // Potentials x_v = min(0, min_u dist(u, v)) in the (w, e) order.
    std::vector<Bound> pot(k_, Bound{false, Rational(0), 0});
    for (std::size_t v = 0; v < k_; ++v)
      for (std::size_t u = 0; u < k_; ++u)
        if (less(at(u, v), pot[v])) pot[v] = at(u, v);
    // Pick a concrete eps small enough for every recorded constraint.
    Rational eps(1);
    for (const auto& c : constraints_) {
      const Rational gap = c.w + pot[c.from].w - pot[c.to].w;
      const int coef = pot[c.to].e - pot[c.from].e - c.e;
      if (coef > 0 && gap.sign() > 0) {
        const Rational bound = gap / Rational(coef);
        if (bound < eps) eps = bound;
      }
    }
    eps = eps / Rational(2);
    std::vector<Rational> x;
    x.reserve(k_);
    for (const auto& p : pot) x.push_back(p.w + Rational(p.e) * eps);
    if (!x.empty()) {
      const Rational shift = x.front();
      for (auto& v : x) v -= shift;
    }
    return x;
  }

 private:
  struct Bound {
    bool infinite = true;
    Rational w;
    int e = 0;
  };

  static bool less(const Bound& a, const Bound& b) {
    if (a.infinite) return false;
    if (b.infinite) return true;
    if (a.w != b.w) return a.w < b.w;
    return a.e < b.e;
  }

  const Bound& at(std::size_t i, std::size_t j) const { return dist_[i * k_ + j]; }

  std::size_t k_;
  std::vector<Bound> dist_;
  std::vector<Constraint> constraints_;
};

/// Homogeneous linear system over a field, kept in reduced row echelon form,
/// that tracks whether a solution with every coordinate nonzero still exists.
template <class F>
class NullspaceTracker {
 public:
  explicit NullspaceTracker(std::size_t k) : k_(k) {}

  /// Adds sum_p eq[p] x_p = 0. Returns false if the system now forces some
  /// coordinate to vanish.
  bool add(std::vector<F> eq) {
    for (std::size_t r = 0; r < rows_.size(); ++r) {
      const F factor = eq[pivots_[r]];
      if (factor.is_zero()) continue;
      for (std::size_t c = 0; c < k_; ++c) eq[c] = eq[c] - factor * rows_[r][c];
    }
    std::size_t pivot = k_;
    for (std::size_t c = 0; c < k_; ++c) {
      if (!eq[c].is_zero()) {
        pivot = c;
        break;
      }
    }
    if (pivot == k_) return true;
    const F inv = *eq[pivot].unit_inverse();
    for (auto& v : eq) v = v * inv;
    for (auto& row : rows_) {
      const F factor = row[pivot];
      if (factor.is_zero()) continue;
      for (std::size_t c = 0; c < k_; ++c) row[c] = row[c] - factor * eq[c];
    }
    rows_.push_back(std::move(eq));
    pivots_.push_back(pivot);
    for (const auto& row : rows_) {
      std::size_t nonzero = 0;
      for (const auto& v : row) nonzero += v.is_zero() ? 0 : 1;
      if (nonzero == 1) return false;
    }
    return true;
  }

  /// A nullspace vector with no zero coordinate, scaled so coordinate 0 is 1.
  /// Tries combinations sum_k x^k b_k of the free-variable basis for
  /// x = 0, 1, 2, ...; each coordinate is a nonzero polynomial in x, so some
  /// small x works.
  std::optional<std::vector<F>> nonvanishing_solution() const {
    std::vector<bool> is_pivot(k_, false);
    for (auto p : pivots_) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t c = 0; c < k_; ++c)
      if (!is_pivot[c]) free.push_back(c);
    if (free.empty()) return std::nullopt;

    std::vector<std::vector<F>> basis;
    for (auto f : free) {
      std::vector<F> b(k_, F::zero());
      b[f] = F::one();
      for (std::size_t r = 0; r < rows_.size(); ++r) b[pivots_[r]] = -rows_[r][f];
      basis.push_back(std::move(b));
    }

    const long tries = static_cast<long>(k_ * free.size() + 2);
    for (long x = 0; x <= tries; ++x) {
      std::vector<F> sol(k_, F::zero());
      F power = F::one();
      for (const auto& b : basis) {
        for (std::size_t c = 0; c < k_; ++c) sol[c] = sol[c] + power * b[c];
        power = power * F(static_cast<int>(x));
      }
      bool ok = true;
      for (const auto& v : sol) ok = ok && !v.is_zero();
      if (!ok) continue;
      const F inv = *sol.front().unit_inverse();
      for (auto& v : sol) v = v * inv;
      return sol;
    }
    return std::nullopt;
  }

 private:
  std::size_t k_;
  std::vector<std::vector<F>> rows_;
  std::vector<std::size_t> pivots_;
};

}  // namespace elt::detail
