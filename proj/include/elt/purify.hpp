#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "elt/dependence.hpp"
#include "elt/matrix.hpp"

namespace elt {

/// One monomial of the layer polynomial: coefficient times the product of
/// the listed layer variables (an empty list is the constant term).
template <LayerRing L>
struct LayerMonomial {
  std::vector<std::size_t> variables;
  L coefficient;
};

/// How desingularize_pure built its output.
///
/// Case 1: det A = -inf. Case 2: no zero-layered track strictly dominates the
/// nonzero-layered ones. Case 3: some zero-layered track dominates; the
/// zero-layered entries become variables lambda_k = [x_k]^(l_k).
template <LayerRing L>
struct DesingularizationTrace {
  int case_tag = 0;
  /// Positions of the finite zero-layered entries, row-major.
  std::vector<std::pair<std::size_t, std::size_t>> variables;
  /// Permutations with a nonzero-layered track.
  std::vector<std::vector<std::size_t>> x1;
  /// Zero-layered tracks strictly above every nonzero-layered one.
  std::vector<std::vector<std::size_t>> x2;
  /// Sum of the nonzero-layered signed tracks.
  Elt<L> beta;
  /// Common downward shift delta of the variable tangibles.
  std::optional<Rational> shift;
  /// x_k = t(a_k) - delta; max over X_2 of the shifted tracks equals t(beta).
  std::vector<Rational> tangibles;
  /// s(det) of the variable matrix at the solved tangibles.
  std::vector<LayerMonomial<L>> layer_polynomial;
  /// Chosen layer per variable; std::nullopt means the entry became -inf.
  std::vector<std::optional<L>> layer_assignment;
  /// Set when every non-constant coefficient of the layer polynomial
  /// vanished and the dominant zero-layered tracks were made to cancel
  /// among themselves instead.
  bool cancelling_fallback = false;
};

template <LayerRing L>
struct Desingularization {
  Matrix<L> matrix;
  DesingularizationTrace<L> trace;
};

/// A pure singular B with A |= B, for a singular square A.
template <LayerRing L>
Desingularization<L> desingularize_pure(const Matrix<L>& a, const Limits& limits = {});

/// A pure B with A |= B whose rows still satisfy the witness.
template <LayerRing L>
Matrix<L> purify_dependent_rows(const Matrix<L>& a, const DependenceWitness<L>& witness);

}  // namespace elt
