#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "elt/dependence.hpp"
#include "elt/puiseux.hpp"

namespace elt {

/// Entrywise l t^(-a); -inf becomes 0. Throws ZeroLayerEntry on impure input.
template <LayerRing L>
PuiseuxMatrix<L> naive_monomial_lift(const Matrix<L>& b);

/// Support rows whose term alpha_i b_ij attains the column maximum; empty
/// when the column is -inf on the whole support.
template <LayerRing L>
std::vector<std::size_t> dominant_rows(const Matrix<L>& b, const DependenceWitness<L>& witness, std::size_t column);

/// A lift of the pure matrix B whose rows satisfy sum_i c_i R_i = 0 exactly,
/// c_i being the monomial lifts of the witness coefficients.
///
/// Every entry starts as its monomial lift; in each column one dominant row
/// (the smallest, unless `designated` names another) is then solved for.
template <LayerRing L>
PuiseuxMatrix<L> lift_dependent_matrix(const Matrix<L>& b, const DependenceWitness<L>& witness,
                                       const std::optional<std::vector<std::size_t>>& designated = std::nullopt);

struct KapranovBounds {
  std::size_t lower = 0;
  std::size_t upper = 0;
};

/// lower = submatrix rank; upper = least rank among the naive lift and the
/// row- and column-witness lifts.
template <LayerRing L>
KapranovBounds kapranov_bounds(const Matrix<L>& a, const Limits& limits = {});

}  // namespace elt
