#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "elt/claims.hpp"
#include "elt/matrix.hpp"

namespace elt {

/// Brute-force reference implementations. They share no code with the
/// operations they check beyond scalar arithmetic.
struct OracleConfig {
  /// Offsets added to input tangibles to form the candidate grid.
  std::vector<Rational> offsets{Rational(-1), Rational(-1, 2), Rational(0), Rational(1, 2), Rational(1)};
  /// Cap on designated-index combinations tried per witness.
  std::size_t max_designations = 4096;
  std::uint64_t seed = 20240601;
  std::size_t samples = 300;
};

/// x |= y decided by searching z in {-inf} u {q~0} over a finite grid.
template <LayerRing L>
bool surpass_oracle(const Elt<L>& x, const Elt<L>& y, const OracleConfig& config = {});

/// Determinant by cofactor expansion along the first row.
template <LayerRing L>
Elt<L> laplace_det(const Matrix<L>& a);

/// Dependence decided as: the stacked matrix has no nonsingular square
/// submatrix of size equal to the vector count.
template <LayerRing L>
bool dependence_oracle(const std::vector<EltVector<L>>& vectors, const Limits& limits = {});

/// Least Puiseux rank over the naive lift and every row- or column-witness
/// lift with any admissible choice of designated rows.
template <LayerRing L>
std::size_t lift_rank_oracle(const Matrix<L>& a, const Limits& limits = {}, const OracleConfig& config = {});

/// Cross-checks the main operations against the oracles on seeded random
/// inputs; one entry per claim.
std::vector<ClaimResult> oracle_report(const OracleConfig& config = {});

}  // namespace elt
