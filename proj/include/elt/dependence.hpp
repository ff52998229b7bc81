#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "elt/matrix.hpp"

namespace elt {

/// Certificate of linear dependence: coefficients a_i in R^x on a nonempty
/// support such that every coordinate of sum a_i v_i has layer zero.
template <LayerRing L>
class DependenceWitness {
 public:
  /// Throws InvalidWitness unless the support is nonempty and strictly
  /// increasing and every coefficient is finite with a nonzero layer.
  DependenceWitness(std::vector<std::size_t> support, std::vector<Elt<L>> coefficients);

  /// Reads a witness from one coefficient per vector, -inf marking indices
  /// outside the support.
  static DependenceWitness from_dense(const EltVector<L>& dense);

  const std::vector<std::size_t>& support() const { return support_; }
  const std::vector<Elt<L>>& coefficients() const { return coefficients_; }

  /// One coefficient per vector, -inf off the support.
  EltVector<L> dense(std::size_t count) const;

  friend bool operator==(const DependenceWitness&, const DependenceWitness&) = default;

 private:
  std::vector<std::size_t> support_;
  std::vector<Elt<L>> coefficients_;
};

/// Exhaustive search for a dependence witness among `vectors`.
///
/// Supports are tried by increasing size, then lexicographically; within a
/// support, dominance patterns (the argmax set of every coordinate) are tried
/// coordinate by coordinate in increasing bitmask order. Tangible feasibility
/// of a pattern is an exact difference-constraint problem with strict
/// inequalities; layer feasibility is a homogeneous linear system that must
/// admit a solution with no zero coordinate. The first feasible pattern is
/// returned, so the result is deterministic. Returns std::nullopt only after
/// exhausting every pattern. Requires a field of layers.
template <LayerRing L>
std::optional<DependenceWitness<L>> find_dependence_witness(const std::vector<EltVector<L>>& vectors,
                                                            const Limits& limits = {});

/// Recomputes sum a_i v_i and checks that every coordinate has layer zero.
template <LayerRing L>
bool verify_witness(const std::vector<EltVector<L>>& vectors, const DependenceWitness<L>& witness);

/// sum over the support of a_i v_i.
template <LayerRing L>
EltVector<L> witness_combination(const std::vector<EltVector<L>>& vectors,
                                 const DependenceWitness<L>& witness);

}  // namespace elt
