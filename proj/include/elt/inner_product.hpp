#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "elt/claims.hpp"
#include "elt/dependence.hpp"
#include "elt/matrix.hpp"

namespace elt {

/// Conjugates the layer. Throws NoConjugation for rings without one.
template <LayerRing L>
Elt<L> conj(const Elt<L>& x) {
  if constexpr (!L::kHasConjugation) {
    throw Error(ErrorKind::NoConjugation, std::string("layer ring ") + std::string(L::kName));
  } else {
    if (x.is_neg_inf()) return x;
    return Elt<L>(x.t(), x.layer_ref().conj());
  }
}

template <LayerRing L>
EltVector<L> conj(const EltVector<L>& v) {
  EltVector<L> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(conj(x));
  return out;
}

/// sum_i u_i conj(v_i).
template <LayerRing L>
Elt<L> standard_inner(const EltVector<L>& u, const EltVector<L>& v);

/// s(<u, v>) = 0.
template <LayerRing L>
bool is_orthogonal(const EltVector<L>& u, const EltVector<L>& v);

/// G_ij = <v_i, v_j>.
template <LayerRing L>
Matrix<L> gram(const std::vector<EltVector<L>>& vectors);

/// u^t G conj(v): the inner product a Gram matrix of the standard basis defines.
template <LayerRing L>
Elt<L> gram_inner(const Matrix<L>& g, const EltVector<L>& u, const EltVector<L>& v);

/// Both sides of the Cauchy-Schwarz inequality for the standard product and
/// the data of its equality characterization.
template <LayerRing L>
struct CSReport {
  Elt<L> lhs;  // <u,v>^2
  Elt<L> rhs;  // <u,u><v,v>
  bool inequality_holds = false;
  bool t_equal = false;
  /// Coordinates where both u and v attain their maximal tangible value.
  std::vector<std::size_t> common_argmax;
  /// Layers of u (resp. v) on its own argmax coordinates, zero elsewhere.
  std::vector<L> s_u;
  std::vector<L> s_v;
  /// lhs == rhs exactly.
  bool full_equal = false;
  /// s_u, s_v linearly dependent over the layer field.
  bool layers_dependent = false;
  /// One of s_u, s_v is a real multiple of the other.
  bool layers_real_multiple = false;
  /// The stated criterion: t_equal and layers_dependent.
  bool predicted_full_equal = false;
};

template <LayerRing L>
CSReport<L> cauchy_schwarz_check(const EltVector<L>& u, const EltVector<L>& v);

/// Pairwise orthogonal with <v_i, v_i> = 0~1.
template <LayerRing L>
bool is_orthonormal(const std::vector<EltVector<L>>& s);

template <LayerRing L>
struct BesselReport {
  EltVector<L> projection;  // u = sum_i <v, v_i> v_i
  Elt<L> uu;
  Elt<L> vv;
  bool inequality_holds = false;
  bool equality = false;
  /// Some i has t(<v, v_i>^2) = t(<v, v><v_i, v_i>) = t(<v, v>).
  bool criterion = false;
};

/// Throws NotOrthonormal unless `s` is ELT orthonormal.
template <LayerRing L>
EltVector<L> project(const std::vector<EltVector<L>>& s, const EltVector<L>& v);

template <LayerRing L>
BesselReport<L> bessel_check(const std::vector<EltVector<L>>& s, const EltVector<L>& v);

/// A vector in (R^x u {-inf})^n, not all -inf, orthogonal to every input,
/// read off a column-dependence witness of the matrix with rows conj(v_i).
/// The inputs need not be orthogonal to each other.
template <LayerRing L>
EltVector<L> orthogonal_vector(const std::vector<EltVector<L>>& vectors, const Limits& limits = {});

/// One more vector for a pure, nonzero, pairwise-orthogonal family of k < n
/// vectors. Throws NotOrthogonal if the family does not qualify.
template <LayerRing L>
EltVector<L> extend_orthogonal(const std::vector<EltVector<L>>& vectors, const Limits& limits = {});

/// Repeats extend_orthogonal until the family has n vectors.
template <LayerRing L>
std::vector<EltVector<L>> complete_orthogonal_set(const std::vector<EltVector<L>>& vectors,
                                                  const Limits& limits = {});

/// Orthogonal pure nonzero families are independent; a vector orthogonal to
/// a set can still create dependence; a nonsingular Gram matrix forces
/// independence while the converse fails.
std::vector<ClaimResult> dependence_vs_orthogonality_suite(std::size_t random_instances = 200,
                                                           std::uint64_t seed = 7);

}  // namespace elt
