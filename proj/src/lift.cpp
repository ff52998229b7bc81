#include "elt/lift.hpp"

#include <algorithm>

#include "elt/rank.hpp"
#include "instantiate.hpp"

namespace elt {

template <LayerRing L>
PuiseuxMatrix<L> naive_monomial_lift(const Matrix<L>& b) {
  PuiseuxMatrix<L> out(b.rows(), b.cols());
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) = monomial_lift(b(i, j));
  return out;
}

template <LayerRing L>
std::vector<std::size_t> dominant_rows(const Matrix<L>& b, const DependenceWitness<L>& witness,
                                       std::size_t column) {
  const auto& support = witness.support();
  Elt<L> total;
  for (std::size_t k = 0; k < support.size(); ++k) total = add(total, mul(witness.coefficients()[k], b(support[k], column)));
  std::vector<std::size_t> rows;
  if (total.is_neg_inf()) return rows;
  for (std::size_t k = 0; k < support.size(); ++k) {
    const auto& x = b(support[k], column);
    if (x.is_finite() && witness.coefficients()[k].t() + x.t() == total.t()) rows.push_back(support[k]);
  }
  return rows;
}

template <LayerRing L>
PuiseuxMatrix<L> lift_dependent_matrix(const Matrix<L>& b, const DependenceWitness<L>& witness,
                                       const std::optional<std::vector<std::size_t>>& designated) {
  if constexpr (!L::kIsField) {
    throw Error(ErrorKind::NotAField, std::string("lifting over layer ring ") + std::string(L::kName));
  } else {
    for (auto i : witness.support())
      if (i >= b.rows()) throw Error(ErrorKind::InvalidWitness, "support index " + std::to_string(i) + " out of range");
    if (designated && designated->size() != b.cols()) {
      throw Error(ErrorKind::DimensionMismatch, "one designated row per column");
    }
    PuiseuxMatrix<L> out = naive_monomial_lift(b);
    if (!verify_witness(b.row_vectors(), witness)) throw Error(ErrorKind::InvalidWitness, "witness does not verify on B");

    const auto& support = witness.support();
    std::vector<PuiseuxPoly<L>> c;
    for (const auto& a : witness.coefficients()) c.push_back(monomial_lift(a));

    for (std::size_t j = 0; j < b.cols(); ++j) {
      const auto dom = dominant_rows(b, witness, j);
      if (dom.empty()) continue;
      std::size_t pick = dom.front();
      if (designated) {
        pick = (*designated)[j];
        if (std::find(dom.begin(), dom.end(), pick) == dom.end()) {
          throw Error(ErrorKind::InvalidWitness, "designated row is not dominant in column " + std::to_string(j));
        }
      }
      PuiseuxPoly<L> rest;
      std::size_t pick_k = 0;
      for (std::size_t k = 0; k < support.size(); ++k) {
        if (support[k] == pick) {
          pick_k = k;
          continue;
        }
        rest += c[k] * out(support[k], j);
      }
      // c_pick is a monomial, so its inverse is one too.
      const auto& alpha = witness.coefficients()[pick_k];
      const auto inv = PuiseuxPoly<L>::monomial(*alpha.layer_ref().unit_inverse(), alpha.t());
      out(pick, j) = -(inv * rest);
    }
    return out;
  }
}

template <LayerRing L>
KapranovBounds kapranov_bounds(const Matrix<L>& a, const Limits& limits) {
  KapranovBounds kb;
  kb.lower = submatrix_rank(a, limits);
  kb.upper = puiseux_rank(naive_monomial_lift(a), limits);
  if constexpr (L::kIsField) {
    if (kb.upper > kb.lower && a.rows() <= limits.max_witness_vectors && a.cols() <= limits.max_witness_dim) {
      if (auto w = find_dependence_witness(a.row_vectors(), limits)) {
        kb.upper = std::min(kb.upper, puiseux_rank(lift_dependent_matrix(a, *w), limits));
      }
    }
    if (kb.upper > kb.lower && a.cols() <= limits.max_witness_vectors && a.rows() <= limits.max_witness_dim) {
      const Matrix<L> t = a.transpose();
      if (auto w = find_dependence_witness(t.row_vectors(), limits)) {
        kb.upper = std::min(kb.upper, puiseux_rank(lift_dependent_matrix(t, *w), limits));
      }
    }
  }
  return kb;
}

#define ELT_INSTANTIATE(L)                                                                               \
  template PuiseuxMatrix<L> naive_monomial_lift(const Matrix<L>&);                                      \
  template std::vector<std::size_t> dominant_rows(const Matrix<L>&, const DependenceWitness<L>&,          \
                                                  std::size_t);                                          \
  template PuiseuxMatrix<L> lift_dependent_matrix(const Matrix<L>&, const DependenceWitness<L>&,          \
                                                  const std::optional<std::vector<std::size_t>>&);       \
  template KapranovBounds kapranov_bounds(const Matrix<L>&, const Limits&);
ELT_FOR_EACH_RING(ELT_INSTANTIATE)
#undef ELT_INSTANTIATE

}  // namespace elt
