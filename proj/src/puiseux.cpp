#include "elt/puiseux.hpp"

#include <algorithm>

#include "instantiate.hpp"

namespace elt {

template <LayerRing L>
Matrix<L> eltrop_matrix(const PuiseuxMatrix<L>& m) {
  Matrix<L> out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = eltrop(m(i, j));
  return out;
}

template <LayerRing L>
PuiseuxPoly<L> puiseux_det(const PuiseuxMatrix<L>& m, const Limits& limits) {
  if (m.rows() != m.cols()) throw Error(ErrorKind::NotSquare, "determinant needs a square matrix");
  const std::size_t n = m.rows();
  if (n > limits.max_det_size) throw Error(ErrorKind::SizeBound, "n exceeds determinant bound");
  PuiseuxPoly<L> sum;
  for_each_permutation(n, [&](const std::vector<std::size_t>& perm, bool odd) {
    PuiseuxPoly<L> track = PuiseuxPoly<L>::constant(odd ? -L::one() : L::one());
    for (std::size_t i = 0; i < n && !track.is_zero(); ++i) track *= m(i, perm[i]);
    sum += track;
  });
  return sum;
}

template <LayerRing L>
std::size_t puiseux_rank(const PuiseuxMatrix<L>& m, const Limits& limits) {
  if constexpr (!L::kIsIntegralDomain) {
    throw Error(ErrorKind::NotIntegralDomain, std::string("layer ring ") + std::string(L::kName));
  } else {
    const std::size_t top = std::min(m.rows(), m.cols());
    if (top > limits.max_det_size) throw Error(ErrorKind::SizeBound, "min dimension exceeds determinant bound");
    for (std::size_t k = top; k >= 1; --k) {
      bool found = false;
      detail::for_each_combination(m.rows(), k, [&](const std::vector<std::size_t>& rows) {
        detail::for_each_combination(m.cols(), k, [&](const std::vector<std::size_t>& cols) {
          PuiseuxMatrix<L> sub(k, k);
          for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < k; ++j) sub(i, j) = m(rows[i], cols[j]);
          found = !puiseux_det(sub, limits).is_zero();
          return !found;
        });
        return !found;
      });
      if (found) return k;
    }
    return 0;
  }
}

#define ELT_INSTANTIATE(L)                                                          \
  template Matrix<L> eltrop_matrix(const PuiseuxMatrix<L>&);                       \
  template PuiseuxPoly<L> puiseux_det(const PuiseuxMatrix<L>&, const Limits&);     \
  template std::size_t puiseux_rank(const PuiseuxMatrix<L>&, const Limits&);
ELT_FOR_EACH_RING(ELT_INSTANTIATE)
#undef ELT_INSTANTIATE

}  // namespace elt
