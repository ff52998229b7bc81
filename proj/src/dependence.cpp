#include "elt/dependence.hpp"

#include <algorithm>

#include "elt/detail/linear_algebra.hpp"
#include "instantiate.hpp"

namespace elt {

template <LayerRing L>
DependenceWitness<L>::DependenceWitness(std::vector<std::size_t> support, std::vector<Elt<L>> coefficients)
    : support_(std::move(support)), coefficients_(std::move(coefficients)) {
  if (support_.empty()) throw Error(ErrorKind::InvalidWitness, "empty support");
  if (support_.size() != coefficients_.size()) {
    throw Error(ErrorKind::InvalidWitness, "support and coefficient counts differ");
  }
  for (std::size_t k = 1; k < support_.size(); ++k) {
    if (support_[k] <= support_[k - 1]) throw Error(ErrorKind::InvalidWitness, "support not increasing");
  }
  for (const auto& c : coefficients_) {
    if (!c.is_nonzero_layer()) throw Error(ErrorKind::InvalidWitness, "coefficient outside R^x");
  }
}

template <LayerRing L>
DependenceWitness<L> DependenceWitness<L>::from_dense(const EltVector<L>& dense) {
  std::vector<std::size_t> support;
  std::vector<Elt<L>> coefficients;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i].is_neg_inf()) continue;
    support.push_back(i);
    coefficients.push_back(dense[i]);
  }
  return DependenceWitness(std::move(support), std::move(coefficients));
}

template <LayerRing L>
EltVector<L> DependenceWitness<L>::dense(std::size_t count) const {
  EltVector<L> out(count);
  for (std::size_t k = 0; k < support_.size(); ++k) {
    if (support_[k] < count) out[support_[k]] = coefficients_[k];
  }
  return out;
}

template <LayerRing L>
EltVector<L> witness_combination(const std::vector<EltVector<L>>& vectors,
                                 const DependenceWitness<L>& witness) {
  const std::size_t n = vectors.empty() ? 0 : vectors.front().size();
  EltVector<L> sum(n);
  for (std::size_t k = 0; k < witness.support().size(); ++k) {
    const std::size_t i = witness.support()[k];
    if (i >= vectors.size()) throw Error(ErrorKind::BadIndex, "witness index " + std::to_string(i));
    if (vectors[i].size() != n) throw Error(ErrorKind::DimensionMismatch, "vector lengths differ");
    for (std::size_t j = 0; j < n; ++j) sum[j] = add(sum[j], mul(witness.coefficients()[k], vectors[i][j]));
  }
  return sum;
}

template <LayerRing L>
bool verify_witness(const std::vector<EltVector<L>>& vectors, const DependenceWitness<L>& witness) {
  const auto sum = witness_combination(vectors, witness);
  return std::all_of(sum.begin(), sum.end(), [](const Elt<L>& x) { return x.is_zero_layer(); });
}

namespace {

template <LayerRing L>
class WitnessSearch {
 public:
  WitnessSearch(const std::vector<EltVector<L>>& vectors, std::vector<std::size_t> support)
      : vectors_(vectors), support_(std::move(support)) {
    const std::size_t dim = vectors_.front().size();
    for (std::size_t j = 0; j < dim; ++j) {
      std::vector<std::size_t> finite;
      for (std::size_t p = 0; p < support_.size(); ++p)
        if (entry(p, j).is_finite()) finite.push_back(p);
      if (!finite.empty()) coordinates_.push_back({j, std::move(finite)});
    }
  }

  std::optional<DependenceWitness<L>> run() {
    detail::DifferenceSystem tangibles(support_.size());
    detail::NullspaceTracker<L> layers(support_.size());
    return descend(0, tangibles, layers);
  }

 private:
  struct Coordinate {
    std::size_t index;
    std::vector<std::size_t> finite;  // positions p in the support
  };

  const Elt<L>& entry(std::size_t p, std::size_t j) const { return vectors_[support_[p]][j]; }

  std::optional<DependenceWitness<L>> descend(std::size_t level, const detail::DifferenceSystem& tangibles,
                                              const detail::NullspaceTracker<L>& layers) {
    if (level == coordinates_.size()) return assemble(tangibles, layers);
    const auto& coord = coordinates_[level];
    const std::size_t f = coord.finite.size();
    for (std::size_t mask = 1; mask < (std::size_t{1} << f); ++mask) {
      std::vector<std::size_t> dominant;
      std::vector<std::size_t> dominated;
      for (std::size_t b = 0; b < f; ++b) ((mask >> b) & 1 ? dominant : dominated).push_back(coord.finite[b]);

      detail::DifferenceSystem t = tangibles;
      if (!constrain(t, coord.index, dominant, dominated)) continue;

      detail::NullspaceTracker<L> l = layers;
      std::vector<L> equation(support_.size(), L::zero());
      bool nontrivial = false;
      for (std::size_t p : dominant) {
        const L& s = entry(p, coord.index).layer_ref();
        if (!s.is_zero()) {
          equation[p] = s;
          nontrivial = true;
        }
      }
      if (nontrivial && !l.add(std::move(equation))) continue;

      if (auto found = descend(level + 1, t, l)) return found;
    }
    return std::nullopt;
  }

  // a_p + t_p equal across the dominant set and strictly above the rest.
  bool constrain(detail::DifferenceSystem& sys, std::size_t j, const std::vector<std::size_t>& dominant,
                 const std::vector<std::size_t>& dominated) const {
    const std::size_t d0 = dominant.front();
    for (std::size_t k = 1; k < dominant.size(); ++k) {
      const std::size_t prev = dominant[k - 1];
      const std::size_t cur = dominant[k];
      const Rational diff = entry(prev, j).t() - entry(cur, j).t();
      if (!sys.add({prev, cur, diff, 0})) return false;
      if (!sys.add({cur, prev, -diff, 0})) return false;
    }
    for (std::size_t r : dominated) {
      if (!sys.add({d0, r, entry(d0, j).t() - entry(r, j).t(), -1})) return false;
    }
    return true;
  }

  std::optional<DependenceWitness<L>> assemble(const detail::DifferenceSystem& tangibles,
                                               const detail::NullspaceTracker<L>& layers) const {
    const auto a = tangibles.solution();
    const auto c = layers.nonvanishing_solution();
    if (!c) return std::nullopt;
    std::vector<Elt<L>> coefficients;
    for (std::size_t p = 0; p < support_.size(); ++p) coefficients.emplace_back(a[p], (*c)[p]);
    return DependenceWitness<L>(support_, std::move(coefficients));
  }

  const std::vector<EltVector<L>>& vectors_;
  std::vector<std::size_t> support_;
  std::vector<Coordinate> coordinates_;
};

}  // namespace

template <LayerRing L>
std::optional<DependenceWitness<L>> find_dependence_witness(const std::vector<EltVector<L>>& vectors,
                                                            const Limits& limits) {
  if constexpr (!L::kIsField) {
    throw Error(ErrorKind::NotAField, std::string("witness search over layer ring ") + std::string(L::kName));
  } else {
    if (vectors.empty()) return std::nullopt;
    const std::size_t dim = vectors.front().size();
    for (const auto& v : vectors)
      if (v.size() != dim) throw Error(ErrorKind::DimensionMismatch, "vector lengths differ");
    if (vectors.size() > limits.max_witness_vectors || dim > limits.max_witness_dim) {
      throw Error(ErrorKind::SizeBound, std::to_string(vectors.size()) + " vectors of dimension " +
                                            std::to_string(dim) + " exceed the witness-search bounds");
    }
    std::optional<DependenceWitness<L>> result;
    for (std::size_t size = 1; size <= vectors.size() && !result; ++size) {
      detail::for_each_combination(vectors.size(), size, [&](const std::vector<std::size_t>& support) {
        result = WitnessSearch<L>(vectors, support).run();
        return !result.has_value();
      });
    }
    return result;
  }
}

#define ELT_INSTANTIATE(L)                                                                          \
  template class DependenceWitness<L>;                                                             \
  template std::optional<DependenceWitness<L>> find_dependence_witness(                             \
      const std::vector<EltVector<L>>&, const Limits&);                                             \
  template bool verify_witness(const std::vector<EltVector<L>>&, const DependenceWitness<L>&);      \
  template EltVector<L> witness_combination(const std::vector<EltVector<L>>&, const DependenceWitness<L>&);
ELT_FOR_EACH_RING(ELT_INSTANTIATE)
#undef ELT_INSTANTIATE

}  // namespace elt
