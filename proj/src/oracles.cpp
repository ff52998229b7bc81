#include "elt/oracles.hpp"

#include <algorithm>
#include <functional>

#include "elt/dependence.hpp"
#include "elt/lift.hpp"
#include "elt/random.hpp"
#include "elt/rank.hpp"
#include "instantiate.hpp"

namespace elt {

template <LayerRing L>
bool surpass_oracle(const Elt<L>& x, const Elt<L>& y, const OracleConfig& config) {
  std::vector<Elt<L>> candidates{Elt<L>::neg_inf()};
  for (const auto* base : {&x, &y}) {
    if (base->is_neg_inf()) continue;
    for (const auto& o : config.offsets) candidates.emplace_back(base->t() + o, L::zero());
  }
  return std::any_of(candidates.begin(), candidates.end(), [&](const Elt<L>& z) { return add(y, z) == x; });
}

template <LayerRing L>
Elt<L> laplace_det(const Matrix<L>& a) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "determinant needs a square matrix");
  const std::size_t n = a.rows();
  if (n == 0) return Elt<L>::one();
  if (n == 1) return a(0, 0);
  Elt<L> sum;
  for (std::size_t j = 0; j < n; ++j) {
    if (a(0, j).is_neg_inf()) continue;
    Matrix<L> sub(n - 1, n - 1);
    for (std::size_t i = 1; i < n; ++i)
      for (std::size_t c = 0, k = 0; c < n; ++c)
        if (c != j) sub(i - 1, k++) = a(i, c);
    Elt<L> term = mul(a(0, j), laplace_det(sub));
    if (j % 2 == 1) term = negate(term);
    sum = add(sum, term);
  }
  return sum;
}

template <LayerRing L>
bool dependence_oracle(const std::vector<EltVector<L>>& vectors, const Limits& limits) {
  const std::size_t m = vectors.size();
  if (m == 0) return false;
  const std::size_t n = vectors.front().size();
  if (m > n) return true;
  if (m > limits.max_det_size) throw Error(ErrorKind::SizeBound, "vector count exceeds determinant bound");

  std::vector<std::size_t> cols;
  std::function<bool(std::size_t)> nonsingular_minor = [&](std::size_t start) {
    if (cols.size() == m) {
      Matrix<L> sub(m, m);
      for (std::size_t i = 0; i < m; ++i)
        for (std::size_t k = 0; k < m; ++k) sub(i, k) = vectors[i][cols[k]];
      return !laplace_det(sub).is_zero_layer();
    }
    for (std::size_t c = start; c + (m - cols.size()) <= n; ++c) {
      cols.push_back(c);
      const bool found = nonsingular_minor(c + 1);
      cols.pop_back();
      if (found) return true;
    }
    return false;
  };
  return !nonsingular_minor(0);
}

namespace {

template <LayerRing L>
void lift_with_all_designations(const Matrix<L>& a, const OracleConfig& config, const Limits& limits,
                                std::size_t& best) {
  if (a.rows() > limits.max_witness_vectors || a.cols() > limits.max_witness_dim) return;
  const auto w = find_dependence_witness(a.row_vectors(), limits);
  if (!w) return;
  std::vector<std::vector<std::size_t>> choices;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    Elt<L> total;
    for (std::size_t k = 0; k < w->support().size(); ++k)
      total = add(total, mul(w->coefficients()[k], a(w->support()[k], j)));
    std::vector<std::size_t> dom;
    for (std::size_t k = 0; k < w->support().size() && total.is_finite(); ++k) {
      const auto& x = a(w->support()[k], j);
      if (x.is_finite() && compare_tangible(mul(w->coefficients()[k], x), total) == 0) dom.push_back(w->support()[k]);
    }
    if (dom.empty()) dom.push_back(0);
    choices.push_back(dom);
  }
  std::vector<std::size_t> pick(a.cols(), 0);
  for (std::size_t tried = 0; tried < config.max_designations; ++tried) {
    std::vector<std::size_t> designated;
    for (std::size_t j = 0; j < a.cols(); ++j) designated.push_back(choices[j][pick[j]]);
    best = std::min(best, puiseux_rank(lift_dependent_matrix(a, *w, designated), limits));
    std::size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == choices[pos].size()) pick[pos++] = 0;
    if (pos == pick.size()) break;
  }
}

}  // namespace

template <LayerRing L>
std::size_t lift_rank_oracle(const Matrix<L>& a, const Limits& limits, const OracleConfig& config) {
  std::size_t best = puiseux_rank(naive_monomial_lift(a), limits);
  if constexpr (L::kIsField) {
    lift_with_all_designations(a, config, limits, best);
    lift_with_all_designations(a.transpose(), config, limits, best);
  }
  return best;
}

std::vector<ClaimResult> oracle_report(const OracleConfig& config) {
  std::vector<ClaimResult> out;
  Generator gen(config.seed);

  {
    ClaimResult c{"surpasses agrees with the existential search", true, 0, ""};
    ValueMix mix;
    mix.tangible_den = 2;
    for (std::size_t s = 0; s < config.samples; ++s, ++c.instances) {
      const auto x = gen.value<Rational>(mix);
      const auto y = gen.chance(0.3) ? x : gen.value<Rational>(mix);
      if (surpasses(x, y) != surpass_oracle(x, y, config)) {
        c.passed = false;
        c.detail = "disagreement at sample " + std::to_string(s);
        break;
      }
    }
    out.push_back(c);
  }
  {
    ClaimResult c{"permutation and cofactor determinants agree", true, 0, ""};
    for (std::size_t s = 0; s < config.samples; ++s, ++c.instances) {
      const auto n = static_cast<std::size_t>(gen.integer(1, 4));
      const auto a = gen.matrix<GaussianRational>(n, n);
      if (!(det(a) == laplace_det(a))) {
        c.passed = false;
        c.detail = "disagreement at sample " + std::to_string(s);
        break;
      }
    }
    out.push_back(c);
  }
  {
    ClaimResult c{"witness search agrees with the minor-based dependence test", true, 0, ""};
    for (std::size_t s = 0; s < config.samples; ++s, ++c.instances) {
      const auto m = static_cast<std::size_t>(gen.integer(1, 4));
      const auto n = static_cast<std::size_t>(gen.integer(1, 4));
      const auto rows = gen.matrix<Rational>(m, n).row_vectors();
      if (find_dependence_witness(rows).has_value() != dependence_oracle(rows)) {
        c.passed = false;
        c.detail = "disagreement at sample " + std::to_string(s);
        break;
      }
    }
    out.push_back(c);
  }
  {
    ClaimResult c{"constructed lifts never beat the submatrix rank", true, 0, ""};
    ValueMix pure;
    pure.zero_layer = 0.0;
    std::size_t tight = 0;
    for (std::size_t s = 0; s < config.samples; ++s, ++c.instances) {
      const auto n = static_cast<std::size_t>(gen.integer(2, 3));
      const auto a = gen.matrix<Rational>(n, n, pure);
      const std::size_t lower = submatrix_rank(a);
      const std::size_t upper = lift_rank_oracle(a, {}, config);
      if (upper < lower) {
        c.passed = false;
        c.detail = "lift rank below submatrix rank at sample " + std::to_string(s);
        break;
      }
      tight += upper == lower ? 1 : 0;
    }
    if (c.passed) c.detail = std::to_string(tight) + " of " + std::to_string(c.instances) + " tight";
    out.push_back(c);
  }
  return out;
}

#define ELT_INSTANTIATE(L)                                                                   \
  template bool surpass_oracle(const Elt<L>&, const Elt<L>&, const OracleConfig&);          \
  template Elt<L> laplace_det(const Matrix<L>&);                                            \
  template bool dependence_oracle(const std::vector<EltVector<L>>&, const Limits&);         \
  template std::size_t lift_rank_oracle(const Matrix<L>&, const Limits&, const OracleConfig&);
ELT_FOR_EACH_RING(ELT_INSTANTIATE)
#undef ELT_INSTANTIATE

}  // namespace elt
