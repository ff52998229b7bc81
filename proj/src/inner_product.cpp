#include "elt/inner_product.hpp"

#include <algorithm>

#include "elt/random.hpp"
#include "instantiate.hpp"

namespace elt {

template <LayerRing L>
Elt<L> standard_inner(const EltVector<L>& u, const EltVector<L>& v) {
  if constexpr (!L::kHasConjugation) {
    throw Error(ErrorKind::NoConjugation, std::string("layer ring ") + std::string(L::kName));
  }
  if (u.size() != v.size()) throw Error(ErrorKind::DimensionMismatch, "inner product of different lengths");
  Elt<L> sum;
  for (std::size_t i = 0; i < u.size(); ++i) sum = add(sum, mul(u[i], conj(v[i])));
  return sum;
}

template <LayerRing L>
bool is_orthogonal(const EltVector<L>& u, const EltVector<L>& v) {
  return standard_inner(u, v).is_zero_layer();
}

template <LayerRing L>
Matrix<L> gram(const std::vector<EltVector<L>>& vectors) {
  const std::size_t k = vectors.size();
  Matrix<L> g(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) g(i, j) = standard_inner(vectors[i], vectors[j]);
  return g;
}

template <LayerRing L>
Elt<L> gram_inner(const Matrix<L>& g, const EltVector<L>& u, const EltVector<L>& v) {
  if (g.rows() != u.size() || g.cols() != v.size()) throw Error(ErrorKind::DimensionMismatch, "Gram form");
  Elt<L> sum;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) sum = add(sum, mul(mul(u[i], g(i, j)), conj(v[j])));
  return sum;
}

namespace {

template <LayerRing L>
std::vector<bool> argmax(const EltVector<L>& v) {
  Elt<L> best;
  for (const auto& x : v)
    if (compare_tangible(x, best) > 0) best = x;
  std::vector<bool> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = compare_tangible(v[i], best) == 0;
  return out;
}

template <LayerRing L>
bool all_zero(const std::vector<L>& v) {
  return std::all_of(v.begin(), v.end(), [](const L& x) { return x.is_zero(); });
}

}  // namespace

template <LayerRing L>
CSReport<L> cauchy_schwarz_check(const EltVector<L>& u, const EltVector<L>& v) {
  CSReport<L> r;
  const Elt<L> uv = standard_inner(u, v);
  r.lhs = mul(uv, uv);
  r.rhs = mul(standard_inner(u, u), standard_inner(v, v));
  const int c = compare_tangible(r.lhs, r.rhs);
  r.inequality_holds = c <= 0;
  r.t_equal = c == 0;
  r.full_equal = r.lhs == r.rhs;

  const auto au = argmax(u);
  const auto av = argmax(v);
  for (std::size_t i = 0; i < u.size(); ++i) {
    r.s_u.push_back(au[i] ? u[i].layer() : L::zero());
    r.s_v.push_back(av[i] ? v[i].layer() : L::zero());
    if (au[i] && av[i]) r.common_argmax.push_back(i);
  }

  r.layers_dependent = true;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j)
      if (!(r.s_u[i] * r.s_v[j] - r.s_u[j] * r.s_v[i]).is_zero()) r.layers_dependent = false;

  if constexpr (ConjugateRing<L>) {
    if (all_zero(r.s_u) || all_zero(r.s_v)) {
      r.layers_real_multiple = true;
    } else if (r.layers_dependent) {
      std::size_t p = 0;
      while (r.s_u[p].is_zero()) ++p;
      const L ratio = r.s_v[p] * *r.s_u[p].unit_inverse();
      r.layers_real_multiple = ratio.is_real();
    }
  } else {
    r.layers_real_multiple = r.layers_dependent;
  }
  r.predicted_full_equal = r.t_equal && r.layers_dependent;
  return r;
}

template <LayerRing L>
bool is_orthonormal(const std::vector<EltVector<L>>& s) {
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!(standard_inner(s[i], s[i]) == Elt<L>::one())) return false;
    for (std::size_t j = i + 1; j < s.size(); ++j)
      if (!is_orthogonal(s[i], s[j])) return false;
  }
  return true;
}

template <LayerRing L>
EltVector<L> project(const std::vector<EltVector<L>>& s, const EltVector<L>& v) {
  if (!is_orthonormal(s)) throw Error(ErrorKind::NotOrthonormal, "projection basis");
  EltVector<L> u(v.size());
  for (const auto& b : s) {
    if (b.size() != v.size()) throw Error(ErrorKind::DimensionMismatch, "projection basis");
    const Elt<L> c = standard_inner(v, b);
    for (std::size_t i = 0; i < v.size(); ++i) u[i] = add(u[i], mul(c, b[i]));
  }
  return u;
}

template <LayerRing L>
BesselReport<L> bessel_check(const std::vector<EltVector<L>>& s, const EltVector<L>& v) {
  BesselReport<L> r;
  r.projection = project(s, v);
  r.uu = standard_inner(r.projection, r.projection);
  r.vv = standard_inner(v, v);
  r.inequality_holds = compare_tangible(r.uu, r.vv) <= 0;
  r.equality = compare_tangible(r.uu, r.vv) == 0;
  for (const auto& b : s) {
    const Elt<L> c = standard_inner(v, b);
    const Elt<L> sq = mul(c, c);
    if (compare_tangible(sq, mul(r.vv, standard_inner(b, b))) == 0 && compare_tangible(sq, r.vv) == 0) {
      r.criterion = true;
    }
  }
  return r;
}

template <LayerRing L>
EltVector<L> orthogonal_vector(const std::vector<EltVector<L>>& vectors, const Limits& limits) {
  if (vectors.empty()) throw Error(ErrorKind::DimensionMismatch, "need at least one vector");
  const std::size_t n = vectors.front().size();
  std::vector<EltVector<L>> rows;
  for (const auto& v : vectors) {
    if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "vector lengths differ");
    rows.push_back(conj(v));
  }
  const auto columns = Matrix<L>::from_rows(rows).column_vectors();
  const auto w = find_dependence_witness(columns, limits);
  if (!w) throw Error(ErrorKind::NotOrthogonal, "no vector is orthogonal to the whole family");
  return w->dense(n);
}

template <LayerRing L>
EltVector<L> extend_orthogonal(const std::vector<EltVector<L>>& vectors, const Limits& limits) {
  if (vectors.empty()) throw Error(ErrorKind::DimensionMismatch, "need at least one vector");
  const std::size_t n = vectors.front().size();
  if (vectors.size() >= n) throw Error(ErrorKind::DimensionMismatch, "family already has n vectors");
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    const auto& v = vectors[i];
    if (v.size() != n) throw Error(ErrorKind::DimensionMismatch, "vector lengths differ");
    if (!std::all_of(v.begin(), v.end(), [](const Elt<L>& x) { return x.is_pure(); })) {
      throw Error(ErrorKind::NotOrthogonal, "vector " + std::to_string(i) + " has a zero-layered entry");
    }
    if (std::all_of(v.begin(), v.end(), [](const Elt<L>& x) { return x.is_neg_inf(); })) {
      throw Error(ErrorKind::NotOrthogonal, "vector " + std::to_string(i) + " is all -inf");
    }
    for (std::size_t j = 0; j < i; ++j) {
      if (!is_orthogonal(vectors[j], v)) {
        throw Error(ErrorKind::NotOrthogonal,
                    "vectors " + std::to_string(j) + " and " + std::to_string(i) + " are not orthogonal");
      }
    }
  }
  return orthogonal_vector(vectors, limits);
}

template <LayerRing L>
std::vector<EltVector<L>> complete_orthogonal_set(const std::vector<EltVector<L>>& vectors, const Limits& limits) {
  std::vector<EltVector<L>> out = vectors;
  while (!out.empty() && out.size() < out.front().size()) out.push_back(extend_orthogonal(out, limits));
  return out;
}

namespace {

EltQi q(long t, long l) { return EltQi(Rational(t), GaussianRational(static_cast<int>(l))); }

}  // namespace

std::vector<ClaimResult> dependence_vs_orthogonality_suite(std::size_t random_instances, std::uint64_t seed) {
  std::vector<ClaimResult> out;
  Generator gen(seed);
  ValueMix pure;
  pure.neg_inf = 0.2;
  pure.zero_layer = 0.0;

  {
    ClaimResult c{"orthogonal pure nonzero families are independent", true, 0, ""};
    for (std::size_t s = 0; s < random_instances; ++s) {
      const std::size_t n = static_cast<std::size_t>(gen.integer(2, 4));
      EltVector<GaussianRational> seed_vec;
      do seed_vec = gen.vector<GaussianRational>(n, pure);
      while (std::all_of(seed_vec.begin(), seed_vec.end(), [](const EltQi& x) { return x.is_neg_inf(); }));
      const auto family = complete_orthogonal_set<GaussianRational>({seed_vec});
      ++c.instances;
      if (find_dependence_witness(family)) {
        c.passed = false;
        c.detail = "dependent orthogonal family found at instance " + std::to_string(s);
        break;
      }
    }
    out.push_back(c);
  }
  {
    ClaimResult c{"a vector orthogonal to a set can still create dependence", false, 1, ""};
    const std::vector<EltVector<GaussianRational>> v{
        {q(2, 1), q(2, -1), q(1, -1)}, {q(2, -1), q(2, 1), q(1, -1)}, {q(1, 1), q(1, 1), q(1, 2)}};
    const DependenceWitness<GaussianRational> w({0, 1, 2}, {q(0, 1), q(0, 1), q(0, 1)});
    const bool orth = is_orthogonal(v[0], v[2]) && is_orthogonal(v[1], v[2]);
    const bool pair_independent = !find_dependence_witness<GaussianRational>({v[0], v[1]});
    c.passed = orth && pair_independent && verify_witness(v, w);
    c.detail = "v1+v2+v3 has layer zero in every coordinate";
    out.push_back(c);
  }
  {
    ClaimResult c{"a nonsingular Gram matrix forces independence", true, 0, ""};
    ValueMix mix;
    for (std::size_t s = 0; s < random_instances; ++s) {
      const std::size_t n = static_cast<std::size_t>(gen.integer(2, 3));
      std::vector<EltVector<GaussianRational>> family;
      for (std::size_t i = 0; i < n; ++i) family.push_back(gen.vector<GaussianRational>(n, mix));
      if (is_singular(gram(family))) continue;
      ++c.instances;
      if (find_dependence_witness(family)) {
        c.passed = false;
        c.detail = "dependent family with nonsingular Gram matrix at instance " + std::to_string(s);
        break;
      }
    }
    out.push_back(c);
  }
  {
    ClaimResult c{"an independent pair can have a singular Gram matrix", false, 1, ""};
    const std::vector<EltVector<GaussianRational>> b{{q(2, 1), q(0, 1)}, {q(2, 1), q(1, 1)}};
    c.passed = !find_dependence_witness(b) && is_singular(gram(b));
    c.detail = "Gram matrix is all 4~1";
    out.push_back(c);
  }
  return out;
}

#define ELT_INSTANTIATE(L)                                                                              \
  template Elt<L> standard_inner(const EltVector<L>&, const EltVector<L>&);                            \
  template bool is_orthogonal(const EltVector<L>&, const EltVector<L>&);                               \
  template Matrix<L> gram(const std::vector<EltVector<L>>&);                                           \
  template Elt<L> gram_inner(const Matrix<L>&, const EltVector<L>&, const EltVector<L>&);              \
  template CSReport<L> cauchy_schwarz_check(const EltVector<L>&, const EltVector<L>&);                 \
  template bool is_orthonormal(const std::vector<EltVector<L>>&);                                      \
  template EltVector<L> project(const std::vector<EltVector<L>>&, const EltVector<L>&);                \
  template BesselReport<L> bessel_check(const std::vector<EltVector<L>>&, const EltVector<L>&);        \
  template EltVector<L> orthogonal_vector(const std::vector<EltVector<L>>&, const Limits&);            \
  template EltVector<L> extend_orthogonal(const std::vector<EltVector<L>>&, const Limits&);            \
  template std::vector<EltVector<L>> complete_orthogonal_set(const std::vector<EltVector<L>>&, const Limits&);
ELT_FOR_EACH_RING(ELT_INSTANTIATE)
#undef ELT_INSTANTIATE

}  // namespace elt
