#include "elt/inner_product.hpp"
#include "elt/random.hpp"
#include "support.hpp"

namespace elt::test {
namespace {

using V = EltVector<Qi>;

V vq(const std::string& s) { return vec<Qi>(s); }

TEST(InnerProduct, Conjugation) {
  EXPECT_EQ(conj(qi("2~1+2i")), qi("2~1-2i"));
  EXPECT_EQ(conj(qi("-inf")), qi("-inf"));
  try {
    conj(q("1~1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NoConjugation);
  }
  Generator gen(81);
  for (int s = 0; s < 200; ++s) {
    const auto x = gen.value<Qi>();
    ASSERT_EQ(conj(conj(x)), x);
  }
}

TEST(InnerProduct, StandardProductExamples) {
  EXPECT_EQ(standard_inner(vq("2~1 0~1"), vq("2~1 1~1")), qi("4~1"));
  EXPECT_EQ(standard_inner(vq("2~0 0~1"), vq("0~1 1~0")), qi("2~0"));
  EXPECT_EQ(standard_inner(vq("-inf -inf"), vq("-inf -inf")), qi("-inf"));
  EXPECT_EQ(standard_inner(vq("0~1+2i"), vq("1~3i")), qi("1~6-3i"));
  EXPECT_THROW(standard_inner(vq("0~1"), vq("0~1 0~1")), Error);
  EXPECT_THROW(standard_inner(vec<Q>("0~1"), vec<Q>("0~1")), Error);
}

TEST(InnerProduct, Orthogonality) {
  EXPECT_TRUE(is_orthogonal(vq("2~1 2~-1 1~-1"), vq("1~1 1~1 1~2")));
  EXPECT_TRUE(is_orthogonal(vq("2~-1 2~1 1~-1"), vq("1~1 1~1 1~2")));
  EXPECT_EQ(standard_inner(vq("2~1 2~-1 1~-1"), vq("1~1 1~1 1~2")), qi("3~0"));
  EXPECT_EQ(standard_inner(vq("2~-1 2~1 1~-1"), vq("1~1 1~1 1~2")), qi("3~0"));
  EXPECT_TRUE(is_orthogonal(vq("0~1 -inf"), vq("-inf 0~1")));
  EXPECT_FALSE(is_orthogonal(vq("2~1 0~1"), vq("2~1 0~1")));
  // The two vectors of that example are not orthogonal to each other.
  EXPECT_EQ(standard_inner(vq("2~1 2~-1 1~-1"), vq("2~-1 2~1 1~-1")), qi("4~-2"));
}

TEST(InnerProduct, OrthogonalSetStillDependent) {
  const std::vector<V> v{vq("2~1 2~-1 1~-1"), vq("2~-1 2~1 1~-1"), vq("1~1 1~1 1~2")};
  const DependenceWitness<Qi> w({0, 1, 2}, {qi("0~1"), qi("0~1"), qi("0~1")});
  EXPECT_TRUE(verify_witness(v, w));
  EXPECT_EQ(witness_combination(v, w), vq("2~0 2~0 1~0"));
  EXPECT_FALSE(find_dependence_witness<Qi>({v[0], v[1]}).has_value());
}

TEST(Gram, Examples) {
  const auto g = gram<Qi>({vq("2~1 0~1"), vq("2~1 1~1")});
  EXPECT_EQ(g, mat<Qi>({"4~1 4~1", "4~1 4~1"}));
  EXPECT_TRUE(is_singular(g));
  EXPECT_FALSE(find_dependence_witness<Qi>({vq("2~1 0~1"), vq("2~1 1~1")}).has_value());
  EXPECT_EQ(gram(Matrix<Qi>::identity(3).row_vectors()), Matrix<Qi>::identity(3));
}

TEST(CauchySchwarz, Examples) {
  const auto eq = cauchy_schwarz_check(vq("2~1 0~1"), vq("2~1 1~1"));
  EXPECT_EQ(eq.lhs, qi("8~1"));
  EXPECT_EQ(eq.rhs, qi("8~1"));
  EXPECT_TRUE(eq.t_equal);
  EXPECT_TRUE(eq.full_equal);
  EXPECT_EQ(eq.s_u, (std::vector<Qi>{Qi(1), Qi(0)}));
  EXPECT_EQ(eq.s_v, (std::vector<Qi>{Qi(1), Qi(0)}));
  const auto strict = cauchy_schwarz_check(vq("2~0 0~1"), vq("0~1 1~0"));
  EXPECT_EQ(strict.lhs.t(), Q(4));
  EXPECT_EQ(strict.rhs.t(), Q(6));
  EXPECT_TRUE(strict.inequality_holds);
  EXPECT_FALSE(strict.t_equal);
  EXPECT_TRUE(strict.common_argmax.empty());
  const auto single = cauchy_schwarz_check(vq("0~1"), vq("0~1"));
  EXPECT_TRUE(single.full_equal);
}

TEST(CauchySchwarz, DependentLayersWithImaginaryRatio) {
  // s_u = (1) and s_v = (i) are dependent, yet <u,v>^2 = 0~-1 differs from
  // <u,u><v,v> = 0~1.
  const auto r = cauchy_schwarz_check(vq("0~1"), vq("0~1i"));
  EXPECT_EQ(r.lhs, qi("0~-1"));
  EXPECT_EQ(r.rhs, qi("0~1"));
  EXPECT_TRUE(r.t_equal);
  EXPECT_TRUE(r.layers_dependent);
  EXPECT_FALSE(r.layers_real_multiple);
  EXPECT_FALSE(r.full_equal);
  EXPECT_TRUE(r.predicted_full_equal);
}

TEST(InnerProductProperties, Axioms) {
  Generator gen(82);
  ValueMix pure;
  pure.zero_layer = 0.0;
  for (int s = 0; s < 1000; ++s) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 4));
    const auto u = gen.vector<Qi>(n), v = gen.vector<Qi>(n), w = gen.vector<Qi>(n);
    const auto a = gen.value<Qi>(), b = gen.value<Qi>();
    V lin(n);
    for (std::size_t i = 0; i < n; ++i) lin[i] = add(mul(a, u[i]), mul(b, v[i]));
    ASSERT_EQ(standard_inner(lin, w), add(mul(a, standard_inner(u, w)), mul(b, standard_inner(v, w))));
    ASSERT_EQ(standard_inner(v, u), conj(standard_inner(u, v)));
    const auto p = gen.vector<Qi>(n, pure);
    const auto pp = standard_inner(p, p);
    const bool all_neg_inf = std::all_of(p.begin(), p.end(), [](const EltQi& x) { return x.is_neg_inf(); });
    ASSERT_TRUE(pp.layer().is_nonnegative_real());
    ASSERT_EQ(pp.layer().is_zero(), all_neg_inf);
    // Gram identity for the standard basis.
    ASSERT_EQ(gram_inner(Matrix<Qi>::identity(n), u, v), standard_inner(u, v));
  }
}

TEST(InnerProductProperties, TangibleIgnoresLayers) {
  Generator gen(83);
  for (int s = 0; s < 1000; ++s) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 4));
    const auto u = gen.vector<Qi>(n), v = gen.vector<Qi>(n);
    V u2 = u, v2 = v;
    for (auto& x : u2)
      if (x.is_finite()) x = EltQi(x.t(), gen.layer<Qi>(3));
    for (auto& x : v2)
      if (x.is_finite()) x = EltQi(x.t(), gen.layer<Qi>(3));
    ASSERT_EQ(compare_tangible(standard_inner(u, v), standard_inner(u2, v2)), 0);
    if (standard_inner(u, u).is_neg_inf()) {
      ASSERT_TRUE(std::all_of(u.begin(), u.end(), [](const EltQi& x) { return x.is_neg_inf(); }));
    }
  }
}

TEST(InnerProductProperties, CauchySchwarz) {
  Generator gen(84);
  for (int s = 0; s < 1000; ++s) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 4));
    const auto u = gen.vector<Qi>(n), v = gen.vector<Qi>(n);
    const auto r = cauchy_schwarz_check(u, v);
    ASSERT_TRUE(r.inequality_holds);
    ASSERT_EQ(r.t_equal, !r.common_argmax.empty());
    if (r.full_equal) {
      ASSERT_TRUE(r.t_equal);
    }
    ASSERT_EQ(r.full_equal, r.t_equal && r.layers_real_multiple);
    const auto uv = standard_inner(u, v);
    ASSERT_TRUE(compare_tangible(uv, standard_inner(u, u)) <= 0 || compare_tangible(uv, standard_inner(v, v)) <= 0);
  }
}

TEST(InnerProductProperties, SomeSelfProductDominates) {
  Generator gen(85);
  for (int s = 0; s < 500; ++s) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 4));
    const auto k = static_cast<std::size_t>(gen.integer(1, 4));
    std::vector<V> family;
    for (std::size_t i = 0; i < k; ++i) family.push_back(gen.vector<Qi>(n));
    bool found = false;
    for (std::size_t p = 0; p < k && !found; ++p) {
      EltQi others;
      for (std::size_t j = 0; j < k; ++j)
        if (j != p) others = add(others, standard_inner(family[j], family[p]));
      found = compare_tangible(standard_inner(family[p], family[p]), others) >= 0;
    }
    ASSERT_TRUE(found);
  }
}

TEST(Bessel, Examples) {
  const auto r = bessel_check<Qi>({vq("0~1 -inf")}, vq("3~2 1~1"));
  EXPECT_EQ(r.projection, vq("3~2 -inf"));
  EXPECT_EQ(r.uu.t(), Q(6));
  EXPECT_EQ(r.vv.t(), Q(6));
  EXPECT_TRUE(r.equality);
  EXPECT_TRUE(r.criterion);
  const auto basis = Matrix<Qi>::identity(2).row_vectors();
  const auto full = bessel_check(basis, vq("1~2 3~1+1i"));
  EXPECT_EQ(compare_tangible(full.uu, full.vv), 0);
  const auto orth = bessel_check<Qi>({vq("0~1 -inf -inf")}, vq("-inf 5~1 -inf"));
  EXPECT_EQ(orth.projection, vq("-inf -inf -inf"));
  EXPECT_TRUE(orth.uu.is_neg_inf());
  EXPECT_EQ(orth.vv.t(), Q(10));
  EXPECT_TRUE(orth.inequality_holds);
  EXPECT_FALSE(orth.equality);
  try {
    project<Qi>({vq("0~2 -inf")}, vq("0~1 0~1"));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotOrthonormal);
  }
}

TEST(BesselProperties, InequalityAndEqualityCriterion) {
  Generator gen(86);
  for (int s = 0; s < 1000; ++s) {
    const auto n = static_cast<std::size_t>(gen.integer(1, 4));
    const auto k = static_cast<std::size_t>(gen.integer(1, static_cast<long>(n)));
    const auto family = random_orthonormal_family(gen, n, k);
    ASSERT_TRUE(is_orthonormal(family));
    const auto v = gen.vector<Qi>(n);
    const auto r = bessel_check(family, v);
    ASSERT_TRUE(r.inequality_holds);
    ASSERT_EQ(r.equality, r.criterion);
  }
}

TEST(Orthogonalize, Examples) {
  EXPECT_EQ(extend_orthogonal<Qi>({vq("0~1 0~1")}), vq("0~1 0~-1"));
  EXPECT_EQ(standard_inner(vq("0~1 0~-1"), vq("0~1 0~1")), qi("0~0"));
  const auto v2 = extend_orthogonal<Qi>({vq("0~1 -inf")});
  EXPECT_TRUE(is_orthogonal(v2, vq("0~1 -inf")));
  EXPECT_TRUE(std::all_of(v2.begin(), v2.end(), [](const EltQi& x) { return x.is_pure(); }));
  const std::vector<V> pair_family{vq("2~1 2~-1 1~-1"), vq("2~-1 2~1 1~-1")};
  const auto v = orthogonal_vector(pair_family);
  EXPECT_TRUE(is_orthogonal(pair_family[0], v));
  EXPECT_TRUE(is_orthogonal(pair_family[1], v));
  EXPECT_FALSE(std::all_of(v.begin(), v.end(), [](const EltQi& x) { return x.is_neg_inf(); }));
  try {
    extend_orthogonal(pair_family);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotOrthogonal);
  }
  EXPECT_THROW(extend_orthogonal<Qi>({vq("0~0 0~1")}), Error);
  EXPECT_THROW(extend_orthogonal<Qi>({vq("-inf -inf")}), Error);
  EXPECT_THROW(extend_orthogonal<Qi>({vq("0~1")}), Error);
}

TEST(OrthogonalizeProperties, CompletedFamiliesAreOrthogonalAndIndependent) {
  Generator gen(87);
  ValueMix pure;
  pure.zero_layer = 0.0;
  pure.neg_inf = 0.2;
  for (int s = 0; s < 200; ++s) {
    const auto n = static_cast<std::size_t>(gen.integer(2, 4));
    V seed;
    do seed = gen.vector<Qi>(n, pure);
    while (std::all_of(seed.begin(), seed.end(), [](const EltQi& x) { return x.is_neg_inf(); }));
    const auto family = complete_orthogonal_set<Qi>({seed});
    ASSERT_EQ(family.size(), n);
    for (std::size_t i = 0; i < n; ++i) {
      ASSERT_TRUE(std::all_of(family[i].begin(), family[i].end(), [](const EltQi& x) { return x.is_pure(); }));
      for (std::size_t j = 0; j < i; ++j) ASSERT_TRUE(is_orthogonal(family[i], family[j]));
    }
    ASSERT_FALSE(find_dependence_witness(family).has_value());
  }
}

TEST(OrthogonalityClaims, SuitePasses) {
  for (const auto& c : dependence_vs_orthogonality_suite(100, 3)) {
    EXPECT_TRUE(c.passed) << c.name << ": " << c.detail;
    EXPECT_GT(c.instances, 0u) << c.name;
  }
}

}  // namespace
}  // namespace elt::test
