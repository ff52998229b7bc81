#include "elt/lift.hpp"
#include "elt/oracles.hpp"
#include "elt/purify.hpp"
#include "elt/random.hpp"
#include "elt/rank.hpp"
#include "support.hpp"

namespace elt::test {
namespace {

/// sum_i c_i R_i with c_i the monomial lifts of the witness coefficients.
template <LayerRing L>
std::vector<PuiseuxPoly<L>> lifted_combination(const PuiseuxMatrix<L>& m, const DependenceWitness<L>& w) {
  std::vector<PuiseuxPoly<L>> out(m.cols());
  for (std::size_t k = 0; k < w.support().size(); ++k) {
    const auto c = monomial_lift(w.coefficients()[k]);
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += c * m(w.support()[k], j);
  }
  return out;
}

TEST(NaiveLift, Examples) {
  const auto pair = mat<Q>({"1~1 1~-1", "1~-1 1~1"});
  const auto lifted = naive_monomial_lift(pair);
  EXPECT_EQ(lifted(0, 0), series<Q>("1t^-1"));
  EXPECT_EQ(lifted(0, 1), series<Q>("-1t^-1"));
  EXPECT_EQ(puiseux_rank(lifted), 1u);
  EXPECT_EQ(submatrix_rank(pair), 1u);
  EXPECT_EQ(puiseux_rank(naive_monomial_lift(Matrix<Q>::identity(3))), 3u);
  EXPECT_GE(puiseux_rank(naive_monomial_lift(intro_matrix())), 2u);
  EXPECT_THROW(naive_monomial_lift(mat<Q>({"0~0"})), Error);
}

TEST(DependentLift, IntroColumnSolve) {
  const auto a = intro_matrix();
  const DependenceWitness<Q> w({0, 1, 2}, {q("1~1"), q("0~-1"), q("2~1")});
  const auto lifted = lift_dependent_matrix(a, w);
  EXPECT_EQ(lifted(0, 0), series<Q>("1t^-1 + 1t^1"));
  EXPECT_EQ(lifted(1, 0), series<Q>("1t^0"));
  EXPECT_EQ(lifted(2, 0), series<Q>("-1t^0"));
  EXPECT_EQ(eltrop(lifted(0, 0)), q("1~1"));
  EXPECT_EQ(eltrop_matrix(lifted), a);
  for (const auto& entry : lifted_combination(lifted, w)) EXPECT_TRUE(entry.is_zero());
  EXPECT_TRUE(puiseux_det(lifted).is_zero());
  EXPECT_EQ(puiseux_rank(lifted), 2u);
}

TEST(DependentLift, SignedPairNeedsNoCorrection) {
  const auto pair = mat<Q>({"1~1 1~-1", "1~-1 1~1"});
  const DependenceWitness<Q> w({0, 1}, {q("0~1"), q("0~1")});
  EXPECT_EQ(lift_dependent_matrix(pair, w), naive_monomial_lift(pair));
}

TEST(DependentLift, Errors) {
  const auto row = mat<Q>({"0~1 -inf"});
  try {
    lift_dependent_matrix(row, DependenceWitness<Q>({0}, {q("0~1")}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::InvalidWitness);
  }
  EXPECT_TRUE(lift_dependent_matrix(mat<Q>({"-inf -inf"}), DependenceWitness<Q>({0}, {q("0~1")}))(0, 0).is_zero());
  EXPECT_THROW(lift_dependent_matrix(mat<Q>({"0~0"}), DependenceWitness<Q>({0}, {q("0~1")})), Error);
  try {
    lift_dependent_matrix(mat<Z>({"-inf"}), DependenceWitness<Z>({0}, {z("0~1")}));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::NotAField);
  }
  const auto a = intro_matrix();
  const DependenceWitness<Q> w({0, 1, 2}, {q("1~1"), q("0~-1"), q("2~1")});
  EXPECT_THROW(lift_dependent_matrix(a, w, std::vector<std::size_t>{1, 1, 1}), Error);
}

TEST(Kapranov, Examples) {
  const auto intro = kapranov_bounds(intro_matrix());
  EXPECT_EQ(intro.lower, 2u);
  EXPECT_EQ(intro.upper, 2u);
  const auto id = kapranov_bounds(Matrix<Q>::identity(4));
  EXPECT_EQ(id.lower, 4u);
  EXPECT_EQ(id.upper, 4u);
  const auto pair = kapranov_bounds(mat<Q>({"1~1 1~-1", "1~-1 1~1"}));
  EXPECT_EQ(pair.lower, 1u);
  EXPECT_EQ(pair.upper, 1u);
  EXPECT_EQ(lift_rank_oracle(intro_matrix()), 2u);
  EXPECT_EQ(lift_rank_oracle(mat<Q>({"1~1 1~-1", "1~-1 1~1"})), 1u);
  EXPECT_EQ(lift_rank_oracle(Matrix<Q>::identity(3)), 3u);
}

TEST(LiftProperties, EltropOfNaiveLiftIsIdentity) {
  Generator gen(71);
  ValueMix pure;
  pure.zero_layer = 0.0;
  for (int s = 0; s < 300; ++s) {
    const auto a = gen.matrix<Qi>(3, 3, pure);
    const auto lifted = naive_monomial_lift(a);
    ASSERT_EQ(eltrop_matrix(lifted), a);
    ASSERT_GE(puiseux_rank(lifted), submatrix_rank(a));
  }
}

TEST(LiftProperties, DependentLiftIsExact) {
  Generator gen(72);
  int checked = 0;
  for (int s = 0; checked < 300 && s < 5000; ++s) {
    const auto n = static_cast<std::size_t>(gen.integer(2, 3));
    const auto a = gen.matrix<Q>(n, n);
    if (!is_singular(a)) continue;
    const auto b = desingularize_pure(a).matrix;
    const auto w = find_dependence_witness(b.row_vectors());
    ASSERT_TRUE(w.has_value());
    const auto lifted = lift_dependent_matrix(b, *w);
    ASSERT_EQ(eltrop_matrix(lifted), b);
    ASSERT_TRUE(puiseux_det(lifted).is_zero());
    for (const auto& entry : lifted_combination(lifted, *w)) ASSERT_TRUE(entry.is_zero());
    const auto k = kapranov_bounds(b);
    ASSERT_LE(k.lower, k.upper);
    ASSERT_EQ(k.lower, submatrix_rank(b));
    ++checked;
  }
  EXPECT_EQ(checked, 300);
}

}  // namespace
}  // namespace elt::test
