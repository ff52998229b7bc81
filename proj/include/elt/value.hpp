#pragma once

#include <optional>
#include <utility>

#include "elt/errors.hpp"
#include "elt/numbers.hpp"

namespace elt {

/// An element of the ELT algebra over tangible group Q and layer ring L,
/// extended by the formal bottom element -inf.
///
/// A finite value [a]^l is written `a~l` in text form. -inf has layer zero and
/// no tangible value; `tangible()` reports it as std::nullopt.
template <LayerRing L>
class Elt {
 public:
  using Layer = L;

  /// Default-constructed values are -inf.
  Elt() = default;
  Elt(Rational tangible, L layer)
      : finite_(true), tangible_(std::move(tangible)), layer_(std::move(layer)) {}

  static Elt neg_inf() { return Elt(); }
  /// [0]^1, the multiplicative identity.
  static Elt one() { return Elt(Rational(0), L::one()); }
  /// [0]^-1, which plays the role of -1.
  static Elt minus_one() { return Elt(Rational(0), -L::one()); }
  /// [0]^0, idempotent for both operations.
  static Elt zero_layered_one() { return Elt(Rational(0), L::zero()); }

  bool is_neg_inf() const { return !finite_; }
  bool is_finite() const { return finite_; }

  /// Tangible value t(x); std::nullopt is the bottom marker for -inf.
  std::optional<Rational> tangible() const {
    if (!finite_) return std::nullopt;
    return tangible_;
  }
  /// Tangible value of a finite element. Reading it from -inf is a logic error.
  const Rational& t() const { return tangible_; }

  /// Sorting map s(x); s(-inf) = 0.
  L layer() const { return finite_ ? layer_ : L::zero(); }
  const L& layer_ref() const { return layer_; }

  /// x in Z(R) or x = -inf.
  bool is_zero_layer() const { return !finite_ || layer_.is_zero(); }
  /// x in R^x, i.e. finite with a nonzero layer.
  bool is_nonzero_layer() const { return finite_ && !layer_.is_zero(); }
  /// x in R^x or x = -inf (the image of tropicalization).
  bool is_pure() const { return !finite_ || !layer_.is_zero(); }

  friend bool operator==(const Elt& a, const Elt& b) {
    if (a.finite_ != b.finite_) return false;
    if (!a.finite_) return true;
    return a.tangible_ == b.tangible_ && a.layer_ == b.layer_;
  }

 private:
  bool finite_ = false;
  Rational tangible_;
  L layer_;
};

using EltZ = Elt<Integer>;
using EltQ = Elt<Rational>;
using EltQi = Elt<GaussianRational>;

/// Compares tangible values with -inf below every finite value.
template <LayerRing L>
int compare_tangible(const Elt<L>& x, const Elt<L>& y) {
  if (x.is_neg_inf() || y.is_neg_inf()) {
    return (x.is_neg_inf() ? 0 : 1) - (y.is_neg_inf() ? 0 : 1);
  }
  const auto c = x.t() <=> y.t();
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

/// Larger tangible wins; equal tangibles add layers; -inf is neutral.
template <LayerRing L>
Elt<L> add(const Elt<L>& x, const Elt<L>& y) {
  if (x.is_neg_inf()) return y;
  if (y.is_neg_inf()) return x;
  const auto c = x.t() <=> y.t();
  if (c > 0) return x;
  if (c < 0) return y;
  return Elt<L>(x.t(), x.layer_ref() + y.layer_ref());
}

/// Tangibles add, layers multiply; -inf is absorbing.
template <LayerRing L>
Elt<L> mul(const Elt<L>& x, const Elt<L>& y) {
  if (x.is_neg_inf() || y.is_neg_inf()) return Elt<L>();
  return Elt<L>(x.t() + y.t(), x.layer_ref() * y.layer_ref());
}

template <LayerRing L>
Elt<L> operator+(const Elt<L>& x, const Elt<L>& y) { return add(x, y); }
template <LayerRing L>
Elt<L> operator*(const Elt<L>& x, const Elt<L>& y) { return mul(x, y); }
template <LayerRing L>
Elt<L>& operator+=(Elt<L>& x, const Elt<L>& y) { return x = add(x, y); }
template <LayerRing L>
Elt<L>& operator*=(Elt<L>& x, const Elt<L>& y) { return x = mul(x, y); }

/// The negation map (-)x = [0]^-1 x.
template <LayerRing L>
Elt<L> negate(const Elt<L>& x) {
  if (x.is_neg_inf()) return x;
  return Elt<L>(x.t(), -x.layer_ref());
}

/// x + (-)x, which is [t(x)]^0 for finite x.
template <LayerRing L>
Elt<L> circ(const Elt<L>& x) {
  if (x.is_neg_inf()) return x;
  return Elt<L>(x.t(), L::zero());
}

/// [-t(x)]^(1/s(x)); requires a field and a nonzero layer.
template <LayerRing L>
Elt<L> scalar_inverse(const Elt<L>& x) {
  if (x.is_zero_layer()) throw Error(ErrorKind::ZeroLayerNotInvertible, "scalar has layer zero");
  if constexpr (!L::kIsField) {
    throw Error(ErrorKind::NotAField, std::string("layer ring ") + std::string(L::kName));
  } else {
    return Elt<L>(-x.t(), *x.layer_ref().unit_inverse());
  }
}

/// x |= y, i.e. x = y + z for some zero-layered z. Decided by the closed form:
/// x = y, or s(x) = 0 with y = -inf, or s(x) = 0 with t(x) > t(y).
template <LayerRing L>
bool surpasses(const Elt<L>& x, const Elt<L>& y) {
  if (x == y) return true;
  if (x.is_neg_inf() || !x.layer_ref().is_zero()) return false;
  return y.is_neg_inf() || x.t() > y.t();
}

/// a nabla b iff a + (-)b has layer zero.
template <LayerRing L>
bool nabla(const Elt<L>& x, const Elt<L>& y) {
  return add(x, negate(y)).is_zero_layer();
}

/// Multiplies the layer by a ring scalar: [0]^c * x.
template <LayerRing L>
Elt<L> scale_layer(const L& c, const Elt<L>& x) {
  if (x.is_neg_inf()) return x;
  return Elt<L>(x.t(), c * x.layer_ref());
}

}  // namespace elt
