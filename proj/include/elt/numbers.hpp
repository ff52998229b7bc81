#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <optional>
#include <string>
#include <string_view>

namespace elt {

/// Exact rational number. Used for tangible values, Puiseux exponents and as
/// the layer ring Q.
class Rational {
 public:
  static constexpr std::string_view kName = "Q";
  static constexpr bool kIsField = true;
  static constexpr bool kIsIntegralDomain = true;
  static constexpr bool kHasConjugation = false;

  Rational() = default;
  Rational(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Rational(long num, long den) : v_(num, den) { v_.canonicalize(); }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }

  const mpq_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_integer() const { return v_.get_den() == 1; }
  bool is_unit() const { return !is_zero(); }
  std::optional<Rational> unit_inverse() const {
    if (is_zero()) return std::nullopt;
    return Rational(mpq_class(1 / v_));
  }

  std::string str() const { return v_.get_str(); }

  Rational operator-() const { return Rational(mpq_class(-v_)); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { v_ /= o.v_; return *this; }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class v_{0};
};

/// Arbitrary-precision integer; the layer ring Z (not a field, units are +-1).
class Integer {
 public:
  static constexpr std::string_view kName = "Z";
  static constexpr bool kIsField = false;
  static constexpr bool kIsIntegralDomain = true;
  static constexpr bool kHasConjugation = false;

  Integer() = default;
  Integer(int v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  Integer(long v) : v_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Integer(mpz_class v) : v_(std::move(v)) {}

  static Integer zero() { return Integer(0); }
  static Integer one() { return Integer(1); }

  const mpz_class& raw() const { return v_; }

  bool is_zero() const { return sgn(v_) == 0; }
  int sign() const { return sgn(v_); }
  bool is_unit() const { return v_ == 1 || v_ == -1; }
  std::optional<Integer> unit_inverse() const {
    if (!is_unit()) return std::nullopt;
    return *this;
  }

  std::string str() const { return v_.get_str(); }

  Integer operator-() const { return Integer(mpz_class(-v_)); }
  Integer& operator+=(const Integer& o) { v_ += o.v_; return *this; }
  Integer& operator-=(const Integer& o) { v_ -= o.v_; return *this; }
  Integer& operator*=(const Integer& o) { v_ *= o.v_; return *this; }

  friend Integer operator+(Integer a, const Integer& b) { return a += b; }
  friend Integer operator-(Integer a, const Integer& b) { return a -= b; }
  friend Integer operator*(Integer a, const Integer& b) { return a *= b; }
  friend bool operator==(const Integer& a, const Integer& b) { return a.v_ == b.v_; }

 private:
  mpz_class v_{0};
};

/// Element re + im*i of the Gaussian rationals Q(i), with the usual conjugate.
class GaussianRational {
 public:
  static constexpr std::string_view kName = "Qi";
  static constexpr bool kIsField = true;
  static constexpr bool kIsIntegralDomain = true;
  static constexpr bool kHasConjugation = true;

  GaussianRational() = default;
  GaussianRational(int re) : re_(re) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re) : re_(std::move(re)) {}  // NOLINT(google-explicit-constructor)
  GaussianRational(Rational re, Rational im) : re_(std::move(re)), im_(std::move(im)) {}

  static GaussianRational zero() { return {}; }
  static GaussianRational one() { return GaussianRational(1); }

  const Rational& re() const { return re_; }
  const Rational& im() const { return im_; }

  bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
  bool is_real() const { return im_.is_zero(); }
  bool is_unit() const { return !is_zero(); }
  /// |z|^2 = z * conj(z).
  Rational norm() const { return re_ * re_ + im_ * im_; }
  GaussianRational conj() const { return {re_, -im_}; }
  /// Nonnegativity predicate used for self-conjugate products.
  bool is_nonnegative_real() const { return im_.is_zero() && re_.sign() >= 0; }
  std::optional<GaussianRational> unit_inverse() const {
    if (is_zero()) return std::nullopt;
    const Rational n = norm();
    return GaussianRational(re_ / n, -im_ / n);
  }

  std::string str() const;

  GaussianRational operator-() const { return {-re_, -im_}; }
  GaussianRational& operator+=(const GaussianRational& o) {
    re_ += o.re_;
    im_ += o.im_;
    return *this;
  }
  GaussianRational& operator-=(const GaussianRational& o) {
    re_ -= o.re_;
    im_ -= o.im_;
    return *this;
  }
  GaussianRational& operator*=(const GaussianRational& o) {
    Rational re = re_ * o.re_ - im_ * o.im_;
    im_ = re_ * o.im_ + im_ * o.re_;
    re_ = std::move(re);
    return *this;
  }

  friend GaussianRational operator+(GaussianRational a, const GaussianRational& b) { return a += b; }
  friend GaussianRational operator-(GaussianRational a, const GaussianRational& b) { return a -= b; }
  friend GaussianRational operator*(GaussianRational a, const GaussianRational& b) { return a *= b; }
  friend bool operator==(const GaussianRational& a, const GaussianRational& b) = default;

 private:
  Rational re_;
  Rational im_;
};

inline std::string GaussianRational::str() const {
  if (im_.is_zero()) return re_.str();
  if (re_.is_zero()) return im_.str() + "i";
  return re_.str() + (im_.sign() > 0 ? "+" : "") + im_.str() + "i";
}

/// A commutative ring with exact equality, usable as the layer set of an ELT
/// algebra.
template <class L>
concept LayerRing = std::regular<L> && requires(const L& a, const L& b) {
  { a + b } -> std::same_as<L>;
  { a - b } -> std::same_as<L>;
  { a * b } -> std::same_as<L>;
  { -a } -> std::same_as<L>;
  { L::zero() } -> std::same_as<L>;
  { L::one() } -> std::same_as<L>;
  { a.is_zero() } -> std::convertible_to<bool>;
  { a.is_unit() } -> std::convertible_to<bool>;
  { a.unit_inverse() } -> std::same_as<std::optional<L>>;
  { a.str() } -> std::same_as<std::string>;
  { L::kName } -> std::convertible_to<std::string_view>;
  { L::kIsField } -> std::convertible_to<bool>;
  { L::kIsIntegralDomain } -> std::convertible_to<bool>;
  { L::kHasConjugation } -> std::convertible_to<bool>;
};

template <class L>
concept ConjugateRing = LayerRing<L> && L::kHasConjugation && requires(const L& a) {
  { a.conj() } -> std::same_as<L>;
  { a.is_nonnegative_real() } -> std::convertible_to<bool>;
};

static_assert(LayerRing<Integer>);
static_assert(LayerRing<Rational>);
static_assert(ConjugateRing<GaussianRational>);

/// Embeds a ring element into the fraction field used for exact linear algebra.
inline Rational to_field(const Integer& x) { return Rational(mpq_class(x.raw())); }
inline const Rational& to_field(const Rational& x) { return x; }
inline const GaussianRational& to_field(const GaussianRational& x) { return x; }

}  // namespace elt
