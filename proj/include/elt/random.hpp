#pragma once

#include <algorithm>
#include <cstdint>
#include <random>
#include <type_traits>
#include <vector>

#include "elt/matrix.hpp"
#include "elt/puiseux.hpp"

namespace elt {

/// Shape of randomly drawn ELT values. Small integer ranges keep ties (and
/// hence cancellations) frequent.
struct ValueMix {
  double neg_inf = 0.15;
  double zero_layer = 0.15;
  long tangible_lo = -3;
  long tangible_hi = 3;
  long layer_bound = 3;
  /// Denominators of tangibles are drawn from 1..tangible_den.
  long tangible_den = 1;
};

/// Deterministic source of random ELT data.
class Generator {
 public:
  explicit Generator(std::uint64_t seed) : rng_(seed) {}

  std::mt19937_64& engine() { return rng_; }

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }
  bool chance(double p) { return std::bernoulli_distribution(p)(rng_); }

  Rational rational(long lo, long hi, long max_den = 1) {
    const long den = integer(1, max_den);
    return Rational(integer(lo * den, hi * den), den);
  }

  /// A nonzero layer with numerators in [-bound, bound].
  template <LayerRing L>
  L unit_layer(long bound) {
    if constexpr (std::is_same_v<L, Integer>) {
      return Integer(chance(0.5) ? 1 : -1);
    } else {
      return nonzero_layer<L>(bound);
    }
  }

  template <LayerRing L>
  L layer(long bound) {
    if constexpr (std::is_same_v<L, Integer>) {
      return Integer(integer(-bound, bound));
    } else if constexpr (std::is_same_v<L, Rational>) {
      return rational(-bound, bound, 2);
    } else {
      return L(Rational(integer(-bound, bound)), Rational(integer(-bound, bound)));
    }
  }

  /// A layer that is nonzero (not necessarily a unit in Z).
  template <LayerRing L>
  L nonzero_layer(long bound) {
    while (true) {
      L x = layer<L>(bound);
      if (!x.is_zero()) return x;
    }
  }

  template <LayerRing L>
  Elt<L> value(const ValueMix& mix = {}) {
    if (chance(mix.neg_inf)) return Elt<L>::neg_inf();
    Rational t = rational(mix.tangible_lo, mix.tangible_hi, mix.tangible_den);
    if (chance(mix.zero_layer)) return Elt<L>(std::move(t), L::zero());
    return Elt<L>(std::move(t), nonzero_layer<L>(mix.layer_bound));
  }

  template <LayerRing L>
  EltVector<L> vector(std::size_t n, const ValueMix& mix = {}) {
    EltVector<L> v;
    v.reserve(n);
    for (std::size_t i = 0; i < n; ++i) v.push_back(value<L>(mix));
    return v;
  }

  template <LayerRing L>
  Matrix<L> matrix(std::size_t rows, std::size_t cols, const ValueMix& mix = {}) {
    Matrix<L> m(rows, cols);
    for (std::size_t i = 0; i < rows; ++i)
      for (std::size_t j = 0; j < cols; ++j) m(i, j) = value<L>(mix);
    return m;
  }

  /// Up to `max_terms` terms with exponents in [-3, 3] (halves allowed).
  template <LayerRing L>
  PuiseuxPoly<L> series(std::size_t max_terms, long coef_bound = 3) {
    typename PuiseuxPoly<L>::Terms terms;
    const long count = integer(0, static_cast<long>(max_terms));
    for (long k = 0; k < count; ++k) terms[rational(-3, 3, 2)] = layer<L>(coef_bound);
    return PuiseuxPoly<L>(std::move(terms));
  }

 private:
  std::mt19937_64 rng_;
};

/// Gaussian rationals of modulus one: +-1, +-i and the Pythagorean points
/// (+-3 +- 4i)/5, (+-4 +- 3i)/5.
inline std::vector<GaussianRational> unit_modulus_layers() {
  std::vector<GaussianRational> out{GaussianRational(1), GaussianRational(-1), GaussianRational(Rational(0), Rational(1)),
                                    GaussianRational(Rational(0), Rational(-1))};
  for (const long a : {3L, 4L})
    for (const long sa : {1L, -1L})
      for (const long sb : {1L, -1L}) out.emplace_back(Rational(sa * a, 5), Rational(sb * (7 - a), 5));
  return out;
}

/// k pure vectors in dimension n (k <= n) with disjoint supports, each with a
/// single dominant entry [0]^u, |u| = 1, so the family is ELT orthonormal.
inline std::vector<EltVector<GaussianRational>> random_orthonormal_family(Generator& gen, std::size_t n,
                                                                          std::size_t k) {
  static const std::vector<GaussianRational> units = unit_modulus_layers();
  std::vector<std::size_t> coords(n);
  for (std::size_t i = 0; i < n; ++i) coords[i] = i;
  std::shuffle(coords.begin(), coords.end(), gen.engine());
  // Coordinate coords[i] belongs to vector owner[i]; the first k are dominant.
  std::vector<long> owner(n);
  for (std::size_t i = 0; i < n; ++i) owner[i] = i < k ? static_cast<long>(i) : gen.integer(-1, static_cast<long>(k) - 1);
  std::vector<EltVector<GaussianRational>> family(k, EltVector<GaussianRational>(n));
  for (std::size_t i = 0; i < n; ++i) {
    if (owner[i] < 0) continue;
    auto& v = family[static_cast<std::size_t>(owner[i])];
    if (i < k) {
      v[coords[i]] = EltQi(Rational(0), units[static_cast<std::size_t>(gen.integer(0, static_cast<long>(units.size()) - 1))]);
    } else if (!gen.chance(0.3)) {
      v[coords[i]] = EltQi(gen.rational(-3, -1, 2), gen.nonzero_layer<GaussianRational>(3));
    }
  }
  return family;
}

}  // namespace elt
