#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "elt/dependence.hpp"
#include "elt/matrix.hpp"
#include "elt/puiseux.hpp"
#include "elt/tropical_rank.hpp"

namespace elt {

// Scalar grammar:
//   element  := "-inf" | rational "~" layer
//   rational := ["-"] digits ["/" digits]
//   layer    := rational | rational ("+"|"-") rational "i" | rational "i"
// Z layers are integers; only Qi layers may carry an "i" part.

Rational parse_rational(std::string_view text);

template <LayerRing L>
L parse_layer(std::string_view text);

template <LayerRing L>
Elt<L> parse_elt(std::string_view text);

template <LayerRing L>
std::string format_elt(const Elt<L>& x);

/// Whitespace-separated elements on one line.
template <LayerRing L>
EltVector<L> parse_vector(std::string_view text);

template <LayerRing L>
std::string format_vector(const EltVector<L>& v);

/// Reads a witness written as one coefficient per vector, -inf marking
/// vectors outside the support.
template <LayerRing L>
DependenceWitness<L> parse_witness(std::string_view text);

/// Header of a matrix file: `<kind> <rows> <cols> [<ring>]`.
struct MatrixHeader {
  std::string kind;  // elt-matrix, tropical-matrix or puiseux-matrix
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string ring;  // empty when absent
  std::size_t line = 0;
};

/// Finds and parses the header line, skipping blank lines and # comments.
MatrixHeader read_header(std::string_view text);

/// `elt-matrix r c [ring]` followed by r lines of c elements. A ring named in
/// the header must match L unless `check_header_ring` is false.
template <LayerRing L>
Matrix<L> parse_matrix(std::string_view text, bool check_header_ring = true);

template <LayerRing L>
std::string format_matrix(const Matrix<L>& m, bool with_header = true);

/// `tropical-matrix r c` followed by r lines of rationals or -inf.
TropicalMatrix parse_tropical_matrix(std::string_view text);
std::string format_tropical_matrix(const TropicalMatrix& m);

// Series grammar: terms `coeff "t^" exponent` joined by " + " or " - ",
// e.g. `2t^-3 + 5t^1`; non-real coefficients are parenthesized, as in
// `(1+2i)t^3`; the zero series is `0`.

template <LayerRing L>
PuiseuxPoly<L> parse_series(std::string_view text);

template <LayerRing L>
std::string format_series(const PuiseuxPoly<L>& p);

/// `puiseux-matrix r c [ring]` followed by r lines of c comma-separated series.
template <LayerRing L>
PuiseuxMatrix<L> parse_puiseux_matrix(std::string_view text, bool check_header_ring = true);

template <LayerRing L>
std::string format_puiseux_matrix(const PuiseuxMatrix<L>& m, bool with_header = true);

}  // namespace elt
