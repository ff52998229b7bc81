#pragma once

#include <gtest/gtest.h>

#include <string>
#include <vector>

#include "elt/text.hpp"

namespace elt::test {

using Q = Rational;
using Qi = GaussianRational;
using Z = Integer;

inline EltQ q(const std::string& s) { return parse_elt<Rational>(s); }
inline EltQi qi(const std::string& s) { return parse_elt<GaussianRational>(s); }
inline EltZ z(const std::string& s) { return parse_elt<Integer>(s); }

template <LayerRing L>
EltVector<L> vec(const std::string& s) {
  return parse_vector<L>(s);
}

/// Rows given as scalar-grammar lines.
template <LayerRing L>
Matrix<L> mat(const std::vector<std::string>& rows) {
  std::vector<EltVector<L>> parsed;
  for (const auto& r : rows) parsed.push_back(parse_vector<L>(r));
  return Matrix<L>::from_rows(parsed);
}

template <LayerRing L>
PuiseuxPoly<L> series(const std::string& s) {
  return parse_series<L>(s);
}

inline Matrix<Rational> intro_matrix() { return mat<Rational>({"1~1 2~1 0~1", "0~1 3~1 2~1", "0~-1 0~1 0~1"}); }

}  // namespace elt::test

namespace elt {

// Readable failure messages.
template <LayerRing L>
void PrintTo(const Elt<L>& x, std::ostream* os) {
  *os << format_elt(x);
}

template <LayerRing L>
void PrintTo(const Matrix<L>& m, std::ostream* os) {
  *os << "\n" << format_matrix(m);
}

template <LayerRing L>
void PrintTo(const PuiseuxPoly<L>& p, std::ostream* os) {
  *os << format_series(p);
}

}  // namespace elt
