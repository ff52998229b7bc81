#pragma once

#include <json.hpp>

#include <optional>
#include <vector>

#include "elt/claims.hpp"
#include "elt/dependence.hpp"
#include "elt/inner_product.hpp"
#include "elt/lift.hpp"
#include "elt/purify.hpp"
#include "elt/rank.hpp"
#include "elt/text.hpp"
#include "elt/tropical_rank.hpp"

// JSON views of the result types. Scalars, layers and series are written in
// the text grammar so that every value stays exact.

namespace elt::json {

using Json = nlohmann::ordered_json;

template <LayerRing L>
Json value(const Elt<L>& x) {
  return format_elt(x);
}

template <LayerRing L>
Json vector(const EltVector<L>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(format_elt(x));
  return out;
}

template <LayerRing L>
Json matrix(const Matrix<L>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(vector(m.row(i)));
  return out;
}

template <LayerRing L>
Json puiseux_matrix(const PuiseuxMatrix<L>& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(format_series(m(i, j)));
    out.push_back(row);
  }
  return out;
}

template <LayerRing L>
Json layers(const std::vector<L>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

template <LayerRing L>
Json witness(const DependenceWitness<L>& w) {
  Json coefficients = Json::array();
  for (const auto& c : w.coefficients()) coefficients.push_back(format_elt(c));
  return Json{{"support", w.support()}, {"coefficients", coefficients}};
}

template <LayerRing L>
Json witness(const std::optional<DependenceWitness<L>>& w) {
  return w ? witness(*w) : Json(nullptr);
}

inline Json rank_report(const RankReport& r) {
  return Json{{"row_rank", r.row_rank},
              {"column_rank", r.column_rank},
              {"submatrix_rank", r.submatrix_rank},
              {"minor_rows", r.minor_rows},
              {"minor_cols", r.minor_cols},
              {"independent_rows", r.independent_rows},
              {"independent_cols", r.independent_cols}};
}

template <LayerRing L>
Json trace(const DesingularizationTrace<L>& t) {
  Json variables = Json::array();
  for (const auto& [i, j] : t.variables) variables.push_back(Json::array({i, j}));
  Json tangibles = Json::array();
  for (const auto& x : t.tangibles) tangibles.push_back(x.str());
  Json polynomial = Json::array();
  for (const auto& m : t.layer_polynomial) {
    polynomial.push_back(Json{{"variables", m.variables}, {"coefficient", m.coefficient.str()}});
  }
  Json assignment = Json::array();
  for (const auto& l : t.layer_assignment) assignment.push_back(l ? Json(l->str()) : Json(nullptr));
  return Json{{"case", t.case_tag},
              {"variables", variables},
              {"x1", t.x1},
              {"x2", t.x2},
              {"beta", format_elt(t.beta)},
              {"shift", t.shift ? Json(t.shift->str()) : Json(nullptr)},
              {"tangibles", tangibles},
              {"layer_polynomial", polynomial},
              {"layer_assignment", assignment},
              {"cancelling_fallback", t.cancelling_fallback}};
}

template <LayerRing L>
Json cs_report(const CSReport<L>& r) {
  return Json{{"lhs", format_elt(r.lhs)},
              {"rhs", format_elt(r.rhs)},
              {"inequality_holds", r.inequality_holds},
              {"t_equal", r.t_equal},
              {"common_argmax", r.common_argmax},
              {"s_u", layers(r.s_u)},
              {"s_v", layers(r.s_v)},
              {"full_equal", r.full_equal},
              {"layers_dependent", r.layers_dependent},
              {"layers_real_multiple", r.layers_real_multiple},
              {"predicted_full_equal", r.predicted_full_equal}};
}

template <LayerRing L>
Json bessel_report(const BesselReport<L>& r) {
  return Json{{"projection", vector(r.projection)},
              {"uu", format_elt(r.uu)},
              {"vv", format_elt(r.vv)},
              {"inequality_holds", r.inequality_holds},
              {"equality", r.equality},
              {"criterion", r.criterion}};
}

inline Json kapranov(const KapranovBounds& k) {
  return Json{{"lower", k.lower}, {"upper", k.upper}};
}

inline Json elt_rank(const EltRankResult& r) {
  return Json{{"lower", r.lower}, {"upper", r.upper}, {"exact", r.exact}, {"witness", matrix(r.witness)}};
}

inline Json claims(const std::vector<ClaimResult>& results) {
  Json out = Json::array();
  for (const auto& c : results) {
    out.push_back(Json{{"name", c.name}, {"passed", c.passed}, {"instances", c.instances}, {"detail", c.detail}});
  }
  return out;
}

}  // namespace elt::json
