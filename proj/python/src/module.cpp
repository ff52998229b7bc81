#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>
#include <string>
#include <vector>

#include "elt/inner_product.hpp"
#include "elt/lift.hpp"
#include "elt/purify.hpp"
#include "elt/rank.hpp"
#include "elt/text.hpp"
#include "elt/tropical_rank.hpp"

namespace py = pybind11;

namespace {

using namespace elt;

// Values cross the boundary as strings in the scalar grammar, so results
// stay exact on the Python side.
using Rows = std::vector<std::vector<std::string>>;
using Strings = std::vector<std::string>;

template <class F>
auto with_ring(const std::string& ring, F&& f) {
  if (ring == "Q") return f(Rational{});
  if (ring == "Z") return f(Integer{});
  if (ring == "Qi") return f(GaussianRational{});
  throw py::value_error("unknown ring '" + ring + "' (expected Z, Q or Qi)");
}

template <LayerRing L>
EltVector<L> to_vector(const Strings& v) {
  EltVector<L> out;
  out.reserve(v.size());
  for (const auto& s : v) out.push_back(parse_elt<L>(s));
  return out;
}

template <LayerRing L>
Strings from_vector(const EltVector<L>& v) {
  Strings out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(format_elt(x));
  return out;
}

template <LayerRing L>
Matrix<L> to_matrix(const Rows& rows) {
  std::vector<EltVector<L>> parsed;
  for (const auto& r : rows) parsed.push_back(to_vector<L>(r));
  return Matrix<L>::from_rows(parsed);
}

template <LayerRing L>
Rows from_matrix(const Matrix<L>& m) {
  Rows out;
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(from_vector(m.row(i)));
  return out;
}

template <LayerRing L>
Rows from_puiseux(const PuiseuxMatrix<L>& m) {
  Rows out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i].push_back(format_series(m(i, j)));
  return out;
}

template <LayerRing L>
std::vector<EltVector<L>> to_family(const Rows& rows) {
  std::vector<EltVector<L>> out;
  for (const auto& r : rows) out.push_back(to_vector<L>(r));
  return out;
}

template <LayerRing L>
std::optional<Strings> dense_witness(const std::optional<DependenceWitness<L>>& w, std::size_t count) {
  if (!w) return std::nullopt;
  return from_vector(w->dense(count));
}

TropicalMatrix to_tropical(const Rows& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<std::optional<Rational>> entries;
  for (const auto& r : rows) {
    if (r.size() != cols) throw Error(ErrorKind::DimensionMismatch, "ragged tropical matrix");
    for (const auto& s : r) entries.push_back(s == "-inf" ? std::nullopt : std::optional(parse_rational(s)));
  }
  return TropicalMatrix(rows.size(), cols, std::move(entries));
}

py::dict rank_dict(const RankReport& r) {
  py::dict d;
  d["row_rank"] = r.row_rank;
  d["column_rank"] = r.column_rank;
  d["submatrix_rank"] = r.submatrix_rank;
  d["minor_rows"] = r.minor_rows;
  d["minor_cols"] = r.minor_cols;
  d["independent_rows"] = r.independent_rows;
  d["independent_cols"] = r.independent_cols;
  return d;
}

}  // namespace

PYBIND11_MODULE(_elt, m) {
  m.doc() = "Exact ELT linear algebra";

  static py::exception<Error> error(m, "Error", PyExc_ValueError);
  static py::exception<ParseError> parse_error(m, "ParseError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const ParseError& e) {
      parse_error(e.what());
    } catch (const Error& e) {
      py::object kind = py::str(std::string(to_string(e.kind())));
      PyErr_SetObject(error.ptr(), py::make_tuple(py::str(e.what()), kind).ptr());
    }
  });

  m.def("add", [](const std::string& x, const std::string& y, const std::string& ring) {
    return with_ring(ring, [&]<class L>(L) { return format_elt(add(parse_elt<L>(x), parse_elt<L>(y))); });
  }, py::arg("x"), py::arg("y"), py::arg("ring") = "Q");

  m.def("mul", [](const std::string& x, const std::string& y, const std::string& ring) {
    return with_ring(ring, [&]<class L>(L) { return format_elt(mul(parse_elt<L>(x), parse_elt<L>(y))); });
  }, py::arg("x"), py::arg("y"), py::arg("ring") = "Q");

  m.def("surpasses", [](const std::string& x, const std::string& y, const std::string& ring) {
    return with_ring(ring, [&]<class L>(L) { return surpasses(parse_elt<L>(x), parse_elt<L>(y)); });
  }, py::arg("x"), py::arg("y"), py::arg("ring") = "Q", "x |= y");

  m.def("det", [](const Rows& a, const std::string& ring) {
    return with_ring(ring, [&]<class L>(L) { return format_elt(det(to_matrix<L>(a))); });
  }, py::arg("rows"), py::arg("ring") = "Q");

  m.def("is_singular", [](const Rows& a, const std::string& ring) {
    return with_ring(ring, [&]<class L>(L) { return is_singular(to_matrix<L>(a)); });
  }, py::arg("rows"), py::arg("ring") = "Q");

  m.def("rank", [](const Rows& a, const std::string& ring) {
    return with_ring(ring, [&]<class L>(L) { return rank_dict(rank_report(to_matrix<L>(a))); });
  }, py::arg("rows"), py::arg("ring") = "Q");

  m.def("dependence_witness", [](const Rows& vectors, const std::string& ring) {
    return with_ring(ring, [&]<class L>(L) {
      return dense_witness(find_dependence_witness(to_family<L>(vectors)), vectors.size());
    });
  }, py::arg("vectors"), py::arg("ring") = "Q",
     "One coefficient per vector (-inf off the support), or None if independent.");

  m.def("invert", [](const Rows& a, const std::string& ring) {
    return with_ring(ring, [&]<class L>(L) -> std::optional<Rows> {
      const auto inv = invert_matrix(to_matrix<L>(a));
      if (!inv) return std::nullopt;
      return from_matrix(*inv);
    });
  }, py::arg("rows"), py::arg("ring") = "Q");

  m.def("desingularize", [](const Rows& a, const std::string& ring) {
    return with_ring(ring, [&]<class L>(L) {
      const auto d = desingularize_pure(to_matrix<L>(a));
      return py::make_tuple(from_matrix(d.matrix), d.trace.case_tag);
    });
  }, py::arg("rows"), py::arg("ring") = "Q", "Returns (pure singular matrix, case number).");

  m.def("purify", [](const Rows& a, const Strings& witness, const std::string& ring) {
    return with_ring(ring, [&]<class L>(L) {
      return from_matrix(purify_dependent_rows(to_matrix<L>(a), DependenceWitness<L>::from_dense(to_vector<L>(witness))));
    });
  }, py::arg("rows"), py::arg("witness"), py::arg("ring") = "Q");

  m.def("eltrop", [](const std::string& series, const std::string& ring) {
    return with_ring(ring, [&]<class L>(L) { return format_elt(eltrop(parse_series<L>(series))); });
  }, py::arg("series"), py::arg("ring") = "Q");

  m.def("naive_lift", [](const Rows& a, const std::string& ring) {
    return with_ring(ring, [&]<class L>(L) { return from_puiseux(naive_monomial_lift(to_matrix<L>(a))); });
  }, py::arg("rows"), py::arg("ring") = "Q");

  m.def("lift_dependent", [](const Rows& a, const Strings& witness, const std::string& ring) {
    return with_ring(ring, [&]<class L>(L) {
      return from_puiseux(lift_dependent_matrix(to_matrix<L>(a), DependenceWitness<L>::from_dense(to_vector<L>(witness))));
    });
  }, py::arg("rows"), py::arg("witness"), py::arg("ring") = "Q");

  m.def("kapranov_bounds", [](const Rows& a, const std::string& ring) {
    return with_ring(ring, [&]<class L>(L) {
      const auto k = kapranov_bounds(to_matrix<L>(a));
      return py::make_tuple(k.lower, k.upper);
    });
  }, py::arg("rows"), py::arg("ring") = "Q");

  m.def("elt_rank", [](const Rows& t) {
    const auto r = elt_rank_tropical(to_tropical(t));
    py::dict d;
    d["lower"] = r.lower;
    d["upper"] = r.upper;
    d["exact"] = r.exact;
    d["witness"] = from_matrix(r.witness);
    return d;
  }, py::arg("rows"), "Tropical entries are rationals or \"-inf\".");

  using Qi = GaussianRational;

  m.def("inner", [](const Strings& u, const Strings& v) {
    return format_elt(standard_inner(to_vector<Qi>(u), to_vector<Qi>(v)));
  }, py::arg("u"), py::arg("v"));

  m.def("is_orthogonal", [](const Strings& u, const Strings& v) {
    return is_orthogonal(to_vector<Qi>(u), to_vector<Qi>(v));
  }, py::arg("u"), py::arg("v"));

  m.def("gram", [](const Rows& vectors) { return from_matrix(gram(to_family<Qi>(vectors))); }, py::arg("vectors"));

  m.def("cs_check", [](const Strings& u, const Strings& v) {
    const auto r = cauchy_schwarz_check(to_vector<Qi>(u), to_vector<Qi>(v));
    py::dict d;
    d["lhs"] = format_elt(r.lhs);
    d["rhs"] = format_elt(r.rhs);
    d["inequality_holds"] = r.inequality_holds;
    d["t_equal"] = r.t_equal;
    d["common_argmax"] = r.common_argmax;
    d["full_equal"] = r.full_equal;
    d["layers_dependent"] = r.layers_dependent;
    d["layers_real_multiple"] = r.layers_real_multiple;
    return d;
  }, py::arg("u"), py::arg("v"));

  m.def("bessel", [](const Rows& family, const Strings& v) {
    const auto r = bessel_check(to_family<Qi>(family), to_vector<Qi>(v));
    py::dict d;
    d["projection"] = from_vector(r.projection);
    d["uu"] = format_elt(r.uu);
    d["vv"] = format_elt(r.vv);
    d["inequality_holds"] = r.inequality_holds;
    d["equality"] = r.equality;
    d["criterion"] = r.criterion;
    return d;
  }, py::arg("family"), py::arg("v"));

  m.def("orthogonal_vector", [](const Rows& vectors) {
    return from_vector(orthogonal_vector(to_family<Qi>(vectors)));
  }, py::arg("vectors"));

  m.def("extend_orthogonal", [](const Rows& vectors) {
    return from_vector(extend_orthogonal(to_family<Qi>(vectors)));
  }, py::arg("vectors"));
}
