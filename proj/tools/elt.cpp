// Batch front end for the ELT library. Reads one matrix file (or stdin for
// `-`), runs a single operation and prints text or JSON.
//
// Exit codes: 0 success, 1 domain error, 2 malformed input or usage.

#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "elt/inner_product.hpp"
#include "elt/json.hpp"
#include "elt/lift.hpp"
#include "elt/oracles.hpp"
#include "elt/purify.hpp"
#include "elt/rank.hpp"
#include "elt/text.hpp"
#include "elt/tropical_rank.hpp"

namespace {

using elt::Matrix;
using Json = elt::json::Json;

struct Options {
  std::string input = "-";
  bool json = false;
  std::string ring;
  elt::Limits limits;
  // dependent
  bool columns = false;
  // purify / lift
  std::string witness;
  bool dependent_lift = false;
  bool kapranov = false;
  // elt-rank
  std::string mode = "auto";
  std::size_t samples = 2000;
  std::uint64_t seed = 0x5eed;
  // orthogonalize
  bool complete = false;
  bool any_family = false;
  // verify
  std::size_t verify_samples = 300;
};

std::string read_input(const std::string& path) {
  std::ostringstream buffer;
  if (path == "-") {
    buffer << std::cin.rdbuf();
  } else {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw elt::ParseError("cannot open '" + path + "'");
    buffer << in.rdbuf();
  }
  return buffer.str();
}

std::string yes_no(bool b) { return b ? "true" : "false"; }

void emit(const Options& o, const Json& j, const std::string& text) {
  if (o.json) {
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << text;
  }
}

/// `name i j k`, or just `name` for an empty list.
std::string index_line(const std::string& name, const std::vector<std::size_t>& v) {
  std::string out = name;
  for (const auto i : v) out += " " + std::to_string(i);
  return out + "\n";
}

// One function per subcommand, templated on the layer ring.

template <elt::LayerRing L>
void cmd_det(const Options& o, const std::string& text) {
  const auto a = elt::parse_matrix<L>(text, o.ring.empty());
  const auto d = elt::det(a, o.limits);
  emit(o, Json{{"det", elt::format_elt(d)}, {"singular", d.is_zero_layer()}}, elt::format_elt(d) + "\n");
}

template <elt::LayerRing L>
void cmd_rank(const Options& o, const std::string& text) {
  const auto a = elt::parse_matrix<L>(text, o.ring.empty());
  const auto r = elt::rank_report(a, o.limits);
  Json j = elt::json::rank_report(r);
  std::ostringstream out;
  out << "row_rank " << r.row_rank << "\ncolumn_rank " << r.column_rank << "\nsubmatrix_rank " << r.submatrix_rank
      << '\n' << index_line("minor_rows", r.minor_rows) << index_line("minor_cols", r.minor_cols);
  if (o.json) {
    j["row_witness"] = elt::json::witness(elt::find_dependence_witness(a.row_vectors(), o.limits));
    j["column_witness"] = elt::json::witness(elt::find_dependence_witness(a.column_vectors(), o.limits));
  }
  emit(o, j, out.str());
}

template <elt::LayerRing L>
std::string dense_text(const elt::DependenceWitness<L>& w, std::size_t count) {
  return elt::format_vector(w.dense(count));
}

template <elt::LayerRing L>
void cmd_dependent(const Options& o, const std::string& text) {
  const auto a = elt::parse_matrix<L>(text, o.ring.empty());
  const auto vectors = o.columns ? a.column_vectors() : a.row_vectors();
  const auto w = elt::find_dependence_witness(vectors, o.limits);
  Json j{{"dependent", w.has_value()}, {"witness", elt::json::witness(w)}};
  std::string out = w ? "dependent\n" : "independent\n";
  if (w) {
    const auto combination = elt::witness_combination(vectors, *w);
    j["combination"] = elt::json::vector(combination);
    out += "witness " + dense_text(*w, vectors.size()) + "\ncombination " + elt::format_vector(combination) + "\n";
  }
  emit(o, j, out);
}

template <elt::LayerRing L>
void cmd_desingularize(const Options& o, const std::string& text) {
  const auto a = elt::parse_matrix<L>(text, o.ring.empty());
  const auto d = elt::desingularize_pure(a, o.limits);
  emit(o, Json{{"matrix", elt::json::matrix(d.matrix)}, {"trace", elt::json::trace(d.trace)}},
       elt::format_matrix(d.matrix) + "case " + std::to_string(d.trace.case_tag) + "\n");
}

template <elt::LayerRing L>
elt::DependenceWitness<L> witness_for(const Options& o, const Matrix<L>& a) {
  if (!o.witness.empty()) {
    return elt::parse_witness<L>(o.witness);
  }
  auto w = elt::find_dependence_witness(a.row_vectors(), o.limits);
  if (!w) throw elt::Error(elt::ErrorKind::InvalidWitness, "rows are independent");
  return *w;
}

template <elt::LayerRing L>
void cmd_purify(const Options& o, const std::string& text) {
  const auto a = elt::parse_matrix<L>(text, o.ring.empty());
  const auto w = witness_for(o, a);
  const auto b = elt::purify_dependent_rows(a, w);
  emit(o, Json{{"matrix", elt::json::matrix(b)}, {"witness", elt::json::witness(w)}},
       elt::format_matrix(b) + "witness " + dense_text(w, a.rows()) + "\n");
}

template <elt::LayerRing L>
void cmd_lift(const Options& o, const std::string& text) {
  const auto a = elt::parse_matrix<L>(text, o.ring.empty());
  if (o.kapranov) {
    const auto k = elt::kapranov_bounds(a, o.limits);
    emit(o, elt::json::kapranov(k), "kapranov " + std::to_string(k.lower) + " " + std::to_string(k.upper) + "\n");
    return;
  }
  const bool dependent = o.dependent_lift || !o.witness.empty();
  const auto lifted = dependent ? elt::lift_dependent_matrix(a, witness_for(o, a)) : elt::naive_monomial_lift(a);
  const std::size_t rank = elt::puiseux_rank(lifted, o.limits);
  emit(o, Json{{"lift", elt::json::puiseux_matrix(lifted)}, {"rank", rank}},
       elt::format_puiseux_matrix(lifted) + "rank " + std::to_string(rank) + "\n");
}

template <elt::LayerRing L>
void cmd_eltrop(const Options& o, const std::string& text) {
  const auto m = elt::parse_puiseux_matrix<L>(text, o.ring.empty());
  const auto t = elt::eltrop_matrix(m);
  Json j{{"matrix", elt::json::matrix(t)}};
  std::string out = elt::format_matrix(t);
  if (m.rows() == m.cols()) {
    const auto left = elt::det(t, o.limits);
    const auto right = elt::eltrop(elt::puiseux_det(m, o.limits));
    const bool holds = elt::surpasses(left, right);
    j["det_of_eltrop"] = elt::format_elt(left);
    j["eltrop_of_det"] = elt::format_elt(right);
    j["surpasses"] = holds;
    out += "det_of_eltrop " + elt::format_elt(left) + "\neltrop_of_det " + elt::format_elt(right) + "\nsurpasses " +
           yes_no(holds) + "\n";
  }
  emit(o, j, out);
}

void cmd_elt_rank(const Options& o, const std::string& text) {
  const auto t = elt::parse_tropical_matrix(text);
  elt::EltRankOptions options;
  options.mode = o.mode == "exact"     ? elt::EltRankOptions::Mode::Exact
                 : o.mode == "sampled" ? elt::EltRankOptions::Mode::Sampled
                                       : elt::EltRankOptions::Mode::Auto;
  options.samples = o.samples;
  options.seed = o.seed;
  const auto r = elt::elt_rank_tropical(t, options, o.limits);
  std::string out = r.exact ? std::to_string(r.lower) + "\n"
                            : "range " + std::to_string(r.lower) + " " + std::to_string(r.upper) + "\n";
  emit(o, elt::json::elt_rank(r), out);
}

template <elt::LayerRing L>
void cmd_invert(const Options& o, const std::string& text) {
  const auto a = elt::parse_matrix<L>(text, o.ring.empty());
  const auto inv = elt::invert_matrix(a);
  emit(o, Json{{"inverse", inv ? elt::json::matrix(*inv) : Json(nullptr)}},
       inv ? elt::format_matrix(*inv) : std::string("none\n"));
}

template <elt::LayerRing L>
void cmd_gram(const Options& o, const std::string& text) {
  const auto a = elt::parse_matrix<L>(text, false);
  const auto g = elt::gram(a.row_vectors());
  const bool singular = elt::is_singular(g, o.limits);
  emit(o, Json{{"gram", elt::json::matrix(g)}, {"singular", singular}},
       elt::format_matrix(g) + "singular " + yes_no(singular) + "\n");
}

template <elt::LayerRing L>
void cmd_cs_check(const Options& o, const std::string& text) {
  const auto a = elt::parse_matrix<L>(text, false);
  if (a.rows() != 2) throw elt::Error(elt::ErrorKind::DimensionMismatch, "cs-check expects exactly two rows");
  const auto r = elt::cauchy_schwarz_check(a.row(0), a.row(1));
  std::ostringstream out;
  out << "lhs " << elt::format_elt(r.lhs) << "\nrhs " << elt::format_elt(r.rhs) << "\ninequality_holds "
      << yes_no(r.inequality_holds) << "\nt_equal " << yes_no(r.t_equal) << '\n'
      << index_line("common_argmax", r.common_argmax) << "full_equal " << yes_no(r.full_equal) << "\nlayers_dependent "
      << yes_no(r.layers_dependent) << "\n";
  emit(o, elt::json::cs_report(r), out.str());
}

template <elt::LayerRing L>
void cmd_bessel(const Options& o, const std::string& text) {
  const auto a = elt::parse_matrix<L>(text, false);
  if (a.rows() < 2) throw elt::Error(elt::ErrorKind::DimensionMismatch, "bessel expects the set and then v");
  auto rows = a.row_vectors();
  const auto v = rows.back();
  rows.pop_back();
  const auto r = elt::bessel_check(rows, v);
  std::ostringstream out;
  out << "projection " << elt::format_vector(r.projection) << "\nuu " << elt::format_elt(r.uu) << "\nvv "
      << elt::format_elt(r.vv) << "\ninequality_holds " << yes_no(r.inequality_holds) << "\nequality "
      << yes_no(r.equality) << "\ncriterion " << yes_no(r.criterion) << "\n";
  emit(o, elt::json::bessel_report(r), out.str());
}

template <elt::LayerRing L>
void cmd_orthogonalize(const Options& o, const std::string& text) {
  const auto a = elt::parse_matrix<L>(text, false);
  const auto family = a.row_vectors();
  std::vector<elt::EltVector<L>> added;
  if (o.any_family) {
    added.push_back(elt::orthogonal_vector(family, o.limits));
  } else if (o.complete) {
    const auto full = elt::complete_orthogonal_set(family, o.limits);
    added.assign(full.begin() + static_cast<std::ptrdiff_t>(family.size()), full.end());
  } else {
    added.push_back(elt::extend_orthogonal(family, o.limits));
  }
  Json j = Json::array();
  std::string out;
  for (const auto& v : added) {
    j.push_back(elt::json::vector(v));
    out += elt::format_vector(v) + "\n";
  }
  emit(o, Json{{"added", j}}, out);
}

bool cmd_verify(const Options& o) {
  elt::OracleConfig config;
  config.samples = o.verify_samples;
  auto results = elt::oracle_report(config);
  for (auto& c : elt::dependence_vs_orthogonality_suite()) results.push_back(std::move(c));
  bool all = true;
  std::string out;
  for (const auto& c : results) {
    all = all && c.passed;
    out += std::string(c.passed ? "PASS " : "FAIL ") + c.name + " (" + std::to_string(c.instances) + ")";
    if (!c.detail.empty()) out += ": " + c.detail;
    out += "\n";
  }
  emit(o, Json{{"passed", all}, {"claims", elt::json::claims(results)}}, out);
  return all;
}

/// Calls f.template operator()<L>() for the ring named by `ring`.
template <class F>
void with_ring(const std::string& ring, F&& f) {
  if (ring == "Z") {
    f.template operator()<elt::Integer>();
  } else if (ring == "Qi") {
    f.template operator()<elt::GaussianRational>();
  } else {
    f.template operator()<elt::Rational>();
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ELT linear algebra: exact determinants, ranks, witnesses, lifts and inner products"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Show help for every subcommand");

  Options o;
  enum class Ring { FromHeader, InnerProduct };
  struct Spec {
    const char* name;
    const char* help;
    Ring ring;
    std::function<void(const Options&, const std::string&, const std::string&)> run;
  };

#define ELT_DISPATCH(fn)                                                                   \
  [](const Options& opts, const std::string& ring, const std::string& text) {            \
    with_ring(ring, [&]<elt::LayerRing L>() { fn<L>(opts, text); });                      \
  }

  const std::vector<Spec> specs = {
      {"det", "Determinant of a square ELT matrix", Ring::FromHeader, ELT_DISPATCH(cmd_det)},
      {"rank", "Row, column and submatrix rank", Ring::FromHeader, ELT_DISPATCH(cmd_rank)},
      {"dependent", "Search a dependence witness for the rows", Ring::FromHeader, ELT_DISPATCH(cmd_dependent)},
      {"desingularize", "Pure singular matrix surpassed by a singular input", Ring::FromHeader,
       ELT_DISPATCH(cmd_desingularize)},
      {"purify", "Pure matrix surpassed by the input keeping a row witness", Ring::FromHeader,
       ELT_DISPATCH(cmd_purify)},
      {"lift", "Puiseux lift of a pure matrix", Ring::FromHeader, ELT_DISPATCH(cmd_lift)},
      {"eltrop", "Entrywise tropicalization of a Puiseux matrix", Ring::FromHeader, ELT_DISPATCH(cmd_eltrop)},
      {"elt-rank", "ELT rank of a tropical matrix", Ring::FromHeader, nullptr},
      {"invert", "Inverse of a generalized permutation matrix", Ring::FromHeader, ELT_DISPATCH(cmd_invert)},
      {"gram", "Gram matrix of the rows", Ring::InnerProduct, ELT_DISPATCH(cmd_gram)},
      {"cs-check", "Cauchy-Schwarz report for the two rows u and v", Ring::InnerProduct,
       ELT_DISPATCH(cmd_cs_check)},
      {"bessel", "Bessel report: leading rows form the orthonormal set, the last row is v", Ring::InnerProduct,
       ELT_DISPATCH(cmd_bessel)},
      {"orthogonalize", "Extend a pure pairwise-orthogonal family by one vector", Ring::InnerProduct,
       ELT_DISPATCH(cmd_orthogonalize)},
      {"verify", "Cross-check the library against its brute-force oracles", Ring::FromHeader, nullptr},
  };
#undef ELT_DISPATCH

  std::vector<std::pair<CLI::App*, const Spec*>> subs;
  for (const auto& spec : specs) {
    CLI::App* sub = app.add_subcommand(spec.name, spec.help);
    const std::string name = spec.name;
    sub->add_flag("--json", o.json, "Emit JSON");
    if (name == "verify") {
      sub->add_option("--samples", o.verify_samples, "Random instances per claim")->check(CLI::PositiveNumber);
      subs.emplace_back(sub, &spec);
      continue;
    }
    sub->add_option("input", o.input, "Matrix file, or - for stdin")->capture_default_str();
    if (name != "elt-rank") {
      sub->add_option("--ring", o.ring, "Layer ring; overrides the file header")
          ->check(CLI::IsMember({"Z", "Q", "Qi"}));
    }
    sub->add_option("--max-det", o.limits.max_det_size, "Largest determinant size")->capture_default_str();
    sub->add_option("--max-vectors", o.limits.max_witness_vectors, "Largest vector count for witness search")
        ->capture_default_str();
    sub->add_option("--max-dim", o.limits.max_witness_dim, "Largest dimension for witness search")
        ->capture_default_str();
    if (name == "dependent") sub->add_flag("--columns", o.columns, "Use the columns instead of the rows");
    if (name == "purify" || name == "lift") {
      sub->add_option("--witness", o.witness, "Row witness, one coefficient per row, -inf outside the support");
    }
    if (name == "lift") {
      sub->add_flag("--dependent", o.dependent_lift, "Lift so that a row witness holds exactly");
      sub->add_flag("--kapranov", o.kapranov, "Print the Kapranov rank bounds instead of a lift");
    }
    if (name == "elt-rank") {
      sub->add_option("--mode", o.mode, "auto, exact or sampled")
          ->check(CLI::IsMember({"auto", "exact", "sampled"}))
          ->capture_default_str();
      sub->add_option("--samples", o.samples, "Sampled layer assignments")->capture_default_str();
      sub->add_option("--seed", o.seed, "Sampling seed")->capture_default_str();
    }
    if (name == "orthogonalize") {
      auto* complete = sub->add_flag("--complete", o.complete, "Extend until the family has n vectors");
      sub->add_flag("--any", o.any_family, "Accept a family that is not pairwise orthogonal")->excludes(complete);
    }
    subs.emplace_back(sub, &spec);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    for (const auto& [sub, spec] : subs) {
      if (!sub->parsed()) continue;
      const std::string name = spec->name;
      if (name == "verify") {
        return cmd_verify(o) ? 0 : 1;
      }
      const std::string text = read_input(o.input);
      if (name == "elt-rank") {
        cmd_elt_rank(o, text);
        return 0;
      }
      std::string ring = o.ring;
      if (ring.empty()) ring = spec->ring == Ring::InnerProduct ? "Qi" : elt::read_header(text).ring;
      spec->run(o, ring, text);
      return 0;
    }
  } catch (const elt::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return 2;
  } catch (const elt::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
