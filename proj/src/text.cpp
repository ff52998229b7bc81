#include "elt/text.hpp"

#include <cctype>
#include <sstream>

#include "instantiate.hpp"

namespace elt {

namespace {

/// Cursor over one line of input; columns are 1-based.
class Cursor {
 public:
  Cursor(std::string_view text, std::size_t line, std::size_t column_offset = 0)
      : text_(text), line_(line), offset_(column_offset) {}

  bool done() const { return pos_ >= text_.size(); }
  char peek() const { return done() ? '\0' : text_[pos_]; }
  bool starts_with(std::string_view s) const { return text_.substr(pos_).starts_with(s); }
  std::size_t pos() const { return pos_; }
  void advance(std::size_t n = 1) { pos_ += n; }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  void skip_spaces() {
    while (!done() && (text_[pos_] == ' ' || text_[pos_] == '\t')) ++pos_;
  }
  void expect_end() {
    if (!done()) fail("unexpected trailing input");
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, line_, offset_ + pos_ + 1);
  }

  std::string_view rest() const { return text_.substr(pos_); }
  std::size_t line() const { return line_; }
  std::size_t column_offset() const { return offset_; }

 private:
  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  std::size_t pos_ = 0;
};

std::string digits(Cursor& c) {
  std::string out;
  while (std::isdigit(static_cast<unsigned char>(c.peek()))) {
    out.push_back(c.peek());
    c.advance();
  }
  if (out.empty()) c.fail("expected digits");
  return out;
}

Rational read_rational(Cursor& c) {
  std::string s;
  if (c.accept('-')) s.push_back('-');
  s += digits(c);
  if (c.accept('/')) {
    const std::size_t at = c.pos();
    const std::string den = digits(c);
    if (den.find_first_not_of('0') == std::string::npos) {
      throw ParseError("zero denominator", c.line(), c.column_offset() + at + 1);
    }
    s += "/" + den;
  }
  return Rational(mpq_class(s));
}

template <LayerRing L>
L read_layer(Cursor& c);

template <>
Rational read_layer<Rational>(Cursor& c) {
  return read_rational(c);
}

template <>
Integer read_layer<Integer>(Cursor& c) {
  std::string s;
  if (c.accept('-')) s.push_back('-');
  s += digits(c);
  if (c.peek() == '/') c.fail("Z layers must be integers");
  return Integer(mpz_class(s));
}

template <>
GaussianRational read_layer<GaussianRational>(Cursor& c) {
  const Rational first = read_rational(c);
  if (c.accept('i')) return {Rational(0), first};
  if (c.peek() == '+' || c.peek() == '-') {
    const bool minus = c.peek() == '-';
    c.advance();
    if (c.peek() == '-') c.fail("expected digits");
    Rational im = read_rational(c);
    c.expect('i');
    return {first, minus ? -im : im};
  }
  return {first, Rational(0)};
}

template <LayerRing L>
Elt<L> read_elt(Cursor& c) {
  if (c.starts_with("-inf")) {
    c.advance(4);
    return Elt<L>::neg_inf();
  }
  Rational t = read_rational(c);
  c.expect('~');
  L l = read_layer<L>(c);
  return Elt<L>(std::move(t), std::move(l));
}

struct Line {
  std::string_view text;
  std::size_t number;
};

/// Non-blank lines that are not # comments, with 1-based numbers.
std::vector<Line> content_lines(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty() || number == 0) {
    ++number;
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::size_t first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') out.push_back({line, number});
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
  return out;
}

/// Splits on blanks, remembering the 0-based column of each token.
std::vector<std::pair<std::string_view, std::size_t>> tokens(std::string_view line) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i >= line.size()) break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t') ++i;
    out.emplace_back(line.substr(start, i - start), start);
  }
  return out;
}

template <class T, class F>
T parse_whole(std::string_view text, std::size_t line, std::size_t column, F read) {
  Cursor c(text, line, column);
  T value = read(c);
  c.expect_end();
  return value;
}

std::size_t parse_count(std::string_view token, std::size_t line, std::size_t column) {
  Cursor c(token, line, column);
  const std::string d = digits(c);
  c.expect_end();
  if (d.size() > 6) throw ParseError("dimension too large", line, column + 1);
  return static_cast<std::size_t>(std::stoul(d));
}

MatrixHeader header_of(const Line& line) {
  const auto toks = tokens(line.text);
  if (toks.size() < 3 || toks.size() > 4) {
    throw ParseError("expected header '<kind> <rows> <cols> [<ring>]'", line.number, 1);
  }
  MatrixHeader h;
  h.kind = std::string(toks[0].first);
  if (h.kind != "elt-matrix" && h.kind != "tropical-matrix" && h.kind != "puiseux-matrix") {
    throw ParseError("unknown matrix kind '" + h.kind + "'", line.number, toks[0].second + 1);
  }
  h.rows = parse_count(toks[1].first, line.number, toks[1].second);
  h.cols = parse_count(toks[2].first, line.number, toks[2].second);
  if (toks.size() == 4) {
    h.ring = std::string(toks[3].first);
    if (h.ring != "Z" && h.ring != "Q" && h.ring != "Qi") {
      throw ParseError("unknown layer ring '" + h.ring + "'", line.number, toks[3].second + 1);
    }
    if (h.kind == "tropical-matrix") {
      throw ParseError("tropical matrices take no layer ring", line.number, toks[3].second + 1);
    }
  }
  h.line = line.number;
  return h;
}

/// Header plus exactly `rows` data lines.
std::pair<MatrixHeader, std::vector<Line>> split_matrix(std::string_view text, std::string_view kind) {
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("missing header", 1, 1);
  MatrixHeader h = header_of(lines.front());
  if (h.kind != kind) {
    throw ParseError("expected a " + std::string(kind) + " header", lines.front().number, 1);
  }
  lines.erase(lines.begin());
  if (lines.size() < h.rows) {
    const std::size_t at = lines.empty() ? h.line + 1 : lines.back().number + 1;
    throw ParseError("expected " + std::to_string(h.rows) + " rows, found " + std::to_string(lines.size()), at, 1);
  }
  if (lines.size() > h.rows) throw ParseError("more rows than the header declares", lines[h.rows].number, 1);
  return {h, lines};
}

template <LayerRing L>
void check_ring(const MatrixHeader& h) {
  if (!h.ring.empty() && h.ring != L::kName) {
    throw ParseError("header declares layer ring " + h.ring + " but " + std::string(L::kName) + " was requested",
                     h.line, 1);
  }
}

template <LayerRing L>
std::string format_coefficient(const L& c) {
  if constexpr (L::kHasConjugation) {
    if (!c.is_real()) return "(" + c.str() + ")";
  }
  return c.str();
}

template <LayerRing L>
bool is_negative_real(const L& c) {
  if constexpr (L::kHasConjugation) {
    return c.is_real() && c.re().sign() < 0;
  } else {
    return c.sign() < 0;
  }
}

template <LayerRing L>
L read_coefficient(Cursor& c) {
  if (c.accept('(')) {
    L value = read_layer<L>(c);
    c.expect(')');
    return value;
  }
  if constexpr (L::kHasConjugation) {
    // A bare coefficient is real or purely imaginary.
    const Rational r = read_rational(c);
    if (c.accept('i')) return L(Rational(0), r);
    return L(r);
  } else {
    return read_layer<L>(c);
  }
}

template <LayerRing L>
PuiseuxPoly<L> read_series(Cursor& c) {
  c.skip_spaces();
  if (c.rest().find_first_not_of(" \t") == std::string_view::npos) c.fail("expected a series");
  {
    // The zero series.
    Cursor probe = c;
    if (probe.accept('0')) {
      probe.skip_spaces();
      if (probe.done()) {
        c = probe;
        return {};
      }
    }
  }
  PuiseuxPoly<L> out;
  bool negate_next = false;
  while (true) {
    L coef = read_coefficient<L>(c);
    if (negate_next) coef = -coef;
    c.expect('t');
    c.expect('^');
    Rational exponent = read_rational(c);
    out = out + PuiseuxPoly<L>::monomial(coef, exponent);
    c.skip_spaces();
    if (c.done()) break;
    if (c.accept('+')) {
      negate_next = false;
    } else if (c.accept('-')) {
      negate_next = true;
    } else {
      c.fail("expected '+' or '-' between terms");
    }
    if (c.peek() != ' ') c.fail("expected a space after the sign");
    c.skip_spaces();
    if (c.peek() == '-') c.fail("sign already given");
  }
  return out;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  return parse_whole<Rational>(text, 1, 0, [](Cursor& c) { return read_rational(c); });
}

template <LayerRing L>
L parse_layer(std::string_view text) {
  return parse_whole<L>(text, 1, 0, [](Cursor& c) { return read_layer<L>(c); });
}

template <LayerRing L>
Elt<L> parse_elt(std::string_view text) {
  return parse_whole<Elt<L>>(text, 1, 0, [](Cursor& c) { return read_elt<L>(c); });
}

template <LayerRing L>
std::string format_elt(const Elt<L>& x) {
  if (x.is_neg_inf()) return "-inf";
  return x.t().str() + "~" + x.layer_ref().str();
}

template <LayerRing L>
EltVector<L> parse_vector(std::string_view text) {
  EltVector<L> out;
  for (const auto& [tok, col] : tokens(text)) {
    out.push_back(parse_whole<Elt<L>>(tok, 1, col, [](Cursor& c) { return read_elt<L>(c); }));
  }
  if (out.empty()) throw ParseError("expected at least one element", 1, 1);
  return out;
}

template <LayerRing L>
std::string format_vector(const EltVector<L>& v) {
  std::string out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ' ';
    out += format_elt(v[i]);
  }
  return out;
}

template <LayerRing L>
DependenceWitness<L> parse_witness(std::string_view text) {
  const auto dense = parse_vector<L>(text);
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (dense[i].is_finite() && dense[i].is_zero_layer()) {
      throw ParseError("witness coefficients need nonzero layers", 1, 1);
    }
  }
  try {
    return DependenceWitness<L>::from_dense(dense);
  } catch (const Error& e) {
    throw ParseError(e.what(), 1, 1);
  }
}

MatrixHeader read_header(std::string_view text) {
  const auto lines = content_lines(text);
  if (lines.empty()) throw ParseError("missing header", 1, 1);
  return header_of(lines.front());
}

template <LayerRing L>
Matrix<L> parse_matrix(std::string_view text, bool check_header_ring) {
  const auto [h, lines] = split_matrix(text, "elt-matrix");
  if (check_header_ring) check_ring<L>(h);
  Matrix<L> m(h.rows, h.cols);
  for (std::size_t i = 0; i < h.rows; ++i) {
    const auto toks = tokens(lines[i].text);
    if (toks.size() != h.cols) {
      throw ParseError("expected " + std::to_string(h.cols) + " entries, found " + std::to_string(toks.size()),
                       lines[i].number, 1);
    }
    for (std::size_t j = 0; j < h.cols; ++j) {
      m(i, j) = parse_whole<Elt<L>>(toks[j].first, lines[i].number, toks[j].second,
                                    [](Cursor& c) { return read_elt<L>(c); });
    }
  }
  return m;
}

template <LayerRing L>
std::string format_matrix(const Matrix<L>& m, bool with_header) {
  std::ostringstream out;
  if (with_header) out << "elt-matrix " << m.rows() << ' ' << m.cols() << ' ' << L::kName << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) out << format_vector(m.row(i)) << '\n';
  return out.str();
}

TropicalMatrix parse_tropical_matrix(std::string_view text) {
  const auto [h, lines] = split_matrix(text, "tropical-matrix");
  TropicalMatrix m(h.rows, h.cols);
  for (std::size_t i = 0; i < h.rows; ++i) {
    const auto toks = tokens(lines[i].text);
    if (toks.size() != h.cols) {
      throw ParseError("expected " + std::to_string(h.cols) + " entries, found " + std::to_string(toks.size()),
                       lines[i].number, 1);
    }
    for (std::size_t j = 0; j < h.cols; ++j) {
      if (toks[j].first == "-inf") continue;
      m(i, j) = parse_whole<Rational>(toks[j].first, lines[i].number, toks[j].second,
                                      [](Cursor& c) { return read_rational(c); });
    }
  }
  return m;
}

std::string format_tropical_matrix(const TropicalMatrix& m) {
  std::ostringstream out;
  out << "tropical-matrix " << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << (m(i, j) ? m(i, j)->str() : "-inf");
    }
    out << '\n';
  }
  return out.str();
}

template <LayerRing L>
PuiseuxPoly<L> parse_series(std::string_view text) {
  return parse_whole<PuiseuxPoly<L>>(text, 1, 0, [](Cursor& c) { return read_series<L>(c); });
}

template <LayerRing L>
std::string format_series(const PuiseuxPoly<L>& p) {
  if (p.terms().empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [exponent, coef] : p.terms()) {
    const std::string tail = "t^" + exponent.str();
    if (first) {
      out += format_coefficient(coef) + tail;
    } else if (is_negative_real(coef)) {
      out += " - " + format_coefficient(L(-coef)) + tail;
    } else {
      out += " + " + format_coefficient(coef) + tail;
    }
    first = false;
  }
  return out;
}

template <LayerRing L>
PuiseuxMatrix<L> parse_puiseux_matrix(std::string_view text, bool check_header_ring) {
  const auto [h, lines] = split_matrix(text, "puiseux-matrix");
  if (check_header_ring) check_ring<L>(h);
  PuiseuxMatrix<L> m(h.rows, h.cols);
  for (std::size_t i = 0; i < h.rows; ++i) {
    const std::string_view line = lines[i].text;
    std::size_t start = 0;
    for (std::size_t j = 0; j < h.cols; ++j) {
      const std::size_t comma = line.find(',', start);
      const bool last = j + 1 == h.cols;
      if (last != (comma == std::string_view::npos)) {
        throw ParseError("expected " + std::to_string(h.cols) + " comma-separated series", lines[i].number,
                         (comma == std::string_view::npos ? line.size() : comma) + 1);
      }
      const std::string_view cell = line.substr(start, last ? std::string_view::npos : comma - start);
      // Trailing blanks are part of the separator.
      const std::size_t end = cell.find_last_not_of(" \t");
      const std::string_view trimmed = end == std::string_view::npos ? cell.substr(0, 0) : cell.substr(0, end + 1);
      m(i, j) = parse_whole<PuiseuxPoly<L>>(trimmed, lines[i].number, start,
                                            [](Cursor& c) { return read_series<L>(c); });
      start = comma + 1;
    }
  }
  return m;
}

template <LayerRing L>
std::string format_puiseux_matrix(const PuiseuxMatrix<L>& m, bool with_header) {
  std::ostringstream out;
  if (with_header) out << "puiseux-matrix " << m.rows() << ' ' << m.cols() << ' ' << L::kName << '\n';
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out << ", ";
      out << format_series(m(i, j));
    }
    out << '\n';
  }
  return out.str();
}

#define ELT_INSTANTIATE(L)                                                          \
  template L parse_layer<L>(std::string_view);                                      \
  template Elt<L> parse_elt<L>(std::string_view);                                   \
  template std::string format_elt(const Elt<L>&);                                   \
  template EltVector<L> parse_vector<L>(std::string_view);                          \
  template std::string format_vector(const EltVector<L>&);                          \
  template DependenceWitness<L> parse_witness<L>(std::string_view);                 \
  template Matrix<L> parse_matrix<L>(std::string_view, bool);                           \
  template std::string format_matrix(const Matrix<L>&, bool);                       \
  template PuiseuxPoly<L> parse_series<L>(std::string_view);                        \
  template std::string format_series(const PuiseuxPoly<L>&);                        \
  template PuiseuxMatrix<L> parse_puiseux_matrix<L>(std::string_view, bool);              \
  template std::string format_puiseux_matrix(const PuiseuxMatrix<L>&, bool);
ELT_FOR_EACH_RING(ELT_INSTANTIATE)
#undef ELT_INSTANTIATE

}  // namespace elt
