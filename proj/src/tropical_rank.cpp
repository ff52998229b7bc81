#include "elt/tropical_rank.hpp"

#include <algorithm>
#include <random>

namespace elt {

namespace {

// Dominant permutations of one square submatrix: finite tracks of maximal
// tangible value, as row-major entry indices plus the permutation sign.
struct DominantTracks {
  std::vector<std::vector<std::size_t>> entries;
  std::vector<int> signs;
};

// tables[k] lists, for every k x k submatrix with a finite track, its
// dominant tracks. Minors whose tracks are all -inf are always singular.
std::vector<std::vector<DominantTracks>> dominant_tables(const TropicalMatrix& t) {
  const std::size_t top = std::min(t.rows(), t.cols());
  std::vector<std::vector<DominantTracks>> tables(top + 1);
  for (std::size_t k = 1; k <= top; ++k) {
    detail::for_each_combination(t.rows(), k, [&](const std::vector<std::size_t>& rows) {
      detail::for_each_combination(t.cols(), k, [&](const std::vector<std::size_t>& cols) {
        DominantTracks dom;
        std::optional<Rational> best;
        for_each_permutation(k, [&](const std::vector<std::size_t>& perm, bool odd) {
          Rational sum(0);
          std::vector<std::size_t> idx;
          for (std::size_t i = 0; i < k; ++i) {
            const auto& x = t(rows[i], cols[perm[i]]);
            if (!x) return;
            sum += *x;
            idx.push_back(rows[i] * t.cols() + cols[perm[i]]);
          }
          if (!best || sum > *best) {
            best = sum;
            dom.entries.clear();
            dom.signs.clear();
          }
          if (sum == *best) {
            dom.entries.push_back(std::move(idx));
            dom.signs.push_back(odd ? -1 : 1);
          }
        });
        if (best) tables[k].push_back(std::move(dom));
        return true;
      });
      return true;
    });
  }
  return tables;
}

bool nonsingular(const DominantTracks& d, const std::vector<long>& layers) {
  long long sum = 0;
  for (std::size_t p = 0; p < d.entries.size(); ++p) {
    long long prod = d.signs[p];
    for (auto e : d.entries[p]) prod *= layers[e];
    sum += prod;
  }
  return sum != 0;
}

std::size_t rank_under(const std::vector<std::vector<DominantTracks>>& tables, const std::vector<long>& layers) {
  for (std::size_t k = tables.size() - 1; k >= 1; --k)
    for (const auto& d : tables[k])
      if (nonsingular(d, layers)) return k;
  return 0;
}

// Rank <= 1 for some assignment iff the finite entries form a full
// rectangle on which t_ij = p_i + q_j; all layers 1 then realize it.
bool admits_rank_one(const TropicalMatrix& t) {
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < t.rows(); ++i)
    for (std::size_t j = 0; j < t.cols(); ++j)
      if (t(i, j)) {
        if (std::find(rows.begin(), rows.end(), i) == rows.end()) rows.push_back(i);
        if (std::find(cols.begin(), cols.end(), j) == cols.end()) cols.push_back(j);
      }
  std::sort(cols.begin(), cols.end());
  for (auto i : rows)
    for (auto j : cols)
      if (!t(i, j)) return false;
  for (auto i : rows)
    for (auto j : cols)
      if (*t(i, j) - *t(i, cols[0]) - *t(rows[0], j) + *t(rows[0], cols[0]) != Rational(0)) return false;
  return true;
}

Matrix<Rational> assign(const TropicalMatrix& t, const std::vector<long>& layers) {
  std::vector<Rational> ls;
  ls.reserve(layers.size());
  for (long l : layers) ls.emplace_back(l);
  return t.with_layers(ls);
}

}  // namespace

const std::vector<long>& elt_rank_layer_pool() {
  static const std::vector<long> pool{1, -1, 2, -2, 3, -3};
  return pool;
}

std::size_t tropical_rank(const TropicalMatrix& t, const Limits& limits) {
  if (std::min(t.rows(), t.cols()) > limits.max_det_size) {
    throw Error(ErrorKind::SizeBound, "min dimension exceeds determinant bound");
  }
  const auto tables = dominant_tables(t);
  for (std::size_t k = tables.size() - 1; k >= 1; --k)
    for (const auto& d : tables[k])
      if (d.entries.size() == 1) return k;
  return 0;
}

EltRankResult elt_rank_tropical(const TropicalMatrix& t, const EltRankOptions& options, const Limits& limits) {
  const std::size_t entries = t.rows() * t.cols();
  const bool exact_mode = options.mode == EltRankOptions::Mode::Exact ||
                          (options.mode == EltRankOptions::Mode::Auto && entries <= options.exact_max_entries);
  if (options.mode == EltRankOptions::Mode::Exact && entries > options.exact_max_entries) {
    throw Error(ErrorKind::SizeBound, std::to_string(entries) + " entries exceed the exact-mode bound " +
                                          std::to_string(options.exact_max_entries));
  }
  if (std::min(t.rows(), t.cols()) > limits.max_det_size) {
    throw Error(ErrorKind::SizeBound, "min dimension exceeds determinant bound");
  }

  std::vector<std::size_t> finite;
  for (std::size_t k = 0; k < entries; ++k)
    if (t(k / t.cols(), k % t.cols())) finite.push_back(k);
  std::vector<long> layers(entries, 1);

  EltRankResult result;
  if (finite.empty()) {
    result.exact = true;
    result.witness = assign(t, layers);
    return result;
  }
  if (admits_rank_one(t)) {
    result.lower = result.upper = 1;
    result.exact = true;
    result.witness = assign(t, layers);
    return result;
  }

  const auto tables = dominant_tables(t);
  std::size_t trop = 0;
  for (std::size_t k = tables.size() - 1; k >= 1 && trop == 0; --k)
    for (const auto& d : tables[k])
      if (d.entries.size() == 1) trop = k;
  result.lower = std::max<std::size_t>(2, trop);

  std::vector<long> best = layers;
  result.upper = rank_under(tables, layers);
  const auto& pool = elt_rank_layer_pool();

  if (exact_mode) {
    std::vector<std::size_t> digit(finite.size(), 0);
    while (result.upper > result.lower) {
      std::size_t pos = 0;
      while (pos < digit.size() && ++digit[pos] == pool.size()) digit[pos++] = 0;
      if (pos == digit.size()) break;
      for (std::size_t p = 0; p < finite.size(); ++p) layers[finite[p]] = pool[digit[p]];
      const std::size_t r = rank_under(tables, layers);
      if (r < result.upper) {
        result.upper = r;
        best = layers;
      }
    }
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (std::size_t s = 0; s < options.samples && result.upper > result.lower; ++s) {
      for (auto p : finite) layers[p] = pool[pick(rng)];
      const std::size_t r = rank_under(tables, layers);
      if (r < result.upper) {
        result.upper = r;
        best = layers;
      }
    }
  }
  result.exact = result.upper == result.lower;
  result.witness = assign(t, best);
  return result;
}

}  // namespace elt
