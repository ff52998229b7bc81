#include "elt/purify.hpp"

#include <algorithm>
#include <map>

#include "instantiate.hpp"

namespace elt {

namespace {

template <LayerRing L>
Matrix<L> strip_zero_layers(const Matrix<L>& a) {
  Matrix<L> b = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      if (!a(i, j).is_pure()) b(i, j) = Elt<L>::neg_inf();
  return b;
}

template <LayerRing L>
struct Track {
  std::vector<std::size_t> perm;
  Elt<L> value;                         // signed track
  std::vector<std::size_t> variables;  // ascending variable indices
  L fixed_layer;                       // sign times the layers of the non-variable entries
};

}  // namespace

template <LayerRing L>
Desingularization<L> desingularize_pure(const Matrix<L>& a, const Limits& limits) {
  if (!a.is_square()) throw Error(ErrorKind::NotSquare, "desingularization needs a square matrix");
  if constexpr (!L::kIsField) {
    throw Error(ErrorKind::NotAField, std::string("desingularization over layer ring ") + std::string(L::kName));
  } else {
    const Elt<L> d = det(a, limits);
    if (!d.is_zero_layer()) throw Error(ErrorKind::NotSingular, "det has a nonzero layer");

    const std::size_t n = a.rows();
    Desingularization<L> out{strip_zero_layers(a), {}};
    auto& tr = out.trace;

    std::vector<long> var_of(n * n, -1);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (a(i, j).is_finite() && a(i, j).is_zero_layer()) {
          var_of[i * n + j] = static_cast<long>(tr.variables.size());
          tr.variables.emplace_back(i, j);
        }
      }
    }
    tr.layer_assignment.assign(tr.variables.size(), std::nullopt);

    if (d.is_neg_inf()) {
      tr.case_tag = 1;
      return out;
    }

    std::vector<Track<L>> zero_tracks;
    for_each_permutation(n, [&](const std::vector<std::size_t>& perm, bool odd) {
      Track<L> t{perm, odd ? Elt<L>::minus_one() : Elt<L>::one(), {}, odd ? -L::one() : L::one()};
      for (std::size_t i = 0; i < n && t.value.is_finite(); ++i) {
        const auto& x = a(i, perm[i]);
        t.value = mul(t.value, x);
        const long v = var_of[i * n + perm[i]];
        if (v >= 0) {
          t.variables.push_back(static_cast<std::size_t>(v));
        } else if (x.is_finite()) {
          t.fixed_layer = t.fixed_layer * x.layer_ref();
        }
      }
      if (t.value.is_neg_inf()) return;
      if (t.value.is_nonzero_layer()) {
        tr.x1.push_back(perm);
        tr.beta = add(tr.beta, t.value);
      } else {
        std::sort(t.variables.begin(), t.variables.end());
        zero_tracks.push_back(std::move(t));
      }
    });

    std::vector<const Track<L>*> dominant;
    for (const auto& t : zero_tracks) {
      if (tr.beta.is_neg_inf() || t.value.t() > tr.beta.t()) {
        dominant.push_back(&t);
        tr.x2.push_back(t.perm);
      }
    }
    if (dominant.empty()) {
      tr.case_tag = 2;
      return out;
    }
    tr.case_tag = 3;
    if (tr.beta.is_zero_layer()) return out;

    const Rational target = tr.beta.t();
    auto size_of = [](const Track<L>* t) { return Rational(static_cast<long>(t->variables.size())); };
    Rational delta = (dominant.front()->value.t() - target) / size_of(dominant.front());
    for (const auto* t : dominant) delta = std::max(delta, (t->value.t() - target) / size_of(t));

    auto shifted = [&](const Track<L>* t, const Rational& shift) { return t->value.t() - size_of(t) * shift; };
    std::vector<const Track<L>*> top;
    for (const auto* t : dominant)
      if (shifted(t, delta) == target) top.push_back(t);

    std::map<std::vector<std::size_t>, L> groups;
    for (const auto* t : top) {
      auto [it, inserted] = groups.try_emplace(t->variables, L::zero());
      it->second = it->second + t->fixed_layer;
    }
    tr.layer_polynomial.push_back({{}, tr.beta.layer_ref()});
    const std::vector<std::size_t>* chosen = nullptr;
    for (const auto& [vars, coef] : groups) {
      if (coef.is_zero()) continue;
      tr.layer_polynomial.push_back({vars, coef});
      if (!chosen || vars.size() < chosen->size()) chosen = &vars;
    }

    if (chosen) {
      const L& coef = groups.at(*chosen);
      for (std::size_t k = 0; k < chosen->size(); ++k) {
        tr.layer_assignment[(*chosen)[k]] =
            k == 0 ? -tr.beta.layer_ref() * *coef.unit_inverse() : L::one();
      }
    } else {
      // Every dominant group cancels: shift a little less so that those
      // groups sit strictly above beta and annihilate each other.
      tr.cancelling_fallback = true;
      Rational eta = delta / Rational(2);
      while (true) {
        const Rational trial = delta - eta;
        Rational best = shifted(dominant.front(), trial);
        for (const auto* t : dominant) best = std::max(best, shifted(t, trial));
        bool ok = best > target;
        for (const auto* t : dominant)
          if (shifted(t, trial) == best && shifted(t, delta) != target) ok = false;
        if (ok) {
          delta = trial;
          break;
        }
        eta = eta / Rational(2);
      }
      tr.layer_assignment.assign(tr.variables.size(), L::one());
    }

    tr.shift = delta;
    for (const auto& [i, j] : tr.variables) tr.tangibles.push_back(a(i, j).t() - delta);
    for (std::size_t k = 0; k < tr.variables.size(); ++k) {
      if (!tr.layer_assignment[k]) continue;
      const auto [i, j] = tr.variables[k];
      out.matrix(i, j) = Elt<L>(tr.tangibles[k], *tr.layer_assignment[k]);
    }
    return out;
  }
}

template <LayerRing L>
Matrix<L> purify_dependent_rows(const Matrix<L>& a, const DependenceWitness<L>& witness) {
  if constexpr (!L::kIsField) {
    throw Error(ErrorKind::NotAField, std::string("purification over layer ring ") + std::string(L::kName));
  } else {
    for (auto i : witness.support())
      if (i >= a.rows()) throw Error(ErrorKind::InvalidWitness, "support index " + std::to_string(i) + " out of range");
    const auto rows = a.row_vectors();
    if (!verify_witness(rows, witness)) throw Error(ErrorKind::InvalidWitness, "witness does not verify on A");

    Matrix<L> b = strip_zero_layers(a);
    const auto& support = witness.support();
    const auto& alpha = witness.coefficients();
    for (std::size_t j = 0; j < a.cols(); ++j) {
      Elt<L> total;
      Elt<L> pure_part;
      for (std::size_t k = 0; k < support.size(); ++k) {
        const Elt<L> term = mul(alpha[k], a(support[k], j));
        total = add(total, term);
        if (a(support[k], j).is_nonzero_layer()) pure_part = add(pure_part, term);
      }
      if (pure_part.is_zero_layer()) continue;
      // A zero-layered entry dominates; let the first one cancel the rest.
      for (std::size_t k = 0; k < support.size(); ++k) {
        const auto& x = a(support[k], j);
        if (x.is_finite() && x.is_zero_layer() && (alpha[k].t() + x.t()) == total.t()) {
          b(support[k], j) = negate(mul(scalar_inverse(alpha[k]), pure_part));
          break;
        }
      }
    }
    return b;
  }
}

#define ELT_INSTANTIATE(L)                                                            \
  template Desingularization<L> desingularize_pure(const Matrix<L>&, const Limits&); \
  template Matrix<L> purify_dependent_rows(const Matrix<L>&, const DependenceWitness<L>&);
ELT_FOR_EACH_RING(ELT_INSTANTIATE)
#undef ELT_INSTANTIATE

}  // namespace elt
