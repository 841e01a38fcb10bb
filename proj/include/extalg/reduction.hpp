#pragma once

#include <span>
#include <vector>

#include "extalg/element.hpp"

namespace extalg {

/// One simple reduction a -> a - lambda * u * X[reducer] * v.
template <class K>
struct ReductionStep {
  K lambda;
  Path u;
  int reducer;
  Path v;
};

template <class K>
struct ReductionResult {
  Element<K> normal_form;
  std::vector<ReductionStep<K>> steps;
};

/// Rewrites a to a normal form over X: afterwards no support path of the
/// result contains the tip of any X element as a factor.  Deterministic:
/// always the greatest reducible support path, its leftmost reducible
/// occurrence, the first matching reducer in list order.  Reducers must be
/// nonzero with nontrivial tips; they need not be monic.
template <class K>
ReductionResult<K> reduce(const Quiver& q, const AdmissibleOrder& ord, Element<K> a,
                          std::span<const Element<K>> X) {
  ReductionResult<K> res;
  for (const auto& f : X)
    if (f.is_zero() || f.tip().trivial())
      throw std::invalid_argument("reduce: reducers must be nonzero with nontrivial tips");

  for (;;) {
    // greatest reducible term (terms are stored descending)
    bool reduced = false;
    for (const auto& term : a.terms()) {
      const Path& t = term.path;
      // leftmost occurrence over all reducers
      int best_pos = -1, best_f = -1;
      for (int pos = 0; pos + 1 <= t.length() && best_pos < 0; ++pos) {
        for (size_t fi = 0; fi < X.size(); ++fi) {
          const Path& tip = X[fi].tip();
          if (tip.length() > t.length() - pos) continue;
          bool hit = true;
          for (int k = 0; k < tip.length(); ++k)
            if (t.arrows[pos + k] != tip.arrows[k]) {
              hit = false;
              break;
            }
          if (hit) {
            best_pos = pos;
            best_f = static_cast<int>(fi);
            break;
          }
        }
      }
      if (best_pos < 0) continue;

      const Element<K>& f = X[best_f];
      const Path& tip = f.tip();
      Path u = subword(q, t, 0, best_pos);
      Path v = subword(q, t, best_pos + tip.length(), t.length() - best_pos - tip.length());
      K lambda = term.coeff / f.ctip();
      Element<K> ufv = multiply_path(q, ord, u, f, v);
      a = sub(ord, a, scale(ufv, lambda));
      res.steps.push_back({lambda, u, best_f, v});
      reduced = true;
      break;
    }
    if (!reduced) break;
  }
  res.normal_form = std::move(a);
  return res;
}

template <class K>
Element<K> normal_form(const Quiver& q, const AdmissibleOrder& ord, const Element<K>& a,
                       std::span<const Element<K>> X) {
  return reduce(q, ord, a, X).normal_form;
}

/// True when some support path of a contains the tip of some X element.
template <class K>
bool is_reducible(const Element<K>& a, std::span<const Element<K>> X) {
  for (const auto& term : a.terms())
    for (const auto& f : X)
      if (!f.is_zero() && find_factor(term.path, f.tip())) return true;
  return false;
}

}  // namespace extalg
