#pragma once

// Brute-force oracles, independent of the library's Groebner / elimination
// machinery: plain path enumeration and a self-contained Gaussian
// elimination over mpq_class keyed by arrow words.

#include <gmpxx.h>

#include <map>
#include <optional>
#include <vector>

#include "extalg/quiver.hpp"

namespace oracle {

using Word = std::vector<int>;  // source vertex followed by arrow indices

struct SpanRow {
  std::map<Word, mpq_class> coeffs;
};

/// All paths of length d, as (source, word).
inline std::vector<extalg::Path> all_paths(const extalg::Quiver& q, int d) {
  std::vector<extalg::Path> out, stack;
  for (int v = 0; v < q.vertex_count(); ++v) stack.push_back(extalg::trivial_path(v));
  while (!stack.empty()) {
    extalg::Path p = stack.back();
    stack.pop_back();
    if (p.length() == d) {
      out.push_back(p);
      continue;
    }
    for (int a : q.arrows_from(extalg::path_target(q, p))) {
      extalg::Path e = p;
      e.arrows.push_back(a);
      stack.push_back(e);
    }
  }
  return out;
}

/// Insert a row into an echelon span; returns true if the rank grew.
inline bool span_insert(std::vector<SpanRow>& span, SpanRow row) {
  for (const auto& b : span) {
    if (row.coeffs.empty()) break;
    auto lead = b.coeffs.begin()->first;
    auto it = row.coeffs.find(lead);
    if (it == row.coeffs.end()) continue;
    mpq_class f = it->second / b.coeffs.begin()->second;
    for (const auto& [w, c] : b.coeffs) {
      auto jt = row.coeffs.find(w);
      if (jt == row.coeffs.end())
        row.coeffs.emplace(w, -f * c);
      else {
        jt->second -= f * c;
        if (jt->second == 0) row.coeffs.erase(jt);
      }
    }
  }
  if (row.coeffs.empty()) return false;
  span.push_back(std::move(row));
  // keep rows sorted by leading word so reduction above stays well-defined
  std::sort(span.begin(), span.end(), [](const SpanRow& a, const SpanRow& b) {
    return a.coeffs.begin()->first < b.coeffs.begin()->first;
  });
  return true;
}

/// dim of the degree-d piece of the two-sided ideal generated by the given
/// uniform homogeneous elements (as term lists over paths).
inline int ideal_dim(
    const extalg::Quiver& q,
    const std::vector<std::vector<std::pair<mpq_class, extalg::Path>>>& gens, int d) {
  std::vector<SpanRow> span;
  int rank = 0;
  for (const auto& g : gens) {
    int glen = g.front().second.length();
    for (int lu = 0; lu + glen <= d; ++lu) {
      int lv = d - glen - lu;
      for (const auto& u : all_paths(q, lu)) {
        for (const auto& v : all_paths(q, lv)) {
          SpanRow row;
          for (const auto& [c, p] : g) {
            auto m = extalg::compose(q, u, p);
            if (!m) continue;
            auto w = extalg::compose(q, *m, v);
            if (!w) continue;
            // tag words by source vertex to keep trivial paths distinct
            Word key;
            key.push_back(w->source);
            key.insert(key.end(), w->arrows.begin(), w->arrows.end());
            row.coeffs[key] += c;
            if (row.coeffs[key] == 0) row.coeffs.erase(key);
          }
          if (!row.coeffs.empty() && span_insert(span, std::move(row))) ++rank;
        }
      }
    }
  }
  return rank;
}

/// Quotient dimensions per degree until the quotient dies, or nullopt if
/// still alive at max_degree (not finite-dimensional within the bound).
inline std::optional<std::vector<int>> quotient_dims(
    const extalg::Quiver& q,
    const std::vector<std::vector<std::pair<mpq_class, extalg::Path>>>& gens,
    int max_degree) {
  std::vector<int> dims;
  for (int d = 0; d <= max_degree; ++d) {
    int paths = static_cast<int>(all_paths(q, d).size());
    int dim = paths - ideal_dim(q, gens, d);
    if (dim == 0 && paths > 0) {
      // all longer paths factor through dead degree-d pieces
      return dims;
    }
    if (paths == 0) return dims;
    dims.push_back(dim);
  }
  return std::nullopt;
}

}  // namespace oracle
