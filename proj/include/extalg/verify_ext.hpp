#pragma once

#include <cctype>
#include <sstream>

#include "extalg/algebra_io.hpp"
#include "extalg/ext_checks.hpp"
#include "extalg/groebner.hpp"

namespace extalg {

template <class K>
Vec<K> scale_vec(Vec<K> v, const K& c) {
  for (auto& x : v) x = x * c;
  return v;
}

struct ExtVerifyCheck {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct ExtVerifyReport {
  bool all_pass = false;
  std::vector<ExtVerifyCheck> checks;
  std::vector<std::pair<int, long>> hat_nontip_counts;
  std::vector<std::pair<int, long>> hat_dims_table;
};

namespace detail {

struct TieredArrow {
  int tier = 0;   // 1, 2, 3
  int index = -1; // 0-based into the Ext basis of that homological degree
};

/// Arrow labels of a presentation quiver follow the a/b/c + 1-based index
/// convention; the index refers to the canonical basis enumeration of the
/// resolution being verified against.
inline std::optional<TieredArrow> parse_tier_label(const std::string& label) {
  if (label.size() < 2) return std::nullopt;
  char c = label[0];
  int tier = c == 'a' ? 1 : c == 'b' ? 2 : c == 'c' ? 3 : 0;
  if (tier == 0) return std::nullopt;
  for (size_t i = 1; i < label.size(); ++i)
    if (!std::isdigit(static_cast<unsigned char>(label[i]))) return std::nullopt;
  int idx = std::stoi(label.substr(1));
  if (idx < 1) return std::nullopt;
  return TieredArrow{tier, idx - 1};
}

}  // namespace detail

/// Verify a candidate quadratic presentation (Gamma, H) of the regraded Ext
/// algebra against the computed resolution:
///   (a) vertex/arrow counts and endpoints match the Ext basis data;
///   (b) nontip counts of K Gamma / <H> per hat degree equal dim E-hat;
///   (c) each monomial relation is a vanishing Yoneda product, each
///       binomial a verified equality of products.
template <class F>
ExtVerifyReport verify_ext_presentation(const QuotientAlgebra<F>& alg,
                                        const Resolution<F>& res, YonedaCalculator<F>& yon,
                                        const AlgebraFile& candidate, int hat_cutoff,
                                        int gb_bound) {
  using K = typename F::Scalar;
  ExtVerifyReport rep;
  const Quiver& gamma = candidate.quiver;
  const Quiver& q = alg.quiver();

  // --- (a) vertices, arrow tiers, endpoints -------------------------------
  {
    ExtVerifyCheck chk;
    chk.name = "counts-and-endpoints";
    chk.pass = true;
    std::ostringstream detail;
    if (gamma.vertex_count() != res.ext_dim(0)) {
      chk.pass = false;
      detail << "vertex count " << gamma.vertex_count() << " != dim Ext^0 " << res.ext_dim(0)
             << "; ";
    }
    std::vector<int> tier_count(4, 0);
    std::vector<detail::TieredArrow> tiers(gamma.arrow_count());
    for (int a = 0; a < gamma.arrow_count() && chk.pass; ++a) {
      auto t = detail::parse_tier_label(gamma.arrow(a).label);
      if (!t) {
        chk.pass = false;
        detail << "arrow label '" << gamma.arrow(a).label
               << "' does not follow the a/b/c-index convention; ";
        break;
      }
      tiers[a] = *t;
      ++tier_count[t->tier];
    }
    for (int n = 1; n <= 3 && chk.pass; ++n)
      if (tier_count[n] != res.ext_dim(n)) {
        chk.pass = false;
        detail << "tier " << n << " arrow count " << tier_count[n] << " != dim Ext^" << n
               << " = " << res.ext_dim(n) << "; ";
      }
    // endpoints: arrow f^n_i runs t(class) -> s(class), matched by label
    for (int a = 0; a < gamma.arrow_count() && chk.pass; ++a) {
      auto [tier, idx] = tiers[a];
      if (idx >= res.ext_dim(tier)) {
        chk.pass = false;
        detail << "arrow " << gamma.arrow(a).label << " exceeds dim Ext^" << tier << "; ";
        break;
      }
      const auto& gen = res.levels[tier].gens[idx];
      const std::string& from = q.vertex_label(gen.vertex);
      const std::string& to = q.vertex_label(gen.source);
      if (gamma.vertex_label(gamma.arrow(a).source) != from ||
          gamma.vertex_label(gamma.arrow(a).target) != to) {
        chk.pass = false;
        detail << "arrow " << gamma.arrow(a).label << " runs "
               << gamma.vertex_label(gamma.arrow(a).source) << " -> "
               << gamma.vertex_label(gamma.arrow(a).target) << ", expected " << from << " -> "
               << to << "; ";
      }
    }
    chk.detail = detail.str();
    rep.checks.push_back(chk);
    if (!chk.pass) {
      rep.all_pass = false;
      return rep;
    }
  }

  // --- (b) hat-degree dimensions via nontips of K Gamma / <H> -------------
  {
    ExtVerifyCheck chk;
    chk.name = "hat-dimension-table";
    chk.pass = true;
    std::ostringstream detail;
    RationalField qf;  // counting nontips is field-independent; use Q
    auto rels = relation_elements(candidate, qf);
    for (const auto& r : rels)
      if (!is_length_homogeneous(r) || r.tip().length() != 2)
        throw std::invalid_argument("candidate relations must be quadratic in hat degree");
    auto gb = complete_to_gb<Rational>(gamma, candidate.order, rels, gb_bound);
    rep.hat_dims_table = hat_dims(res);
    int kmax = hat_cutoff;
    if (!rep.hat_dims_table.empty())
      kmax = std::min<int>(kmax, static_cast<int>(rep.hat_dims_table.size()) - 1);
    for (int k = 0; k <= kmax; ++k) {
      long count = static_cast<long>(nontips(gamma, candidate.order, gb, k).size());
      rep.hat_nontip_counts.push_back({k, count});
      long expect = rep.hat_dims_table[k].second;
      if (count != expect) {
        chk.pass = false;
        detail << "hat degree " << k << ": nontip count " << count << " != dim E-hat "
               << expect << "; ";
      }
    }
    chk.detail = detail.str();
    rep.checks.push_back(chk);
  }

  // --- (c) relations against Yoneda products -------------------------------
  {
    ExtVerifyCheck chk;
    chk.name = "relations-vs-products";
    chk.pass = true;
    std::ostringstream detail;
    const F& field = alg.field();
    int checked = 0;
    for (const auto& rel : candidate.relations) {
      auto product_of_word = [&](const Path& w) -> Vec<K> {
        auto t1 = *detail::parse_tier_label(gamma.arrow(w.arrows[0]).label);
        auto t2 = *detail::parse_tier_label(gamma.arrow(w.arrows[1]).label);
        return yon.product(t1.tier, t1.index, t2.tier, t2.index);
      };
      if (rel.terms.size() == 1) {
        Vec<K> p = product_of_word(rel.terms[0].path);
        ++checked;
        if (!vec_is_zero(p)) {
          chk.pass = false;
          detail << "monomial relation " << path_str(gamma, rel.terms[0].path)
                 << " has a nonzero Yoneda product; ";
        }
      } else if (rel.terms.size() == 2) {
        Vec<K> p1 = scale_vec(product_of_word(rel.terms[0].path),
                              field.from_rational(rel.terms[0].coeff));
        Vec<K> p2 = scale_vec(product_of_word(rel.terms[1].path),
                              field.from_rational(rel.terms[1].coeff));
        ++checked;
        bool zero_sum = true;
        for (size_t t = 0; t < p1.size(); ++t)
          if (!(p1[t] + p2[t]).is_zero()) {
            zero_sum = false;
            break;
          }
        if (!zero_sum) {
          chk.pass = false;
          detail << "binomial relation at line " << rel.line
                 << " is not an equality of Yoneda products; ";
        }
        if (vec_is_zero(p1))
          detail << "note: binomial at line " << rel.line << " has vanishing products; ";
      } else {
        chk.pass = false;
        detail << "relation with " << rel.terms.size() << " terms is not quadratic-shaped; ";
      }
    }
    detail << checked << " relations checked";
    chk.detail = detail.str();
    rep.checks.push_back(chk);
  }

  rep.all_pass = true;
  for (const auto& c : rep.checks) rep.all_pass = rep.all_pass && c.pass;
  return rep;
}

}  // namespace extalg
