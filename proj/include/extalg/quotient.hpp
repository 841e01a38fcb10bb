#pragma once

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "extalg/groebner.hpp"
#include "extalg/scalar.hpp"

namespace extalg {

struct NotFiniteDimensional : std::runtime_error {
  explicit NotFiniteDimensional(int degree)
      : std::runtime_error("quotient is not finite-dimensional within degree cutoff " +
                           std::to_string(degree)),
        degree(degree) {}
  int degree;
};

/// Finite-dimensional quotient KQ/I presented by a Groebner basis.  The
/// K-basis is the set of nontip paths, indexed degree-major and descending
/// under the admissible order within each degree.  Right multiplication by
/// arrows is tabulated.
template <class F>
class QuotientAlgebra {
public:
  using K = typename F::Scalar;
  /// Sparse algebra vector: (basis id, coefficient), ids strictly ascending.
  using SparseVec = std::vector<std::pair<int, K>>;

  struct BasisPath {
    Path path;
    int source;
    int target;
    int degree;
  };

  QuotientAlgebra(F field, Quiver quiver, AdmissibleOrder order, GroebnerBasis<K> gb,
                  int degree_cutoff)
      : field_(std::move(field)),
        quiver_(std::move(quiver)),
        order_(std::move(order)),
        gb_(std::move(gb)) {
    for (const auto& g : gb_.elements)
      if (!is_length_homogeneous(g))
        throw std::invalid_argument("quotient algebra requires length-homogeneous relations");
    auto tips = gb_.tips();
    for (int d = 0;; ++d) {
      if (d > degree_cutoff) throw NotFiniteDimensional(degree_cutoff);
      if (gb_.status == GbStatus::DegreeBounded && d > gb_.degree_bound)
        throw std::invalid_argument(
            "quotient algebra: basis not verified deep enough for degree " + std::to_string(d));
      std::vector<Path> level = nontip_paths(quiver_, order_, tips, d);
      if (level.empty()) break;
      ids_by_degree_.push_back({});
      for (auto& p : level) {
        int id = static_cast<int>(basis_.size());
        index_.emplace(p, id);
        ids_by_degree_.back().push_back(id);
        basis_.push_back({p, p.source, path_target(quiver_, p), d});
      }
    }
    build_arrow_table();
  }

  const F& field() const { return field_; }
  const Quiver& quiver() const { return quiver_; }
  const AdmissibleOrder& order() const { return order_; }
  const GroebnerBasis<K>& gb() const { return gb_; }

  int dim() const { return static_cast<int>(basis_.size()); }
  int max_degree() const { return static_cast<int>(ids_by_degree_.size()) - 1; }
  const BasisPath& basis(int id) const { return basis_.at(id); }
  const std::vector<int>& ids_at_degree(int d) const {
    static const std::vector<int> empty;
    return d >= 0 && d <= max_degree() ? ids_by_degree_[d] : empty;
  }
  int index_of(const Path& p) const {
    auto it = index_.find(p);
    return it == index_.end() ? -1 : it->second;
  }

  /// Normal form of a free-algebra element, expressed over the nontip basis.
  SparseVec to_basis(const Element<K>& e) const {
    Element<K> nf = normal_form<K>(quiver_, order_, e, gb_.elements);
    SparseVec out;
    for (const auto& t : nf.terms()) {
      int id = index_of(t.path);
      if (id < 0) throw std::logic_error("normal form contains a non-basis path");
      out.push_back({id, t.coeff});
    }
    sort_vec(out);
    return out;
  }

  Element<K> to_element(const SparseVec& v) const {
    std::vector<typename Element<K>::Term> terms;
    for (const auto& [id, c] : v) terms.push_back({basis_.at(id).path, c});
    return Element<K>::from_terms(order_, std::move(terms));
  }

  /// basis(id) * arrow, from the table; empty when the product is zero.
  const SparseVec& mul_basis_arrow(int id, int arrow) const {
    return arrow_table_.at(id).at(arrow);
  }

  SparseVec mul_by_arrow(const SparseVec& v, int arrow) const {
    SparseVec acc;
    for (const auto& [id, c] : v)
      for (const auto& [id2, c2] : mul_basis_arrow(id, arrow)) add_to(acc, id2, c * c2);
    compact(acc);
    return acc;
  }

  SparseVec mul_by_path(SparseVec v, const Path& p) const {
    for (int a : p.arrows) {
      if (v.empty()) break;
      v = mul_by_arrow(v, a);
    }
    if (p.trivial()) {
      SparseVec out;
      for (auto& [id, c] : v)
        if (basis_[id].target == p.source) out.push_back({id, c});
      return out;
    }
    return v;
  }

  SparseVec mul(const SparseVec& x, const SparseVec& y) const {
    SparseVec acc;
    for (const auto& [id2, c2] : y) {
      SparseVec part = mul_by_path(x, basis_[id2].path);
      for (const auto& [id, c] : part) add_to(acc, id, c * c2);
    }
    compact(acc);
    return acc;
  }

  SparseVec unit(int id, const K& c) const {
    SparseVec v;
    if (!c.is_zero()) v.push_back({id, c});
    return v;
  }

  std::string str(const SparseVec& v) const { return element_str(quiver_, to_element(v)); }

private:
  void build_arrow_table() {
    arrow_table_.resize(basis_.size());
    for (size_t id = 0; id < basis_.size(); ++id) {
      arrow_table_[id].resize(quiver_.arrow_count());
      for (int a = 0; a < quiver_.arrow_count(); ++a) {
        if (quiver_.arrow(a).source != basis_[id].target) continue;
        Path p = basis_[id].path;
        p.arrows.push_back(a);
        int direct = index_of(p);
        if (direct >= 0) {
          arrow_table_[id][a] = {{direct, field_.from_long(1)}};
          continue;
        }
        Element<K> nf =
            normal_form<K>(quiver_, order_, Element<K>::monomial(p, field_.from_long(1)),
                           gb_.elements);
        SparseVec out;
        for (const auto& t : nf.terms()) {
          int bid = index_of(t.path);
          if (bid < 0) throw std::logic_error("arrow table: normal form escaped the basis");
          out.push_back({bid, t.coeff});
        }
        sort_vec(out);
        arrow_table_[id][a] = std::move(out);
      }
    }
  }

  static void sort_vec(SparseVec& v) {
    std::sort(v.begin(), v.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
  }
  static void add_to(SparseVec& acc, int id, K c) {
    if (c.is_zero()) return;
    for (auto& [i, x] : acc)
      if (i == id) {
        x += c;
        return;
      }
    acc.push_back({id, std::move(c)});
  }
  static void compact(SparseVec& acc) {
    SparseVec out;
    for (auto& [i, x] : acc)
      if (!x.is_zero()) out.push_back({i, std::move(x)});
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    acc = std::move(out);
  }

  F field_;
  Quiver quiver_;
  AdmissibleOrder order_;
  GroebnerBasis<K> gb_;
  std::vector<BasisPath> basis_;
  std::vector<std::vector<int>> ids_by_degree_;
  std::map<Path, int, PathKeyLess> index_;
  std::vector<std::vector<SparseVec>> arrow_table_;
};

}  // namespace extalg
