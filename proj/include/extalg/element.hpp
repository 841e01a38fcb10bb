#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <vector>

#include "extalg/order.hpp"
#include "extalg/quiver.hpp"

namespace extalg {

/// K-linear combination of basis paths, terms kept strictly descending
/// under the admissible order that built it.  No zero coefficients are
/// stored; the zero element has no terms.
template <class K>
class Element {
public:
  struct Term {
    Path path;
    K coeff;
  };

  Element() = default;

  static Element from_terms(const AdmissibleOrder& ord, std::vector<Term> terms) {
    std::stable_sort(terms.begin(), terms.end(), [&](const Term& a, const Term& b) {
      return ord.greater(a.path, b.path);
    });
    Element e;
    for (auto& t : terms) {
      if (t.coeff.is_zero()) continue;
      if (!e.terms_.empty() && e.terms_.back().path == t.path) {
        e.terms_.back().coeff += t.coeff;
        if (e.terms_.back().coeff.is_zero()) e.terms_.pop_back();
      } else {
        e.terms_.push_back(std::move(t));
      }
    }
    return e;
  }

  /// Wrap a term vector already strictly descending; zero coefficients are
  /// dropped but no reordering happens.
  static Element from_sorted(std::vector<Term> terms) {
    Element e;
    for (auto& t : terms)
      if (!t.coeff.is_zero()) e.terms_.push_back(std::move(t));
    return e;
  }

  static Element monomial(const Path& p, K c) {
    Element e;
    if (!c.is_zero()) e.terms_.push_back(Term{p, std::move(c)});
    return e;
  }

  bool is_zero() const { return terms_.empty(); }
  int term_count() const { return static_cast<int>(terms_.size()); }
  const std::vector<Term>& terms() const { return terms_; }

  /// Greatest support path; element must be nonzero.
  const Path& tip() const {
    if (terms_.empty()) throw std::logic_error("tip of zero element");
    return terms_.front().path;
  }
  const K& ctip() const {
    if (terms_.empty()) throw std::logic_error("ctip of zero element");
    return terms_.front().coeff;
  }

  bool is_monomial() const { return terms_.size() == 1; }

  const K* coeff_of(const Path& p) const {
    for (const Term& t : terms_)
      if (t.path == p) return &t.coeff;
    return nullptr;
  }

  friend bool operator==(const Element& a, const Element& b) {
    if (a.terms_.size() != b.terms_.size()) return false;
    for (size_t i = 0; i < a.terms_.size(); ++i)
      if (!(a.terms_[i].path == b.terms_[i].path) || a.terms_[i].coeff != b.terms_[i].coeff)
        return false;
    return true;
  }
  friend bool operator!=(const Element& a, const Element& b) { return !(a == b); }

private:
  std::vector<Term> terms_;
};

template <class K>
Element<K> add(const AdmissibleOrder& ord, const Element<K>& a, const Element<K>& b) {
  std::vector<typename Element<K>::Term> out;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size()) {
      out.push_back(ta[i++]);
    } else if (i == ta.size()) {
      out.push_back(tb[j++]);
    } else {
      auto c = ord.compare(ta[i].path, tb[j].path);
      if (c > 0)
        out.push_back(ta[i++]);
      else if (c < 0)
        out.push_back(tb[j++]);
      else {
        K s = ta[i].coeff + tb[j].coeff;
        if (!s.is_zero()) out.push_back({ta[i].path, std::move(s)});
        ++i;
        ++j;
      }
    }
  }
  return Element<K>::from_sorted(std::move(out));
}

template <class K>
Element<K> negate(const Element<K>& a) {
  std::vector<typename Element<K>::Term> out;
  for (const auto& t : a.terms()) out.push_back({t.path, -t.coeff});
  return Element<K>::from_sorted(std::move(out));
}

template <class K>
Element<K> sub(const AdmissibleOrder& ord, const Element<K>& a, const Element<K>& b) {
  return add(ord, a, negate(b));
}

template <class K>
Element<K> scale(const Element<K>& a, const K& c) {
  std::vector<typename Element<K>::Term> out;
  if (!c.is_zero())
    for (const auto& t : a.terms()) out.push_back({t.path, t.coeff * c});
  return Element<K>::from_sorted(std::move(out));
}

/// Bilinear extension of path composition.
template <class K>
Element<K> multiply(const Quiver& q, const AdmissibleOrder& ord, const Element<K>& a,
                    const Element<K>& b) {
  std::vector<typename Element<K>::Term> out;
  for (const auto& ta : a.terms())
    for (const auto& tb : b.terms())
      if (auto p = compose(q, ta.path, tb.path))
        out.push_back({std::move(*p), ta.coeff * tb.coeff});
  return Element<K>::from_terms(ord, std::move(out));
}

/// u * a * v for basis paths u, v.
template <class K>
Element<K> multiply_path(const Quiver& q, const AdmissibleOrder& ord, const Path& u,
                         const Element<K>& a, const Path& v) {
  std::vector<typename Element<K>::Term> out;
  for (const auto& t : a.terms())
    if (auto m = compose(q, u, t.path))
      if (auto p = compose(q, *m, v)) out.push_back({std::move(*p), t.coeff});
  return Element<K>::from_terms(ord, std::move(out));
}

/// All support paths share one source and one target.
template <class K>
bool is_uniform(const Quiver& q, const Element<K>& a) {
  if (a.is_zero()) return true;
  int s = a.terms().front().path.source;
  int t = path_target(q, a.terms().front().path);
  for (const auto& term : a.terms())
    if (term.path.source != s || path_target(q, term.path) != t) return false;
  return true;
}

template <class K>
bool is_length_homogeneous(const Element<K>& a) {
  if (a.is_zero()) return true;
  int len = a.terms().front().path.length();
  for (const auto& t : a.terms())
    if (t.path.length() != len) return false;
  return true;
}

/// Divide through by the tip coefficient.
template <class K>
Element<K> monic(const Element<K>& a) {
  if (a.is_zero()) return a;
  std::vector<typename Element<K>::Term> out;
  const K c = a.ctip();
  for (const auto& t : a.terms()) out.push_back({t.path, t.coeff / c});
  return Element<K>::from_sorted(std::move(out));
}

template <class K>
std::string element_str(const Quiver& q, const Element<K>& a) {
  if (a.is_zero()) return "0";
  std::string s;
  bool first = true;
  for (const auto& t : a.terms()) {
    K c = t.coeff;
    bool neg = c.is_negative();
    if (neg) c = -c;
    if (first) {
      if (neg) s += "-";
      first = false;
    } else {
      s += neg ? " - " : " + ";
    }
    if (!c.is_one()) s += c.str() + "*";
    s += path_str(q, t.path);
  }
  return s;
}

}  // namespace extalg
