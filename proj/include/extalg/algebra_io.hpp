#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "extalg/element.hpp"
#include "extalg/order.hpp"
#include "extalg/quiver.hpp"
#include "extalg/scalar.hpp"

namespace extalg {

struct ParseError : std::runtime_error {
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", col " + std::to_string(col) +
                           ": " + msg),
        line(line),
        col(col) {}
  int line;
  int col;
};

struct FieldDesc {
  bool rational = true;
  uint32_t prime = 0;
  std::string str() const { return rational ? "Q" : "F " + std::to_string(prime); }
};

struct ParsedTerm {
  Rational coeff;
  Path path;
};

struct ParsedRelation {
  std::vector<ParsedTerm> terms;
  int line = 0;
};

/// Parsed ALGEBRA file: quiver, uniform relation elements, field and
/// admissible-order descriptors.
struct AlgebraFile {
  FieldDesc field;
  Quiver quiver;
  AdmissibleOrder order;
  std::vector<ParsedRelation> relations;
  bool explicit_order = false;
};

AlgebraFile parse_algebra(std::string_view text, int max_path_length = 64);
AlgebraFile parse_algebra_file(const std::string& filename, int max_path_length = 64);

std::string serialize_algebra(const AlgebraFile& alg);

/// Relations as elements over a concrete field.
template <class F>
std::vector<Element<typename F::Scalar>> relation_elements(const AlgebraFile& alg,
                                                           const F& field) {
  using K = typename F::Scalar;
  std::vector<Element<K>> out;
  out.reserve(alg.relations.size());
  for (const auto& rel : alg.relations) {
    std::vector<typename Element<K>::Term> terms;
    for (const auto& t : rel.terms) terms.push_back({t.path, field.from_rational(t.coeff)});
    Element<K> e = Element<K>::from_terms(alg.order, std::move(terms));
    if (e.is_zero())
      throw ParseError(rel.line, 1, "relation vanishes over " + field.name());
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace extalg
