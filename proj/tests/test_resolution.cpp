#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "extalg/ext_checks.hpp"
#include "extalg/monomial.hpp"
#include "extalg/resolution.hpp"
#include "test_util.hpp"

using namespace extalg;

namespace {

struct Built {
  AlgebraFile alg;
  GroebnerBasis<Rational> gb;
  std::unique_ptr<QuotientAlgebra<RationalField>> qa;
  Resolution<RationalField> res;
};

Built build(const std::string& fixture_or_text, bool is_fixture, int hom_cutoff,
            int gb_bound = 16) {
  Built b;
  b.alg = is_fixture ? testutil::load_fixture(fixture_or_text)
                     : parse_algebra(fixture_or_text);
  RationalField f;
  auto rels = relation_elements(b.alg, f);
  b.gb = complete_to_gb<Rational>(b.alg.quiver, b.alg.order, rels, gb_bound);
  b.qa = std::make_unique<QuotientAlgebra<RationalField>>(f, b.alg.quiver, b.alg.order,
                                                          b.gb, 64);
  b.res = minimal_resolution(*b.qa, hom_cutoff, 64);
  return b;
}

StackedClassification classify(const Resolution<RationalField>& res) {
  std::vector<std::vector<int>> dt;
  for (int n = 0; n <= res.computed_to(); ++n) dt.push_back(res.degrees_at(n));
  return classify_from_degrees(dt, res.gldim);
}

/// Minimality: every differential entry lies in the graded radical, and is
/// homogeneous of the degree difference of its generators.
void check_resolution_invariants(const Built& b) {
  const auto& res = b.res;
  for (int n = 1; n <= res.computed_to(); ++n) {
    for (size_t col = 0; col < res.levels[n].diff.size(); ++col)
      for (size_t row = 0; row < res.levels[n - 1].gens.size(); ++row) {
        const auto& entry = res.levels[n].diff[col][row];
        int expected_degree =
            res.levels[n].gens[col].degree - res.levels[n - 1].gens[row].degree;
        for (const auto& [id, c] : entry) {
          CHECK(b.qa->basis(id).degree >= 1);
          CHECK(b.qa->basis(id).degree == expected_degree);
          CHECK(b.qa->basis(id).source == res.levels[n - 1].gens[row].vertex);
        }
      }
  }
  CHECK(complex_property_holds(*b.qa, res));
}

}  // namespace

TEST_CASE("quotient algebra invariants: multiplication table consistency") {
  auto b = build("ex_cube.alg", true, 2);
  const auto& qa = *b.qa;
  CHECK(qa.dim() == 52);
  for (int id = 0; id < qa.dim(); ++id)
    for (int a = 0; a < qa.quiver().arrow_count(); ++a) {
      if (qa.quiver().arrow(a).source != qa.basis(id).target) continue;
      Path p = qa.basis(id).path;
      p.arrows.push_back(a);
      auto direct = qa.to_basis(Element<Rational>::monomial(p, Rational(1)));
      CHECK(direct == qa.mul_basis_arrow(id, a));
    }
  // basis ids are degree-major, descending within each degree
  for (int d = 0; d <= qa.max_degree(); ++d) {
    const auto& ids = qa.ids_at_degree(d);
    for (size_t i = 0; i + 1 < ids.size(); ++i)
      CHECK(qa.order().compare(qa.basis(ids[i]).path, qa.basis(ids[i + 1]).path) > 0);
  }
}

TEST_CASE("cube fixture: published resolution shape") {
  auto b = build("ex_cube.alg", true, 10);
  const auto& res = b.res;
  REQUIRE(res.computed_to() == 10);
  CHECK(res.levels[0].gens.size() == 7);
  CHECK(res.levels[1].gens.size() == 8);
  for (int n = 2; n <= 10; ++n) {
    CHECK(res.levels[n].gens.size() == 3);
    std::set<std::string> vts;
    for (const auto& g : res.levels[n].gens) {
      CHECK(g.degree == 2 * n);
      vts.insert(b.alg.quiver.vertex_label(g.vertex));
    }
    CHECK(vts == std::set<std::string>{"1", "3", "5"});
  }
  CHECK(!res.gldim);  // nothing terminates within the cutoff
  check_resolution_invariants(b);
  auto cls = classify(res);
  CHECK(cls.verdict == StackedClassification::Verdict::DAStacked);
  CHECK(cls.D == 4);
  CHECK(cls.A == 2);
  CHECK(cls.checked_to == 10);
}

TEST_CASE("fish fixture: published resolution shape") {
  auto b = build("ex_fish.alg", true, 8);
  const auto& res = b.res;
  std::vector<size_t> ranks{17, 18, 8, 8, 8, 8, 8, 8, 8};
  std::vector<int> degrees{0, 1, 6, 8, 12, 14, 18, 20, 24};
  REQUIRE(res.computed_to() == 8);
  for (int n = 0; n <= 8; ++n) {
    CHECK(res.levels[n].gens.size() == ranks[n]);
    for (const auto& g : res.levels[n].gens) CHECK(g.degree == degrees[n]);
  }
  check_resolution_invariants(b);
  auto cls = classify(res);
  CHECK(cls.verdict == StackedClassification::Verdict::DAStacked);
  CHECK(cls.D == 6);
  CHECK(cls.A == 2);
}

TEST_CASE("edge cases: semisimple and hereditary inputs") {
  // no arrows: P^0 alone, gldim 0
  auto semi = build("FIELD Q\nVERTICES 1 2 3\n", false, 5);
  CHECK(semi.res.computed_to() == 0);
  REQUIRE(semi.res.gldim);
  CHECK(*semi.res.gldim == 0);

  // acyclic hereditary: gldim <= 1, vacuously Koszul
  auto her = build(testutil::line_quiver_text(4), false, 5);
  REQUIRE(her.res.gldim);
  CHECK(*her.res.gldim == 1);
  CHECK(her.res.levels[1].gens.size() == 3);
  auto cls = classify(her.res);
  CHECK(cls.verdict == StackedClassification::Verdict::Koszul);
}

TEST_CASE("commutative square with one quadratic binomial is Koszul") {
  std::string sq =
      "FIELD Q\nVERTICES 1 2 3 4\nARROW p : 1 -> 2\nARROW q : 1 -> 3\n"
      "ARROW r : 2 -> 4\nARROW s : 3 -> 4\nRELATION p.r - q.s\n";
  auto b = build(sq, false, 8);
  auto cls = classify(b.res);
  CHECK(cls.verdict == StackedClassification::Verdict::Koszul);
  CHECK(cls.D == 2);
  CHECK(cls.A == 1);
  REQUIRE(b.res.gldim);
  CHECK(*b.res.gldim == 2);
  check_resolution_invariants(b);
}

TEST_CASE("graded resolver agrees with the overlap resolver on monomial fixtures") {
  for (const char* text : {
           "ex_line_4_2.alg",  // the published monomial fixture
       }) {
    auto b = build(text, true, 8);
    RationalField f;
    auto rels = relation_elements(b.alg, f);
    std::vector<Path> tips;
    for (auto& r : rels) tips.push_back(r.tip());
    auto sets = build_overlap_sets(b.alg.quiver, b.alg.order, tips, 8);
    auto mres = monomial_resolution(b.alg.quiver, sets);
    int top = std::min(b.res.computed_to(), mres.computed_to());
    for (int n = 0; n <= top; ++n) {
      std::multiset<std::pair<int, int>> graded, monomial;
      for (const auto& g : b.res.levels[n].gens) graded.insert({g.vertex, g.degree});
      for (const auto& g : mres.levels[n].gens) monomial.insert({g.vertex, g.degree});
      CHECK(graded == monomial);
    }
    CHECK(b.res.gldim == mres.gldim);
  }
}

TEST_CASE("truncation by degree cutoff is reported, not silently wrong") {
  auto alg = testutil::load_fixture("ex_cube.alg");
  RationalField f;
  auto rels = relation_elements(alg, f);
  auto gb = complete_to_gb<Rational>(alg.quiver, alg.order, rels, 12);
  QuotientAlgebra<RationalField> qa(f, alg.quiver, alg.order, gb, 64);
  auto res = minimal_resolution(qa, 10, 9);
  CHECK(!res.complete);
  CHECK(res.truncated_level >= 0);
}

TEST_CASE("resolution generator enumeration is deterministic") {
  auto b1 = build("ex_fish.alg", true, 6);
  auto b2 = build("ex_fish.alg", true, 6);
  for (int n = 0; n <= 6; ++n) {
    REQUIRE(b1.res.levels[n].gens.size() == b2.res.levels[n].gens.size());
    for (size_t i = 0; i < b1.res.levels[n].gens.size(); ++i) {
      CHECK(b1.res.levels[n].gens[i].vertex == b2.res.levels[n].gens[i].vertex);
      CHECK(b1.res.levels[n].gens[i].degree == b2.res.levels[n].gens[i].degree);
    }
  }
}
