#pragma once

#include <optional>
#include <string>
#include <vector>

namespace extalg {

/// Prescribed generation degree of P^n for a (D,A)-stacked algebra.
inline long delta_degree(int n, int D, int A) {
  if (n == 0) return 0;
  if (n == 1) return 1;
  if (n % 2 == 0) return static_cast<long>(n) / 2 * D;
  return static_cast<long>(n - 1) / 2 * D + A;
}

struct StackedClassification {
  enum class Verdict { Koszul, DKoszul, DAStacked, NotStacked, Undetermined };
  Verdict verdict = Verdict::Undetermined;
  int D = 0;
  int A = 0;
  int checked_to = 0;  // highest homological degree examined
  std::optional<int> gldim;
  std::string witness;
  std::vector<std::pair<int, long>> delta_table;  // (n, generation degree)

  bool is_stacked() const {
    return verdict == Verdict::Koszul || verdict == Verdict::DKoszul ||
           verdict == Verdict::DAStacked;
  }
  std::string verdict_str() const {
    switch (verdict) {
      case Verdict::Koszul: return "Koszul";
      case Verdict::DKoszul: return "DKoszul";
      case Verdict::DAStacked: return "DAStacked";
      case Verdict::NotStacked: return "NotStacked";
      default: return "UndeterminedBeyond(" + std::to_string(checked_to) + ")";
    }
  }
};

/// Classify from the generation-degree multisets of a minimal resolution,
/// one vector per homological degree starting at 0.  `gldim` is set when
/// the resolution is known to terminate.  Nothing is extrapolated beyond
/// the computed range.
inline StackedClassification classify_from_degrees(
    const std::vector<std::vector<int>>& level_degrees, std::optional<int> gldim) {
  StackedClassification cls;
  cls.gldim = gldim;
  int top = static_cast<int>(level_degrees.size()) - 1;
  cls.checked_to = top;

  auto single_degree = [&](int n) -> std::optional<int> {
    const auto& ds = level_degrees[n];
    if (ds.empty()) return std::nullopt;
    for (int d : ds)
      if (d != ds.front()) return std::nullopt;
    return ds.front();
  };

  for (int n = 0; n <= top; ++n) {
    if (level_degrees[n].empty()) continue;
    auto d = single_degree(n);
    if (!d) {
      cls.verdict = StackedClassification::Verdict::NotStacked;
      cls.witness = "P^" + std::to_string(n) + " is generated in more than one degree";
      return cls;
    }
    cls.delta_table.push_back({n, *d});
    if (n == 0 && *d != 0) {
      cls.verdict = StackedClassification::Verdict::NotStacked;
      cls.witness = "P^0 not generated in degree 0";
      return cls;
    }
    if (n == 1 && *d != 1) {
      cls.verdict = StackedClassification::Verdict::NotStacked;
      cls.witness = "P^1 not generated in degree 1";
      return cls;
    }
  }

  if (top < 2 || level_degrees.size() <= 2 || level_degrees[2].empty()) {
    // gldim <= 1: vacuously Koszul (hereditary or semisimple)
    if (gldim && *gldim <= 1) {
      cls.verdict = StackedClassification::Verdict::Koszul;
      cls.D = 2;
      cls.A = 1;
      return cls;
    }
    cls.verdict = StackedClassification::Verdict::Undetermined;
    cls.witness = "resolution not computed past homological degree 1";
    return cls;
  }

  int D = *single_degree(2);
  if (D < 2) {
    cls.verdict = StackedClassification::Verdict::NotStacked;
    cls.witness = "P^2 generated in degree " + std::to_string(D) + " < 2";
    return cls;
  }
  cls.D = D;

  if (top < 3 || level_degrees.size() <= 3 || level_degrees[3].empty()) {
    if (gldim && *gldim <= 2) {
      cls.A = 1;  // vacuous choice: delta(3) is never tested
      cls.verdict = D == 2 ? StackedClassification::Verdict::Koszul
                           : StackedClassification::Verdict::DKoszul;
      return cls;
    }
    cls.verdict = StackedClassification::Verdict::Undetermined;
    cls.witness = "A undetermined: resolution not computed past homological degree 2";
    return cls;
  }

  int A = *single_degree(3) - D;
  if (A < 1) {
    cls.verdict = StackedClassification::Verdict::NotStacked;
    cls.witness = "P^3 generated in degree " + std::to_string(*single_degree(3)) +
                  " below D + 1";
    return cls;
  }
  cls.A = A;

  for (int n = 4; n <= top; ++n) {
    if (level_degrees[n].empty()) continue;
    long expect = delta_degree(n, D, A);
    int got = *single_degree(n);
    if (got != expect) {
      cls.verdict = StackedClassification::Verdict::NotStacked;
      cls.witness = "P^" + std::to_string(n) + " generated in degree " + std::to_string(got) +
                    ", expected delta(n) = " + std::to_string(expect);
      return cls;
    }
  }

  if (D == 2 && A == 1)
    cls.verdict = StackedClassification::Verdict::Koszul;
  else if (A == 1)
    cls.verdict = StackedClassification::Verdict::DKoszul;
  else
    cls.verdict = StackedClassification::Verdict::DAStacked;
  return cls;
}

}  // namespace extalg
