#pragma once

#include <compare>
#include <vector>

#include "extalg/quiver.hpp"

namespace extalg {

/// Left length lexicographic order on basis paths.  Paths are compared by
/// length first; equal lengths are compared arrow by arrow from the left,
/// the first difference deciding.  Trivial paths compare by vertex rank and
/// sit below every arrow.
///
/// Rank 0 is the greatest vertex/arrow.  The default ranking is declaration
/// order with earlier-declared elements greater.
class AdmissibleOrder {
public:
  AdmissibleOrder() = default;

  static AdmissibleOrder declaration(const Quiver& q);

  /// Arrow ranking given as arrow indices in descending order; must be a
  /// permutation of all arrows.  Vertices keep declaration ranking.
  static AdmissibleOrder with_arrow_order(const Quiver& q,
                                          const std::vector<int>& arrows_descending);

  std::strong_ordering compare(const Path& a, const Path& b) const;
  bool greater(const Path& a, const Path& b) const { return compare(a, b) > 0; }
  bool less(const Path& a, const Path& b) const { return compare(a, b) < 0; }

  int arrow_rank(int a) const { return arrow_rank_.at(a); }
  int vertex_rank(int v) const { return vertex_rank_.at(v); }

  /// Arrow indices in descending order.
  std::vector<int> arrows_descending() const;

private:
  std::vector<int> vertex_rank_;
  std::vector<int> arrow_rank_;
};

}  // namespace extalg
