#include "extalg/order.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace extalg {

AdmissibleOrder AdmissibleOrder::declaration(const Quiver& q) {
  AdmissibleOrder o;
  o.vertex_rank_.resize(q.vertex_count());
  std::iota(o.vertex_rank_.begin(), o.vertex_rank_.end(), 0);
  o.arrow_rank_.resize(q.arrow_count());
  std::iota(o.arrow_rank_.begin(), o.arrow_rank_.end(), 0);
  return o;
}

AdmissibleOrder AdmissibleOrder::with_arrow_order(const Quiver& q,
                                                  const std::vector<int>& arrows_descending) {
  if (static_cast<int>(arrows_descending.size()) != q.arrow_count())
    throw std::invalid_argument("arrow order must mention every arrow exactly once");
  AdmissibleOrder o = declaration(q);
  std::vector<bool> seen(q.arrow_count(), false);
  for (size_t r = 0; r < arrows_descending.size(); ++r) {
    int a = arrows_descending[r];
    if (a < 0 || a >= q.arrow_count() || seen[a])
      throw std::invalid_argument("arrow order is not a permutation of the arrows");
    seen[a] = true;
    o.arrow_rank_[a] = static_cast<int>(r);
  }
  return o;
}

std::strong_ordering AdmissibleOrder::compare(const Path& a, const Path& b) const {
  if (a.length() != b.length())
    return a.length() < b.length() ? std::strong_ordering::less : std::strong_ordering::greater;
  if (a.trivial()) {
    // smaller rank = greater element
    int ra = vertex_rank_.at(a.source), rb = vertex_rank_.at(b.source);
    if (ra != rb) return ra > rb ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  for (int i = 0; i < a.length(); ++i) {
    int ra = arrow_rank_.at(a.arrows[i]), rb = arrow_rank_.at(b.arrows[i]);
    if (ra != rb) return ra > rb ? std::strong_ordering::less : std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::vector<int> AdmissibleOrder::arrows_descending() const {
  std::vector<int> idx(arrow_rank_.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](int x, int y) { return arrow_rank_[x] < arrow_rank_[y]; });
  return idx;
}

}  // namespace extalg
