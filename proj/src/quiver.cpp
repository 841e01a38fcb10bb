#include "extalg/quiver.hpp"

#include <stdexcept>

namespace extalg {

Quiver::Quiver(std::vector<std::string> vertex_labels, std::vector<Arrow> arrows)
    : vertex_labels_(std::move(vertex_labels)), arrows_(std::move(arrows)) {
  for (int v = 0; v < vertex_count(); ++v) {
    if (vertex_labels_[v].empty())
      throw std::invalid_argument("quiver: empty vertex label");
    if (!vertex_by_label_.emplace(vertex_labels_[v], v).second)
      throw std::invalid_argument("quiver: duplicate vertex label '" + vertex_labels_[v] + "'");
  }
  out_arrows_.assign(vertex_count(), {});
  for (int a = 0; a < arrow_count(); ++a) {
    const Arrow& ar = arrows_[a];
    if (ar.label.empty()) throw std::invalid_argument("quiver: empty arrow label");
    if (vertex_by_label_.count(ar.label))
      throw std::invalid_argument("quiver: arrow label '" + ar.label + "' collides with a vertex");
    if (!arrow_by_label_.emplace(ar.label, a).second)
      throw std::invalid_argument("quiver: duplicate arrow label '" + ar.label + "'");
    if (ar.source < 0 || ar.source >= vertex_count() || ar.target < 0 ||
        ar.target >= vertex_count())
      throw std::invalid_argument("quiver: arrow '" + ar.label + "' has invalid endpoints");
    out_arrows_[ar.source].push_back(a);
  }
}

int Quiver::vertex_index(const std::string& label) const {
  auto it = vertex_by_label_.find(label);
  return it == vertex_by_label_.end() ? -1 : it->second;
}

int Quiver::arrow_index(const std::string& label) const {
  auto it = arrow_by_label_.find(label);
  return it == arrow_by_label_.end() ? -1 : it->second;
}

bool operator==(const Quiver& a, const Quiver& b) {
  if (a.vertex_labels_ != b.vertex_labels_) return false;
  if (a.arrows_.size() != b.arrows_.size()) return false;
  for (size_t i = 0; i < a.arrows_.size(); ++i) {
    const Arrow &x = a.arrows_[i], &y = b.arrows_[i];
    if (x.label != y.label || x.source != y.source || x.target != y.target) return false;
  }
  return true;
}

Path trivial_path(int v) { return Path{v, {}}; }

Path arrow_path(const Quiver& q, int a) { return Path{q.arrow(a).source, {a}}; }

bool path_valid(const Quiver& q, const Path& p) {
  if (p.source < 0 || p.source >= q.vertex_count()) return false;
  int at = p.source;
  for (int a : p.arrows) {
    if (a < 0 || a >= q.arrow_count()) return false;
    if (q.arrow(a).source != at) return false;
    at = q.arrow(a).target;
  }
  return true;
}

int path_target(const Quiver& q, const Path& p) {
  return p.arrows.empty() ? p.source : q.arrow(p.arrows.back()).target;
}

std::optional<Path> compose(const Quiver& q, const Path& p, const Path& r) {
  if (path_target(q, p) != r.source) return std::nullopt;
  Path out = p;
  out.arrows.insert(out.arrows.end(), r.arrows.begin(), r.arrows.end());
  return out;
}

Path subword(const Quiver& q, const Path& p, int pos, int len) {
  Path out;
  out.source = pos == 0 ? p.source : q.arrow(p.arrows[pos - 1]).target;
  out.arrows.assign(p.arrows.begin() + pos, p.arrows.begin() + pos + len);
  return out;
}

std::optional<int> find_factor(const Path& haystack, const Path& needle) {
  int n = haystack.length(), m = needle.length();
  if (m == 0 || m > n) return std::nullopt;
  for (int i = 0; i + m <= n; ++i) {
    bool hit = true;
    for (int k = 0; k < m; ++k)
      if (haystack.arrows[i + k] != needle.arrows[k]) {
        hit = false;
        break;
      }
    if (hit) return i;
  }
  return std::nullopt;
}

std::string path_str(const Quiver& q, const Path& p) {
  if (p.trivial()) return "e(" + q.vertex_label(p.source) + ")";
  std::string s;
  for (size_t i = 0; i < p.arrows.size(); ++i) {
    if (i) s += '.';
    s += q.arrow(p.arrows[i]).label;
  }
  return s;
}

}  // namespace extalg
