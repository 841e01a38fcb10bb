#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace extalg {

struct Arrow {
  std::string label;
  int source = -1;
  int target = -1;
};

/// Finite directed multigraph.  The declaration order of vertices and arrows
/// is preserved; it seeds the default admissible order.
class Quiver {
public:
  Quiver() = default;
  Quiver(std::vector<std::string> vertex_labels, std::vector<Arrow> arrows);

  int vertex_count() const { return static_cast<int>(vertex_labels_.size()); }
  int arrow_count() const { return static_cast<int>(arrows_.size()); }
  const std::string& vertex_label(int v) const { return vertex_labels_.at(v); }
  const Arrow& arrow(int a) const { return arrows_.at(a); }
  const std::vector<std::string>& vertex_labels() const { return vertex_labels_; }
  const std::vector<Arrow>& arrows() const { return arrows_; }

  /// Index lookups return -1 when the label is unknown.
  int vertex_index(const std::string& label) const;
  int arrow_index(const std::string& label) const;

  const std::vector<int>& arrows_from(int v) const { return out_arrows_.at(v); }

  friend bool operator==(const Quiver& a, const Quiver& b);

private:
  std::vector<std::string> vertex_labels_;
  std::vector<Arrow> arrows_;
  std::map<std::string, int> vertex_by_label_;
  std::map<std::string, int> arrow_by_label_;
  std::vector<std::vector<int>> out_arrows_;
};

/// Basis path: a source vertex plus a left-to-right word of arrow indices.
/// An empty word is the trivial path e_v at its source vertex.  The zero of
/// the path algebra is not a Path; operations that can vanish return
/// std::optional<Path>.
struct Path {
  int source = -1;
  std::vector<int> arrows;

  int length() const { return static_cast<int>(arrows.size()); }
  bool trivial() const { return arrows.empty(); }
  friend bool operator==(const Path&, const Path&) = default;
};

/// Structural comparator for lookup containers.  This is *not* the
/// admissible order; use AdmissibleOrder for all mathematical comparisons.
struct PathKeyLess {
  bool operator()(const Path& a, const Path& b) const {
    if (a.source != b.source) return a.source < b.source;
    return a.arrows < b.arrows;
  }
};

Path trivial_path(int v);
Path arrow_path(const Quiver& q, int a);

bool path_valid(const Quiver& q, const Path& p);
int path_target(const Quiver& q, const Path& p);

/// Concatenation pq, or nullopt (zero) when t(p) != s(q).
std::optional<Path> compose(const Quiver& q, const Path& p, const Path& r);

/// Arrow subword [pos, pos+len) of p as a Path.
Path subword(const Quiver& q, const Path& p, int pos, int len);

/// First position at which `needle` occurs as a factor of `haystack`
/// (arrow words; needle must be nontrivial), or nullopt.
std::optional<int> find_factor(const Path& haystack, const Path& needle);

std::string path_str(const Quiver& q, const Path& p);

}  // namespace extalg
