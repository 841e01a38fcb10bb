#pragma once

#include <optional>

#include "extalg/linalg.hpp"
#include "extalg/quotient.hpp"

namespace extalg {

/// Minimal graded projective resolution of Lambda_0.  Level n holds one
/// generator per projective summand of P^n, its differential column a
/// vector of algebra elements over the level n-1 generators (entries all
/// in the graded radical).
template <class F>
struct Resolution {
  using K = typename F::Scalar;
  using SparseVec = typename QuotientAlgebra<F>::SparseVec;

  struct Generator {
    int vertex = -1;  // t(g): summand is e_vertex * Lambda
    int source = -1;  // s(g): which simple this strand resolves
    int degree = 0;
  };
  struct Level {
    std::vector<Generator> gens;
    // diff[col][row]: entry of d^n in component row; empty vec = 0
    std::vector<std::vector<SparseVec>> diff;
  };

  std::vector<Level> levels;
  std::optional<int> gldim;  // set when some kernel came out empty
  bool complete = true;      // false when degree_cutoff truncated a level
  int truncated_level = -1;

  int computed_to() const { return static_cast<int>(levels.size()) - 1; }
  /// dim Ext^n = number of level-n generators (minimality).
  int ext_dim(int n) const {
    if (n <= computed_to()) return static_cast<int>(levels[n].gens.size());
    if (gldim && n > *gldim) return 0;
    throw std::out_of_range("ext_dim: level beyond the computed resolution");
  }
  bool ext_dim_known(int n) const { return n <= computed_to() || (gldim && n > *gldim); }

  std::vector<int> degrees_at(int n) const {
    std::vector<int> out;
    for (const auto& g : levels.at(n).gens) out.push_back(g.degree);
    return out;
  }
};

namespace detail {

/// Ordered basis of the graded piece (P^level)_degree: entries (gen, basis
/// id), sorted by path descending under the admissible order, then by
/// generator index ascending.
template <class F>
struct ModulePiece {
  std::vector<std::pair<int, int>> elems;
  std::map<std::pair<int, int>, int> pos;

  int size() const { return static_cast<int>(elems.size()); }
  int find(int gen, int id) const {
    auto it = pos.find({gen, id});
    return it == pos.end() ? -1 : it->second;
  }
};

template <class F>
ModulePiece<F> build_piece(const QuotientAlgebra<F>& alg,
                           const std::vector<typename Resolution<F>::Generator>& gens,
                           int degree) {
  ModulePiece<F> piece;
  for (int i = 0; i < static_cast<int>(gens.size()); ++i) {
    int d = degree - gens[i].degree;
    if (d < 0) continue;
    for (int id : alg.ids_at_degree(d))
      if (alg.basis(id).source == gens[i].vertex) piece.elems.push_back({i, id});
  }
  std::sort(piece.elems.begin(), piece.elems.end(), [&](const auto& a, const auto& b) {
    auto c = alg.order().compare(alg.basis(a.second).path, alg.basis(b.second).path);
    if (c != 0) return c > 0;
    return a.first < b.first;
  });
  for (int k = 0; k < piece.size(); ++k) piece.pos.emplace(piece.elems[k], k);
  return piece;
}

}  // namespace detail

/// Minimal resolution by graded projective covers: level n generators are a
/// basis of (ker d^{n-1})_d modulo (ker d^{n-1})_{d-1} * Lambda_1, computed
/// degree by degree with exact elimination over the nontip basis.
template <class F>
Resolution<F> minimal_resolution(const QuotientAlgebra<F>& alg, int hom_cutoff,
                                 int degree_cutoff) {
  using K = typename F::Scalar;
  using SparseVec = typename QuotientAlgebra<F>::SparseVec;
  using Gen = typename Resolution<F>::Generator;
  const Quiver& q = alg.quiver();
  const F& field = alg.field();

  Resolution<F> res;

  // Level 0: one generator per vertex, degree 0.
  typename Resolution<F>::Level level0;
  for (int v = 0; v < q.vertex_count(); ++v) level0.gens.push_back({v, v, 0});
  res.levels.push_back(std::move(level0));
  if (hom_cutoff == 0) return res;

  // Level 1: the arrows, in declaration order (the canonical minimal
  // generating set of the radical).  Arrows that die in the quotient are
  // skipped; admissible ideals never produce them.
  typename Resolution<F>::Level level1;
  for (int a = 0; a < q.arrow_count(); ++a) {
    SparseVec img =
        alg.to_basis(Element<K>::monomial(arrow_path(q, a), field.from_long(1)));
    if (img.empty()) continue;
    level1.gens.push_back({q.arrow(a).target, q.arrow(a).source, 1});
    std::vector<SparseVec> col(q.vertex_count());
    col[q.arrow(a).source] = std::move(img);
    level1.diff.push_back(std::move(col));
  }
  if (level1.gens.empty()) {
    res.gldim = 0;
    return res;
  }
  res.levels.push_back(std::move(level1));

  for (int n = 2; n <= hom_cutoff; ++n) {
    const auto& prev = res.levels[n - 1];
    const auto& prev2 = res.levels[n - 2];

    int dmin = prev.gens.front().degree;
    int dmax = 0;
    for (const auto& g : prev.gens) {
      dmin = std::min(dmin, g.degree);
      dmax = std::max(dmax, g.degree);
    }
    dmax += alg.max_degree();
    if (dmax > degree_cutoff) {
      res.complete = false;
      res.truncated_level = n;
      dmax = degree_cutoff;
    }

    struct NewGen {
      int degree;
      Vec<K> coords;  // over the piece at `degree`
      int lead_gen;
      int lead_id;
    };
    std::vector<NewGen> fresh;
    std::vector<detail::ModulePiece<F>> piece_at(dmax + 2);
    std::vector<std::vector<Vec<K>>> kernel_at(dmax + 2);

    for (int d = dmin; d <= dmax; ++d) {
      auto src = detail::build_piece<F>(alg, prev.gens, d);
      piece_at[d] = src;
      if (src.size() == 0) continue;
      auto tgt = detail::build_piece<F>(alg, prev2.gens, d);

      DenseMatrix<K> A(tgt.size(), src.size());
      for (int c = 0; c < src.size(); ++c) {
        auto [j, id] = src.elems[c];
        const Path& b = alg.basis(id).path;
        for (int row_gen = 0; row_gen < static_cast<int>(prev2.gens.size()); ++row_gen) {
          const SparseVec& entry = prev.diff[j][row_gen];
          if (entry.empty()) continue;
          SparseVec prod = alg.mul_by_path(entry, b);
          for (const auto& [pid, pc] : prod) {
            int r = tgt.find(row_gen, pid);
            if (r < 0) throw std::logic_error("resolution: image outside target piece");
            A.at(r, c) += pc;
          }
        }
      }

      auto f = rref(field, std::move(A));
      std::vector<Vec<K>> ker = kernel_basis(field, f);
      ker = rref_rows(field, std::move(ker));
      kernel_at[d] = ker;

      // old part: (kernel at d-1) * arrows, transported into this piece
      std::vector<Vec<K>> old_rows;
      if (d - 1 >= dmin) {
        for (const auto& kv : kernel_at[d - 1]) {
          for (int a = 0; a < q.arrow_count(); ++a) {
            Vec<K> w(src.size());
            bool nonzero = false;
            for (int c = 0; c < piece_at[d - 1].size(); ++c) {
              if (kv[c].is_zero()) continue;
              auto [j, id] = piece_at[d - 1].elems[c];
              for (const auto& [id2, c2] : alg.mul_basis_arrow(id, a)) {
                int slot = src.find(j, id2);
                if (slot < 0) throw std::logic_error("resolution: arrow transport misses");
                w[slot] += kv[c] * c2;
                nonzero = true;
              }
            }
            if (nonzero) old_rows.push_back(std::move(w));
          }
        }
      }
      std::vector<Vec<K>> spanned = rref_rows(field, std::move(old_rows));

      for (const auto& kv : ker) {
        Vec<K> r = reduce_against(spanned, kv);
        if (vec_is_zero(r)) continue;
        // normalize: leading coefficient 1
        int lead = -1;
        for (size_t c = 0; c < r.size(); ++c)
          if (!r[c].is_zero()) {
            lead = static_cast<int>(c);
            break;
          }
        K inv = field.from_long(1) / r[lead];
        for (auto& x : r)
          if (!x.is_zero()) x = x * inv;
        spanned = rref_rows(field, [&] {
          auto rows = spanned;
          rows.push_back(r);
          return rows;
        }());
        auto [lg, lid] = src.elems[lead];
        fresh.push_back({d, std::move(r), lg, lid});
      }
    }

    if (fresh.empty()) {
      res.gldim = n - 1;
      break;
    }

    // Canonical enumeration: degree ascending, leading component ascending,
    // leading path descending.
    std::sort(fresh.begin(), fresh.end(), [&](const NewGen& a, const NewGen& b) {
      if (a.degree != b.degree) return a.degree < b.degree;
      if (a.lead_gen != b.lead_gen) return a.lead_gen < b.lead_gen;
      return alg.order().greater(alg.basis(a.lead_id).path, alg.basis(b.lead_id).path);
    });

    typename Resolution<F>::Level level;
    for (const auto& ng : fresh) {
      const auto& piece = piece_at[ng.degree];
      int vertex = -1, source = -1;
      std::vector<SparseVec> col(prev.gens.size());
      for (int c = 0; c < piece.size(); ++c) {
        if (ng.coords[c].is_zero()) continue;
        auto [j, id] = piece.elems[c];
        const auto& bp = alg.basis(id);
        if (bp.degree == 0)
          throw std::logic_error("resolution: differential entry outside the radical");
        if (vertex < 0) vertex = bp.target;
        if (bp.target != vertex)
          throw std::logic_error("resolution: generator mixes target vertices");
        if (source < 0) source = prev.gens[j].source;
        if (prev.gens[j].source != source)
          throw std::logic_error("resolution: generator mixes source strands");
        col[j].push_back({id, ng.coords[c]});
      }
      for (auto& entry : col)
        std::sort(entry.begin(), entry.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
      level.gens.push_back({vertex, source, ng.degree});
      level.diff.push_back(std::move(col));
    }
    res.levels.push_back(std::move(level));
  }

  return res;
}

/// d^{n-1} o d^n as algebra-valued matrix entries; all must vanish.
template <class F>
bool complex_property_holds(const QuotientAlgebra<F>& alg, const Resolution<F>& res) {
  for (int n = 2; n <= res.computed_to(); ++n) {
    const auto& dn = res.levels[n].diff;
    const auto& dprev = res.levels[n - 1].diff;
    for (size_t col = 0; col < dn.size(); ++col)
      for (size_t row = 0; row < res.levels[n - 2].gens.size(); ++row) {
        typename QuotientAlgebra<F>::SparseVec acc;
        for (size_t mid = 0; mid < res.levels[n - 1].gens.size(); ++mid) {
          if (dn[col][mid].empty() || dprev[mid][row].empty()) continue;
          auto part = alg.mul(dprev[mid][row], dn[col][mid]);
          for (auto& [id, c] : part) {
            bool merged = false;
            for (auto& [i2, c2] : acc)
              if (i2 == id) {
                c2 += c;
                merged = true;
                break;
              }
            if (!merged) acc.push_back({id, c});
          }
        }
        for (auto& [id, c] : acc)
          if (!c.is_zero()) return false;
      }
  }
  return true;
}

}  // namespace extalg
