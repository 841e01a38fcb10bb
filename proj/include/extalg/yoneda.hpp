#pragma once

#include <functional>
#include <map>

#include "extalg/resolution.hpp"

namespace extalg {

/// Yoneda products on E(Lambda) via chain-map lifting.  A basis cocycle
/// f^n_i is the dual of the i-th level-n generator; the product
/// f^m_j . f^n_i is f^m_j composed with the stage-m lifting of f^n_i.
/// Any particular solution of a lifting system yields the same class; an
/// optional perturber adds kernel vectors to exercise that invariance.
template <class F>
class YonedaCalculator {
public:
  using K = typename F::Scalar;
  using SparseVec = typename QuotientAlgebra<F>::SparseVec;

  YonedaCalculator(const QuotientAlgebra<F>& alg, const Resolution<F>& res)
      : alg_(alg), res_(res) {}

  /// Test hook: called after each lifting solve with the level k and the
  /// kernel basis of d^k; may add any kernel combination to the solution.
  void set_perturber(
      std::function<void(int level, const std::vector<Vec<K>>& kernel, Vec<K>& x)> p) {
    perturber_ = std::move(p);
    liftings_.clear();
  }

  int ext_dim(int n) const { return res_.ext_dim(n); }
  const QuotientAlgebra<F>& algebra() const { return alg_; }
  const Resolution<F>& resolution() const { return res_; }

  /// f^m_j . f^n_i expanded over the dual basis of level n+m.
  Vec<K> product(int m, int j, int n, int i) {
    if (n + m > res_.computed_to() && !(res_.gldim && n + m > *res_.gldim))
      throw std::out_of_range("yoneda: product beyond the computed resolution");
    int dim = res_.ext_dim(n + m);
    Vec<K> out(dim);
    if (dim == 0) return out;
    const auto& lift = lifting(n, i, m);
    // coefficient of the identity coordinate of component j at level m
    int vj = res_.levels[m].gens[j].vertex;
    int id = alg_.index_of(trivial_path(vj));
    int slot = full_basis(m).find(j, id);
    for (int t = 0; t < dim; ++t) out[t] = lift[t].empty() ? K{} : coord(lift[t], slot);
    return out;
  }

  /// Bilinear extension to arbitrary class vectors.
  Vec<K> product_vec(int m, const Vec<K>& f, int n, const Vec<K>& g) {
    Vec<K> out(res_.ext_dim(n + m));
    for (int j = 0; j < static_cast<int>(f.size()); ++j) {
      if (f[j].is_zero()) continue;
      for (int i = 0; i < static_cast<int>(g.size()); ++i) {
        if (g[i].is_zero()) continue;
        Vec<K> p = product(m, j, n, i);
        for (size_t t = 0; t < p.size(); ++t) out[t] += f[j] * g[i] * p[t];
      }
    }
    return out;
  }

private:
  struct FullBasis {
    std::vector<std::pair<int, int>> elems;  // (gen, basis id), gen asc then id asc
    std::map<std::pair<int, int>, int> pos;
    int find(int gen, int id) const {
      auto it = pos.find({gen, id});
      return it == pos.end() ? -1 : it->second;
    }
    int size() const { return static_cast<int>(elems.size()); }
  };

  const FullBasis& full_basis(int level) {
    if (full_.count(level)) return full_[level];
    FullBasis fb;
    const auto& gens = res_.levels.at(level).gens;
    for (int g = 0; g < static_cast<int>(gens.size()); ++g)
      for (int id = 0; id < alg_.dim(); ++id)
        if (alg_.basis(id).source == gens[g].vertex) fb.elems.push_back({g, id});
    for (int k = 0; k < fb.size(); ++k) fb.pos.emplace(fb.elems[k], k);
    return full_[level] = std::move(fb);
  }

  struct Solver {
    Rref<K> f;
    std::vector<Vec<K>> kernel;
  };

  /// Factorization of d^level as a K-linear map on the full module bases.
  const Solver& solver(int level) {
    if (solvers_.count(level)) return solvers_[level];
    const FullBasis& src = full_basis(level);
    const FullBasis& tgt = full_basis(level - 1);
    DenseMatrix<K> A(tgt.size(), src.size());
    const auto& diff = res_.levels.at(level).diff;
    for (int c = 0; c < src.size(); ++c) {
      auto [g, id] = src.elems[c];
      for (int row = 0; row < static_cast<int>(res_.levels[level - 1].gens.size()); ++row) {
        if (diff[g][row].empty()) continue;
        SparseVec prod = alg_.mul_by_path(diff[g][row], alg_.basis(id).path);
        for (const auto& [pid, pc] : prod) {
          int r = tgt.find(row, pid);
          if (r < 0) throw std::logic_error("yoneda: image outside target module");
          A.at(r, c) += pc;
        }
      }
    }
    Solver s;
    s.f = rref(alg_.field(), std::move(A));
    s.kernel = kernel_basis(alg_.field(), s.f);
    return solvers_[level] = std::move(s);
  }

  static K coord(const Vec<K>& v, int slot) { return slot < 0 ? K{} : v[slot]; }

  /// Columns of L^k(f^n_i): one full-basis vector of P^k per generator of
  /// P^{n+k}; stages computed on demand and cached.
  const std::vector<Vec<K>>& lifting(int n, int i, int k) {
    auto key = std::make_tuple(n, i, k);
    auto it = liftings_.find(key);
    if (it != liftings_.end()) return it->second;

    std::vector<Vec<K>> cols;
    if (k == 0) {
      const FullBasis& fb0 = full_basis(0);
      const auto& gens = res_.levels.at(n).gens;
      for (int t = 0; t < static_cast<int>(gens.size()); ++t) {
        Vec<K> v(fb0.size());
        if (t == i) {
          int vtx = gens[t].vertex;
          int slot = fb0.find(vtx, alg_.index_of(trivial_path(vtx)));
          if (slot < 0) throw std::logic_error("yoneda: missing identity coordinate");
          v[slot] = alg_.field().from_long(1);
        }
        cols.push_back(std::move(v));
      }
      return liftings_[key] = std::move(cols);
    }

    const auto& prev = lifting(n, i, k - 1);
    const Solver& sol = solver(k);
    const FullBasis& src_prev = full_basis(k - 1);
    const auto& gens = res_.levels.at(n + k).gens;
    const auto& diff = res_.levels.at(n + k).diff;
    for (int t = 0; t < static_cast<int>(gens.size()); ++t) {
      // rhs = L^{k-1}(d^{n+k}(gen_t)) in the full basis of level k-1
      Vec<K> rhs(src_prev.size());
      for (int s = 0; s < static_cast<int>(res_.levels[n + k - 1].gens.size()); ++s) {
        const SparseVec& entry = diff[t][s];
        if (entry.empty()) continue;
        for (int c = 0; c < src_prev.size(); ++c) {
          if (prev[s][c].is_zero()) continue;
          auto [g, id] = src_prev.elems[c];
          SparseVec prod = alg_.mul(alg_.unit(id, prev[s][c]), entry);
          for (const auto& [pid, pc] : prod) {
            int slot = src_prev.find(g, pid);
            if (slot < 0) throw std::logic_error("yoneda: rhs outside module");
            rhs[slot] += pc;
          }
        }
      }
      auto x = solve(sol.f, rhs);
      if (!x)
        throw std::logic_error("yoneda: inconsistent lifting system (resolver bug)");
      if (perturber_) perturber_(k, sol.kernel, *x);
      cols.push_back(std::move(*x));
    }
    return liftings_[key] = std::move(cols);
  }

  const QuotientAlgebra<F>& alg_;
  const Resolution<F>& res_;
  std::map<int, FullBasis> full_;
  std::map<int, Solver> solvers_;
  std::map<std::tuple<int, int, int>, std::vector<Vec<K>>> liftings_;
  std::function<void(int, const std::vector<Vec<K>>&, Vec<K>&)> perturber_;
};

}  // namespace extalg
