#pragma once

#include <array>
#include <sstream>
#include <tuple>

#include "extalg/stacked.hpp"
#include "extalg/yoneda.hpp"

namespace extalg {

template <class K, class F>
Vec<K> unit_vec(const F& field, int dim, int at) {
  Vec<K> v(dim);
  v[at] = field.from_long(1);
  return v;
}

/// Hat-degree bucket of a homological degree: Ext^0 -> 0,
/// Ext^1..Ext^3 -> 1, Ext^{2n} + Ext^{2n+1} -> n for n >= 2.
inline int hat_bucket(int homological) {
  if (homological == 0) return 0;
  if (homological <= 3) return 1;
  return homological / 2;
}

struct HatRegime {
  bool applicable = false;
  std::string note;
};

/// Admissible routes to the hat grading: the standard regime D>2, A>1,
/// D != 2A, D != A+1; the trivially-graded case gldim < 4; and D = 2A with
/// Ext^6 = 0, where the bucket products cannot collide.
template <class F>
HatRegime hat_regime(const StackedClassification& cls, const Resolution<F>& res) {
  HatRegime r;
  if (!cls.is_stacked()) {
    r.note = "algebra is not (D,A)-stacked";
    return r;
  }
  int D = cls.D, A = cls.A;
  if (cls.gldim && *cls.gldim < 4) {
    r.applicable = true;
    r.note = "gldim < 4: hat grading is trivially valid";
    return r;
  }
  if (D > 2 && A > 1 && D != 2 * A && D != A + 1) {
    r.applicable = true;
    return r;
  }
  if (D == 2 * A && A > 1) {
    if (res.ext_dim_known(6) && res.ext_dim(6) == 0) {
      r.applicable = true;
      r.note = "D = 2A with Ext^6 = 0: grading closes";
      return r;
    }
    r.note = "D = 2A with Ext^6 != 0: no regrading exists (see obstruct)";
    return r;
  }
  r.note = "regime violation: hat grading requires D > 2, A > 1, D != 2A, D != A+1";
  return r;
}

struct HatReport {
  bool applicable = false;
  std::string regime_note;
  std::vector<std::pair<int, long>> dims;  // (hat degree, dim)
  bool closure_checked = false;
  std::vector<std::string> closure_violations;
};

/// Hat dimension table from the resolution's generator counts; entries are
/// emitted only while both contributing homological degrees are known.
template <class F>
std::vector<std::pair<int, long>> hat_dims(const Resolution<F>& res) {
  std::vector<std::pair<int, long>> out;
  if (!res.ext_dim_known(0)) return out;
  out.push_back({0, res.ext_dim(0)});
  if (res.ext_dim_known(1) && res.ext_dim_known(2) && res.ext_dim_known(3))
    out.push_back({1, static_cast<long>(res.ext_dim(1)) + res.ext_dim(2) + res.ext_dim(3)});
  else
    return out;
  for (int k = 2;; ++k) {
    if (!res.ext_dim_known(2 * k) || !res.ext_dim_known(2 * k + 1)) break;
    long d = static_cast<long>(res.ext_dim(2 * k)) + res.ext_dim(2 * k + 1);
    if (d == 0) break;
    out.push_back({k, d});
  }
  return out;
}

/// Emit the hat dimension table and, when a calculator is supplied, verify
/// the bucket closure: a product Ext^a x Ext^b whose homological degree
/// escapes the bucket sum must vanish.
template <class F>
HatReport hat_grading(const StackedClassification& cls, const Resolution<F>& res,
                      YonedaCalculator<F>* yon) {
  HatReport rep;
  HatRegime regime = hat_regime(cls, res);
  rep.applicable = regime.applicable;
  rep.regime_note = regime.note;
  if (!rep.applicable) return rep;
  rep.dims = hat_dims(res);
  if (!yon) return rep;
  rep.closure_checked = true;

  int top = res.computed_to();
  for (int a = 0; a <= top; ++a)
    for (int b = 0; a + b <= top; ++b) {
      if (res.ext_dim(a) == 0 || res.ext_dim(b) == 0) continue;
      if (hat_bucket(a) + hat_bucket(b) == hat_bucket(a + b)) continue;
      for (int i = 0; i < res.ext_dim(a); ++i)
        for (int j = 0; j < res.ext_dim(b); ++j) {
          Vec<typename F::Scalar> p = yon->product(a, i, b, j);
          if (!vec_is_zero(p)) {
            std::ostringstream os;
            os << "f^" << a << "_" << i + 1 << " . f^" << b << "_" << j + 1
               << " is nonzero but buckets " << hat_bucket(a) << "+" << hat_bucket(b)
               << " != " << hat_bucket(a + b);
            rep.closure_violations.push_back(os.str());
          }
        }
    }
  return rep;
}

struct VanishingViolation {
  std::string law;
  int a, i, b, j;
};

/// Vanishing laws for a (D,A)-stacked algebra with D > 2:
///   (i)   Ext^1 . Ext^1 = 0
///   (ii)  D != A+1: Ext^n . Ext^1 = 0 = Ext^1 . Ext^n for n odd
///   (iii) A > 1:    Ext^n . Ext^1 = 0 = Ext^1 . Ext^n for n even >= 2
///   (iv)  D != 2A:  Ext^{2m+1} . Ext^{2n+1} = 0 for m, n >= 1
template <class F>
std::vector<VanishingViolation> check_vanishing_laws(const StackedClassification& cls,
                                                     const Resolution<F>& res,
                                                     YonedaCalculator<F>& yon) {
  std::vector<VanishingViolation> out;
  if (!cls.is_stacked() || cls.D <= 2) return out;
  int top = res.computed_to();
  auto check_zero = [&](const std::string& law, int a, int b) {
    if (a + b > top || res.ext_dim(a) == 0 || res.ext_dim(b) == 0) return;
    for (int i = 0; i < res.ext_dim(a); ++i)
      for (int j = 0; j < res.ext_dim(b); ++j)
        if (!vec_is_zero(yon.product(a, i, b, j))) out.push_back({law, a, i, b, j});
  };
  check_zero("(i)", 1, 1);
  for (int n = 1; n <= top - 1; ++n) {
    if (n % 2 == 1 && cls.D != cls.A + 1) {
      check_zero("(ii)", n, 1);
      check_zero("(ii)", 1, n);
    }
    if (n % 2 == 0 && n >= 2 && cls.A > 1) {
      check_zero("(iii)", n, 1);
      check_zero("(iii)", 1, n);
    }
  }
  if (cls.D != 2 * cls.A)
    for (int m = 1; 2 * m + 1 <= top; ++m)
      for (int n = m; 2 * m + 1 + 2 * n + 1 <= top; ++n) {
        check_zero("(iv)", 2 * m + 1, 2 * n + 1);
        if (n != m) check_zero("(iv)", 2 * n + 1, 2 * m + 1);
      }
  return out;
}

struct GenerationCheck {
  bool pass = true;
  int failed_at = -1;
  std::string witness;
};

/// Low-degree generation: for each 4 <= n <= n_max the products
/// Ext^2 x Ext^{n-2} must span Ext^n (rank check over K).  On failure the
/// witness is a dual-basis class outside the product span.
template <class F>
GenerationCheck check_low_degree_generation(const Resolution<F>& res,
                                            YonedaCalculator<F>& yon, int n_max) {
  using K = typename F::Scalar;
  const F& field = yon.algebra().field();
  GenerationCheck out;
  n_max = std::min(n_max, res.computed_to());
  for (int n = 4; n <= n_max; ++n) {
    int dim = res.ext_dim(n);
    if (dim == 0) continue;
    std::vector<Vec<K>> rows;
    for (int i = 0; i < res.ext_dim(2); ++i)
      for (int j = 0; j < res.ext_dim(n - 2); ++j) {
        Vec<K> p = yon.product(2, i, n - 2, j);
        if (!vec_is_zero(p)) rows.push_back(std::move(p));
      }
    auto basis = rref_rows(field, std::move(rows));
    if (static_cast<int>(basis.size()) == dim) continue;
    out.pass = false;
    out.failed_at = n;
    // find a standard dual-basis vector outside the span
    for (int t = 0; t < dim; ++t) {
      Vec<K> e(dim);
      e[t] = field.from_long(1);
      if (!vec_is_zero(reduce_against(basis, e))) {
        out.witness = "f^" + std::to_string(n) + "_" + std::to_string(t + 1) +
                      " is not a product of Ext^2 and Ext^" + std::to_string(n - 2);
        break;
      }
    }
    return out;
  }
  return out;
}

struct ObstructionReport {
  enum class Result { Obstructed, NoObstructionFound } result = Result::NoObstructionFound;
  std::string note;
  std::array<int, 3> triple{-1, -1, -1};  // 1-based indices into Ext^2 when obstructed
  std::string z_str;                      // the witness class in Ext^6
  std::vector<std::string> pair_terms;    // the Ext^3 pair expression
};

/// D = 2A obstruction: a nonzero z in Ext^6 expressible both as a product
/// of three Ext^2 classes and as a sum of Ext^3 x Ext^3 products.  With
/// gldim >= 6 such a witness always exists; Ext^6 = 0 means none.
template <class F>
ObstructionReport check_2A_obstruction(const StackedClassification& cls,
                                       const Resolution<F>& res, YonedaCalculator<F>& yon) {
  using K = typename F::Scalar;
  const F& field = yon.algebra().field();
  if (!cls.is_stacked() || cls.D != 2 * cls.A || cls.A <= 1)
    throw std::invalid_argument("obstruction check requires a (2A,A)-stacked algebra, A > 1");
  if (!res.ext_dim_known(6))
    throw std::invalid_argument("obstruction check needs the resolution to degree 6");

  ObstructionReport rep;
  int dim6 = res.ext_dim(6);
  if (dim6 == 0) {
    rep.result = ObstructionReport::Result::NoObstructionFound;
    rep.note = "Ext^6 = 0";
    return rep;
  }
  int d2 = res.ext_dim(2), d3 = res.ext_dim(3);

  // first nonzero triple product of Ext^2 basis classes
  Vec<K> z;
  for (int i = 0; i < d2 && z.empty(); ++i)
    for (int j = 0; j < d2 && z.empty(); ++j)
      for (int k = 0; k < d2; ++k) {
        Vec<K> inner = yon.product(2, j, 2, k);
        if (vec_is_zero(inner)) continue;
        Vec<K> full = yon.product_vec(2, unit_vec<K>(field, d2, i), 4, inner);
        if (!vec_is_zero(full)) {
          z = std::move(full);
          rep.triple = {i + 1, j + 1, k + 1};
          break;
        }
      }
  if (z.empty()) {
    rep.note = "no nonzero triple product of Ext^2 classes found";
    return rep;
  }

  // solve z = sum lambda_{uv} f^3_u . f^3_v
  DenseMatrix<K> A(dim6, d3 * d3);
  std::vector<std::pair<int, int>> cols;
  for (int u = 0; u < d3; ++u)
    for (int v = 0; v < d3; ++v) {
      Vec<K> p = yon.product(3, u, 3, v);
      int c = static_cast<int>(cols.size());
      cols.push_back({u, v});
      for (int r = 0; r < dim6; ++r) A.at(r, c) = p[r];
    }
  auto f = rref(field, std::move(A));
  auto sol = solve(f, z);
  if (!sol) {
    rep.note = "witness is not a sum of Ext^3 products (unexpected in this regime)";
    return rep;
  }
  rep.result = ObstructionReport::Result::Obstructed;
  for (size_t c = 0; c < sol->size(); ++c) {
    if ((*sol)[c].is_zero()) continue;
    auto [u, v] = cols[c];
    std::string coeff = (*sol)[c].is_one() ? "" : (*sol)[c].str() + "*";
    rep.pair_terms.push_back(coeff + "f^3_" + std::to_string(u + 1) + ".f^3_" +
                             std::to_string(v + 1));
  }
  std::ostringstream zs;
  zs << "(";
  bool first = true;
  for (int t = 0; t < dim6; ++t) {
    if (!first) zs << ", ";
    zs << z[t].str();
    first = false;
  }
  zs << ")";
  rep.z_str = zs.str();
  return rep;
}

}  // namespace extalg
