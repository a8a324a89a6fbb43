#pragma once

/**
 * Measuring operators and enrichment tensors.
 *
 * P(A,B) is the universal measuring cocategory on the function carrier Y^X:
 * its weight at k is the greatest element q with q ≤ e, q ≤ q ⊗ q, and
 * q ⊗ A(x,x') ≤ B(k(x), k(x')) for all x, x'. Q(M,N) is the analogous
 * measuring comodule over P(A,B). Both are computed indexwise as greatest
 * fixpoints by descending iteration.
 *
 * The tensors are built concretely: C ▷ B is the star closure of a one-step
 * generator, K ⊘ N the free module on a tensor matrix. Their defining
 * adjunctions, and those of the convolution homs, are not taken on faith:
 * verify_adjunction_* enumerates every test structure up to a carrier bound
 * and compares both sides of each transposition, reporting any mismatch.
 */

#include <algorithm>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qmat/cat.hpp"
#include "qmat/conv.hpp"
#include "qmat/enumerate.hpp"
#include "qmat/error.hpp"
#include "qmat/finset.hpp"
#include "qmat/mod.hpp"
#include "qmat/quantale.hpp"
#include "qmat/report.hpp"
#include "qmat/vmat.hpp"

namespace qmat {

/// Universal measuring cocategory P(A,B) on Y^X:
/// p_k = gfp(q ↦ (e ∧ m_k) ∧ (q ⊗ q)), m_k = ⋀_{x,x'} [A(x,x'), B(kx,kx')].
inline QCocategory measure_P(const QCategory& a, const QCategory& b,
                             std::size_t cap = kDefaultHomCap,
                             MeasuringReport* trace = nullptr) {
  const Quantale& q = a.quantale();
  FuncSet fs(a.objects, b.objects, cap);
  std::vector<Elem> weight(fs.size());
  if (trace) {
    trace->op = "measure_P";
    trace->index_labels.clear();
    trace->steps.clear();
  }
  for (std::size_t k = 0; k < fs.size(); ++k) {
    Elem bound = q.unit();
    for (std::size_t x = 0; x < a.objects.size(); ++x)
      for (std::size_t x2 = 0; x2 < a.objects.size(); ++x2)
        bound = q.meet(bound,
                       q.residuate(a.hom(x, x2),
                                   b.hom(fs.apply(k, x), fs.apply(k, x2))));
    auto [val, steps] = gfp_from_top(q, [&](Elem v) {
      return q.meet(bound, q.tensor(v, v));
    });
    weight[k] = val;
    if (trace) {
      trace->index_labels.push_back(fs.carrier().label(k));
      trace->steps.push_back(steps);
    }
  }
  Checked<QCocategory> checked = verify_cocategory(a.qptr(), fs.carrier(),
                                                   weight);
  if (!checked.ok())
    throw InternalError("measuring cocategory failed its laws:\n" +
                        checked.report.to_string());
  return *checked.value;
}

/// Universal measuring comodule Q(M,N) over P(A,B), source T^U:
/// entry(k,h) = gfp(q ↦ b ∧ (p_k ⊗ q)), b = ⋀_{x,u} [M(x,u), N(kx,hu)].
inline QComodule comeasure_Q(const QModule& m, const QModule& n,
                             std::size_t cap = kDefaultHomCap,
                             MeasuringReport* trace = nullptr) {
  const Quantale& q = m.quantale();
  QCocategory p = measure_P(m.over, n.over, cap);
  FuncSet kf(m.over.objects, n.over.objects, cap);
  FuncSet hf(m.src, n.src, cap);
  if (kf.size() != 0 &&
      hf.size() > cap / std::max<std::size_t>(kf.size(), 1))
    throw CapError("measuring comodule carrier product exceeds the cap of " +
                   std::to_string(cap));
  if (trace) {
    trace->op = "comeasure_Q";
    trace->index_labels.clear();
    trace->steps.clear();
  }
  VMatrix mat(m.qptr(), hf.carrier(), kf.carrier());
  for (std::size_t k = 0; k < kf.size(); ++k)
    for (std::size_t h = 0; h < hf.size(); ++h) {
      Elem bound = q.top();
      for (std::size_t x = 0; x < m.over.objects.size(); ++x)
        for (std::size_t u = 0; u < m.src.size(); ++u)
          bound = q.meet(bound,
                         q.residuate(m.mat(x, u),
                                     n.mat(kf.apply(k, x), hf.apply(h, u))));
      auto [val, steps] = gfp_from_top(q, [&](Elem v) {
        return q.meet(bound, q.tensor(p.weight[k], v));
      });
      mat.set(k, h, val);
      if (trace) {
        trace->index_labels.push_back("(" + kf.carrier().label(k) + ", " +
                                      hf.carrier().label(h) + ")");
        trace->steps.push_back(steps);
      }
    }
  Checked<QComodule> checked = verify_comodule(p, mat);
  if (!checked.ok())
    throw InternalError("measuring comodule failed its laws:\n" +
                        checked.report.to_string());
  return *checked.value;
}

/// Tensor C ▷ B on Z×Y: star closure of the generator
/// G((z,y),(z',y')) = c_z ⊗ B(y,y') when z = z', bottom otherwise.
inline QCategory tensor_cat(const QCocategory& c, const QCategory& b,
                            std::size_t* rounds = nullptr) {
  const Quantale& q = b.quantale();
  const FinSet carrier = product_set(c.objects, b.objects);
  VMatrix g(b.qptr(), carrier, carrier);
  const std::size_t ny = b.objects.size();
  for (std::size_t z = 0; z < c.objects.size(); ++z)
    for (std::size_t y = 0; y < ny; ++y)
      for (std::size_t y2 = 0; y2 < ny; ++y2)
        g.set(z * ny + y, z * ny + y2, q.tensor(c.weight[z], b.hom(y, y2)));
  StarResult st = star_closure(g);
  if (rounds) *rounds = st.rounds;
  return std::move(st.category);
}

/// Tensor K ⊘ N over C ▷ B: the free module on K ⊗ N.
inline QModule tensor_mod(const QComodule& k, const QModule& n,
                          std::size_t* rounds = nullptr) {
  QCategory over = tensor_cat(k.over, n.over, rounds);
  return free_module(over, tensor_matrices(k.mat, n.mat));
}

/// Cotensors for the enrichment are the convolution structures.
inline QCategory cotensor_cat(const QCocategory& c, const QCategory& b,
                              std::size_t cap = kDefaultHomCap) {
  return convolution_category(c, b, cap);
}

inline QModule cotensor_mod(const QComodule& k, const QModule& m,
                            std::size_t cap = kDefaultHomCap) {
  return convolution_module(k, m, cap);
}

namespace detail {

inline std::string weight_case(const QCocategory& c) {
  std::string s = "weights(";
  for (std::size_t z = 0; z < c.objects.size(); ++z)
    s += (z ? ", " : "") + c.objects.label(z) + "=" +
         c.q->label(c.weight[z]);
  return s + ")";
}

inline std::string matrix_case(const VMatrix& m) {
  std::string s = "entries(";
  for (std::size_t y = 0; y < m.tgt().size(); ++y)
    for (std::size_t x = 0; x < m.src().size(); ++x) {
      if (y + x) s += ", ";
      s += m.tgt().label(y) + " " + m.src().label(x) + "=" +
           m.quantale().label(m(y, x));
    }
  return s + ")";
}

inline void finish(AdjunctionReport& rep) {
  std::sort(rep.failures.begin(), rep.failures.end());
}

/// Transpose g : Z → Y^X to g^t : X → Y^Z, g^t(x)(z) = g(z)(x).
inline Func transpose_into(const FuncSet& fyx, const FuncSet& fyz,
                           const Func& g, const FinSet& x) {
  std::vector<std::size_t> gt(x.size());
  std::vector<std::size_t> images(fyz.dom().size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t z = 0; z < fyz.dom().size(); ++z)
      images[z] = fyx.apply(g(z), i);
    gt[i] = fyz.encode(images);
  }
  return Func(x, fyz.carrier(), std::move(gt));
}

/// Flatten g : X → Y'^Z to ĝ : X×Z → Y', ĝ(x,z) = g(x)(z).
inline Func flatten_from(const FuncSet& fs, const Func& g, const FinSet& x,
                         const FinSet& z) {
  const FinSet dom = product_set(x, z);
  std::vector<std::size_t> images(dom.size());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < z.size(); ++j)
      images[i * z.size() + j] = fs.apply(g(i), j);
  return Func(dom, fs.cod(), std::move(images));
}

}  // namespace detail

/// Universal property of a P(A,B) candidate: for every cocategory C on a
/// carrier of size ≤ bound and every g : Z → Y^X,
///   [∀z: c_z ≤ p_{g(z)}]  ⟺  [g^t is a functor A → H(C,B)].
/// The right side never mentions p, so disagreement convicts the candidate.
inline AdjunctionReport verify_adjunction_P_against(
    const QCategory& a, const QCategory& b, const QCocategory& p,
    std::size_t bound, std::size_t cap = kDefaultHomCap) {
  FuncSet fyx(a.objects, b.objects, cap);
  if (p.objects != fyx.carrier())
    throw BoundaryError("candidate measuring cocategory must live on the "
                        "function carrier");
  AdjunctionReport rep{"P", 0, {}};
  EnumBudget budget;
  for (std::size_t zs = 1; zs <= bound; ++zs) {
    const FinSet z = default_carrier(zs, "z");
    FuncSet fyz(z, b.objects, cap);
    enumerate_cocategories(a.qptr(), z, budget, [&](const QCocategory& c) {
      const QCategory hcb = convolution_category(c, b, cap);
      enumerate_functions(z, p.objects, budget, [&](const Func& g) {
        ++rep.cases;
        const bool lhs = morphism_check(g, c, p);
        const bool rhs = morphism_check(
            detail::transpose_into(fyx, fyz, g, a.objects), a, hcb);
        if (lhs != rhs)
          rep.failures.push_back("C " + detail::weight_case(c) + "; g = " +
                                 g.describe() + "; measuring " +
                                 (lhs ? "holds" : "fails") +
                                 " but the transpose " +
                                 (rhs ? "is" : "is not") + " a functor");
      });
    });
  }
  detail::finish(rep);
  return rep;
}

inline AdjunctionReport verify_adjunction_P(const QCategory& a,
                                            const QCategory& b,
                                            std::size_t bound,
                                            std::size_t cap = kDefaultHomCap) {
  return verify_adjunction_P_against(a, b, measure_P(a, b, cap), bound, cap);
}

/// Universal property of a Q(M,N) candidate over a P(A,B) candidate: for
/// every comodule K over every C (carriers ≤ bound) and all g, h,
///   [g cofunctor C → P and K(z,v) ≤ Q(g z, h v)]
///     ⟺ [x ↦ g(−)(x) is a functor A → H(C,B)
///         and ∀x,u: M(x,u) ≤ ⋀_{z,v} [K(z,v), N(g(z)x, h(v)u)]].
inline AdjunctionReport verify_adjunction_Q_against(
    const QModule& m, const QModule& n, const QCocategory& p,
    const QComodule& qc, std::size_t bound,
    std::size_t cap = kDefaultHomCap) {
  const Quantale& q = m.quantale();
  FuncSet fyx(m.over.objects, n.over.objects, cap);
  FuncSet ftu(m.src, n.src, cap);
  if (p.objects != fyx.carrier() || qc.src != ftu.carrier())
    throw BoundaryError("candidate measuring comodule must live on the "
                        "function carriers");
  AdjunctionReport rep{"Q", 0, {}};
  EnumBudget budget;
  for (std::size_t zs = 1; zs <= bound; ++zs) {
    const FinSet z = default_carrier(zs, "z");
    FuncSet fyz(z, n.over.objects, cap);
    enumerate_cocategories(m.qptr(), z, budget, [&](const QCocategory& c) {
      const QCategory hcb = convolution_category(c, n.over, cap);
      for (std::size_t vs = 1; vs <= bound; ++vs) {
        const FinSet v = default_carrier(vs, "v");
        enumerate_comodules(c, v, budget, [&](const QComodule& k) {
          enumerate_functions(z, p.objects, budget, [&](const Func& g) {
            const Func gt = detail::transpose_into(fyx, fyz, g,
                                                   m.over.objects);
            const bool gcof = morphism_check(g, c, p);
            const bool gfun = morphism_check(gt, m.over, hcb);
            enumerate_functions(v, qc.src, budget, [&](const Func& h) {
              ++rep.cases;
              bool lhs = gcof;
              for (std::size_t zi = 0; zi < z.size() && lhs; ++zi)
                for (std::size_t vi = 0; vi < v.size(); ++vi)
                  if (!q.leq(k.mat(zi, vi), qc.mat(g(zi), h(vi)))) {
                    lhs = false;
                    break;
                  }
              bool rhs = gfun;
              for (std::size_t x = 0; x < m.over.objects.size() && rhs; ++x)
                for (std::size_t u = 0; u < m.src.size() && rhs; ++u)
                  for (std::size_t zi = 0; zi < z.size() && rhs; ++zi)
                    for (std::size_t vi = 0; vi < v.size(); ++vi) {
                      const Elem lift =
                          q.tensor(k.mat(zi, vi), m.mat(x, u));
                      if (!q.leq(lift, n.mat(fyx.apply(g(zi), x),
                                             ftu.apply(h(vi), u)))) {
                        rhs = false;
                        break;
                      }
                    }
              if (lhs != rhs)
                rep.failures.push_back(
                    "C " + detail::weight_case(c) + "; K " +
                    detail::matrix_case(k.mat) + "; g = " + g.describe() +
                    "; h = " + h.describe() + "; comodule side " +
                    (lhs ? "holds" : "fails") + " but measuring side " +
                    (rhs ? "holds" : "fails"));
            });
          });
        });
      }
    });
  }
  detail::finish(rep);
  return rep;
}

inline AdjunctionReport verify_adjunction_Q(const QModule& m, const QModule& n,
                                            std::size_t bound,
                                            std::size_t cap = kDefaultHomCap) {
  return verify_adjunction_Q_against(m, n, measure_P(m.over, n.over, cap),
                                     comeasure_Q(m, n, cap), bound, cap);
}

/// Tensor adjunction C▷B ⊣-side: for every category B' on a carrier ≤ bound
/// and every f : Z×Y → Y',
///   [f functor C▷B → B']  ⟺  [y ↦ f(−,y) is a functor B → H(C,B')].
inline AdjunctionReport verify_adjunction_tensor_cat(
    const QCocategory& c, const QCategory& b, std::size_t bound,
    std::size_t cap = kDefaultHomCap) {
  const QCategory tb = tensor_cat(c, b);
  AdjunctionReport rep{"tensor_cat", 0, {}};
  EnumBudget budget;
  for (std::size_t ys = 1; ys <= bound; ++ys) {
    const FinSet y2 = default_carrier(ys, "w");
    FuncSet fwz(c.objects, y2, cap);
    enumerate_categories(b.qptr(), y2, budget, [&](const QCategory& b2) {
      const QCategory hcb2 = convolution_category(c, b2, cap);
      enumerate_functions(tb.objects, y2, budget, [&](const Func& f) {
        ++rep.cases;
        const bool lhs = morphism_check(f, tb, b2);
        std::vector<std::size_t> tr(b.objects.size());
        std::vector<std::size_t> images(c.objects.size());
        for (std::size_t yi = 0; yi < b.objects.size(); ++yi) {
          for (std::size_t zi = 0; zi < c.objects.size(); ++zi)
            images[zi] = f(zi * b.objects.size() + yi);
          tr[yi] = fwz.encode(images);
        }
        const bool rhs = morphism_check(
            Func(b.objects, fwz.carrier(), std::move(tr)), b, hcb2);
        if (lhs != rhs)
          rep.failures.push_back("B' " + detail::matrix_case(b2.hom) +
                                 "; f = " + f.describe() + "; tensor side " +
                                 (lhs ? "holds" : "fails") +
                                 " but convolution side " +
                                 (rhs ? "holds" : "fails"));
      });
    });
  }
  detail::finish(rep);
  return rep;
}

/// Tensor adjunction on modules: for every module N' over B' with carriers
/// ≤ bound and every boundary pair (f0, f1),
///   [(f0,f1) module morphism K⊘N → N']
///     ⟺ [(ω0,ω1) module morphism N → H(K,N')].
inline AdjunctionReport verify_adjunction_tensor_mod(
    const QComodule& k, const QModule& n, std::size_t bound,
    std::size_t cap = kDefaultHomCap) {
  const QModule tn = tensor_mod(k, n);
  AdjunctionReport rep{"tensor_mod", 0, {}};
  EnumBudget budget;
  for (std::size_t ys = 1; ys <= bound; ++ys) {
    const FinSet y2 = default_carrier(ys, "w");
    FuncSet fwz(k.over.objects, y2, cap);
    enumerate_categories(n.qptr(), y2, budget, [&](const QCategory& b2) {
      for (std::size_t ts = 1; ts <= bound; ++ts) {
        const FinSet t2 = default_carrier(ts, "s");
        FuncSet fsv(k.src, t2, cap);
        enumerate_modules(b2, t2, budget, [&](const QModule& n2) {
          const QModule hkn2 = convolution_module(k, n2, cap);
          enumerate_functions(tn.over.objects, y2, budget, [&](const Func& f0) {
            std::vector<std::size_t> tr0(n.over.objects.size());
            std::vector<std::size_t> img0(k.over.objects.size());
            for (std::size_t yi = 0; yi < n.over.objects.size(); ++yi) {
              for (std::size_t zi = 0; zi < k.over.objects.size(); ++zi)
                img0[zi] = f0(zi * n.over.objects.size() + yi);
              tr0[yi] = fwz.encode(img0);
            }
            const Func w0(n.over.objects, fwz.carrier(), std::move(tr0));
            enumerate_functions(tn.src, t2, budget, [&](const Func& f1) {
              ++rep.cases;
              const bool lhs = mod_morphism_check(f0, f1, tn, n2);
              std::vector<std::size_t> tr1(n.src.size());
              std::vector<std::size_t> img1(k.src.size());
              for (std::size_t ti = 0; ti < n.src.size(); ++ti) {
                for (std::size_t vi = 0; vi < k.src.size(); ++vi)
                  img1[vi] = f1(vi * n.src.size() + ti);
                tr1[ti] = fsv.encode(img1);
              }
              const Func w1(n.src, fsv.carrier(), std::move(tr1));
              const bool rhs = mod_morphism_check(w0, w1, n, hkn2);
              if (lhs != rhs)
                rep.failures.push_back(
                    "B' " + detail::matrix_case(b2.hom) + "; N' " +
                    detail::matrix_case(n2.mat) + "; f0 = " + f0.describe() +
                    "; f1 = " + f1.describe() + "; tensor side " +
                    (lhs ? "holds" : "fails") + " but convolution side " +
                    (rhs ? "holds" : "fails"));
            });
          });
        });
      }
    });
  }
  detail::finish(rep);
  return rep;
}

/// Hom of cocategories: for every cocategory E on a carrier ≤ bound and
/// every g : X → W^Z,
///   [g cofunctor E → Hom(C,D)]  ⟺  [ĝ cofunctor E⊗C → D].
inline AdjunctionReport verify_adjunction_hom_cocat(
    const QCocategory& c, const QCocategory& d, std::size_t bound,
    std::size_t cap = kDefaultHomCap) {
  const QCocategory hom = hom_cocategories(c, d, cap);
  FuncSet fwz(c.objects, d.objects, cap);
  AdjunctionReport rep{"hom_cocat", 0, {}};
  EnumBudget budget;
  for (std::size_t xs = 1; xs <= bound; ++xs) {
    const FinSet x = default_carrier(xs, "x");
    enumerate_cocategories(c.q, x, budget, [&](const QCocategory& e) {
      const QCocategory ec = tensor_pair(e, c);
      enumerate_functions(x, hom.objects, budget, [&](const Func& g) {
        ++rep.cases;
        const bool lhs = morphism_check(g, e, hom);
        const bool rhs = morphism_check(
            detail::flatten_from(fwz, g, x, c.objects), ec, d);
        if (lhs != rhs)
          rep.failures.push_back("E " + detail::weight_case(e) + "; g = " +
                                 g.describe() + "; hom side " +
                                 (lhs ? "holds" : "fails") +
                                 " but tensor side " +
                                 (rhs ? "holds" : "fails"));
      });
    });
  }
  detail::finish(rep);
  return rep;
}

/// Hom of comodules: for every comodule E over E0 (carriers ≤ bound) and
/// boundaries (g0, g1),
///   [(g0,g1) comodule morphism E → Hom(K,L)]
///     ⟺ [(ĝ0,ĝ1) comodule morphism E⊗K → L].
inline AdjunctionReport verify_adjunction_hom_comod(
    const QComodule& k, const QComodule& l, std::size_t bound,
    std::size_t cap = kDefaultHomCap) {
  const QComodule hom = hom_comodules(k, l, cap);
  FuncSet fwz(k.over.objects, l.over.objects, cap);
  FuncSet fsv(k.src, l.src, cap);
  AdjunctionReport rep{"hom_comod", 0, {}};
  EnumBudget budget;
  for (std::size_t xs = 1; xs <= bound; ++xs) {
    const FinSet x = default_carrier(xs, "x");
    enumerate_cocategories(k.qptr(), x, budget, [&](const QCocategory& e0) {
      for (std::size_t ws = 1; ws <= bound; ++ws) {
        const FinSet w = default_carrier(ws, "u");
        enumerate_comodules(e0, w, budget, [&](const QComodule& e) {
          const QComodule ek = tensor_modcomod(e, k);
          enumerate_functions(x, hom.over.objects, budget, [&](const Func& g0) {
            const Func g0f = detail::flatten_from(fwz, g0, x,
                                                  k.over.objects);
            enumerate_functions(w, hom.src, budget, [&](const Func& g1) {
              ++rep.cases;
              const bool lhs = comod_morphism_check(g0, g1, e, hom);
              const bool rhs = comod_morphism_check(
                  g0f, detail::flatten_from(fsv, g1, w, k.src), ek, l);
              if (lhs != rhs)
                rep.failures.push_back(
                    "E0 " + detail::weight_case(e0) + "; E " +
                    detail::matrix_case(e.mat) + "; g0 = " + g0.describe() +
                    "; g1 = " + g1.describe() + "; hom side " +
                    (lhs ? "holds" : "fails") + " but tensor side " +
                    (rhs ? "holds" : "fails"));
            });
          });
        });
      }
    });
  }
  detail::finish(rep);
  return rep;
}

/// Enriched-structure laws on categories:
/// (i) composition p^{B,C}_l ⊗ p^{A,B}_k ≤ p^{A,C}_{l∘k};
/// (ii) unit p^{A,A}_id = e (checked for each input category).
inline LawReport enriched_check(const QCategory& a, const QCategory& b,
                                const QCategory& c,
                                std::size_t cap = kDefaultHomCap) {
  const Quantale& q = a.quantale();
  LawReport rep;
  FuncSet fab(a.objects, b.objects, cap);
  FuncSet fbc(b.objects, c.objects, cap);
  FuncSet fac(a.objects, c.objects, cap);
  const QCocategory pab = measure_P(a, b, cap);
  const QCocategory pbc = measure_P(b, c, cap);
  const QCocategory pac = measure_P(a, c, cap);
  std::vector<std::size_t> images(a.objects.size());
  for (std::size_t l = 0; l < fbc.size(); ++l)
    for (std::size_t k = 0; k < fab.size(); ++k) {
      for (std::size_t x = 0; x < a.objects.size(); ++x)
        images[x] = fbc.apply(l, fab.apply(k, x));
      const std::size_t lk = fac.encode(images);
      const Elem compose = q.tensor(pbc.weight[l], pab.weight[k]);
      if (!q.leq(compose, pac.weight[lk]))
        rep.record("composition",
                   "p(" + fbc.carrier().label(l) + ") ⊗ p(" +
                       fab.carrier().label(k) + ") = " + q.label(compose) +
                       " exceeds p(" + fac.carrier().label(lk) + ") = " +
                       q.label(pac.weight[lk]));
    }
  const auto unit_check = [&](const QCategory& cat, const char* which) {
    FuncSet fs(cat.objects, cat.objects, cap);
    const QCocategory p = measure_P(cat, cat, cap);
    std::vector<std::size_t> idimg(cat.objects.size());
    for (std::size_t x = 0; x < cat.objects.size(); ++x) idimg[x] = x;
    const std::size_t id = fs.encode(idimg);
    if (p.weight[id] != q.unit())
      rep.record("unit", std::string("p(id) on the ") + which +
                             " category is " + q.label(p.weight[id]) +
                             ", not the unit");
  };
  unit_check(a, "first");
  unit_check(b, "second");
  unit_check(c, "third");
  return rep;
}

/// Enriched-structure laws on modules:
/// composition Q^{N,O}(l,h') ⊗ Q^{M,N}(k,h) ≤ Q^{M,O}(l∘k, h'∘h) and
/// unit Q^{M,M}(id,id) ≥ e.
inline LawReport enriched_check(const QModule& m, const QModule& n,
                                const QModule& o,
                                std::size_t cap = kDefaultHomCap) {
  const Quantale& q = m.quantale();
  LawReport rep;
  const QComodule q1 = comeasure_Q(m, n, cap);
  const QComodule q2 = comeasure_Q(n, o, cap);
  const QComodule q3 = comeasure_Q(m, o, cap);
  FuncSet fab(m.over.objects, n.over.objects, cap);
  FuncSet fbc(n.over.objects, o.over.objects, cap);
  FuncSet fac(m.over.objects, o.over.objects, cap);
  FuncSet fuv(m.src, n.src, cap);
  FuncSet fvw(n.src, o.src, cap);
  FuncSet fuw(m.src, o.src, cap);
  std::vector<std::size_t> oimg(m.over.objects.size());
  std::vector<std::size_t> simg(m.src.size());
  for (std::size_t l = 0; l < fbc.size(); ++l)
    for (std::size_t k = 0; k < fab.size(); ++k) {
      for (std::size_t x = 0; x < oimg.size(); ++x)
        oimg[x] = fbc.apply(l, fab.apply(k, x));
      const std::size_t lk = fac.encode(oimg);
      for (std::size_t h2 = 0; h2 < fvw.size(); ++h2)
        for (std::size_t h = 0; h < fuv.size(); ++h) {
          for (std::size_t u = 0; u < simg.size(); ++u)
            simg[u] = fvw.apply(h2, fuv.apply(h, u));
          const std::size_t hh = fuw.encode(simg);
          const Elem compose = q.tensor(q2.mat(l, h2), q1.mat(k, h));
          if (!q.leq(compose, q3.mat(lk, hh)))
            rep.record("module composition",
                       "Q(" + fbc.carrier().label(l) + ", " +
                           fvw.carrier().label(h2) + ") ⊗ Q(" +
                           fab.carrier().label(k) + ", " +
                           fuv.carrier().label(h) + ") = " + q.label(compose) +
                           " exceeds the composite entry " +
                           q.label(q3.mat(lk, hh)));
        }
    }
  const auto unit_check = [&](const QModule& mod, const char* which) {
    const QComodule qq = comeasure_Q(mod, mod, cap);
    FuncSet fk(mod.over.objects, mod.over.objects, cap);
    FuncSet fh(mod.src, mod.src, cap);
    std::vector<std::size_t> idk(mod.over.objects.size());
    std::vector<std::size_t> idh(mod.src.size());
    for (std::size_t i = 0; i < idk.size(); ++i) idk[i] = i;
    for (std::size_t i = 0; i < idh.size(); ++i) idh[i] = i;
    const Elem entry = qq.mat(fk.encode(idk), fh.encode(idh));
    if (!q.leq(q.unit(), entry))
      rep.record("module unit", std::string("Q(id,id) on the ") + which +
                                    " module is " + q.label(entry) +
                                    ", below the unit");
  };
  unit_check(m, "first");
  unit_check(n, "second");
  unit_check(o, "third");
  return rep;
}

}  // namespace qmat
