#pragma once

/**
 * Named law suites.
 *
 * Each suite turns one structural theorem into a falsifiable batch check:
 * exhaustive over all structures within carrier bounds by default, or
 * sampling random instances when a seed is given. Runs are deterministic for
 * identical inputs; failure lists are sorted and wall time is kept out of
 * the serialized result. Enumeration work is charged against a budget so an
 * oversized request fails fast with advice instead of hanging.
 */

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
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
#include "qmat/sweedler.hpp"
#include "qmat/vmat.hpp"

namespace qmat {

enum class Suite {
  double_cat,
  fibrant,
  monoidal,
  closed,
  mod_fibration,
  monoidal_fibration,
  sweedler_adjunctions,
  enrichment,
};

inline const std::vector<std::pair<Suite, std::string>>& suite_names() {
  static const std::vector<std::pair<Suite, std::string>> names = {
      {Suite::double_cat, "double_cat"},
      {Suite::fibrant, "fibrant"},
      {Suite::monoidal, "monoidal"},
      {Suite::closed, "closed"},
      {Suite::mod_fibration, "mod_fibration"},
      {Suite::monoidal_fibration, "monoidal_fibration"},
      {Suite::sweedler_adjunctions, "sweedler_adjunctions"},
      {Suite::enrichment, "enrichment"},
  };
  return names;
}

inline std::string suite_name(Suite s) {
  for (const auto& [suite, name] : suite_names())
    if (suite == s) return name;
  throw InternalError("unnamed suite");
}

inline std::optional<Suite> suite_from_name(const std::string& name) {
  for (const auto& [suite, n] : suite_names())
    if (n == name) return suite;
  return std::nullopt;
}

struct SuiteBounds {
  std::size_t carrier = 2;   // max carrier size per structure
  std::size_t cap = kDefaultHomCap;
  std::uint64_t budget = kDefaultEnumBudget;
  std::optional<std::uint64_t> seed;  // switches to random sampling
  std::size_t samples = 200;          // per-law samples in seeded mode
};

namespace detail {

// ---- deterministic random builders (seeded mode) ---------------------

inline std::size_t rnd(std::mt19937_64& g, std::size_t n) {
  return n ? static_cast<std::size_t>(g() % n) : 0;
}

inline std::size_t rnd_size(std::mt19937_64& g, std::size_t bound) {
  return 1 + rnd(g, bound);
}

inline VMatrix random_matrix(std::mt19937_64& g, const QPtr& q,
                             const FinSet& src, const FinSet& tgt) {
  VMatrix m(q, src, tgt);
  for (std::size_t y = 0; y < tgt.size(); ++y)
    for (std::size_t x = 0; x < src.size(); ++x)
      m.set(y, x, rnd(g, q->size()));
  return m;
}

inline Func random_func(std::mt19937_64& g, const FinSet& dom,
                        const FinSet& cod) {
  std::vector<std::size_t> t(dom.size());
  for (auto& v : t) v = rnd(g, cod.size());
  return Func(dom, cod, std::move(t));
}

inline QCategory random_category(std::mt19937_64& g, const QPtr& q,
                                 const FinSet& x) {
  return star_closure(random_matrix(g, q, x, x)).category;
}

/// Largest valid weight below a random element, so the result always
/// satisfies the cocategory laws.
inline QCocategory random_cocategory(std::mt19937_64& g, const QPtr& q,
                                     const FinSet& z) {
  std::vector<Elem> w(z.size());
  for (auto& v : w) {
    const Elem r = q->meet(rnd(g, q->size()), q->unit());
    v = gfp_from_top(*q, [&](Elem c) {
          return q->meet(r, q->tensor(c, c));
        }).first;
  }
  return QCocategory{q, z, std::move(w)};
}

inline QModule random_module(std::mt19937_64& g, const QCategory& a,
                             const FinSet& u) {
  return free_module(a, random_matrix(g, a.qptr(), u, a.objects));
}

inline QComodule random_comodule(std::mt19937_64& g, const QCocategory& c,
                                 const FinSet& v) {
  return cofree_comodule(c, random_matrix(g, c.q, v, c.objects));
}

// ---- shared helpers ---------------------------------------------------

/// Least 2-cell target of m along (f on sources, g on targets):
/// entries joined over the fibers, so (f,g) always bounds a cell into it.
inline VMatrix least_cell_target(const VMatrix& m, const Func& f,
                                 const Func& g) {
  const Quantale& q = m.quantale();
  VMatrix r(m.qptr(), f.cod(), g.cod());
  for (std::size_t y = 0; y < m.tgt().size(); ++y)
    for (std::size_t x = 0; x < m.src().size(); ++x)
      r.set(g(y), f(x), q.join(r(g(y), f(x)), m(y, x)));
  return r;
}

inline Func product_func(const Func& f, const Func& g) {
  const FinSet dom = product_set(f.dom(), g.dom());
  const FinSet cod = product_set(f.cod(), g.cod());
  std::vector<std::size_t> t(dom.size());
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    for (std::size_t j = 0; j < g.dom().size(); ++j)
      t[i * g.dom().size() + j] = f(i) * g.cod().size() + g(j);
  return Func(dom, cod, std::move(t));
}

struct SuiteSink {
  SuiteResult* out;
  void fail(const std::string& law, const std::string& detail) {
    out->failures.push_back(law + ": " + detail);
  }
  void check(bool ok, const std::string& law, const std::string& detail) {
    ++out->cases;
    if (!ok) fail(law, detail);
  }
};

// ---- double_cat: strict associativity, units, interchange -------------

inline void double_cat_exhaustive(const QPtr& q, const SuiteBounds& b,
                                  SuiteSink& sink) {
  EnumBudget budget{b.budget};
  for (std::size_t sx = 1; sx <= b.carrier; ++sx)
    for (std::size_t sy = 1; sy <= b.carrier; ++sy) {
      const FinSet x = default_carrier(sx, "x");
      const FinSet y = default_carrier(sy, "y");
      const VMatrix ix = identity_matrix(q, x);
      const VMatrix iy = identity_matrix(q, y);
      enumerate_matrices(q, x, y, budget, [&](const VMatrix& s) {
        sink.check(hcompose(iy, s) == s && hcompose(s, ix) == s, "identity",
                   "S " + matrix_case(s));
      });
    }
  for (std::size_t sx = 1; sx <= b.carrier; ++sx)
    for (std::size_t sy = 1; sy <= b.carrier; ++sy)
      for (std::size_t sz = 1; sz <= b.carrier; ++sz)
        for (std::size_t sw = 1; sw <= b.carrier; ++sw) {
          const FinSet x = default_carrier(sx, "x");
          const FinSet y = default_carrier(sy, "y");
          const FinSet z = default_carrier(sz, "z");
          const FinSet w = default_carrier(sw, "w");
          enumerate_matrices(q, x, y, budget, [&](const VMatrix& s) {
            enumerate_matrices(q, y, z, budget, [&](const VMatrix& t) {
              const VMatrix ts = hcompose(t, s);
              enumerate_matrices(q, z, w, budget, [&](const VMatrix& u) {
                sink.check(hcompose(hcompose(u, t), s) == hcompose(u, ts),
                           "associativity",
                           "S " + matrix_case(s) + "; T " + matrix_case(t) +
                               "; U " + matrix_case(u));
              });
            });
          });
        }
  for (std::size_t sx = 1; sx <= b.carrier; ++sx)
    for (std::size_t sy = 1; sy <= b.carrier; ++sy)
      for (std::size_t sz = 1; sz <= b.carrier; ++sz) {
        const FinSet x = default_carrier(sx, "x");
        const FinSet y = default_carrier(sy, "y");
        const FinSet z = default_carrier(sz, "z");
        // Boundary carriers either collapse to a point or keep the size, so
        // the pass covers merging and relabeling without a fourth size loop.
        const auto options = [](std::size_t s) {
          std::vector<std::size_t> v{1};
          if (s != 1) v.push_back(s);
          return v;
        };
        for (std::size_t tx : options(sx))
          for (std::size_t ty : options(sy))
            for (std::size_t tz : options(sz)) {
              const FinSet x2 = default_carrier(tx, "p");
              const FinSet y2 = default_carrier(ty, "q");
              const FinSet z2 = default_carrier(tz, "r");
              enumerate_matrices(q, x, y, budget, [&](const VMatrix& s) {
                enumerate_matrices(q, y, z, budget, [&](const VMatrix& t) {
                  enumerate_functions(x, x2, budget, [&](const Func& f0) {
                    enumerate_functions(y, y2, budget, [&](const Func& f1) {
                      enumerate_functions(z, z2, budget, [&](const Func& f2) {
                        const VMatrix s2 = least_cell_target(s, f0, f1);
                        const VMatrix t2 = least_cell_target(t, f1, f2);
                        sink.check(
                            cell_check(f0, f2, hcompose(t, s),
                                       hcompose(t2, s2)).verdict,
                            "interchange",
                            "S " + matrix_case(s) + "; T " + matrix_case(t) +
                                "; f0 = " + f0.describe() + "; f1 = " +
                                f1.describe() + "; f2 = " + f2.describe());
                      });
                    });
                  });
                });
              });
            }
      }
}

inline void double_cat_seeded(const QPtr& q, const SuiteBounds& b,
                              SuiteSink& sink) {
  std::mt19937_64 g(*b.seed);
  for (std::size_t i = 0; i < b.samples; ++i) {
    const FinSet x = default_carrier(rnd_size(g, b.carrier), "x");
    const FinSet y = default_carrier(rnd_size(g, b.carrier), "y");
    const FinSet z = default_carrier(rnd_size(g, b.carrier), "z");
    const FinSet w = default_carrier(rnd_size(g, b.carrier), "w");
    const VMatrix s = random_matrix(g, q, x, y);
    const VMatrix t = random_matrix(g, q, y, z);
    const VMatrix u = random_matrix(g, q, z, w);
    sink.check(hcompose(hcompose(u, t), s) == hcompose(u, hcompose(t, s)),
               "associativity",
               "S " + matrix_case(s) + "; T " + matrix_case(t) + "; U " +
                   matrix_case(u));
    sink.check(hcompose(identity_matrix(q, y), s) == s &&
                   hcompose(s, identity_matrix(q, x)) == s,
               "identity", "S " + matrix_case(s));
    const FinSet x2 = default_carrier(rnd_size(g, b.carrier), "p");
    const FinSet y2 = default_carrier(rnd_size(g, b.carrier), "q");
    const FinSet z2 = default_carrier(rnd_size(g, b.carrier), "r");
    const Func f0 = random_func(g, x, x2);
    const Func f1 = random_func(g, y, y2);
    const Func f2 = random_func(g, z, z2);
    sink.check(cell_check(f0, f2, hcompose(t, s),
                          hcompose(least_cell_target(t, f1, f2),
                                   least_cell_target(s, f0, f1))).verdict,
               "interchange",
               "S " + matrix_case(s) + "; T " + matrix_case(t) + "; f0 = " +
                   f0.describe() + "; f1 = " + f1.describe() + "; f2 = " +
                   f2.describe());
  }
}

// ---- fibrant: companions, conjoints, zig-zags --------------------------

inline void fibrant_case(const QPtr& q, const Func& f, SuiteSink& sink) {
  const auto [comp, conj] = companion_conjoint(q, f);
  const VMatrix ix = identity_matrix(q, f.dom());
  const VMatrix iy = identity_matrix(q, f.cod());
  const VMatrix unit = hcompose(conj, comp);
  bool zig1 = true;
  for (std::size_t a = 0; a < ix.tgt().size() && zig1; ++a)
    for (std::size_t c = 0; c < ix.src().size(); ++c)
      if (!q->leq(ix(a, c), unit(a, c))) {
        zig1 = false;
        break;
      }
  sink.check(zig1, "zig-zag-unit", "f = " + f.describe());
  const VMatrix counit = hcompose(comp, conj);
  bool zig2 = true;
  for (std::size_t a = 0; a < iy.tgt().size() && zig2; ++a)
    for (std::size_t c = 0; c < iy.src().size(); ++c)
      if (!q->leq(counit(a, c), iy(a, c))) {
        zig2 = false;
        break;
      }
  sink.check(zig2, "zig-zag-counit", "f = " + f.describe());
}

inline void fibrant_pair_case(const QPtr& q, const Func& f, const Func& g,
                              SuiteSink& sink) {
  const auto [fc, fj] = companion_conjoint(q, f);
  const auto [gc, gj] = companion_conjoint(q, g);
  const auto [gfc, gfj] = companion_conjoint(q, g.after(f));
  sink.check(gfc == hcompose(gc, fc), "companion-functoriality",
             "f = " + f.describe() + "; g = " + g.describe());
  sink.check(gfj == hcompose(fj, gj), "conjoint-functoriality",
             "f = " + f.describe() + "; g = " + g.describe());
}

inline void fibrant_exhaustive(const QPtr& q, const SuiteBounds& b,
                               SuiteSink& sink) {
  EnumBudget budget{b.budget};
  for (std::size_t sx = 1; sx <= b.carrier; ++sx)
    for (std::size_t sy = 1; sy <= b.carrier; ++sy) {
      const FinSet x = default_carrier(sx, "x");
      const FinSet y = default_carrier(sy, "y");
      enumerate_functions(x, y, budget, [&](const Func& f) {
        fibrant_case(q, f, sink);
      });
      for (std::size_t sz = 1; sz <= b.carrier; ++sz) {
        const FinSet z = default_carrier(sz, "z");
        enumerate_functions(x, y, budget, [&](const Func& f) {
          enumerate_functions(y, z, budget, [&](const Func& g) {
            fibrant_pair_case(q, f, g, sink);
          });
        });
      }
    }
}

inline void fibrant_seeded(const QPtr& q, const SuiteBounds& b,
                           SuiteSink& sink) {
  std::mt19937_64 g(*b.seed);
  for (std::size_t i = 0; i < b.samples; ++i) {
    const FinSet x = default_carrier(rnd_size(g, b.carrier), "x");
    const FinSet y = default_carrier(rnd_size(g, b.carrier), "y");
    const FinSet z = default_carrier(rnd_size(g, b.carrier), "z");
    const Func f = random_func(g, x, y);
    const Func h = random_func(g, y, z);
    fibrant_case(q, f, sink);
    fibrant_pair_case(q, f, h, sink);
  }
}

// ---- monoidal: tensor of matrices is a symmetric double functor --------

inline void monoidal_unit_case(const QPtr& q, const VMatrix& s,
                               SuiteSink& sink) {
  const VMatrix one = identity_matrix(q, FinSet("1", {"*"}));
  sink.check(tensor_matrices(one, s).entries() == s.entries() &&
                 tensor_matrices(s, one).entries() == s.entries(),
             "tensor-unit", "S " + matrix_case(s));
}

inline void monoidal_symmetry_case(const VMatrix& s, const VMatrix& t,
                                   SuiteSink& sink) {
  const VMatrix st = tensor_matrices(s, t);
  const VMatrix ts = tensor_matrices(t, s);
  bool ok = true;
  for (std::size_t y = 0; y < s.tgt().size() && ok; ++y)
    for (std::size_t w = 0; w < t.tgt().size() && ok; ++w)
      for (std::size_t x = 0; x < s.src().size() && ok; ++x)
        for (std::size_t z = 0; z < t.src().size(); ++z)
          if (st(y * t.tgt().size() + w, x * t.src().size() + z) !=
              ts(w * s.tgt().size() + y, z * s.src().size() + x)) {
            ok = false;
            break;
          }
  sink.check(ok, "tensor-symmetry",
             "S " + matrix_case(s) + "; T " + matrix_case(t));
}

inline void monoidal_interchange_case(const VMatrix& s, const VMatrix& t,
                                      const VMatrix& s2, const VMatrix& t2,
                                      SuiteSink& sink) {
  sink.check(tensor_matrices(hcompose(t, s), hcompose(t2, s2)) ==
                 hcompose(tensor_matrices(t, t2), tensor_matrices(s, s2)),
             "tensor-compose-interchange",
             "S " + matrix_case(s) + "; T " + matrix_case(t) + "; S' " +
                 matrix_case(s2) + "; T' " + matrix_case(t2));
}

inline void monoidal_exhaustive(const QPtr& q, const SuiteBounds& b,
                                SuiteSink& sink) {
  EnumBudget budget{b.budget};
  for (std::size_t sx = 1; sx <= b.carrier; ++sx)
    for (std::size_t sy = 1; sy <= b.carrier; ++sy) {
      const FinSet x = default_carrier(sx, "x");
      const FinSet y = default_carrier(sy, "y");
      enumerate_matrices(q, x, y, budget, [&](const VMatrix& s) {
        monoidal_unit_case(q, s, sink);
      });
      for (std::size_t su = 1; su <= b.carrier; ++su)
        for (std::size_t sv = 1; sv <= b.carrier; ++sv) {
          const FinSet u = default_carrier(su, "u");
          const FinSet v = default_carrier(sv, "v");
          enumerate_matrices(q, x, y, budget, [&](const VMatrix& s) {
            enumerate_matrices(q, u, v, budget, [&](const VMatrix& t) {
              monoidal_symmetry_case(s, t, sink);
            });
          });
        }
    }
  for (std::size_t sx = 1; sx <= b.carrier; ++sx)
    for (std::size_t sy = 1; sy <= b.carrier; ++sy)
      for (std::size_t su = 1; su <= b.carrier; ++su)
        for (std::size_t sv = 1; sv <= b.carrier; ++sv)
          for (std::size_t sw = 1; sw <= b.carrier; ++sw)
            for (std::size_t sz = 1; sz <= b.carrier; ++sz) {
              const FinSet x = default_carrier(sx, "x");
              const FinSet y = default_carrier(sy, "y");
              const FinSet u = default_carrier(su, "u");
              const FinSet v = default_carrier(sv, "v");
              const FinSet w = default_carrier(sw, "w");
              const FinSet z = default_carrier(sz, "z");
              enumerate_matrices(q, x, y, budget, [&](const VMatrix& s) {
                enumerate_matrices(q, u, v, budget, [&](const VMatrix& t) {
                  enumerate_matrices(q, w, z, budget, [&](const VMatrix& r) {
                    sink.check(
                        tensor_matrices(tensor_matrices(s, t), r).entries() ==
                            tensor_matrices(s, tensor_matrices(t, r))
                                .entries(),
                        "tensor-associativity",
                        "S " + matrix_case(s) + "; T " + matrix_case(t) +
                            "; R " + matrix_case(r));
                  });
                });
              });
            }
  // Composable quadruples blow up combinatorially, so the exhaustive pass
  // keeps the primed pair on singleton carriers unless the quantale is tiny;
  // the seeded mode covers larger shapes.
  const std::size_t prime_bound = q->size() <= 2 ? b.carrier : 1;
  for (std::size_t sx = 1; sx <= b.carrier; ++sx)
    for (std::size_t sy = 1; sy <= b.carrier; ++sy)
      for (std::size_t sz = 1; sz <= b.carrier; ++sz)
        for (std::size_t px = 1; px <= prime_bound; ++px)
          for (std::size_t py = 1; py <= prime_bound; ++py)
            for (std::size_t pz = 1; pz <= prime_bound; ++pz) {
              const FinSet x = default_carrier(sx, "x");
              const FinSet y = default_carrier(sy, "y");
              const FinSet z = default_carrier(sz, "z");
              const FinSet x2 = default_carrier(px, "p");
              const FinSet y2 = default_carrier(py, "q");
              const FinSet z2 = default_carrier(pz, "r");
              enumerate_matrices(q, x, y, budget, [&](const VMatrix& s) {
                enumerate_matrices(q, y, z, budget, [&](const VMatrix& t) {
                  enumerate_matrices(q, x2, y2, budget, [&](const VMatrix& s2) {
                    enumerate_matrices(q, y2, z2, budget,
                                       [&](const VMatrix& t2) {
                      monoidal_interchange_case(s, t, s2, t2, sink);
                    });
                  });
                });
              });
            }
}

inline void monoidal_seeded(const QPtr& q, const SuiteBounds& b,
                            SuiteSink& sink) {
  std::mt19937_64 g(*b.seed);
  for (std::size_t i = 0; i < b.samples; ++i) {
    const FinSet x = default_carrier(rnd_size(g, b.carrier), "x");
    const FinSet y = default_carrier(rnd_size(g, b.carrier), "y");
    const FinSet z = default_carrier(rnd_size(g, b.carrier), "z");
    const FinSet x2 = default_carrier(rnd_size(g, b.carrier), "p");
    const FinSet y2 = default_carrier(rnd_size(g, b.carrier), "q");
    const FinSet z2 = default_carrier(rnd_size(g, b.carrier), "r");
    const VMatrix s = random_matrix(g, q, x, y);
    const VMatrix t = random_matrix(g, q, y, z);
    const VMatrix s2 = random_matrix(g, q, x2, y2);
    const VMatrix t2 = random_matrix(g, q, y2, z2);
    monoidal_unit_case(q, s, sink);
    monoidal_symmetry_case(s, t2, sink);
    sink.check(tensor_matrices(tensor_matrices(s, t), s2).entries() ==
                   tensor_matrices(s, tensor_matrices(t, s2)).entries(),
               "tensor-associativity",
               "S " + matrix_case(s) + "; T " + matrix_case(t) + "; R " +
                   matrix_case(s2));
    monoidal_interchange_case(s, t, s2, t2, sink);
  }
}

// ---- closed: exponential transposition preserves cell verdicts ---------

/// Grouped scan: for each boundary shape, the hom matrix and the transposed
/// boundary tables depend only on (S, T, φ, ψ), so the innermost loop over R
/// costs a handful of comparisons per case.
inline void closed_scan(const QPtr& qp, std::size_t carrier_bound,
                        std::uint64_t budget_limit, SuiteSink& sink) {
  const Quantale& q = *qp;
  EnumBudget budget{budget_limit};
  std::vector<std::size_t> sizes;
  for (std::size_t s = 1; s <= carrier_bound; ++s) sizes.push_back(s);
  for (std::size_t su : sizes)
   for (std::size_t sv : sizes)
    for (std::size_t sx : sizes)
     for (std::size_t sy : sizes)
      for (std::size_t sz : sizes)
       for (std::size_t sw : sizes) {
        const FinSet uu = default_carrier(su, "u");
        const FinSet vv = default_carrier(sv, "v");
        const FinSet xx = default_carrier(sx, "x");
        const FinSet yy = default_carrier(sy, "y");
        const FinSet zz = default_carrier(sz, "z");
        const FinSet ww = default_carrier(sw, "w");
        const std::size_t nphi = *checked_pow(sz, su * sx, kDefaultHomCap);
        const std::size_t npsi = *checked_pow(sw, sv * sy, kDefaultHomCap);
        const std::size_t nzx = *checked_pow(sz, sx, kDefaultHomCap);
        const std::size_t nwy = *checked_pow(sw, sy, kDefaultHomCap);
        std::vector<std::size_t> zpow(sx, 1), wpow(sy, 1);
        for (std::size_t i = 1; i < sx; ++i) zpow[i] = zpow[i - 1] * sz;
        for (std::size_t i = 1; i < sy; ++i) wpow[i] = wpow[i - 1] * sw;
        // Transposed boundary tables: phit[phi][u] indexes Z^X, and
        // psit[psi][v] indexes W^Y, both independent of the matrices.
        std::vector<std::vector<std::size_t>> phit(nphi), psit(npsi);
        {
          std::vector<std::size_t> img(su * sx, 0);
          for (std::size_t p = 0; p < nphi; ++p) {
            phit[p].resize(su);
            for (std::size_t u = 0; u < su; ++u) {
              std::size_t enc = 0;
              for (std::size_t x = 0; x < sx; ++x)
                enc = enc * sz + img[u * sx + x];
              phit[p][u] = enc;
            }
            next_tuple(img, sz);
          }
          std::vector<std::size_t> img2(sv * sy, 0);
          for (std::size_t p = 0; p < npsi; ++p) {
            psit[p].resize(sv);
            for (std::size_t v = 0; v < sv; ++v) {
              std::size_t enc = 0;
              for (std::size_t y = 0; y < sy; ++y)
                enc = enc * sw + img2[v * sy + y];
              psit[p][v] = enc;
            }
            next_tuple(img2, sw);
          }
        }
        std::vector<Elem> hom(nwy * nzx);
        enumerate_matrices(qp, xx, yy, budget, [&](const VMatrix& s) {
          enumerate_matrices(qp, zz, ww, budget, [&](const VMatrix& t) {
            for (std::size_t m = 0; m < nwy; ++m)
              for (std::size_t n = 0; n < nzx; ++n) {
                Elem acc = q.top();
                for (std::size_t y = 0; y < sy && acc != q.bottom(); ++y)
                  for (std::size_t x = 0; x < sx; ++x) {
                    const std::size_t my = (m / wpow[sy - 1 - y]) % sw;
                    const std::size_t nx = (n / zpow[sx - 1 - x]) % sz;
                    acc = q.meet(acc, q.residuate(s(y, x), t(my, nx)));
                  }
                hom[m * nzx + n] = acc;
              }
            enumerate_matrices(qp, uu, vv, budget, [&](const VMatrix& r) {
              VMatrix rs = tensor_matrices(r, s);
              std::vector<std::size_t> pimg(su * sx, 0);
              for (std::size_t p = 0; p < nphi; ++p) {
                std::vector<std::size_t> qimg(sv * sy, 0);
                for (std::size_t ps = 0; ps < npsi; ++ps) {
                  ++sink.out->cases;
                  bool direct = true;
                  for (std::size_t vy = 0; vy < sv * sy && direct; ++vy)
                    for (std::size_t ux = 0; ux < su * sx; ++ux)
                      if (!q.leq(rs(vy, ux), t(qimg[vy], pimg[ux]))) {
                        direct = false;
                        break;
                      }
                  bool transposed = true;
                  for (std::size_t v = 0; v < sv && transposed; ++v)
                    for (std::size_t u = 0; u < su; ++u)
                      if (!q.leq(r(v, u),
                                 hom[psit[ps][v] * nzx + phit[p][u]])) {
                        transposed = false;
                        break;
                      }
                  if (direct != transposed)
                    sink.fail("hom-transposition",
                              "R " + matrix_case(r) + "; S " +
                                  matrix_case(s) + "; T " + matrix_case(t) +
                                  "; phi#" + std::to_string(p) + "; psi#" +
                                  std::to_string(ps) + "; direct " +
                                  (direct ? "holds" : "fails") +
                                  ", transpose " +
                                  (transposed ? "holds" : "fails"));
                  next_tuple(qimg, sw);
                }
                next_tuple(pimg, sz);
              }
            });
          });
        });
       }
}

inline void closed_seeded(const QPtr& q, const SuiteBounds& b,
                          SuiteSink& sink) {
  std::mt19937_64 g(*b.seed);
  for (std::size_t i = 0; i < b.samples; ++i) {
    const FinSet u = default_carrier(rnd_size(g, b.carrier), "u");
    const FinSet v = default_carrier(rnd_size(g, b.carrier), "v");
    const FinSet x = default_carrier(rnd_size(g, b.carrier), "x");
    const FinSet y = default_carrier(rnd_size(g, b.carrier), "y");
    const FinSet z = default_carrier(rnd_size(g, b.carrier), "z");
    const FinSet w = default_carrier(rnd_size(g, b.carrier), "w");
    const VMatrix r = random_matrix(g, q, u, v);
    const VMatrix s = random_matrix(g, q, x, y);
    const VMatrix t = random_matrix(g, q, z, w);
    const Func phi = random_func(g, product_set(u, x), z);
    const Func psi = random_func(g, product_set(v, y), w);
    bool ok = true;
    std::string note;
    try {
      hom_transpose_check(r, s, t, phi, psi, b.cap);
    } catch (const InternalError& e) {
      ok = false;
      note = e.what();
    }
    sink.check(ok, "hom-transposition",
               "R " + matrix_case(r) + "; S " + matrix_case(s) + "; T " +
                   matrix_case(t) + "; phi = " + phi.describe() +
                   "; psi = " + psi.describe() + "; " + note);
  }
}

// ---- mod_fibration: liftings and their universal properties ------------

inline void mod_fibration_restrict_case(const QCategory& bcat,
                                        const QModule& n, const Func& f,
                                        const Func& g, const QModule& p2,
                                        const Func& g1, SuiteSink& sink) {
  const QCategory a = pullback_category(f, bcat);
  const QModule r = restrict_scalars(f, a, n);
  const bool direct = mod_morphism_check(f.after(g), g1, p2, n);
  const bool factored = mod_morphism_check(g, g1, p2, r);
  sink.check(direct == factored, "restriction-universality",
             "B " + matrix_case(bcat.hom) + "; N " + matrix_case(n.mat) +
                 "; f = " + f.describe() + "; g = " + g.describe() +
                 "; P' " + matrix_case(p2.mat) + "; g1 = " + g1.describe());
}

inline void mod_fibration_corestrict_case(const QCocategory& c,
                                          const QComodule& k, const Func& f,
                                          const QCocategory& e0,
                                          const QComodule& l, const Func& h0,
                                          const Func& h1, SuiteSink& sink) {
  const QCocategory d = pushforward_cocategory(f, c);
  const QComodule ck = corestrict_scalars(f, d, k);
  const bool direct = comod_morphism_check(h0.after(f), h1, k, l);
  const bool factored = comod_morphism_check(h0, h1, ck, l);
  sink.check(direct == factored, "corestriction-universality",
             "C " + weight_case(c) + "; K " + matrix_case(k.mat) + "; f = " +
                 f.describe() + "; E " + weight_case(e0) + "; L " +
                 matrix_case(l.mat) + "; h0 = " + h0.describe() + "; h1 = " +
                 h1.describe());
}

inline void mod_fibration_exhaustive(const QPtr& q, const SuiteBounds& b,
                                     SuiteSink& sink) {
  EnumBudget budget{b.budget};
  // Pullbacks are categories; reindexing composes.
  for (std::size_t sx = 1; sx <= b.carrier; ++sx)
    for (std::size_t sy = 1; sy <= b.carrier; ++sy)
      for (std::size_t sv = 1; sv <= b.carrier; ++sv) {
        const FinSet x = default_carrier(sx, "x");
        const FinSet y = default_carrier(sy, "y");
        const FinSet v = default_carrier(sv, "v");
        enumerate_categories(q, y, budget, [&](const QCategory& bc) {
          enumerate_functions(x, y, budget, [&](const Func& f) {
            sink.check(verify_category(pullback_category(f, bc).hom).ok(),
                       "pullback-is-category",
                       "B " + matrix_case(bc.hom) + "; f = " + f.describe());
            enumerate_functions(v, x, budget, [&](const Func& g) {
              sink.check(pullback_category(f.after(g), bc) ==
                             pullback_category(g, pullback_category(f, bc)),
                         "pullback-functoriality",
                         "B " + matrix_case(bc.hom) + "; f = " +
                             f.describe() + "; g = " + g.describe());
            });
          });
        });
        enumerate_cocategories(q, x, budget, [&](const QCocategory& c) {
          enumerate_functions(x, y, budget, [&](const Func& f) {
            enumerate_functions(y, v, budget, [&](const Func& g) {
              sink.check(pushforward_cocategory(g.after(f), c) ==
                             pushforward_cocategory(
                                 g, pushforward_cocategory(f, c)),
                         "pushforward-functoriality",
                         "C " + weight_case(c) + "; f = " + f.describe() +
                             "; g = " + g.describe());
            });
          });
        });
      }
  // Cartesian universality of restriction, with base functors realized as
  // pullbacks so every enumerated function is a functor.
  for (std::size_t sy = 1; sy <= b.carrier; ++sy)
    for (std::size_t sx = 1; sx <= b.carrier; ++sx)
      for (std::size_t sv = 1; sv <= b.carrier; ++sv)
        for (std::size_t st = 1; st <= b.carrier; ++st)
          for (std::size_t su = 1; su <= b.carrier; ++su) {
            const FinSet y = default_carrier(sy, "y");
            const FinSet x = default_carrier(sx, "x");
            const FinSet v = default_carrier(sv, "v");
            const FinSet t = default_carrier(st, "t");
            const FinSet u = default_carrier(su, "u");
            enumerate_categories(q, y, budget, [&](const QCategory& bc) {
              enumerate_modules(bc, t, budget, [&](const QModule& n) {
                enumerate_functions(x, y, budget, [&](const Func& f) {
                  const QCategory a = pullback_category(f, bc);
                  enumerate_functions(v, x, budget, [&](const Func& g) {
                    const QCategory a2 = pullback_category(g, a);
                    enumerate_modules(a2, u, budget, [&](const QModule& p2) {
                      enumerate_functions(u, t, budget, [&](const Func& g1) {
                        mod_fibration_restrict_case(bc, n, f, g, p2, g1,
                                                    sink);
                      });
                    });
                  });
                });
              });
            });
            enumerate_cocategories(q, x, budget, [&](const QCocategory& c) {
              enumerate_comodules(c, u, budget, [&](const QComodule& k) {
                enumerate_functions(x, y, budget, [&](const Func& f) {
                  enumerate_cocategories(q, v, budget,
                                         [&](const QCocategory& e0) {
                    enumerate_comodules(e0, t, budget, [&](const QComodule& l) {
                      enumerate_functions(y, v, budget, [&](const Func& h0) {
                        enumerate_functions(u, t, budget, [&](const Func& h1) {
                          mod_fibration_corestrict_case(c, k, f, e0, l, h0,
                                                        h1, sink);
                        });
                      });
                    });
                  });
                });
              });
            });
          }
  // Free/forgetful bijection: a morphism out of A⊙M over a functor is
  // exactly a plain cell out of M over the same boundary.
  for (std::size_t sx = 1; sx <= b.carrier; ++sx)
    for (std::size_t sy = 1; sy <= b.carrier; ++sy)
      for (std::size_t su = 1; su <= b.carrier; ++su)
        for (std::size_t st = 1; st <= b.carrier; ++st) {
          const FinSet x = default_carrier(sx, "x");
          const FinSet y = default_carrier(sy, "y");
          const FinSet u = default_carrier(su, "u");
          const FinSet t = default_carrier(st, "t");
          enumerate_categories(q, x, budget, [&](const QCategory& a) {
            enumerate_categories(q, y, budget, [&](const QCategory& bc) {
              enumerate_functions(x, y, budget, [&](const Func& alpha) {
                if (!morphism_check(alpha, a, bc)) return;
                enumerate_matrices(q, u, x, budget, [&](const VMatrix& m) {
                  const QModule fm = free_module(a, m);
                  enumerate_modules(bc, t, budget, [&](const QModule& n) {
                    enumerate_functions(u, t, budget, [&](const Func& g1) {
                      sink.check(
                          mod_morphism_check(alpha, g1, fm, n) ==
                              cell_check(g1, alpha, m, n.mat).verdict,
                          "free-module-bijection",
                          "A " + matrix_case(a.hom) + "; B " +
                              matrix_case(bc.hom) + "; alpha = " +
                              alpha.describe() + "; M " + matrix_case(m) +
                              "; N " + matrix_case(n.mat) + "; g1 = " +
                              g1.describe());
                    });
                  });
                });
              });
            });
          });
        }
}

inline void mod_fibration_seeded(const QPtr& q, const SuiteBounds& b,
                                 SuiteSink& sink) {
  std::mt19937_64 g(*b.seed);
  for (std::size_t i = 0; i < b.samples; ++i) {
    const FinSet y = default_carrier(rnd_size(g, b.carrier), "y");
    const FinSet x = default_carrier(rnd_size(g, b.carrier), "x");
    const FinSet v = default_carrier(rnd_size(g, b.carrier), "v");
    const FinSet t = default_carrier(rnd_size(g, b.carrier), "t");
    const FinSet u = default_carrier(rnd_size(g, b.carrier), "u");
    const QCategory bc = random_category(g, q, y);
    const QModule n = random_module(g, bc, t);
    const Func f = random_func(g, x, y);
    const Func gg = random_func(g, v, x);
    const QCategory a = pullback_category(f, bc);
    const QModule p2 = random_module(g, pullback_category(gg, a), u);
    const Func g1 = random_func(g, u, t);
    mod_fibration_restrict_case(bc, n, f, gg, p2, g1, sink);
    sink.check(restrict_scalars(f.after(gg), pullback_category(f.after(gg), bc),
                                n).mat ==
                   restrict_scalars(gg, pullback_category(gg, a),
                                    restrict_scalars(f, a, n)).mat,
               "restriction-functoriality",
               "B " + matrix_case(bc.hom) + "; f = " + f.describe() +
                   "; g = " + gg.describe());
    const QCocategory c = random_cocategory(g, q, x);
    const QComodule k = random_comodule(g, c, u);
    const Func fc = random_func(g, x, y);
    const QCocategory e0 = random_cocategory(g, q, v);
    const QComodule l = random_comodule(g, e0, t);
    const Func h0 = random_func(g, y, v);
    const Func h1 = random_func(g, u, t);
    mod_fibration_corestrict_case(c, k, fc, e0, l, h0, h1, sink);
  }
}

// ---- monoidal_fibration: tensor commutes with the liftings -------------

inline void monoidal_fibration_case(const QCategory& b1, const QCategory& b2,
                                    const Func& f1, const Func& f2,
                                    const QModule& n1, const QModule& n2,
                                    SuiteSink& sink) {
  const QCategory a1 = pullback_category(f1, b1);
  const QCategory a2 = pullback_category(f2, b2);
  const Func f12 = product_func(f1, f2);
  const QCategory b12 = tensor_pair(b1, b2);
  sink.check(pullback_category(f12, b12) == tensor_pair(a1, a2),
             "pullback-tensor-compat",
             "B1 " + matrix_case(b1.hom) + "; B2 " + matrix_case(b2.hom) +
                 "; f1 = " + f1.describe() + "; f2 = " + f2.describe());
  const QModule lhs = restrict_scalars(f12, tensor_pair(a1, a2),
                                       tensor_modcomod(n1, n2));
  const QModule rhs = tensor_modcomod(restrict_scalars(f1, a1, n1),
                                      restrict_scalars(f2, a2, n2));
  sink.check(lhs.mat == rhs.mat, "restriction-tensor-compat",
             "N1 " + matrix_case(n1.mat) + "; N2 " + matrix_case(n2.mat) +
                 "; f1 = " + f1.describe() + "; f2 = " + f2.describe());
}

inline void monoidal_fibration_cocase(const QCocategory& c1,
                                      const QCocategory& c2, const Func& f1,
                                      const Func& f2, const QComodule& k1,
                                      const QComodule& k2, SuiteSink& sink) {
  const QCocategory d1 = pushforward_cocategory(f1, c1);
  const QCocategory d2 = pushforward_cocategory(f2, c2);
  const Func f12 = product_func(f1, f2);
  sink.check(pushforward_cocategory(f12, tensor_pair(c1, c2)) ==
                 tensor_pair(d1, d2),
             "pushforward-tensor-compat",
             "C1 " + weight_case(c1) + "; C2 " + weight_case(c2) + "; f1 = " +
                 f1.describe() + "; f2 = " + f2.describe());
  const QComodule lhs = corestrict_scalars(f12, tensor_pair(d1, d2),
                                           tensor_modcomod(k1, k2));
  const QComodule rhs = tensor_modcomod(corestrict_scalars(f1, d1, k1),
                                        corestrict_scalars(f2, d2, k2));
  sink.check(lhs.mat == rhs.mat, "corestriction-tensor-compat",
             "K1 " + matrix_case(k1.mat) + "; K2 " + matrix_case(k2.mat) +
                 "; f1 = " + f1.describe() + "; f2 = " + f2.describe());
}

inline void monoidal_fibration_exhaustive(const QPtr& q, const SuiteBounds& b,
                                          SuiteSink& sink) {
  EnumBudget budget{b.budget};
  for (std::size_t sy = 1; sy <= b.carrier; ++sy)
    for (std::size_t sx = 1; sx <= b.carrier; ++sx) {
      const FinSet y = default_carrier(sy, "y");
      const FinSet x = default_carrier(sx, "x");
      const FinSet u = default_carrier(1, "u");
      enumerate_categories(q, y, budget, [&](const QCategory& b1) {
        enumerate_categories(q, x, budget, [&](const QCategory& b2) {
          sink.check(verify_category(tensor_pair(b1, b2).hom).ok(),
                     "tensor-category-laws",
                     "A " + matrix_case(b1.hom) + "; B " +
                         matrix_case(b2.hom));
          enumerate_functions(x, y, budget, [&](const Func& f1) {
            enumerate_functions(y, x, budget, [&](const Func& f2) {
              enumerate_modules(b1, u, budget, [&](const QModule& n1) {
                enumerate_modules(b2, u, budget, [&](const QModule& n2) {
                  monoidal_fibration_case(b1, b2, f1, f2, n1, n2, sink);
                });
              });
            });
          });
        });
      });
      enumerate_cocategories(q, y, budget, [&](const QCocategory& c1) {
        enumerate_cocategories(q, x, budget, [&](const QCocategory& c2) {
          sink.check(verify_cocategory(q, tensor_pair(c1, c2).objects,
                                       tensor_pair(c1, c2).weight).ok(),
                     "tensor-cocategory-laws",
                     "C " + weight_case(c1) + "; D " + weight_case(c2));
          enumerate_functions(y, x, budget, [&](const Func& f1) {
            enumerate_functions(x, y, budget, [&](const Func& f2) {
              enumerate_comodules(c1, u, budget, [&](const QComodule& k1) {
                enumerate_comodules(c2, u, budget, [&](const QComodule& k2) {
                  monoidal_fibration_cocase(c1, c2, f1, f2, k1, k2, sink);
                });
              });
            });
          });
        });
      });
    }
}

inline void monoidal_fibration_seeded(const QPtr& q, const SuiteBounds& b,
                                      SuiteSink& sink) {
  std::mt19937_64 g(*b.seed);
  for (std::size_t i = 0; i < b.samples; ++i) {
    const FinSet y = default_carrier(rnd_size(g, b.carrier), "y");
    const FinSet x = default_carrier(rnd_size(g, b.carrier), "x");
    const FinSet u = default_carrier(rnd_size(g, b.carrier), "u");
    const FinSet v = default_carrier(rnd_size(g, b.carrier), "v");
    const QCategory b1 = random_category(g, q, y);
    const QCategory b2 = random_category(g, q, x);
    const Func f1 = random_func(g, x, y);
    const Func f2 = random_func(g, y, x);
    monoidal_fibration_case(b1, b2, f1, f2, random_module(g, b1, u),
                            random_module(g, b2, v), sink);
    const QCocategory c1 = random_cocategory(g, q, y);
    const QCocategory c2 = random_cocategory(g, q, x);
    monoidal_fibration_cocase(c1, c2, random_func(g, y, x),
                              random_func(g, x, y),
                              random_comodule(g, c1, u),
                              random_comodule(g, c2, v), sink);
  }
}

// ---- sweedler_adjunctions and enrichment instances ----------------------

struct SweedlerInstances {
  QCategory a, b;
  QCocategory c, d;
  QModule m, n;
  QComodule k, l;
};

/// Small deterministic family derived from the quantale: a two-object chain
/// category, weight families including a nontrivial one when the quantale
/// has a non-extremal valid weight, and free/cofree (co)modules on them.
inline SweedlerInstances sweedler_instances(const QPtr& q) {
  const FinSet x = default_carrier(2, "x");
  VMatrix chain = identity_matrix(q, x);
  chain.set(1, 0, q->unit());
  Checked<QCategory> a = verify_category(chain);
  if (!a.ok()) throw InternalError("chain category failed verification");
  const FinSet z = default_carrier(2, "z");
  Elem nontrivial = q->bottom();
  for (Elem r = 0; r < q->size(); ++r) {
    const Elem w = gfp_from_top(*q, [&](Elem c) {
                     return q->meet(q->meet(r, q->unit()),
                                    q->tensor(c, c));
                   }).first;
    if (w != q->bottom() && w != q->unit()) nontrivial = w;
  }
  Checked<QCocategory> c =
      verify_cocategory(q, z, {q->unit(), nontrivial});
  Checked<QCocategory> d = verify_cocategory(q, z, {q->unit(), q->unit()});
  if (!c.ok() || !d.ok())
    throw InternalError("instance cocategory failed verification");
  const FinSet u = default_carrier(1, "u");
  VMatrix mm(q, u, x);
  mm.set(1, 0, q->unit());
  const QModule m = free_module(*a.value, mm);
  VMatrix nn(q, u, x);
  nn.set(0, 0, q->unit());
  nn.set(1, 0, q->unit());
  const QModule n = free_module(*a.value, nn);
  const FinSet v = default_carrier(1, "v");
  VMatrix kk(q, v, z);
  kk.set(0, 0, q->unit());
  kk.set(1, 0, q->unit());
  const QComodule k = cofree_comodule(*c.value, kk);
  const QComodule l = cofree_comodule(*d.value, kk);
  return {*a.value, *a.value, *c.value, *d.value, m, n, k, l};
}

inline void absorb(const AdjunctionReport& rep, SuiteSink& sink) {
  sink.out->cases += rep.cases;
  for (const auto& f : rep.failures)
    sink.out->failures.push_back(rep.which + ": " + f);
}

/// Seeded instances vary the entries, not the shapes: the verifiers
/// enumerate whole function carriers over these objects, so anything past
/// two-element carriers blows up the case count.
inline SweedlerInstances random_sweedler_instances(const QPtr& q,
                                                   const SuiteBounds& b) {
  std::mt19937_64 g(*b.seed);
  const std::size_t cb = std::min<std::size_t>(b.carrier, 2);
  const FinSet x = default_carrier(rnd_size(g, cb), "x");
  const FinSet y = default_carrier(rnd_size(g, cb), "y");
  const FinSet z = default_carrier(rnd_size(g, cb), "z");
  const FinSet u = default_carrier(rnd_size(g, cb), "u");
  const FinSet t = default_carrier(rnd_size(g, cb), "t");
  const FinSet v = default_carrier(rnd_size(g, cb), "v");
  const QCategory a = random_category(g, q, x);
  const QCategory bb = random_category(g, q, y);
  const QCocategory c = random_cocategory(g, q, z);
  const QCocategory d = random_cocategory(g, q, z);
  return {a,
          bb,
          c,
          d,
          random_module(g, a, u),
          random_module(g, bb, t),
          random_comodule(g, c, v),
          random_comodule(g, d, v)};
}

inline void sweedler_adjunctions_run(const QPtr& q, const SuiteBounds& b,
                                     SuiteSink& sink) {
  const SweedlerInstances inst =
      b.seed ? random_sweedler_instances(q, b) : sweedler_instances(q);
  const std::size_t bound = std::min<std::size_t>(b.carrier, 2);
  absorb(verify_adjunction_P(inst.a, inst.b, bound, b.cap), sink);
  absorb(verify_adjunction_Q(inst.m, inst.n, bound, b.cap), sink);
  absorb(verify_adjunction_tensor_cat(inst.c, inst.b, bound, b.cap), sink);
  absorb(verify_adjunction_tensor_mod(inst.k, inst.n, bound, b.cap), sink);
  absorb(verify_adjunction_hom_cocat(inst.c, inst.d, bound, b.cap), sink);
  absorb(verify_adjunction_hom_comod(inst.k, inst.l, bound, b.cap), sink);
}

inline void enrichment_exhaustive(const QPtr& q, const SuiteBounds& b,
                                  SuiteSink& sink) {
  EnumBudget budget{b.budget};
  for (std::size_t sx = 1; sx <= b.carrier; ++sx)
    for (std::size_t sy = 1; sy <= b.carrier; ++sy)
      for (std::size_t sz = 1; sz <= b.carrier; ++sz) {
        const FinSet x = default_carrier(sx, "x");
        const FinSet y = default_carrier(sy, "y");
        const FinSet z = default_carrier(sz, "z");
        enumerate_categories(q, x, budget, [&](const QCategory& a) {
          enumerate_categories(q, y, budget, [&](const QCategory& bb) {
            enumerate_categories(q, z, budget, [&](const QCategory& cc) {
              LawReport rep = enriched_check(a, bb, cc, b.cap);
              ++sink.out->cases;
              for (const auto& viol : rep.violations)
                sink.fail(viol.law,
                          "A " + matrix_case(a.hom) + "; B " +
                              matrix_case(bb.hom) + "; C " +
                              matrix_case(cc.hom) + "; " + viol.witness);
            });
          });
        });
      }
  const SweedlerInstances inst = sweedler_instances(q);
  LawReport rep = enriched_check(inst.m, inst.n, inst.m, b.cap);
  ++sink.out->cases;
  for (const auto& viol : rep.violations)
    sink.fail(viol.law, viol.witness);
}

inline void enrichment_seeded(const QPtr& q, const SuiteBounds& b,
                              SuiteSink& sink) {
  std::mt19937_64 g(*b.seed);
  const std::size_t rounds = std::max<std::size_t>(1, b.samples / 20);
  for (std::size_t i = 0; i < rounds; ++i) {
    const FinSet x = default_carrier(rnd_size(g, b.carrier), "x");
    const FinSet y = default_carrier(rnd_size(g, b.carrier), "y");
    const FinSet z = default_carrier(rnd_size(g, b.carrier), "z");
    const QCategory a = random_category(g, q, x);
    const QCategory bb = random_category(g, q, y);
    const QCategory cc = random_category(g, q, z);
    LawReport rep = enriched_check(a, bb, cc, b.cap);
    ++sink.out->cases;
    for (const auto& viol : rep.violations)
      sink.fail(viol.law, "A " + matrix_case(a.hom) + "; B " +
                              matrix_case(bb.hom) + "; C " +
                              matrix_case(cc.hom) + "; " + viol.witness);
    const FinSet u = default_carrier(1, "u");
    LawReport mrep = enriched_check(random_module(g, a, u),
                                    random_module(g, a, u),
                                    random_module(g, a, u), b.cap);
    ++sink.out->cases;
    for (const auto& viol : mrep.violations) sink.fail(viol.law, viol.witness);
  }
}

}  // namespace detail

inline SuiteResult run_suite(Suite suite, const QPtr& q,
                             const SuiteBounds& bounds) {
  SuiteResult result;
  result.suite = suite_name(suite);
  detail::SuiteSink sink{&result};
  const auto start = std::chrono::steady_clock::now();
  switch (suite) {
    case Suite::double_cat:
      bounds.seed ? detail::double_cat_seeded(q, bounds, sink)
                  : detail::double_cat_exhaustive(q, bounds, sink);
      break;
    case Suite::fibrant:
      bounds.seed ? detail::fibrant_seeded(q, bounds, sink)
                  : detail::fibrant_exhaustive(q, bounds, sink);
      break;
    case Suite::monoidal:
      bounds.seed ? detail::monoidal_seeded(q, bounds, sink)
                  : detail::monoidal_exhaustive(q, bounds, sink);
      break;
    case Suite::closed:
      if (bounds.seed)
        detail::closed_seeded(q, bounds, sink);
      else
        detail::closed_scan(q, bounds.carrier, bounds.budget, sink);
      break;
    case Suite::mod_fibration:
      bounds.seed ? detail::mod_fibration_seeded(q, bounds, sink)
                  : detail::mod_fibration_exhaustive(q, bounds, sink);
      break;
    case Suite::monoidal_fibration:
      bounds.seed ? detail::monoidal_fibration_seeded(q, bounds, sink)
                  : detail::monoidal_fibration_exhaustive(q, bounds, sink);
      break;
    case Suite::sweedler_adjunctions:
      detail::sweedler_adjunctions_run(q, bounds, sink);
      break;
    case Suite::enrichment:
      bounds.seed ? detail::enrichment_seeded(q, bounds, sink)
                  : detail::enrichment_exhaustive(q, bounds, sink);
      break;
  }
  std::sort(result.failures.begin(), result.failures.end());
  result.wall_ms = std::chrono::duration<double, std::milli>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

}  // namespace qmat
