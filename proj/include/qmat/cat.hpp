#pragma once

/**
 * Quantale-enriched categories and cocategories presented as matrices.
 *
 * A QCategory on X is an endo-matrix A with e ≤ A(x,x) and
 * A(z,y) ⊗ A(y,x) ≤ A(z,x); over the Boolean quantale these are exactly the
 * preorders. A QCocategory is the dual comonoid; in a posetal base its
 * counit forces the matrix to be diagonal, so only the diagonal weights are
 * stored, each satisfying c_z ≤ e and c_z ≤ c_z ⊗ c_z.
 */

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "qmat/error.hpp"
#include "qmat/finset.hpp"
#include "qmat/quantale.hpp"
#include "qmat/report.hpp"
#include "qmat/vmat.hpp"

namespace qmat {

struct QCategory {
  FinSet objects;
  VMatrix hom;  // hom(target, source)

  const Quantale& quantale() const { return hom.quantale(); }
  const QPtr& qptr() const { return hom.qptr(); }

  friend bool operator==(const QCategory& a, const QCategory& b) {
    return a.hom == b.hom;
  }
};

struct QCocategory {
  QPtr q;
  FinSet objects;
  std::vector<Elem> weight;  // one element per object

  const Quantale& quantale() const { return *q; }

  friend bool operator==(const QCocategory& a, const QCocategory& b) {
    return a.objects == b.objects && a.weight == b.weight &&
           a.q->labels() == b.q->labels();
  }
};

/// Accepts an endo-matrix as a category iff e ≤ hom(x,x) everywhere and
/// composition never escapes hom. Violations carry labeled witnesses.
inline Checked<QCategory> verify_category(const VMatrix& m) {
  if (!m.is_endo())
    throw BoundaryError("verify_category: matrix is not an endo-matrix");
  const Quantale& q = m.quantale();
  const FinSet& x = m.src();
  Checked<QCategory> out;
  for (std::size_t i = 0; i < x.size(); ++i)
    if (!q.leq(q.unit(), m(i, i)))
      out.report.record("identity", "hom(" + x.label(i) + ", " + x.label(i) +
                                        ") = " + q.label(m(i, i)) +
                                        " does not dominate the unit");
  for (std::size_t z = 0; z < x.size(); ++z)
    for (std::size_t y = 0; y < x.size(); ++y)
      for (std::size_t xx = 0; xx < x.size(); ++xx) {
        const Elem prod = q.tensor(m(z, y), m(y, xx));
        if (!q.leq(prod, m(z, xx)))
          out.report.record(
              "composition",
              "hom(" + x.label(z) + ", " + x.label(y) + ") ⊗ hom(" +
                  x.label(y) + ", " + x.label(xx) + ") = " + q.label(prod) +
                  " exceeds hom(" + x.label(z) + ", " + x.label(xx) + ") = " +
                  q.label(m(z, xx)));
      }
  if (out.report.pass()) out.value = QCategory{x, m};
  return out;
}

/// Accepts a weight family as a cocategory iff every weight is subunital
/// and idempotent-below-itself: c_z ≤ e and c_z ≤ c_z ⊗ c_z.
inline Checked<QCocategory> verify_cocategory(QPtr q, const FinSet& z,
                                              const std::vector<Elem>& weight) {
  if (weight.size() != z.size())
    throw ValidationError("verify_cocategory: one weight per object required");
  Checked<QCocategory> out;
  for (std::size_t i = 0; i < z.size(); ++i) {
    if (weight[i] >= q->size())
      throw ValidationError("verify_cocategory: weight out of quantale range");
    if (!q->leq(weight[i], q->unit()))
      out.report.record("counit", "weight at " + z.label(i) + " is " +
                                      q->label(weight[i]) +
                                      ", above the unit");
    if (!q->leq(weight[i], q->tensor(weight[i], weight[i])))
      out.report.record("cocomposition",
                        "weight at " + z.label(i) + " is " +
                            q->label(weight[i]) + " but its square is " +
                            q->label(q->tensor(weight[i], weight[i])));
  }
  if (out.report.pass()) out.value = QCocategory{std::move(q), z, weight};
  return out;
}

/// Loader for cocategories given as full matrices: proves the matrix is
/// diagonal first, then checks the weight laws on the diagonal.
inline Checked<QCocategory> cocategory_from_matrix(const VMatrix& m) {
  if (!m.is_endo())
    throw BoundaryError("cocategory_from_matrix: matrix is not endo");
  const Quantale& q = m.quantale();
  Checked<QCocategory> out;
  for (std::size_t z = 0; z < m.tgt().size(); ++z)
    for (std::size_t w = 0; w < m.src().size(); ++w)
      if (z != w && m(z, w) != q.bottom())
        out.report.record("diagonality",
                          "entry (" + m.tgt().label(z) + ", " +
                              m.src().label(w) + ") = " + q.label(m(z, w)) +
                              " is off the diagonal and not bottom");
  if (!out.report.pass()) return out;
  std::vector<Elem> weight(m.src().size());
  for (std::size_t z = 0; z < weight.size(); ++z) weight[z] = m(z, z);
  return verify_cocategory(m.qptr(), m.src(), weight);
}

/// Diagonal matrix presentation of a cocategory.
inline VMatrix cocategory_matrix(const QCocategory& c) {
  VMatrix m(c.q, c.objects, c.objects);
  for (std::size_t z = 0; z < c.objects.size(); ++z)
    m.set(z, z, c.weight[z]);
  return m;
}

/// Functor condition A(x,x') ≤ B(f(x), f(x')) for all x, x'.
inline bool morphism_check(const Func& f, const QCategory& a,
                           const QCategory& b) {
  if (f.dom() != a.objects || f.cod() != b.objects)
    throw BoundaryError("morphism_check: function is not typed by the "
                        "categories");
  const Quantale& q = a.quantale();
  for (std::size_t x = 0; x < a.objects.size(); ++x)
    for (std::size_t y = 0; y < a.objects.size(); ++y)
      if (!q.leq(a.hom(y, x), b.hom(f(y), f(x)))) return false;
  return true;
}

/// Cofunctor condition c_z ≤ d_{f(z)} for all z.
inline bool morphism_check(const Func& f, const QCocategory& c,
                           const QCocategory& d) {
  if (f.dom() != c.objects || f.cod() != d.objects)
    throw BoundaryError("morphism_check: function is not typed by the "
                        "cocategories");
  for (std::size_t z = 0; z < c.objects.size(); ++z)
    if (!c.q->leq(c.weight[z], d.weight[f(z)])) return false;
  return true;
}

/// Cartesian lifting of f: hom(x,x') = B(f(x), f(x')). Always a category.
inline QCategory pullback_category(const Func& f, const QCategory& b) {
  if (f.cod() != b.objects)
    throw BoundaryError("pullback_category: function does not land in the "
                        "category's objects");
  VMatrix hom(b.qptr(), f.dom(), f.dom());
  for (std::size_t y = 0; y < f.dom().size(); ++y)
    for (std::size_t x = 0; x < f.dom().size(); ++x)
      hom.set(y, x, b.hom(f(y), f(x)));
  return QCategory{f.dom(), std::move(hom)};
}

/// Cocartesian lifting of f: d_v = ⋁_{f(z)=v} c_z; empty fibers get bottom.
/// Joins of subunital square-dominated weights stay such because the tensor
/// is commutative and distributes over joins.
inline QCocategory pushforward_cocategory(const Func& f, const QCocategory& c) {
  if (f.dom() != c.objects)
    throw BoundaryError("pushforward_cocategory: function does not start at "
                        "the cocategory's objects");
  std::vector<Elem> d(f.cod().size(), c.q->bottom());
  for (std::size_t z = 0; z < c.objects.size(); ++z)
    d[f(z)] = c.q->join(d[f(z)], c.weight[z]);
  return QCocategory{c.q, f.cod(), std::move(d)};
}

/// Monoidal product of categories: hom((x,z),(x',z')) = A(x,x') ⊗ B(z,z').
inline QCategory tensor_pair(const QCategory& a, const QCategory& b) {
  VMatrix hom = tensor_matrices(a.hom, b.hom);
  FinSet objects = hom.src();
  return QCategory{std::move(objects), std::move(hom)};
}

/// Monoidal product of cocategories: weight (z,w) ↦ c_z ⊗ d_w.
inline QCocategory tensor_pair(const QCocategory& c, const QCocategory& d) {
  FinSet objects = product_set(c.objects, d.objects);
  std::vector<Elem> weight;
  weight.reserve(objects.size());
  for (std::size_t z = 0; z < c.objects.size(); ++z)
    for (std::size_t w = 0; w < d.objects.size(); ++w)
      weight.push_back(c.q->tensor(c.weight[z], d.weight[w]));
  return QCocategory{c.q, std::move(objects), std::move(weight)};
}

/// One-object monoidal units.
inline QCategory unit_category(QPtr q) {
  FinSet one("1", {"*"});
  return QCategory{one, identity_matrix(std::move(q), one)};
}

inline QCocategory unit_cocategory(QPtr q) {
  const Elem e = q->unit();
  return QCocategory{std::move(q), FinSet("1", {"*"}), {e}};
}

struct StarResult {
  QCategory category;
  std::size_t rounds;  // strictly improving squaring steps
};

/// Least category containing g: Kleene iteration T₀ = 1 ∨ G,
/// T_{n+1} = T_n ∨ (T_n ⊙ T_n) until stable. Every entry climbs a chain in
/// the quantale, so at most |X| · height(Q) rounds change anything.
inline StarResult star_closure(const VMatrix& g) {
  if (!g.is_endo())
    throw BoundaryError("star_closure: matrix is not an endo-matrix");
  const Quantale& q = g.quantale();
  VMatrix t = g;
  for (std::size_t i = 0; i < t.src().size(); ++i)
    t.set(i, i, q.join(t(i, i), q.unit()));
  std::size_t rounds = 0;
  const std::size_t limit = t.src().size() * q.height() + 1;
  for (;;) {
    VMatrix sq = hcompose(t, t);
    VMatrix next = t;
    for (std::size_t y = 0; y < t.tgt().size(); ++y)
      for (std::size_t x = 0; x < t.src().size(); ++x)
        next.set(y, x, q.join(t(y, x), sq(y, x)));
    if (next == t) break;
    t = std::move(next);
    if (++rounds > limit)
      throw InternalError("star closure failed to stabilize within the "
                          "height bound");
  }
  Checked<QCategory> checked = verify_category(t);
  if (!checked.ok())
    throw InternalError("star closure produced a non-category:\n" +
                        checked.report.to_string());
  return {std::move(*checked.value), rounds};
}

enum class LimitKind { product, coproduct };

/// Products of categories exist and are computed entrywise by the meet on
/// the product carrier; coproducts of cocategories are disjoint unions of
/// weight families. The other two combinations are not created by the
/// underlying matrix (co)limits and are rejected.
inline QCategory binary_limits(LimitKind kind, const QCategory& a,
                               const QCategory& b) {
  if (kind != LimitKind::product)
    throw ValidationError("binary_limits: categories only form binary "
                          "products here");
  const Quantale& q = a.quantale();
  FinSet objects = product_set(a.objects, b.objects);
  VMatrix hom(a.qptr(), objects, objects);
  for (std::size_t x = 0; x < a.objects.size(); ++x)
    for (std::size_t y = 0; y < b.objects.size(); ++y)
      for (std::size_t x2 = 0; x2 < a.objects.size(); ++x2)
        for (std::size_t y2 = 0; y2 < b.objects.size(); ++y2)
          hom.set(x * b.objects.size() + y, x2 * b.objects.size() + y2,
                  q.meet(a.hom(x, x2), b.hom(y, y2)));
  return QCategory{std::move(objects), std::move(hom)};
}

inline QCocategory binary_limits(LimitKind kind, const QCocategory& c,
                                 const QCocategory& d) {
  if (kind != LimitKind::coproduct)
    throw ValidationError("binary_limits: cocategories only form binary "
                          "coproducts here");
  FinSet objects = coproduct_set({c.objects, d.objects});
  std::vector<Elem> weight = c.weight;
  weight.insert(weight.end(), d.weight.begin(), d.weight.end());
  return QCocategory{c.q, std::move(objects), std::move(weight)};
}

}  // namespace qmat
