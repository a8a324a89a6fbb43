#pragma once

/**
 * Left modules over enriched categories and left comodules over enriched
 * cocategories, with the fibrational operations that move them between base
 * structures.
 *
 * A module over A on X is a matrix M : U ⇸ X absorbing the action from the
 * left, A(x,x') ⊗ M(x',u) ≤ M(x,u); over the Boolean quantale these are the
 * relations that are upward closed in the preorder coordinate. A comodule
 * over a weight family c is a matrix K : V ⇸ Z with K(z,v) ≤ c_z ⊗ K(z,v),
 * i.e. each row survives tensoring with its weight.
 */

#include <cstddef>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qmat/cat.hpp"
#include "qmat/error.hpp"
#include "qmat/finset.hpp"
#include "qmat/quantale.hpp"
#include "qmat/report.hpp"
#include "qmat/vmat.hpp"

namespace qmat {

struct QModule {
  QCategory over;
  FinSet src;
  VMatrix mat;  // mat(object, source)

  const Quantale& quantale() const { return mat.quantale(); }
  const QPtr& qptr() const { return mat.qptr(); }

  friend bool operator==(const QModule& a, const QModule& b) {
    return a.over == b.over && a.mat == b.mat;
  }
};

struct QComodule {
  QCocategory over;
  FinSet src;
  VMatrix mat;  // mat(object, source)

  const Quantale& quantale() const { return mat.quantale(); }
  const QPtr& qptr() const { return mat.qptr(); }

  friend bool operator==(const QComodule& a, const QComodule& b) {
    return a.over == b.over && a.mat == b.mat;
  }
};

/// Accepts m as a module over a iff the action inequality holds everywhere.
inline Checked<QModule> verify_module(const QCategory& a, const VMatrix& m) {
  if (m.tgt() != a.objects)
    throw BoundaryError("verify_module: matrix target must be the "
                        "category's objects");
  const Quantale& q = m.quantale();
  Checked<QModule> out;
  for (std::size_t x = 0; x < a.objects.size(); ++x)
    for (std::size_t x2 = 0; x2 < a.objects.size(); ++x2)
      for (std::size_t u = 0; u < m.src().size(); ++u) {
        const Elem acted = q.tensor(a.hom(x, x2), m(x2, u));
        if (!q.leq(acted, m(x, u)))
          out.report.record(
              "action", "hom(" + a.objects.label(x) + ", " +
                            a.objects.label(x2) + ") ⊗ mat(" +
                            a.objects.label(x2) + ", " + m.src().label(u) +
                            ") = " + q.label(acted) + " exceeds mat(" +
                            a.objects.label(x) + ", " + m.src().label(u) +
                            ") = " + q.label(m(x, u)));
      }
  if (out.report.pass()) out.value = QModule{a, m.src(), m};
  return out;
}

/// Accepts k as a comodule over c iff every entry is recovered after
/// tensoring with its row weight.
inline Checked<QComodule> verify_comodule(const QCocategory& c,
                                          const VMatrix& k) {
  if (k.tgt() != c.objects)
    throw BoundaryError("verify_comodule: matrix target must be the "
                        "cocategory's objects");
  const Quantale& q = k.quantale();
  Checked<QComodule> out;
  for (std::size_t z = 0; z < c.objects.size(); ++z)
    for (std::size_t v = 0; v < k.src().size(); ++v) {
      const Elem coacted = q.tensor(c.weight[z], k(z, v));
      if (!q.leq(k(z, v), coacted))
        out.report.record(
            "coaction", "mat(" + c.objects.label(z) + ", " +
                            k.src().label(v) + ") = " + q.label(k(z, v)) +
                            " is not below weight ⊗ mat = " + q.label(coacted));
    }
  if (out.report.pass()) out.value = QComodule{c, k.src(), k};
  return out;
}

/// A module morphism M ⇒ N over a functor is a pair (object function g0,
/// source function g); in a posetal base it exists exactly when g0 is a
/// functor between the bases and (g, g0) bounds a matrix 2-cell.
inline bool mod_morphism_check(const Func& g0, const Func& g, const QModule& m,
                               const QModule& n) {
  return morphism_check(g0, m.over, n.over) &&
         cell_check(g, g0, m.mat, n.mat).verdict;
}

inline bool comod_morphism_check(const Func& f0, const Func& g,
                                 const QComodule& k, const QComodule& l) {
  return morphism_check(f0, k.over, l.over) &&
         cell_check(g, f0, k.mat, l.mat).verdict;
}

/// Free module on a matrix: saturate from the left, mat = A ⊙ M. The
/// composition inequality of A makes the action hold.
inline QModule free_module(const QCategory& a, const VMatrix& m) {
  if (m.tgt() != a.objects)
    throw BoundaryError("free_module: matrix target must be the category's "
                        "objects");
  VMatrix mat = hcompose(a.hom, m);
  return QModule{a, m.src(), std::move(mat)};
}

/// Cofree comodule on a matrix: mat(z,v) = c_z ⊗ k(z,v). The weight's
/// square-domination makes the coaction hold.
inline QComodule cofree_comodule(const QCocategory& c, const VMatrix& k) {
  if (k.tgt() != c.objects)
    throw BoundaryError("cofree_comodule: matrix target must be the "
                        "cocategory's objects");
  VMatrix mat = k;
  for (std::size_t z = 0; z < c.objects.size(); ++z)
    for (std::size_t v = 0; v < k.src().size(); ++v)
      mat.set(z, v, c.q->tensor(c.weight[z], k(z, v)));
  return QComodule{c, k.src(), std::move(mat)};
}

/// Restriction of scalars along a functor g0 : A → B, the cartesian lifting
/// over the module fibration: mat(x,t) = N(g0(x), t).
inline QModule restrict_scalars(const Func& g0, const QCategory& a,
                                const QModule& n) {
  if (!morphism_check(g0, a, n.over))
    throw ValidationError("restrict_scalars: the given function is not a "
                          "functor into the module's base");
  VMatrix mat(n.qptr(), n.src, a.objects);
  for (std::size_t x = 0; x < a.objects.size(); ++x)
    for (std::size_t t = 0; t < n.src.size(); ++t)
      mat.set(x, t, n.mat(g0(x), t));
  return QModule{a, n.src, std::move(mat)};
}

/// Corestriction of scalars along a cofunctor f0 : C → D, the cocartesian
/// lifting: mat(w,v) = ⋁_{f0(z)=w} K(z,v).
inline QComodule corestrict_scalars(const Func& f0, const QCocategory& d,
                                    const QComodule& k) {
  if (!morphism_check(f0, k.over, d))
    throw ValidationError("corestrict_scalars: the given function is not a "
                          "cofunctor into the target cocategory");
  const Quantale& q = k.quantale();
  VMatrix mat(k.qptr(), k.src, d.objects);
  for (std::size_t z = 0; z < k.over.objects.size(); ++z)
    for (std::size_t v = 0; v < k.src.size(); ++v)
      mat.set(f0(z), v, q.join(mat(f0(z), v), k.mat(z, v)));
  return QComodule{d, k.src, std::move(mat)};
}

/// Reindexing of the free coordinate: columns pulled back along f.
inline QModule source_reindex(const Func& f, const QModule& n) {
  if (f.cod() != n.src)
    throw BoundaryError("source_reindex: function must land in the module's "
                        "source");
  VMatrix mat(n.qptr(), f.dom(), n.mat.tgt());
  for (std::size_t x = 0; x < n.mat.tgt().size(); ++x)
    for (std::size_t u = 0; u < f.dom().size(); ++u)
      mat.set(x, u, n.mat(x, f(u)));
  return QModule{n.over, f.dom(), std::move(mat)};
}

/// Monoidal product of modules, living over the tensor of the bases.
inline QModule tensor_modcomod(const QModule& m, const QModule& n) {
  QCategory over = tensor_pair(m.over, n.over);
  VMatrix mat = tensor_matrices(m.mat, n.mat);
  FinSet src = mat.src();
  return QModule{std::move(over), std::move(src), std::move(mat)};
}

inline QComodule tensor_modcomod(const QComodule& k, const QComodule& l) {
  QCocategory over = tensor_pair(k.over, l.over);
  VMatrix mat = tensor_matrices(k.mat, l.mat);
  FinSet src = mat.src();
  return QComodule{std::move(over), std::move(src), std::move(mat)};
}

/// Tensor of two single-column modules: the column (x,y) ↦ M(x) ⊗ N(y).
inline QModule unit_domain_tensor(const QModule& m, const QModule& n) {
  if (m.src.size() != 1 || n.src.size() != 1)
    throw ValidationError("unit_domain_tensor: both modules must have a "
                          "singleton source");
  return tensor_modcomod(m, n);
}

/// Tensor of two modules sharing a source, staying over that source:
/// (M⊗M')((x,y),u) = M(x,u) ⊗ M'(y,u). Equals the monoidal tensor reindexed
/// along the diagonal of U.
inline QModule fixed_domain_tensor(const QModule& m, const QModule& n) {
  if (m.src != n.src)
    throw ValidationError("fixed_domain_tensor: modules must share their "
                          "source");
  const Quantale& q = m.quantale();
  QCategory over = tensor_pair(m.over, n.over);
  VMatrix mat(m.qptr(), m.src, over.objects);
  const std::size_t bn = n.over.objects.size();
  for (std::size_t x = 0; x < m.over.objects.size(); ++x)
    for (std::size_t y = 0; y < bn; ++y)
      for (std::size_t u = 0; u < m.src.size(); ++u)
        mat.set(x * bn + y, u, q.tensor(m.mat(x, u), n.mat(y, u)));
  FinSet src = m.src;
  return QModule{std::move(over), std::move(src), std::move(mat)};
}

/// The single-column unit module over the one-object unit category.
inline QModule unit_module(QPtr q) {
  QCategory over = unit_category(q);
  FinSet one("1", {"*"});
  VMatrix mat(std::move(q), one, over.objects);
  mat.set(0, 0, mat.quantale().unit());
  return QModule{std::move(over), std::move(one), std::move(mat)};
}

/// The fixed-domain unit over a source U: J(u) = e, over the unit category.
inline QModule fixed_domain_unit(QPtr q, const FinSet& u) {
  QCategory over = unit_category(q);
  VMatrix mat(std::move(q), u, over.objects);
  for (std::size_t i = 0; i < u.size(); ++i)
    mat.set(0, i, mat.quantale().unit());
  return QModule{std::move(over), u, std::move(mat)};
}

/// The single-column unit comodule over the one-object unit cocategory.
inline QComodule unit_comodule(QPtr q) {
  QCocategory over = unit_cocategory(q);
  FinSet one("1", {"*"});
  VMatrix mat(std::move(q), one, over.objects);
  mat.set(0, 0, mat.quantale().unit());
  return QComodule{std::move(over), std::move(one), std::move(mat)};
}

}  // namespace qmat
