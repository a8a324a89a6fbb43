#pragma once

/**
 * Convolution structures on function carriers.
 *
 * The internal hom of matrices sends a cocategory C and a category A to a
 * category on X^Z whose hom is a weighted meet of residuals, and likewise on
 * the (co)module level. The cocategory and comodule homs have no closed
 * entrywise formula; each entry is the greatest post-fixpoint of a monotone
 * step map and is computed by descending iteration from ⊤, which stabilizes
 * within |Q| strict steps on a finite quantale.
 */

#include <algorithm>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qmat/cat.hpp"
#include "qmat/error.hpp"
#include "qmat/finset.hpp"
#include "qmat/mod.hpp"
#include "qmat/quantale.hpp"
#include "qmat/report.hpp"
#include "qmat/vmat.hpp"

namespace qmat {

/// H(C,A) on X^Z with hom(s,k) = ⋀_z [c_z, A(s(z), k(z))]. Weights below
/// the unit make the identities hold; residuation currying gives composition.
inline QCategory convolution_category(const QCocategory& c, const QCategory& a,
                                      std::size_t cap = kDefaultHomCap) {
  const Quantale& q = a.quantale();
  FuncSet fs(c.objects, a.objects, cap);
  VMatrix hom(a.qptr(), fs.carrier(), fs.carrier());
  for (std::size_t s = 0; s < fs.size(); ++s)
    for (std::size_t k = 0; k < fs.size(); ++k) {
      Elem acc = q.top();
      for (std::size_t z = 0; z < c.objects.size(); ++z)
        acc = q.meet(acc, q.residuate(c.weight[z],
                                      a.hom(fs.apply(s, z), fs.apply(k, z))));
      hom.set(s, k, acc);
    }
  Checked<QCategory> checked = verify_category(hom);
  if (!checked.ok())
    throw InternalError("convolution category failed its laws:\n" +
                        checked.report.to_string());
  return *checked.value;
}

/// H(K,M) over H(C,A): mat(t,s) = ⋀_{z,v} [K(z,v), M(t(z), s(v))] for
/// t : Z → X and s : V → U, which is the internal hom of the matrices.
inline QModule convolution_module(const QComodule& k, const QModule& m,
                                  std::size_t cap = kDefaultHomCap) {
  QCategory over = convolution_category(k.over, m.over, cap);
  VMatrix mat = internal_hom(k.mat, m.mat, cap);
  if (mat.tgt() != over.objects)
    throw InternalError("convolution module carrier drifted from its base");
  Checked<QModule> checked = verify_module(over, mat);
  if (!checked.ok())
    throw InternalError("convolution module failed its laws:\n" +
                        checked.report.to_string());
  return *checked.value;
}

/// Hom of cocategories on W^Z: weight(k) is the greatest q below e and
/// ⋀_z [c_z, d_{k(z)}] with q ≤ q ⊗ q, by iteration from ⊤.
inline QCocategory hom_cocategories(const QCocategory& c, const QCocategory& d,
                                    std::size_t cap = kDefaultHomCap,
                                    MeasuringReport* trace = nullptr) {
  const Quantale& q = *c.q;
  FuncSet fs(c.objects, d.objects, cap);
  std::vector<Elem> weight(fs.size());
  if (trace) {
    trace->op = "hom_cocategories";
    trace->index_labels.clear();
    trace->steps.clear();
  }
  for (std::size_t k = 0; k < fs.size(); ++k) {
    Elem bound = q.unit();
    for (std::size_t z = 0; z < c.objects.size(); ++z)
      bound = q.meet(bound,
                     q.residuate(c.weight[z], d.weight[fs.apply(k, z)]));
    auto [val, steps] = gfp_from_top(q, [&](Elem v) {
      return q.meet(bound, q.tensor(v, v));
    });
    weight[k] = val;
    if (trace) {
      trace->index_labels.push_back(fs.carrier().label(k));
      trace->steps.push_back(steps);
    }
  }
  Checked<QCocategory> checked =
      verify_cocategory(c.q, fs.carrier(), weight);
  if (!checked.ok())
    throw InternalError("hom of cocategories failed its laws:\n" +
                        checked.report.to_string());
  return *checked.value;
}

/// Hom of comodules over hom_cocategories(C,D), source S^V:
/// entry(k̄,s̄) = gfp(q ↦ b ∧ (weight_{k̄} ⊗ q)) with
/// b = ⋀_{z,v} [K(z,v), L(k̄(z), s̄(v))].
inline QComodule hom_comodules(const QComodule& k, const QComodule& l,
                               std::size_t cap = kDefaultHomCap,
                               MeasuringReport* trace = nullptr) {
  const Quantale& q = k.quantale();
  QCocategory over = hom_cocategories(k.over, l.over, cap);
  FuncSet tf(k.over.objects, l.over.objects, cap);  // k̄ : Z → W
  FuncSet sf(k.src, l.src, cap);                    // s̄ : V → S
  if (tf.size() != 0 &&
      sf.size() > cap / std::max<std::size_t>(tf.size(), 1))
    throw CapError("hom of comodules carrier product exceeds the cap of " +
                   std::to_string(cap));
  if (trace) {
    trace->op = "hom_comodules";
    trace->index_labels.clear();
    trace->steps.clear();
  }
  VMatrix mat(k.qptr(), sf.carrier(), tf.carrier());
  for (std::size_t kb = 0; kb < tf.size(); ++kb)
    for (std::size_t sb = 0; sb < sf.size(); ++sb) {
      Elem bound = q.top();
      for (std::size_t z = 0; z < k.over.objects.size(); ++z)
        for (std::size_t v = 0; v < k.src.size(); ++v)
          bound = q.meet(bound,
                         q.residuate(k.mat(z, v),
                                     l.mat(tf.apply(kb, z), sf.apply(sb, v))));
      auto [val, steps] = gfp_from_top(q, [&](Elem x) {
        return q.meet(bound, q.tensor(over.weight[kb], x));
      });
      mat.set(kb, sb, val);
      if (trace) {
        trace->index_labels.push_back("(" + tf.carrier().label(kb) + ", " +
                                      sf.carrier().label(sb) + ")");
        trace->steps.push_back(steps);
      }
    }
  Checked<QComodule> checked = verify_comodule(over, mat);
  if (!checked.ok())
    throw InternalError("hom of comodules failed its laws:\n" +
                        checked.report.to_string());
  return *checked.value;
}

/// Asserts H(C, H(D,B)) = H(C⊗D, B) entrywise under the currying bijection
/// of carriers. A mismatch means the residuation currying law broke, which
/// is an internal bug, so it throws rather than reporting.
inline bool curry_check(const QCocategory& c, const QCocategory& d,
                        const QCategory& b, std::size_t cap = kDefaultHomCap) {
  const QCategory inner = convolution_category(d, b, cap);
  const QCategory curried = convolution_category(c, inner, cap);
  const QCategory flat =
      convolution_category(tensor_pair(c, d), b, cap);

  FuncSet innerf(d.objects, b.objects, cap);   // W → Y
  FuncSet outerf(c.objects, inner.objects, cap);
  FuncSet flatf(product_set(c.objects, d.objects), b.objects, cap);
  if (outerf.size() != flatf.size())
    throw InternalError("currying bijection has mismatched carrier sizes");

  std::vector<std::size_t> flatten(outerf.size());
  std::vector<std::size_t> images(flatf.dom().size());
  for (std::size_t f = 0; f < outerf.size(); ++f) {
    for (std::size_t z = 0; z < c.objects.size(); ++z) {
      const std::size_t g = outerf.apply(f, z);
      for (std::size_t w = 0; w < d.objects.size(); ++w)
        images[z * d.objects.size() + w] = innerf.apply(g, w);
    }
    flatten[f] = flatf.encode(images);
  }
  for (std::size_t s = 0; s < outerf.size(); ++s)
    for (std::size_t k = 0; k < outerf.size(); ++k)
      if (curried.hom(s, k) != flat.hom(flatten[s], flatten[k]))
        throw InternalError(
            "currying broke at (" + curried.objects.label(s) + ", " +
            curried.objects.label(k) + "): " +
            b.quantale().label(curried.hom(s, k)) + " vs " +
            b.quantale().label(flat.hom(flatten[s], flatten[k])));
  return true;
}

}  // namespace qmat
