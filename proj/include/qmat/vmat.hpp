#pragma once

/**
 * Quantale-valued matrices and their calculus.
 *
 * A VMatrix S : X ⇸ Y assigns a quantale element to each (target, source)
 * pair; entries are indexed S(y, x) with the target first. Composition joins
 * tensors over the middle carrier, (T∘S)(z,x) = ⋁_y T(z,y) ⊗ S(y,x), and the
 * identity on X is unit on the diagonal and bottom elsewhere. Distributivity
 * of the tensor makes associativity and the interchange law hold as entrywise
 * equalities, so a 2-cell needs no data beyond its boundary functions and a
 * pointwise inequality verdict.
 */

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "qmat/error.hpp"
#include "qmat/finset.hpp"
#include "qmat/quantale.hpp"

namespace qmat {

class VMatrix {
 public:
  VMatrix() = default;

  VMatrix(QPtr q, FinSet src, FinSet tgt)
      : q_(std::move(q)),
        src_(std::move(src)),
        tgt_(std::move(tgt)),
        e_(src_.size() * tgt_.size(), q_->bottom()) {}

  VMatrix(QPtr q, FinSet src, FinSet tgt, std::vector<Elem> entries)
      : q_(std::move(q)),
        src_(std::move(src)),
        tgt_(std::move(tgt)),
        e_(std::move(entries)) {
    if (e_.size() != src_.size() * tgt_.size())
      throw ValidationError("matrix entry count does not match its carriers");
    for (Elem v : e_)
      if (v >= q_->size())
        throw ValidationError("matrix entry out of quantale range");
  }

  const FinSet& src() const { return src_; }
  const FinSet& tgt() const { return tgt_; }
  const Quantale& quantale() const { return *q_; }
  const QPtr& qptr() const { return q_; }

  /// Entry at (target y, source x).
  Elem operator()(std::size_t y, std::size_t x) const {
    return e_[y * src_.size() + x];
  }
  void set(std::size_t y, std::size_t x, Elem v) {
    e_[y * src_.size() + x] = v;
  }
  const std::vector<Elem>& entries() const { return e_; }

  bool is_endo() const { return src_ == tgt_; }

  friend bool operator==(const VMatrix& a, const VMatrix& b) {
    return a.src_ == b.src_ && a.tgt_ == b.tgt_ && a.e_ == b.e_ &&
           a.q_->labels() == b.q_->labels();
  }
  friend bool operator!=(const VMatrix& a, const VMatrix& b) {
    return !(a == b);
  }

 private:
  QPtr q_;
  FinSet src_, tgt_;
  std::vector<Elem> e_;
};

/// (T∘S)(z,x) = ⋁_y T(z,y) ⊗ S(y,x). The shared carrier must match.
inline VMatrix hcompose(const VMatrix& t, const VMatrix& s) {
  if (s.tgt() != t.src())
    throw BoundaryError("hcompose: target of the first factor (" +
                        s.tgt().name() + ") does not match source of the "
                        "second (" + t.src().name() + ")");
  const Quantale& q = t.quantale();
  VMatrix r(t.qptr(), s.src(), t.tgt());
  for (std::size_t z = 0; z < t.tgt().size(); ++z)
    for (std::size_t x = 0; x < s.src().size(); ++x) {
      Elem acc = q.bottom();
      for (std::size_t y = 0; y < s.tgt().size(); ++y)
        acc = q.join(acc, q.tensor(t(z, y), s(y, x)));
      r.set(z, x, acc);
    }
  return r;
}

/// 1_X(x',x) = unit when x' = x, bottom otherwise.
inline VMatrix identity_matrix(QPtr q, const FinSet& x) {
  VMatrix r(q, x, x);
  for (std::size_t i = 0; i < x.size(); ++i) r.set(i, i, q->unit());
  return r;
}

/// (S⊗T)((y,w),(x,z)) = S(y,x) ⊗ T(w,z) on product carriers.
inline VMatrix tensor_matrices(const VMatrix& s, const VMatrix& t) {
  const Quantale& q = s.quantale();
  VMatrix r(s.qptr(), product_set(s.src(), t.src()),
            product_set(s.tgt(), t.tgt()));
  for (std::size_t y = 0; y < s.tgt().size(); ++y)
    for (std::size_t w = 0; w < t.tgt().size(); ++w)
      for (std::size_t x = 0; x < s.src().size(); ++x)
        for (std::size_t z = 0; z < t.src().size(); ++z)
          r.set(y * t.tgt().size() + w, x * t.src().size() + z,
                q.tensor(s(y, x), t(w, z)));
  return r;
}

/// Companion and conjoint of a function: f_*(y,x) = f^*(x,y) = unit exactly
/// when f(x) = y, which makes the four zig-zag cells hold.
inline std::pair<VMatrix, VMatrix> companion_conjoint(QPtr q, const Func& f) {
  VMatrix comp(q, f.dom(), f.cod());
  VMatrix conj(q, f.cod(), f.dom());
  for (std::size_t x = 0; x < f.dom().size(); ++x) {
    comp.set(f(x), x, q->unit());
    conj.set(x, f(x), q->unit());
  }
  return {std::move(comp), std::move(conj)};
}

/// A 2-cell candidate: boundary functions plus the decided pointwise
/// inequality. Candidates with a false verdict are never stored inside other
/// structures; they only report the witness that rejected them.
struct Cell2 {
  Func f;  // on sources
  Func g;  // on targets
  VMatrix dom, cod;
  bool verdict = false;
  std::optional<std::pair<std::size_t, std::size_t>> witness;  // (y, x)
};

/// Decides whether (f,g) bounds a 2-cell dom ⇒ cod, i.e. whether
/// dom(y,x) ≤ cod(g(y), f(x)) for all y, x.
inline Cell2 cell_check(const Func& f, const Func& g, const VMatrix& dom,
                        const VMatrix& cod) {
  if (f.dom() != dom.src() || f.cod() != cod.src() || g.dom() != dom.tgt() ||
      g.cod() != cod.tgt())
    throw BoundaryError("cell_check: boundary functions are not typed by the "
                        "given matrices");
  const Quantale& q = dom.quantale();
  Cell2 cell{f, g, dom, cod, true, std::nullopt};
  for (std::size_t y = 0; y < dom.tgt().size() && cell.verdict; ++y)
    for (std::size_t x = 0; x < dom.src().size(); ++x)
      if (!q.leq(dom(y, x), cod(g(y), f(x)))) {
        cell.verdict = false;
        cell.witness = {y, x};
        break;
      }
  return cell;
}

/// H(S,T)(m,n) = ⋀_{x,y} [S(y,x), T(m(y), n(x))] on the materialized
/// function carriers, for S : X ⇸ Y and T : Z ⇸ W giving Z^X ⇸ W^Y.
/// The cap bounds the entry count |W^Y| * |Z^X| of the result.
inline VMatrix internal_hom(const VMatrix& s, const VMatrix& t,
                            std::size_t cap = kDefaultHomCap) {
  const Quantale& q = s.quantale();
  FuncSet ns(s.src(), t.src(), cap);  // n : X → Z, sources of the hom
  FuncSet ms(s.tgt(), t.tgt(), cap);  // m : Y → W, targets of the hom
  if (ns.size() != 0 && ms.size() > cap / std::max<std::size_t>(ns.size(), 1))
    throw CapError("internal hom carrier product exceeds the cap of " +
                   std::to_string(cap));
  VMatrix r(s.qptr(), ns.carrier(), ms.carrier());
  for (std::size_t m = 0; m < ms.size(); ++m)
    for (std::size_t n = 0; n < ns.size(); ++n) {
      Elem acc = q.top();
      for (std::size_t y = 0; y < s.tgt().size() && acc != q.bottom(); ++y)
        for (std::size_t x = 0; x < s.src().size(); ++x)
          acc = q.meet(acc,
                       q.residuate(s(y, x), t(ms.apply(m, y), ns.apply(n, x))));
      r.set(m, n, acc);
    }
  return r;
}

/// Decides the 2-cell r⊗s ⇒ t over (phi, psi), recomputes the transposed
/// cell r ⇒ H(s,t) over the exponentially transposed boundaries, and insists
/// the verdicts agree before returning the shared verdict. Disagreement is an
/// internal bug, not an input error.
inline bool hom_transpose_check(const VMatrix& r, const VMatrix& s,
                                const VMatrix& t, const Func& phi,
                                const Func& psi,
                                std::size_t cap = kDefaultHomCap) {
  const VMatrix rs = tensor_matrices(r, s);
  if (phi.dom() != rs.src() || phi.cod() != t.src() ||
      psi.dom() != rs.tgt() || psi.cod() != t.tgt())
    throw BoundaryError("hom_transpose_check: boundaries do not type the "
                        "cell r⊗s ⇒ t");
  const bool direct = cell_check(phi, psi, rs, t).verdict;

  const VMatrix h = internal_hom(s, t, cap);
  FuncSet ns(s.src(), t.src(), cap);
  FuncSet ms(s.tgt(), t.tgt(), cap);
  std::vector<std::size_t> curried_src(r.src().size());
  std::vector<std::size_t> images(s.src().size());
  for (std::size_t u = 0; u < r.src().size(); ++u) {
    for (std::size_t x = 0; x < s.src().size(); ++x)
      images[x] = phi(pair_index(r.src(), s.src(), u, x));
    curried_src[u] = ns.encode(images);
  }
  std::vector<std::size_t> curried_tgt(r.tgt().size());
  std::vector<std::size_t> timages(s.tgt().size());
  for (std::size_t v = 0; v < r.tgt().size(); ++v) {
    for (std::size_t y = 0; y < s.tgt().size(); ++y)
      timages[y] = psi(pair_index(r.tgt(), s.tgt(), v, y));
    curried_tgt[v] = ms.encode(timages);
  }
  const Func phit(r.src(), ns.carrier(), std::move(curried_src));
  const Func psit(r.tgt(), ms.carrier(), std::move(curried_tgt));
  const bool transposed = cell_check(phit, psit, r, h).verdict;

  if (direct != transposed)
    throw InternalError("hom transposition changed a cell verdict; "
                        "closedness is broken");
  return direct;
}

/// Block-diagonal coproduct on tagged disjoint-union carriers; entries
/// across different summands are bottom.
inline VMatrix coproduct_matrices(const std::vector<VMatrix>& ms) {
  if (ms.empty()) throw ValidationError("coproduct of an empty family");
  std::vector<FinSet> srcs, tgts;
  for (const auto& m : ms) {
    srcs.push_back(m.src());
    tgts.push_back(m.tgt());
  }
  VMatrix r(ms.front().qptr(), coproduct_set(srcs), coproduct_set(tgts));
  for (std::size_t p = 0; p < ms.size(); ++p) {
    const std::size_t so = coproduct_offset(srcs, p);
    const std::size_t to = coproduct_offset(tgts, p);
    for (std::size_t y = 0; y < ms[p].tgt().size(); ++y)
      for (std::size_t x = 0; x < ms[p].src().size(); ++x)
        r.set(to + y, so + x, ms[p](y, x));
  }
  return r;
}

/// Injection of the p-th summand's source and target into the coproduct.
inline Func coproduct_injection(const std::vector<FinSet>& parts,
                                std::size_t p) {
  const FinSet whole = coproduct_set(parts);
  const std::size_t off = coproduct_offset(parts, p);
  std::vector<std::size_t> t(parts[p].size());
  std::iota(t.begin(), t.end(), off);
  return Func(parts[p], whole, std::move(t));
}

namespace detail {

/// Union-find over indices, used for set-level coequalizers.
class Partition {
 public:
  explicit Partition(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }
  std::size_t find(std::size_t a) {
    while (parent_[a] != a) a = parent_[a] = parent_[parent_[a]];
    return a;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }
  /// Quotient map onto classes numbered by first appearance, plus the class
  /// representatives (least member index each) in that order.
  std::pair<std::vector<std::size_t>, std::vector<std::size_t>> quotient() {
    std::vector<std::size_t> cls(parent_.size()), reps;
    std::vector<std::size_t> id(parent_.size(), SIZE_MAX);
    for (std::size_t i = 0; i < parent_.size(); ++i) {
      std::size_t r = find(i);
      if (id[r] == SIZE_MAX) {
        id[r] = reps.size();
        reps.push_back(r);
      }
      cls[i] = id[r];
    }
    return {std::move(cls), std::move(reps)};
  }

 private:
  std::vector<std::size_t> parent_;
};

inline FinSet quotient_set(const FinSet& base,
                           const std::vector<std::size_t>& reps) {
  std::vector<std::string> labels;
  labels.reserve(reps.size());
  for (auto r : reps) labels.push_back(base.label(r));
  return FinSet(base.name() + "/~", std::move(labels));
}

}  // namespace detail

struct CoequalizerResult {
  VMatrix matrix;
  Cell2 projection;  // from the common codomain onto the quotient
};

/// Coequalizer of two parallel cells φ,ψ : A ⇒ B. The boundary coequalizers
/// merge indices of B's carriers; the result entry is the join of B over each
/// merged class pair, which is the entrywise colimit in a quantale.
inline CoequalizerResult coequalizer_matrices(const Cell2& phi,
                                              const Cell2& psi) {
  if (phi.dom != psi.dom || phi.cod != psi.cod)
    throw BoundaryError("coequalizer_matrices: the two cells are not parallel");
  const VMatrix& b = phi.cod;
  detail::Partition ps(b.src().size()), pt(b.tgt().size());
  for (std::size_t a = 0; a < phi.dom.src().size(); ++a)
    ps.unite(phi.f(a), psi.f(a));
  for (std::size_t a = 0; a < phi.dom.tgt().size(); ++a)
    pt.unite(phi.g(a), psi.g(a));
  auto [scls, sreps] = ps.quotient();
  auto [tcls, treps] = pt.quotient();
  const FinSet qsrc = detail::quotient_set(b.src(), sreps);
  const FinSet qtgt = detail::quotient_set(b.tgt(), treps);
  const Quantale& q = b.quantale();
  VMatrix c(b.qptr(), qsrc, qtgt);
  for (std::size_t y = 0; y < b.tgt().size(); ++y)
    for (std::size_t x = 0; x < b.src().size(); ++x)
      c.set(tcls[y], scls[x], q.join(c(tcls[y], scls[x]), b(y, x)));
  Cell2 proj = cell_check(Func(b.src(), qsrc, scls), Func(b.tgt(), qtgt, tcls),
                          b, c);
  return {std::move(c), std::move(proj)};
}

/// Colimit of a family M_i : X_i ⇸ Y inside the fixed-codomain fiber, along
/// an explicit cocone of functions q_i : X_i → X:
/// C(y,x) = ⋁_i ⋁_{q_i(x_i)=x} M_i(y, x_i).
inline VMatrix fiber_colimit(const std::vector<VMatrix>& family,
                             const FinSet& x, const std::vector<Func>& cocone) {
  if (family.empty()) throw ValidationError("fiber colimit of an empty family");
  if (family.size() != cocone.size())
    throw ValidationError("fiber colimit needs one cocone map per matrix");
  const FinSet& y = family.front().tgt();
  for (const auto& m : family)
    if (m.tgt() != y)
      throw BoundaryError("fiber_colimit: family members disagree on the "
                          "codomain");
  const Quantale& q = family.front().quantale();
  VMatrix c(family.front().qptr(), x, y);
  for (std::size_t i = 0; i < family.size(); ++i) {
    if (cocone[i].dom() != family[i].src() || cocone[i].cod() != x)
      throw BoundaryError("fiber_colimit: cocone map " + std::to_string(i) +
                          " is not typed by its matrix");
    for (std::size_t t = 0; t < y.size(); ++t)
      for (std::size_t s = 0; s < family[i].src().size(); ++s) {
        const std::size_t xi = cocone[i](s);
        c.set(t, xi, q.join(c(t, xi), family[i](t, s)));
      }
  }
  return c;
}

/// Discrete-family form: the cocone is the injections into the tagged
/// disjoint union of the sources.
inline VMatrix fiber_colimit(const std::vector<VMatrix>& family) {
  std::vector<FinSet> srcs;
  for (const auto& m : family) srcs.push_back(m.src());
  const FinSet x = coproduct_set(srcs);
  std::vector<Func> cocone;
  for (std::size_t i = 0; i < family.size(); ++i)
    cocone.push_back(coproduct_injection(srcs, i));
  return fiber_colimit(family, x, cocone);
}

}  // namespace qmat
