#pragma once

/**
 * Finite commutative unital quantales.
 *
 * A quantale is given by tables only: a finite carrier of opaque labels, a
 * binary join with a least element, and a commutative, associative, unital
 * tensor that distributes over all joins (including the empty join, so
 * a ⊗ ⊥ = ⊥). The order is never input separately; it is derived as
 * a ≤ b iff a ∨ b = b, and every finite join-semilattice with bottom is a
 * complete lattice, so meets exist as joins of lower bounds.
 *
 * Residuation is derived too: [a,b] = ⋁{ c : c ⊗ a ≤ b } is the largest c
 * with c ⊗ a ≤ b and satisfies the adjunction c ≤ [a,b] iff c ⊗ a ≤ b,
 * from which the currying law [a,[b,c]] = [a⊗b,c] follows.
 *
 * Built-in families:
 *   - boolean:          {0,1}, ⊗ = ∧, unit 1;
 *   - godel(n):         the n-chain with ⊗ = min, unit the top;
 *   - lukasiewicz(n):   the chain {0, 1/(n-1), ..., 1} with
 *                       a ⊗ b = max(0, a+b-1), unit 1.
 * Chain labels are exact rationals k/(n-1) in lowest terms; no floating
 * point is used anywhere. Carriers are capped at 64 elements so the O(n^3)
 * law check stays well under a second.
 */

#include <algorithm>
#include <cstddef>
#include <memory>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "qmat/error.hpp"
#include "qmat/report.hpp"

namespace qmat {

/// Index of an element within its quantale's carrier.
using Elem = std::size_t;

inline constexpr std::size_t kMaxQuantaleSize = 64;

enum class QuantaleFamily { boolean, godel, lukasiewicz, table };

inline std::string rational_label(std::size_t k, std::size_t d) {
  if (k == 0) return "0";
  if (k == d) return "1";
  const std::size_t g = std::gcd(k, d);
  return std::to_string(k / g) + "/" + std::to_string(d / g);
}

class Quantale {
 public:
  /// Builds from explicit n*n tables (row-major) and checks every law;
  /// throws ValidationError with the full report if any law fails.
  static Quantale from_tables(std::string name,
                              std::vector<std::string> labels,
                              std::vector<Elem> join_table, Elem bottom,
                              std::vector<Elem> tensor_table, Elem unit) {
    Quantale q(std::move(name), std::move(labels), std::move(join_table),
               bottom, std::move(tensor_table), unit);
    LawReport r = q.verify();
    if (!r.pass())
      throw ValidationError("quantale '" + q.name_ + "' rejected: " +
                            r.to_string());
    return q;
  }

  /// Builds without checking the laws. Intended for diagnostics, such as
  /// demonstrating that the law suites catch a broken base.
  static Quantale from_tables_unchecked(std::string name,
                                        std::vector<std::string> labels,
                                        std::vector<Elem> join_table,
                                        Elem bottom,
                                        std::vector<Elem> tensor_table,
                                        Elem unit) {
    return Quantale(std::move(name), std::move(labels), std::move(join_table),
                    bottom, std::move(tensor_table), unit);
  }

  static Quantale boolean() {
    Quantale q = chain(2, "bool", [](std::size_t a, std::size_t b) {
      return std::min(a, b);
    });
    q.family_ = QuantaleFamily::boolean;
    return q;
  }

  static Quantale godel(std::size_t n) {
    Quantale q = chain(n, "godel" + std::to_string(n),
                       [](std::size_t a, std::size_t b) {
                         return std::min(a, b);
                       });
    q.family_ = QuantaleFamily::godel;
    return q;
  }

  static Quantale lukasiewicz(std::size_t n) {
    Quantale q = chain(n, "lukasiewicz" + std::to_string(n),
                       [n](std::size_t a, std::size_t b) {
                         const std::size_t s = a + b;
                         return s <= n - 1 ? 0 : s - (n - 1);
                       });
    q.family_ = QuantaleFamily::lukasiewicz;
    return q;
  }

  const std::string& name() const { return name_; }
  QuantaleFamily family() const { return family_; }
  std::size_t chain_length() const { return n_; }
  std::size_t size() const { return n_; }

  const std::string& label(Elem a) const { return labels_.at(a); }
  const std::vector<std::string>& labels() const { return labels_; }

  Elem index_of(const std::string& label) const {
    for (Elem i = 0; i < n_; ++i)
      if (labels_[i] == label) return i;
    throw ValidationError("unknown quantale element '" + label + "'");
  }

  Elem bottom() const { return bottom_; }
  Elem unit() const { return unit_; }
  Elem top() const { return top_; }

  Elem join(Elem a, Elem b) const { return join_[a * n_ + b]; }
  Elem tensor(Elem a, Elem b) const { return tensor_[a * n_ + b]; }
  Elem meet(Elem a, Elem b) const { return meet_[a * n_ + b]; }

  /// Largest c with c ⊗ a ≤ b.
  Elem residuate(Elem a, Elem b) const { return resid_[a * n_ + b]; }

  bool leq(Elem a, Elem b) const { return join(a, b) == b; }

  template <typename It>
  Elem join_all(It first, It last) const {
    Elem r = bottom_;
    for (; first != last; ++first) r = join(r, *first);
    return r;
  }

  template <typename It>
  Elem meet_all(It first, It last) const {
    Elem r = top_;
    for (; first != last; ++first) r = meet(r, *first);
    return r;
  }

  /// Number of elements on the longest chain of the derived order.
  std::size_t height() const { return height_; }

  /// Checks every axiom and reports each violated law with one witness.
  LawReport verify() const {
    LawReport rep;
    auto record = [&rep](const std::string& law, const std::string& witness) {
      for (const auto& v : rep.violations)
        if (v.law == law) return;
      rep.violations.push_back({law, witness});
    };
    for (Elem a = 0; a < n_; ++a) {
      if (join(a, a) != a)
        record("join-idempotence", binop_witness("v", a, a, join(a, a), a));
      if (join(bottom_, a) != a)
        record("join-bottom", binop_witness("v", bottom_, a,
                                            join(bottom_, a), a));
      if (tensor(unit_, a) != a)
        record("tensor-unit", binop_witness("(x)", unit_, a,
                                            tensor(unit_, a), a));
      if (tensor(a, bottom_) != bottom_)
        record("empty-join distributivity",
               binop_witness("(x)", a, bottom_, tensor(a, bottom_), bottom_));
      for (Elem b = 0; b < n_; ++b) {
        if (join(a, b) != join(b, a))
          record("join-commutativity",
                 pair_witness("v", a, b, join(a, b), join(b, a)));
        if (tensor(a, b) != tensor(b, a))
          record("tensor-commutativity",
                 pair_witness("(x)", a, b, tensor(a, b), tensor(b, a)));
        for (Elem c = 0; c < n_; ++c) {
          if (join(join(a, b), c) != join(a, join(b, c)))
            record("join-associativity", triple_witness("v", a, b, c));
          if (tensor(tensor(a, b), c) != tensor(a, tensor(b, c)))
            record("tensor-associativity", triple_witness("(x)", a, b, c));
          if (tensor(a, join(b, c)) != join(tensor(a, b), tensor(a, c)))
            record("join-distributivity",
                   label(a) + " (x) (" + label(b) + " v " + label(c) +
                       ") != (" + label(a) + " (x) " + label(b) + ") v (" +
                       label(a) + " (x) " + label(c) + ")");
        }
      }
    }
    return rep;
  }

 private:
  Quantale(std::string name, std::vector<std::string> labels,
           std::vector<Elem> join_table, Elem bottom,
           std::vector<Elem> tensor_table, Elem unit)
      : name_(std::move(name)),
        labels_(std::move(labels)),
        n_(labels_.size()),
        join_(std::move(join_table)),
        tensor_(std::move(tensor_table)),
        bottom_(bottom),
        unit_(unit) {
    if (n_ == 0) throw ValidationError("quantale carrier is empty");
    if (n_ > kMaxQuantaleSize)
      throw ValidationError("quantale carrier exceeds the cap of " +
                            std::to_string(kMaxQuantaleSize) + " elements");
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i + 1; j < n_; ++j)
        if (labels_[i] == labels_[j])
          throw ValidationError("duplicate quantale element label '" +
                                labels_[i] + "'");
    if (join_.size() != n_ * n_ || tensor_.size() != n_ * n_)
      throw ValidationError("quantale tables must be total over the carrier");
    for (Elem v : join_)
      if (v >= n_) throw ValidationError("join table entry out of range");
    for (Elem v : tensor_)
      if (v >= n_) throw ValidationError("tensor table entry out of range");
    if (bottom_ >= n_ || unit_ >= n_)
      throw ValidationError("bottom or unit element out of range");
    derive();
  }

  template <typename TensorFn>
  static Quantale chain(std::size_t n, std::string name, TensorFn tensor_fn) {
    if (n < 2) throw ValidationError("chain quantales need at least 2 elements");
    if (n > kMaxQuantaleSize)
      throw ValidationError("chain quantales are capped at " +
                            std::to_string(kMaxQuantaleSize) + " elements");
    std::vector<std::string> labels(n);
    for (std::size_t k = 0; k < n; ++k) labels[k] = rational_label(k, n - 1);
    std::vector<Elem> join(n * n), tensor(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) {
        join[a * n + b] = std::max(a, b);
        tensor[a * n + b] = tensor_fn(a, b);
      }
    return Quantale(std::move(name), std::move(labels), std::move(join), 0,
                    std::move(tensor), n - 1);
  }

  void derive() {
    top_ = bottom_;
    for (Elem a = 0; a < n_; ++a) top_ = join(top_, a);
    meet_.assign(n_ * n_, bottom_);
    resid_.assign(n_ * n_, bottom_);
    for (Elem a = 0; a < n_; ++a)
      for (Elem b = 0; b < n_; ++b) {
        Elem m = bottom_, r = bottom_;
        for (Elem c = 0; c < n_; ++c) {
          if (leq(c, a) && leq(c, b)) m = join(m, c);
          if (leq(tensor(c, a), b)) r = join(r, c);
        }
        meet_[a * n_ + b] = m;
        resid_[a * n_ + b] = r;
      }
    std::vector<std::size_t> h(n_, 1);
    for (std::size_t pass = 0; pass < n_; ++pass)
      for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b)
          if (b != a && leq(b, a)) h[a] = std::max(h[a], h[b] + 1);
    height_ = *std::max_element(h.begin(), h.end());
  }

  std::string binop_witness(const std::string& op, Elem a, Elem b, Elem got,
                            Elem want) const {
    return label(a) + " " + op + " " + label(b) + " = " + label(got) +
           ", expected " + label(want);
  }
  std::string pair_witness(const std::string& op, Elem a, Elem b, Elem ab,
                           Elem ba) const {
    return label(a) + " " + op + " " + label(b) + " = " + label(ab) +
           " but " + label(b) + " " + op + " " + label(a) + " = " + label(ba);
  }
  std::string triple_witness(const std::string& op, Elem a, Elem b,
                             Elem c) const {
    return "a=" + label(a) + ", b=" + label(b) + ", c=" + label(c) +
           " under " + op;
  }

  std::string name_;
  std::vector<std::string> labels_;
  std::size_t n_ = 0;
  std::vector<Elem> join_, tensor_, meet_, resid_;
  Elem bottom_ = 0, unit_ = 0, top_ = 0;
  std::size_t height_ = 1;
  QuantaleFamily family_ = QuantaleFamily::table;
};

using QPtr = std::shared_ptr<const Quantale>;

inline QPtr share(Quantale q) {
  return std::make_shared<const Quantale>(std::move(q));
}

inline LawReport verify_quantale(const Quantale& q) { return q.verify(); }

/// Label-level residuation, for callers that hold element names.
inline std::string residuate(const Quantale& q, const std::string& a,
                             const std::string& b) {
  return q.label(q.residuate(q.index_of(a), q.index_of(b)));
}

/// Greatest fixpoint of a monotone, deflationary-from-top step function,
/// computed by descending Kleene iteration. Returns the fixpoint and the
/// number of strictly changing steps; finiteness bounds the steps by the
/// chain height, and a failure to stabilize within |Q| steps is a bug.
template <typename StepFn>
std::pair<Elem, std::size_t> gfp_from_top(const Quantale& q, StepFn step) {
  Elem cur = q.top();
  std::size_t changes = 0;
  for (;;) {
    Elem next = step(cur);
    if (next == cur) return {cur, changes};
    cur = next;
    if (++changes > q.size())
      throw InternalError("greatest fixpoint failed to stabilize");
  }
}

}  // namespace qmat
