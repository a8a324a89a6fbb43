#pragma once

/**
 * Finite carriers and the canonical label schemes.
 *
 * Generated carriers follow fixed naming rules so every computed structure is
 * byte-deterministic:
 *   - products:      element "(a,b)", set name "(X*Y)", first factor varies
 *                    slowest;
 *   - coproducts:    elements "inl:a" / "inr:a" for two summands, "in<i>:a"
 *                    otherwise, set name "(X+Y)";
 *   - function sets: elements "{a↦fa,b↦fb}" with keys sorted
 *                    lexicographically, set name "(Y^X)" for functions X → Y,
 *                    enumerated with the image of the first domain element as
 *                    the most significant digit.
 *
 * Set equality compares element label sequences only; the set name is
 * metadata for display and grammar references.
 */

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "qmat/error.hpp"

namespace qmat {

class FinSet {
 public:
  FinSet() = default;

  FinSet(std::string name, std::vector<std::string> elements)
      : name_(std::move(name)), elems_(std::move(elements)) {
    for (std::size_t i = 0; i < elems_.size(); ++i) {
      if (elems_[i] == "default")
        throw ValidationError("element label 'default' is reserved");
      auto [it, fresh] = index_.emplace(elems_[i], i);
      if (!fresh)
        throw ValidationError("duplicate element label '" + elems_[i] +
                              "' in set " + name_);
    }
  }

  const std::string& name() const { return name_; }
  std::size_t size() const { return elems_.size(); }
  const std::string& label(std::size_t i) const { return elems_.at(i); }
  const std::vector<std::string>& labels() const { return elems_; }

  bool contains(const std::string& label) const {
    return index_.count(label) != 0;
  }

  std::size_t index_of(const std::string& label) const {
    auto it = index_.find(label);
    if (it == index_.end())
      throw ValidationError("unknown element '" + label + "' in set " + name_);
    return it->second;
  }

  friend bool operator==(const FinSet& a, const FinSet& b) {
    return a.elems_ == b.elems_;
  }
  friend bool operator!=(const FinSet& a, const FinSet& b) { return !(a == b); }

 private:
  std::string name_;
  std::vector<std::string> elems_;
  std::unordered_map<std::string, std::size_t> index_;
};

/// Total function between finite sets, stored as an index table.
class Func {
 public:
  Func() = default;

  Func(FinSet dom, FinSet cod, std::vector<std::size_t> table)
      : dom_(std::move(dom)), cod_(std::move(cod)), table_(std::move(table)) {
    if (table_.size() != dom_.size())
      throw ValidationError("function table size does not match its domain");
    for (auto v : table_)
      if (v >= cod_.size())
        throw ValidationError("function value out of codomain range");
  }

  static Func identity(const FinSet& x) {
    std::vector<std::size_t> t(x.size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = i;
    return Func(x, x, std::move(t));
  }

  static Func constant(const FinSet& dom, const FinSet& cod,
                       std::size_t value) {
    if (value >= cod.size())
      throw ValidationError("constant function value out of range");
    return Func(dom, cod, std::vector<std::size_t>(dom.size(), value));
  }

  /// Builds from a label assignment; every domain element must be mapped.
  static Func from_labels(const FinSet& dom, const FinSet& cod,
                          const std::map<std::string, std::string>& assign) {
    std::vector<std::size_t> t(dom.size(), cod.size());
    for (const auto& [k, v] : assign) t[dom.index_of(k)] = cod.index_of(v);
    for (std::size_t i = 0; i < t.size(); ++i)
      if (t[i] == cod.size())
        throw ValidationError("function is not total: '" + dom.label(i) +
                              "' has no image");
    return Func(dom, cod, std::move(t));
  }

  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  std::size_t operator()(std::size_t i) const { return table_.at(i); }
  const std::vector<std::size_t>& table() const { return table_; }

  /// Canonical printable form, matching the labels of materialized
  /// function carriers.
  std::string describe() const {
    std::vector<std::pair<std::string, std::string>> rows;
    rows.reserve(dom_.size());
    for (std::size_t i = 0; i < dom_.size(); ++i)
      rows.emplace_back(dom_.label(i), cod_.label(table_[i]));
    std::sort(rows.begin(), rows.end());
    std::string s = "{";
    for (std::size_t i = 0; i < rows.size(); ++i)
      s += (i ? "," : "") + rows[i].first + "↦" + rows[i].second;
    return s + "}";
  }

  /// Composite this ∘ inner.
  Func after(const Func& inner) const {
    if (inner.cod() != dom_)
      throw BoundaryError("function composition boundary mismatch");
    std::vector<std::size_t> t(inner.dom().size());
    for (std::size_t i = 0; i < t.size(); ++i) t[i] = table_[inner(i)];
    return Func(inner.dom(), cod_, std::move(t));
  }

  friend bool operator==(const Func& a, const Func& b) {
    return a.dom_ == b.dom_ && a.cod_ == b.cod_ && a.table_ == b.table_;
  }

 private:
  FinSet dom_, cod_;
  std::vector<std::size_t> table_;
};

inline FinSet product_set(const FinSet& a, const FinSet& b) {
  std::vector<std::string> labels;
  labels.reserve(a.size() * b.size());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      labels.push_back("(" + a.label(i) + "," + b.label(j) + ")");
  return FinSet("(" + a.name() + "*" + b.name() + ")", std::move(labels));
}

/// Index of (i,j) in product_set(a, b); the first factor varies slowest.
inline std::size_t pair_index(const FinSet& /*a*/, const FinSet& b,
                              std::size_t i, std::size_t j) {
  return i * b.size() + j;
}

inline std::string coproduct_tag(std::size_t part, std::size_t arity) {
  if (arity == 2) return part == 0 ? "inl:" : "inr:";
  return "in" + std::to_string(part) + ":";
}

inline FinSet coproduct_set(const std::vector<FinSet>& parts) {
  std::vector<std::string> labels;
  std::string name = "(";
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const std::string tag = coproduct_tag(p, parts.size());
    for (const auto& l : parts[p].labels()) labels.push_back(tag + l);
    name += (p ? "+" : "") + parts[p].name();
  }
  name += ")";
  return FinSet(std::move(name), std::move(labels));
}

/// Starting index of summand `part` inside coproduct_set(parts).
inline std::size_t coproduct_offset(const std::vector<FinSet>& parts,
                                    std::size_t part) {
  std::size_t off = 0;
  for (std::size_t p = 0; p < part; ++p) off += parts[p].size();
  return off;
}

/// Default cap on materialized hom carriers: |W^Y| * |Z^X| entry count.
inline constexpr std::size_t kDefaultHomCap = 1'000'000;

/// Number of functions dom → cod, or nullopt when it exceeds `cap`.
inline std::optional<std::size_t> checked_pow(std::size_t base,
                                              std::size_t exp,
                                              std::size_t cap) {
  std::size_t r = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && r > cap / base) return std::nullopt;
    r *= base;
    if (r > cap) return std::nullopt;
  }
  return r;
}

/// The set of all functions dom → cod, materialized with canonical labels.
class FuncSet {
 public:
  FuncSet(FinSet dom, FinSet cod, std::size_t cap = kDefaultHomCap)
      : dom_(std::move(dom)), cod_(std::move(cod)) {
    auto count = checked_pow(cod_.size(), dom_.size(), cap);
    if (!count)
      throw CapError("function set (" + cod_.name() + "^" + dom_.name() +
                     ") exceeds the carrier cap of " + std::to_string(cap));
    size_ = *count;
    if (cod_.size() == 0 && dom_.size() > 0) size_ = 0;
    std::vector<std::string> labels;
    labels.reserve(size_);
    std::vector<std::size_t> images(dom_.size(), 0);
    for (std::size_t f = 0; f < size_; ++f) {
      labels.push_back(label_of(images));
      for (std::size_t pos = dom_.size(); pos-- > 0;) {
        if (++images[pos] < cod_.size()) break;
        images[pos] = 0;
      }
    }
    carrier_ = FinSet("(" + cod_.name() + "^" + dom_.name() + ")",
                      std::move(labels));
  }

  const FinSet& carrier() const { return carrier_; }
  const FinSet& dom() const { return dom_; }
  const FinSet& cod() const { return cod_; }
  std::size_t size() const { return size_; }

  /// Image of domain index x under function number f.
  std::size_t apply(std::size_t f, std::size_t x) const {
    std::size_t div = 1;
    for (std::size_t pos = dom_.size(); pos-- > x + 1;) div *= cod_.size();
    return (f / div) % cod_.size();
  }

  std::size_t encode(const std::vector<std::size_t>& images) const {
    if (images.size() != dom_.size())
      throw ValidationError("function image vector has the wrong length");
    std::size_t f = 0;
    for (auto v : images) {
      if (v >= cod_.size())
        throw ValidationError("function image out of codomain range");
      f = f * cod_.size() + v;
    }
    return f;
  }

  std::vector<std::size_t> decode(std::size_t f) const {
    std::vector<std::size_t> images(dom_.size());
    for (std::size_t pos = dom_.size(); pos-- > 0;) {
      images[pos] = f % cod_.size();
      f /= cod_.size();
    }
    return images;
  }

  Func as_func(std::size_t f) const { return Func(dom_, cod_, decode(f)); }

 private:
  std::string label_of(const std::vector<std::size_t>& images) const {
    std::vector<std::pair<std::string, std::string>> rows;
    rows.reserve(dom_.size());
    for (std::size_t i = 0; i < dom_.size(); ++i)
      rows.emplace_back(dom_.label(i), cod_.label(images[i]));
    std::sort(rows.begin(), rows.end());
    std::string s = "{";
    for (std::size_t i = 0; i < rows.size(); ++i)
      s += (i ? "," : "") + rows[i].first + "↦" + rows[i].second;
    return s + "}";
  }

  FinSet dom_, cod_, carrier_;
  std::size_t size_ = 0;
};

}  // namespace qmat
