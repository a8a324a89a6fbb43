#pragma once

/**
 * Exhaustive enumerators for small structures.
 *
 * Everything is generated in lexicographic odometer order over entry tuples
 * (last coordinate fastest), so runs are deterministic and failure reports
 * are reproducible. Enumerators charge one unit per raw candidate against an
 * explicit budget before filtering, which keeps worst-case work bounded and
 * turns oversized requests into a clear error instead of a hang.
 */

#include <cctype>
#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "qmat/cat.hpp"
#include "qmat/error.hpp"
#include "qmat/finset.hpp"
#include "qmat/mod.hpp"
#include "qmat/quantale.hpp"
#include "qmat/vmat.hpp"

namespace qmat {

inline constexpr std::uint64_t kDefaultEnumBudget = 50'000'000;

struct EnumBudget {
  std::uint64_t limit = kDefaultEnumBudget;
  std::uint64_t used = 0;

  void charge(std::uint64_t n = 1) {
    used += n;
    if (used > limit)
      throw CapError("enumeration budget exceeded; lower the carrier bounds");
  }
};

/// Carrier {p0, p1, ...} with a size-tagged name, for generated structures.
inline FinSet default_carrier(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i)
    labels.push_back(prefix + std::to_string(i));
  std::string name = prefix + std::to_string(n);
  if (!name.empty()) name[0] = static_cast<char>(std::toupper(name[0]));
  return FinSet(name, std::move(labels));
}

namespace detail {

/// Advances a base-`radix` odometer; returns false after the last tuple.
inline bool next_tuple(std::vector<Elem>& digits, std::size_t radix) {
  for (std::size_t pos = digits.size(); pos-- > 0;) {
    if (++digits[pos] < radix) return true;
    digits[pos] = 0;
  }
  return false;
}

}  // namespace detail

/// All matrices src ⇸ tgt with entries in the quantale.
template <typename Fn>
void enumerate_matrices(const QPtr& q, const FinSet& src, const FinSet& tgt,
                        EnumBudget& budget, Fn&& fn) {
  std::vector<Elem> entries(src.size() * tgt.size(), 0);
  do {
    budget.charge();
    fn(VMatrix(q, src, tgt, entries));
  } while (detail::next_tuple(entries, q->size()));
}

/// All categories on x: endo-matrices filtered by the category laws.
template <typename Fn>
void enumerate_categories(const QPtr& q, const FinSet& x, EnumBudget& budget,
                          Fn&& fn) {
  enumerate_matrices(q, x, x, budget, [&](const VMatrix& m) {
    Checked<QCategory> c = verify_category(m);
    if (c.ok()) fn(*c.value);
  });
}

/// All cocategories on z: weight vectors filtered by the cocategory laws.
template <typename Fn>
void enumerate_cocategories(const QPtr& q, const FinSet& z, EnumBudget& budget,
                            Fn&& fn) {
  std::vector<Elem> weight(z.size(), 0);
  do {
    budget.charge();
    Checked<QCocategory> c = verify_cocategory(q, z, weight);
    if (c.ok()) fn(*c.value);
  } while (detail::next_tuple(weight, q->size()));
}

/// All modules over a with source u.
template <typename Fn>
void enumerate_modules(const QCategory& a, const FinSet& u, EnumBudget& budget,
                       Fn&& fn) {
  enumerate_matrices(a.qptr(), u, a.objects, budget, [&](const VMatrix& m) {
    Checked<QModule> mod = verify_module(a, m);
    if (mod.ok()) fn(*mod.value);
  });
}

/// All comodules over c with source v.
template <typename Fn>
void enumerate_comodules(const QCocategory& c, const FinSet& v,
                         EnumBudget& budget, Fn&& fn) {
  enumerate_matrices(c.q, v, c.objects, budget, [&](const VMatrix& m) {
    Checked<QComodule> com = verify_comodule(c, m);
    if (com.ok()) fn(*com.value);
  });
}

/// All functions dom → cod.
template <typename Fn>
void enumerate_functions(const FinSet& dom, const FinSet& cod,
                         EnumBudget& budget, Fn&& fn) {
  if (cod.size() == 0 && dom.size() > 0) return;
  std::vector<std::size_t> images(dom.size(), 0);
  do {
    budget.charge();
    fn(Func(dom, cod, images));
  } while (detail::next_tuple(images, cod.size()));
}

}  // namespace qmat
