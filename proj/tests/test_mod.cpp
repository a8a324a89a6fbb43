#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <random>
#include <vector>

#include "oracles.hpp"
#include "qmat/cat.hpp"
#include "qmat/error.hpp"
#include "qmat/mod.hpp"
#include "qmat/vmat.hpp"

using namespace qmat;

namespace {

QPtr qbool() {
  static QPtr q = share(Quantale::boolean());
  return q;
}

QPtr qgodel3() {
  static QPtr q = share(Quantale::godel(3));
  return q;
}

QPtr qluk3() {
  static QPtr q = share(Quantale::lukasiewicz(3));
  return q;
}

/// Two objects with one top-strength arrow x1 -> x0 besides the identities.
QCategory bool_chain2() {
  const FinSet x("X", {"x0", "x1"});
  VMatrix m = identity_matrix(qbool(), x);
  m.set(0, 1, 1);
  return *verify_category(m).value;
}

QCategory discrete(QPtr q, const FinSet& x) {
  return *verify_category(identity_matrix(std::move(q), x)).value;
}

VMatrix random_matrix(QPtr q, const FinSet& src, const FinSet& tgt,
                      std::mt19937_64& rng) {
  VMatrix m(q, src, tgt);
  for (std::size_t y = 0; y < tgt.size(); ++y)
    for (std::size_t x = 0; x < src.size(); ++x)
      m.set(y, x, static_cast<Elem>(rng() % q->size()));
  return m;
}

/// Writes the entries of an n-entry boolean matrix from the bits of `code`.
VMatrix bool_matrix_from_code(const FinSet& src, const FinSet& tgt,
                              std::size_t code) {
  VMatrix m(qbool(), src, tgt);
  for (std::size_t y = 0; y < tgt.size(); ++y)
    for (std::size_t x = 0; x < src.size(); ++x) {
      m.set(y, x, code & 1u);
      code >>= 1u;
    }
  return m;
}

/// Upward closure of the matrix coordinate under the category's order:
/// whenever hom(x,x') and m(x',u) hold, m(x,u) must hold.
bool closed_under_action(const QCategory& a, const VMatrix& m) {
  for (std::size_t x = 0; x < a.objects.size(); ++x)
    for (std::size_t x2 = 0; x2 < a.objects.size(); ++x2)
      for (std::size_t u = 0; u < m.src().size(); ++u)
        if (a.hom(x, x2) != 0 && m(x2, u) != 0 && m(x, u) == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("the action inequality decides module membership", "[mod]") {
  SECTION("discrete bases accept every matrix") {
    const FinSet x("X", {"a", "b", "c"}), u("U", {"u0", "u1"});
    const QCategory a = discrete(qgodel3(), x);
    std::mt19937_64 rng(11);
    for (int i = 0; i < 25; ++i)
      CHECK(verify_module(a, random_matrix(qgodel3(), u, x, rng))
                .report.pass());
  }

  SECTION("boolean modules over a chain are the closed relations") {
    const QCategory a = bool_chain2();
    const FinSet u("U", {"u0", "u1"});
    std::size_t accepted = 0;
    for (std::size_t code = 0; code < 16; ++code) {
      const VMatrix m = bool_matrix_from_code(u, a.objects, code);
      const bool verdict = verify_module(a, m).report.pass();
      CHECK(verdict == closed_under_action(a, m));
      accepted += verdict;
    }
    // per column: bottom, {x0} and {x0,x1} survive, {x1} alone does not
    CHECK(accepted == 9);
  }

  SECTION("a half-strength entry under a full arrow is rejected") {
    const FinSet x("X", {"x0", "x1"}), u("U", {"u"});
    VMatrix hom = identity_matrix(qluk3(), x);
    hom.set(0, 1, qluk3()->index_of("1"));
    const QCategory a = *verify_category(hom).value;
    VMatrix m(qluk3(), u, x);
    m.set(1, 0, qluk3()->index_of("1/2"));
    const auto checked = verify_module(a, m);
    REQUIRE_FALSE(checked.report.pass());
    CHECK(checked.report.violations.front().law == "action");
    CHECK_FALSE(checked.value.has_value());
  }

  SECTION("mis-targeted matrices are a boundary error") {
    const FinSet u("U", {"u"});
    const VMatrix m(qbool(), u, u);
    CHECK_THROWS_AS(verify_module(bool_chain2(), m), BoundaryError);
  }
}

TEST_CASE("the coaction inequality decides comodule membership", "[mod]") {
  const FinSet z("Z", {"z1", "z2"}), v("V", {"v"});

  SECTION("boolean rows must vanish under a bottom weight") {
    for (std::size_t wcode = 0; wcode < 4; ++wcode) {
      const QCocategory c{qbool(), z, {wcode & 1u, (wcode >> 1u) & 1u}};
      REQUIRE(verify_cocategory(qbool(), z, c.weight).report.pass());
      for (std::size_t code = 0; code < 4; ++code) {
        const VMatrix k = bool_matrix_from_code(v, z, code);
        bool expect = true;
        for (std::size_t i = 0; i < 2; ++i)
          if (k(i, 0) != 0 && c.weight[i] == 0) expect = false;
        CHECK(verify_comodule(c, k).report.pass() == expect);
      }
    }
  }

  SECTION("a half weight cannot carry a half entry") {
    const QCocategory c{qluk3(), z,
                        {qluk3()->index_of("1"), qluk3()->index_of("1/2")}};
    VMatrix k(qluk3(), v, z);
    k.set(1, 0, qluk3()->index_of("1/2"));
    const auto checked = verify_comodule(c, k);
    REQUIRE_FALSE(checked.report.pass());
    CHECK(checked.report.violations.front().law == "coaction");
  }

  SECTION("mis-targeted matrices are a boundary error") {
    const QCocategory c{qbool(), z, {1, 1}};
    CHECK_THROWS_AS(verify_comodule(c, VMatrix(qbool(), z, v)), BoundaryError);
  }
}

TEST_CASE("module morphisms are functor-bounded cells", "[mod]") {
  const QCategory a = bool_chain2();
  const FinSet u("U", {"u0", "u1"});

  VMatrix mm(qbool(), u, a.objects);
  mm.set(0, 0, 1);  // column u0 = {x0}, closed upward
  const QModule m = *verify_module(a, mm).value;

  SECTION("identity boundaries always succeed") {
    CHECK(mod_morphism_check(Func::identity(a.objects), Func::identity(u), m,
                             m));
  }

  SECTION("an order-reversing object function fails") {
    const Func swap(a.objects, a.objects, {1, 0});
    CHECK_FALSE(mod_morphism_check(swap, Func::identity(u), m, m));
  }

  SECTION("the cartesian lifting maps back into the restricted module") {
    const FinSet w("W", {"w"});
    const QCategory b = discrete(qbool(), w);
    const Func g0 = Func::constant(w, a.objects, 0);
    const QModule r = restrict_scalars(g0, b, m);
    CHECK(mod_morphism_check(g0, Func::identity(u), r, m));
  }
}

TEST_CASE("free modules saturate from the left", "[mod]") {
  const FinSet u("U", {"u0", "u1"});

  SECTION("discrete bases leave the matrix unchanged") {
    const FinSet x("X", {"a", "b"});
    const QCategory a = discrete(qgodel3(), x);
    std::mt19937_64 rng(3);
    const VMatrix m = random_matrix(qgodel3(), u, x, rng);
    CHECK(free_module(a, m).mat == m);
  }

  SECTION("boolean saturation is relation composition") {
    const QCategory a = bool_chain2();
    for (std::size_t code = 0; code < 16; ++code) {
      const VMatrix m = bool_matrix_from_code(u, a.objects, code);
      const QModule f = free_module(a, m);
      for (std::size_t x = 0; x < 2; ++x)
        for (std::size_t col = 0; col < 2; ++col) {
          bool reach = false;
          for (std::size_t mid = 0; mid < 2; ++mid)
            reach = reach || (a.hom(x, mid) != 0 && m(mid, col) != 0);
          CHECK(f.mat(x, col) == static_cast<Elem>(reach));
        }
      CHECK(verify_module(a, f.mat).report.pass());
    }
  }

  SECTION("free modules satisfy the action over any base") {
    const FinSet x("X", {"a", "b", "c"});
    std::mt19937_64 rng(29);
    for (int i = 0; i < 15; ++i) {
      const QCategory a =
          star_closure(random_matrix(qgodel3(), x, x, rng)).category;
      const VMatrix m = random_matrix(qgodel3(), u, x, rng);
      CHECK(verify_module(a, free_module(a, m).mat).report.pass());
    }
  }

  SECTION("the free module is the least one above the matrix") {
    const QCategory a = bool_chain2();
    const FinSet one("U", {"u"});
    for (std::size_t code = 0; code < 4; ++code) {
      const VMatrix m = bool_matrix_from_code(one, a.objects, code);
      const QModule f = free_module(a, m);
      for (std::size_t ncode = 0; ncode < 4; ++ncode) {
        const VMatrix n = bool_matrix_from_code(one, a.objects, ncode);
        if (!verify_module(a, n).report.pass()) continue;
        bool above = true, free_below = true;
        for (std::size_t x = 0; x < 2; ++x) {
          above = above && qbool()->leq(m(x, 0), n(x, 0));
          free_below = free_below && qbool()->leq(f.mat(x, 0), n(x, 0));
        }
        if (above) CHECK(free_below);
      }
    }
  }

  SECTION("an empty source is preserved") {
    const FinSet none("U", std::vector<std::string>{});
    const QCategory a = bool_chain2();
    const QModule f = free_module(a, VMatrix(qbool(), none, a.objects));
    CHECK(f.src.size() == 0);
    CHECK(verify_module(a, f.mat).report.pass());
  }
}

TEST_CASE("cofree comodules tensor rows by their weights", "[mod]") {
  const FinSet z("Z", {"z1", "z2"}), v("V", {"v0", "v1"});

  SECTION("unit weights copy the matrix") {
    const QCocategory c{qgodel3(), z, {qgodel3()->unit(), qgodel3()->unit()}};
    std::mt19937_64 rng(5);
    const VMatrix k = random_matrix(qgodel3(), v, z, rng);
    CHECK(cofree_comodule(c, k).mat == k);
  }

  SECTION("a bottom weight zeroes its row") {
    const QCocategory c{qbool(), z, {1, 0}};
    VMatrix k(qbool(), v, z);
    k.set(0, 0, 1);
    k.set(1, 0, 1);
    k.set(1, 1, 1);
    const QComodule f = cofree_comodule(c, k);
    CHECK(f.mat(0, 0) == 1);
    CHECK(f.mat(1, 0) == 0);
    CHECK(f.mat(1, 1) == 0);
  }

  SECTION("the coaction holds for every boolean weight family") {
    std::mt19937_64 rng(17);
    for (std::size_t wcode = 0; wcode < 4; ++wcode) {
      const QCocategory c{qbool(), z, {wcode & 1u, (wcode >> 1u) & 1u}};
      for (int i = 0; i < 5; ++i) {
        const VMatrix k = random_matrix(qbool(), v, z, rng);
        CHECK(verify_comodule(c, cofree_comodule(c, k).mat).report.pass());
      }
    }
  }

  SECTION("the cofree comodule is the greatest one below the matrix") {
    const FinSet one("V", {"v"});
    for (std::size_t wcode = 0; wcode < 4; ++wcode) {
      const QCocategory c{qbool(), z, {wcode & 1u, (wcode >> 1u) & 1u}};
      for (std::size_t code = 0; code < 4; ++code) {
        const VMatrix k = bool_matrix_from_code(one, z, code);
        const QComodule f = cofree_comodule(c, k);
        for (std::size_t lcode = 0; lcode < 4; ++lcode) {
          const VMatrix l = bool_matrix_from_code(one, z, lcode);
          if (!verify_comodule(c, l).report.pass()) continue;
          bool below = true, under_cofree = true;
          for (std::size_t i = 0; i < 2; ++i) {
            below = below && qbool()->leq(l(i, 0), k(i, 0));
            under_cofree = under_cofree && qbool()->leq(l(i, 0), f.mat(i, 0));
          }
          if (below) CHECK(under_cofree);
        }
      }
    }
  }
}

TEST_CASE("restriction of scalars is the cartesian lifting", "[mod]") {
  const QCategory b = bool_chain2();
  const FinSet t("T", {"t0", "t1"});
  VMatrix nm(qbool(), t, b.objects);
  nm.set(0, 0, 1);
  nm.set(0, 1, 1);
  nm.set(1, 1, 1);
  const QModule n = *verify_module(b, nm).value;

  SECTION("the identity functor restricts to the same module") {
    CHECK(restrict_scalars(Func::identity(b.objects), b, n) == n);
  }

  SECTION("a constant functor repeats one row") {
    const FinSet w("W", {"w0", "w1", "w2"});
    const QCategory a = discrete(qbool(), w);
    const QModule r = restrict_scalars(Func::constant(w, b.objects, 0), a, n);
    for (std::size_t y = 0; y < 3; ++y)
      for (std::size_t col = 0; col < 2; ++col)
        CHECK(r.mat(y, col) == n.mat(0, col));
    CHECK(verify_module(a, r.mat).report.pass());
  }

  SECTION("non-functors are rejected") {
    const Func swap(b.objects, b.objects, {1, 0});
    CHECK_THROWS_AS(restrict_scalars(swap, b, n), ValidationError);
  }

  SECTION("successive restrictions compose") {
    const FinSet x3("X3", {"a", "b", "c"});
    VMatrix chom = identity_matrix(qbool(), x3);
    chom.set(0, 1, 1);
    chom.set(0, 2, 1);
    chom.set(1, 2, 1);
    const QCategory c = *verify_category(chom).value;
    VMatrix pm(qbool(), t, x3);
    pm.set(0, 0, 1);
    pm.set(0, 1, 1);
    const QModule p = *verify_module(c, free_module(c, pm).mat).value;

    const Func g(b.objects, x3, {0, 2});  // functor: full arrow maps to one
    const Func f(b.objects, b.objects, {0, 1});
    const QModule direct = restrict_scalars(g.after(f), b, p);
    const QModule staged = restrict_scalars(f, b, restrict_scalars(g, b, p));
    CHECK(direct == staged);
  }

  SECTION("morphisms over the functor factor through the restriction") {
    const FinSet w("W", {"w0", "w1"});
    const QCategory a = discrete(qbool(), w);
    for (std::size_t gcode = 0; gcode < 4; ++gcode) {
      const Func g0(w, b.objects, {gcode & 1u, (gcode >> 1u) & 1u});
      const QModule r = restrict_scalars(g0, a, n);
      CHECK(verify_module(a, r.mat).report.pass());
      const FinSet u("U", {"u"});
      for (std::size_t code = 0; code < 4; ++code) {
        const VMatrix pmat = bool_matrix_from_code(u, w, code);
        const QModule p = *verify_module(a, pmat).value;  // discrete base
        for (std::size_t ti = 0; ti < 2; ++ti) {
          const Func tf = Func::constant(u, t, ti);
          CHECK(mod_morphism_check(g0, tf, p, n) ==
                mod_morphism_check(Func::identity(w), tf, p, r));
        }
      }
    }
  }
}

TEST_CASE("corestriction of scalars joins fibers", "[mod]") {
  const FinSet z("Z", {"z1", "z2"}), v("V", {"v0", "v1"});
  const QCocategory c{qbool(), z, {1, 1}};
  VMatrix km(qbool(), v, z);
  km.set(0, 0, 1);
  km.set(1, 1, 1);
  const QComodule k = *verify_comodule(c, km).value;

  SECTION("the identity cofunctor corestricts to the same comodule") {
    CHECK(corestrict_scalars(Func::identity(z), c, k) == k);
  }

  SECTION("collapsing to a point unions the rows") {
    const FinSet w("W", {"w"});
    const QCocategory d{qbool(), w, {1}};
    const QComodule r = corestrict_scalars(Func::constant(z, w, 0), d, k);
    CHECK(r.mat(0, 0) == 1);
    CHECK(r.mat(0, 1) == 1);
    CHECK(verify_comodule(d, r.mat).report.pass());
  }

  SECTION("rows over empty fibers are bottom") {
    const FinSet w("W", {"w1", "w2"});
    const QCocategory d{qbool(), w, {1, 1}};
    const FinSet one("Z1", {"z"});
    const QCocategory c1{qbool(), one, {1}};
    VMatrix single(qbool(), v, one);
    single.set(0, 0, 1);
    single.set(0, 1, 1);
    const QComodule s = *verify_comodule(c1, single).value;
    const QComodule r = corestrict_scalars(Func::constant(one, w, 0), d, s);
    CHECK(r.mat(0, 0) == 1);
    CHECK(r.mat(0, 1) == 1);
    CHECK(r.mat(1, 0) == 0);
    CHECK(r.mat(1, 1) == 0);
  }

  SECTION("non-cofunctors are rejected") {
    const FinSet one("Z1", {"z"});
    const QCocategory c1{qluk3(), one, {qluk3()->index_of("1")}};
    const QCocategory d{qluk3(), one, {qluk3()->index_of("0")}};
    VMatrix empty(qluk3(), v, one);
    const QComodule s = *verify_comodule(c1, empty).value;
    CHECK_THROWS_AS(corestrict_scalars(Func::identity(one), d, s),
                    ValidationError);
  }

  SECTION("morphisms out of the corestriction classify morphisms over it") {
    const FinSet w("W", {"w"});
    const QCocategory d{qbool(), w, {1}};
    const Func f0 = Func::constant(z, w, 0);
    const QComodule r = corestrict_scalars(f0, d, k);
    const FinSet s("S", {"s0", "s1"});
    for (std::size_t code = 0; code < 4; ++code) {
      const VMatrix lm = bool_matrix_from_code(s, w, code);
      const QComodule l = *verify_comodule(d, lm).value;
      for (std::size_t t0 = 0; t0 < 2; ++t0)
        for (std::size_t t1 = 0; t1 < 2; ++t1) {
          const Func tf(v, s, {t0, t1});
          CHECK(comod_morphism_check(f0, tf, k, l) ==
                comod_morphism_check(Func::identity(w), tf, r, l));
        }
    }
  }
}

TEST_CASE("source reindexing pulls columns back", "[mod]") {
  const QCategory a = bool_chain2();
  const FinSet u("U", {"u0", "u1", "u2"});
  std::mt19937_64 rng(41);
  VMatrix nm(qbool(), u, a.objects);
  nm.set(0, 0, 1);
  nm.set(0, 2, 1);
  nm.set(1, 2, 1);
  const QModule n = *verify_module(a, nm).value;

  SECTION("identity reindexing is the identity") {
    CHECK(source_reindex(Func::identity(u), n) == n);
  }

  SECTION("a constant reindexing repeats a column") {
    const FinSet w("W", {"w0", "w1"});
    const QModule r = source_reindex(Func::constant(w, u, 2), n);
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t col = 0; col < 2; ++col)
        CHECK(r.mat(x, col) == n.mat(x, 2));
    CHECK(verify_module(a, r.mat).report.pass());
  }

  SECTION("an empty reindexing clears the source") {
    const FinSet none("W", std::vector<std::string>{});
    const QModule r = source_reindex(Func(none, u, {}), n);
    CHECK(r.src.size() == 0);
    CHECK(r.over == a);
  }

  SECTION("reindexings compose contravariantly") {
    const FinSet w("W", {"w0", "w1"}), s("S", {"s"});
    const Func f(w, u, {2, 0}), g(s, w, {1});
    CHECK(source_reindex(f.after(g), n) ==
          source_reindex(g, source_reindex(f, n)));
  }

  SECTION("a mis-targeted function is a boundary error") {
    const FinSet w("W", {"w"});
    CHECK_THROWS_AS(source_reindex(Func::identity(w), n), BoundaryError);
  }
}

TEST_CASE("tensor products of modules live over tensored bases", "[mod]") {
  const QCategory a = bool_chain2();
  const FinSet u("U", {"u0", "u1"});
  VMatrix mm(qbool(), u, a.objects);
  mm.set(0, 0, 1);
  mm.set(0, 1, 1);
  mm.set(1, 1, 1);
  const QModule m = *verify_module(a, mm).value;

  SECTION("tensoring with the unit module relabels") {
    const QModule one = unit_module(qbool());
    const QModule p = tensor_modcomod(m, one);
    REQUIRE(p.over.objects.size() == 2);
    REQUIRE(p.src.size() == 2);
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t col = 0; col < 2; ++col)
        CHECK(p.mat(x, col) == m.mat(x, col));
    CHECK(p.over.objects.label(0) == "(x0,*)");
  }

  SECTION("boolean tensor entries are conjunctions and stay modules") {
    const QModule p = tensor_modcomod(m, m);
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y)
        for (std::size_t cu = 0; cu < 2; ++cu)
          for (std::size_t cv = 0; cv < 2; ++cv)
            CHECK(p.mat(x * 2 + y, cu * 2 + cv) ==
                  (m.mat(x, cu) & m.mat(y, cv)));
    CHECK(verify_module(p.over, p.mat).report.pass());
  }

  SECTION("comodule tensors multiply the weights and stay comodules") {
    const FinSet z("Z", {"z1", "z2"});
    const QCocategory c{qbool(), z, {1, 0}};
    VMatrix km(qbool(), u, z);
    km.set(0, 0, 1);
    const QComodule k = *verify_comodule(c, km).value;
    const QComodule p = tensor_modcomod(k, k);
    CHECK(p.over.weight == std::vector<Elem>{1, 0, 0, 0});
    CHECK(p.mat(0, 0) == 1);
    CHECK(verify_comodule(p.over, p.mat).report.pass());

    const QComodule unit = unit_comodule(qbool());
    const QComodule relabeled = tensor_modcomod(k, unit);
    for (std::size_t z2 = 0; z2 < 2; ++z2)
      for (std::size_t col = 0; col < 2; ++col)
        CHECK(relabeled.mat(z2, col) == k.mat(z2, col));
  }

  SECTION("the single-column tensor requires singleton sources") {
    CHECK_THROWS_AS(unit_domain_tensor(m, m), ValidationError);
    const FinSet one("U1", {"u"});
    VMatrix cm(qgodel3(), one, bool_chain2().objects);
    const QCategory g = discrete(qgodel3(), FinSet("X", {"x0", "x1"}));
    VMatrix gm(qgodel3(), one, g.objects);
    gm.set(0, 0, qgodel3()->index_of("1/2"));
    gm.set(1, 0, qgodel3()->index_of("1"));
    const QModule s = *verify_module(g, gm).value;
    const QModule p = unit_domain_tensor(s, s);
    REQUIRE(p.src.size() == 1);
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t y = 0; y < 2; ++y)
        CHECK(p.mat(x * 2 + y, 0) ==
              qgodel3()->tensor(s.mat(x, 0), s.mat(y, 0)));
  }

  SECTION("the fixed-domain tensor is the diagonal reindexing") {
    const QModule p = fixed_domain_tensor(m, m);
    const QModule full = tensor_modcomod(m, m);
    std::vector<std::size_t> diag(u.size());
    for (std::size_t i = 0; i < u.size(); ++i) diag[i] = i * u.size() + i;
    const QModule re = source_reindex(Func(u, full.src, diag), full);
    CHECK(p == re);
    CHECK(verify_module(p.over, p.mat).report.pass());
  }

  SECTION("mismatched sources are rejected by the fixed-domain tensor") {
    const FinSet w("W", {"w"});
    VMatrix other(qbool(), w, a.objects);
    const QModule s = *verify_module(a, other).value;
    CHECK_THROWS_AS(fixed_domain_tensor(m, s), ValidationError);
  }

  SECTION("the fixed-domain unit acts as a unit on entries") {
    const QModule j = fixed_domain_unit(qbool(), u);
    for (std::size_t i = 0; i < u.size(); ++i)
      CHECK(j.mat(0, i) == qbool()->unit());
    const QModule p = fixed_domain_tensor(m, j);
    for (std::size_t x = 0; x < 2; ++x)
      for (std::size_t col = 0; col < 2; ++col)
        CHECK(p.mat(x, col) == m.mat(x, col));
  }
}

TEST_CASE("free modules classify cells out of their matrices", "[mod]") {
  const QCategory a = bool_chain2();
  const Func idx = Func::identity(a.objects);

  const auto check_pairing = [&](const FinSet& u, const FinSet& t) {
    const std::size_t mcount = std::size_t{1} << (2 * u.size());
    const std::size_t ncount = std::size_t{1} << (2 * t.size());
    std::size_t agreements = 0;
    for (std::size_t mcode = 0; mcode < mcount; ++mcode) {
      const VMatrix m = bool_matrix_from_code(u, a.objects, mcode);
      const QModule f = free_module(a, m);
      for (std::size_t ncode = 0; ncode < ncount; ++ncode) {
        const VMatrix nm = bool_matrix_from_code(t, a.objects, ncode);
        const auto checked = verify_module(a, nm);
        if (!checked.report.pass()) continue;
        const QModule n = *checked.value;
        std::vector<std::size_t> table(u.size(), 0);
        while (true) {
          const Func tf(u, t, table);
          const bool as_module = mod_morphism_check(idx, tf, f, n);
          const bool as_cell = cell_check(tf, idx, m, nm).verdict;
          CHECK(as_module == as_cell);
          agreements += (as_module == as_cell);
          std::size_t i = 0;
          while (i < table.size() && ++table[i] == t.size()) table[i++] = 0;
          if (i == table.size()) break;
        }
      }
    }
    return agreements;
  };

  CHECK(check_pairing(FinSet("U", {"u"}), FinSet("T", {"t0", "t1"})) == 72);
  CHECK(check_pairing(FinSet("U", {"u0", "u1"}), FinSet("T", {"t"})) == 48);
  CHECK(check_pairing(FinSet("U", {"u0", "u1"}), FinSet("T", {"t0", "t1"})) ==
        576);
}
