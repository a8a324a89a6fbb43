#include <catch2/catch_amalgamated.hpp>

#include <cstddef>
#include <string>
#include <vector>

#include "qmat/enumerate.hpp"
#include "qmat/error.hpp"
#include "qmat/lawcheck.hpp"

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

QCategory bool_chain2() {
  const FinSet x("X", {"x0", "x1"});
  VMatrix m = identity_matrix(qbool(), x);
  m.set(0, 1, 1);
  return *verify_category(m).value;
}

/// Chain order with a tensor that is unital and commutative but not
/// monotone, so join-distributivity fails and composition associativity
/// breaks downstream.
QPtr broken_quantale() {
  static QPtr q = share(Quantale::from_tables_unchecked(
      "broken", {"0", "1", "2"},
      {0, 1, 2, 1, 1, 2, 2, 2, 2}, 0,
      {0, 0, 0, 0, 2, 1, 0, 1, 2}, 2));
  return q;
}

}  // namespace

TEST_CASE("suite names round-trip", "[lawcheck]") {
  CHECK(suite_names().size() == 8);
  for (const auto& [suite, name] : suite_names()) {
    CHECK(suite_name(suite) == name);
    REQUIRE(suite_from_name(name).has_value());
    CHECK(*suite_from_name(name) == suite);
  }
  CHECK_FALSE(suite_from_name("no_such_suite").has_value());
  CHECK_FALSE(suite_from_name("").has_value());
}

TEST_CASE("enumeration visits each structure once", "[lawcheck]") {
  EnumBudget budget;

  SECTION("boolean matrices on 2x2 carriers") {
    const FinSet x = default_carrier(2, "x");
    std::size_t count = 0;
    enumerate_matrices(qbool(), x, x, budget, [&](const VMatrix&) { ++count; });
    CHECK(count == 16);
  }

  SECTION("boolean categories on two objects are the four preorders") {
    const FinSet x = default_carrier(2, "x");
    std::size_t count = 0;
    enumerate_categories(qbool(), x, budget,
                         [&](const QCategory&) { ++count; });
    CHECK(count == 4);
  }

  SECTION("lukasiewicz weights on a point are the two idempotents") {
    const FinSet z = default_carrier(1, "z");
    std::vector<Elem> seen;
    enumerate_cocategories(share(Quantale::lukasiewicz(3)), z, budget,
                           [&](const QCocategory& c) {
                             seen.push_back(c.weight[0]);
                           });
    CHECK(seen == std::vector<Elem>{0, 2});
  }

  SECTION("modules over the chain with a one-point source") {
    const FinSet u = default_carrier(1, "u");
    std::size_t count = 0;
    enumerate_modules(bool_chain2(), u, budget,
                      [&](const QModule&) { ++count; });
    CHECK(count == 3);
  }

  SECTION("functions including the empty cases") {
    const FinSet two = default_carrier(2, "a"), three = default_carrier(3, "b");
    const FinSet none("E", std::vector<std::string>{});
    std::size_t count = 0;
    enumerate_functions(two, three, budget, [&](const Func&) { ++count; });
    CHECK(count == 9);
    count = 0;
    enumerate_functions(none, three, budget, [&](const Func&) { ++count; });
    CHECK(count == 1);  // the empty function
    count = 0;
    enumerate_functions(two, none, budget, [&](const Func&) { ++count; });
    CHECK(count == 0);  // no map into the empty set
  }

  SECTION("the budget aborts oversized enumerations") {
    EnumBudget small{10};
    const FinSet x = default_carrier(2, "x");
    CHECK_THROWS_AS(
        enumerate_matrices(qbool(), x, x, small, [](const VMatrix&) {}),
        CapError);
  }
}

TEST_CASE("every suite passes exhaustively over the boolean quantale",
          "[lawcheck]") {
  SuiteBounds b;
  b.carrier = 2;

  const auto expect_pass = [&](Suite s, std::uint64_t cases) {
    const SuiteResult r = run_suite(s, qbool(), b);
    INFO(r.serialize());
    CHECK(r.pass());
    CHECK(r.cases == cases);
    CHECK(r.wall_ms >= 0.0);
  };

  expect_pass(Suite::double_cat, 43222);
  expect_pass(Suite::fibrant, 88);
  expect_pass(Suite::monoidal, 208374);
  expect_pass(Suite::closed, 1416840);
  expect_pass(Suite::mod_fibration, 136980);
  expect_pass(Suite::monoidal_fibration, 7695);
  expect_pass(Suite::sweedler_adjunctions, 2779);
  expect_pass(Suite::enrichment, 126);
}

TEST_CASE("seeded suites pass over godel-3", "[lawcheck]") {
  SuiteBounds b;
  b.carrier = 2;
  b.seed = 42;
  b.samples = 60;
  for (const auto& [suite, name] : suite_names()) {
    const SuiteResult r = run_suite(suite, qgodel3(), b);
    INFO(r.serialize());
    CHECK(r.pass());
    CHECK(r.cases > 0);
  }
}

TEST_CASE("small exhaustive godel-3 suites pass", "[lawcheck]") {
  SuiteBounds b;
  b.carrier = 2;
  // the heavyweight exhaustive suites get exercised over godel-3 in the
  // acceptance harness; these two finish in milliseconds
  for (Suite s : {Suite::sweedler_adjunctions, Suite::enrichment}) {
    const SuiteResult r = run_suite(s, qgodel3(), b);
    INFO(r.serialize());
    CHECK(r.pass());
  }
  SuiteBounds b1;
  b1.carrier = 1;
  for (Suite s : {Suite::double_cat, Suite::fibrant, Suite::monoidal,
                  Suite::closed, Suite::mod_fibration,
                  Suite::monoidal_fibration}) {
    const SuiteResult r = run_suite(s, qgodel3(), b1);
    INFO(r.serialize());
    CHECK(r.pass());
  }
}

TEST_CASE("a lawless tensor is convicted with a counterexample",
          "[lawcheck]") {
  const QPtr bad = broken_quantale();

  SECTION("the quantale verifier already names the broken law") {
    const LawReport rep = bad->verify();
    REQUIRE_FALSE(rep.pass());
    CHECK(rep.violations.front().law == "join-distributivity");
  }

  SECTION("the double category suite finds concrete witnesses") {
    SuiteBounds b;
    b.carrier = 2;
    const SuiteResult r = run_suite(Suite::double_cat, bad, b);
    CHECK_FALSE(r.pass());
    REQUIRE_FALSE(r.failures.empty());
    CHECK(r.failures.front().find("associativity") != std::string::npos);
    CHECK(r.failures.front().find("entries(") != std::string::npos);
    CHECK(r.serialize().find("result FAIL") != std::string::npos);
  }
}

TEST_CASE("suite results serialize deterministically", "[lawcheck]") {
  SECTION("exhaustive runs are byte-identical") {
    SuiteBounds b;
    b.carrier = 2;
    const SuiteResult r1 = run_suite(Suite::fibrant, qbool(), b);
    const SuiteResult r2 = run_suite(Suite::fibrant, qbool(), b);
    CHECK(r1.serialize() == r2.serialize());
  }

  SECTION("equal seeds replay byte-identically, wall time excluded") {
    SuiteBounds b;
    b.carrier = 2;
    b.seed = 7;
    b.samples = 40;
    const SuiteResult r1 = run_suite(Suite::double_cat, qgodel3(), b);
    const SuiteResult r2 = run_suite(Suite::double_cat, qgodel3(), b);
    CHECK(r1.serialize() == r2.serialize());
    CHECK(r1.serialize().find("wall") == std::string::npos);
  }

  SECTION("the serialized form is line-oriented and labeled") {
    SuiteBounds b;
    b.carrier = 1;
    const SuiteResult r = run_suite(Suite::enrichment, qbool(), b);
    const std::string s = r.serialize();
    CHECK(s.find("suite enrichment\n") == 0);
    CHECK(s.find("\nresult PASS\n") != std::string::npos);
    CHECK(s.find("cases ") != std::string::npos);
  }
}
