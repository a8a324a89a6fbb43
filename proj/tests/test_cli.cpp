// In-process tests for the command-line driver: argument handling, workspace
// loading, structure-producing commands, law suites, text and JSON output,
// and the exit-code contract (0 success/PASS, 1 failed check, 2 errors).

#include <catch2/catch_amalgamated.hpp>

#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "qmat/cli.hpp"
#include "qmat/workspace.hpp"

namespace {

using nlohmann::json;
using qmat::CliResult;

// Writes a workspace to a fresh temp file and returns its path; the driver
// only reads workspaces from disk.
std::string write_ws(const std::string& text) {
  static int counter = 0;
  const auto path = std::filesystem::temp_directory_path() /
                    ("qmat_cli_" + std::to_string(++counter) + ".qws");
  std::ofstream out(path);
  out << text;
  return path.string();
}

CliResult run(std::vector<std::string> args) {
  return qmat::run_cli(args);
}

bool contains(const std::string& hay, const std::string& needle) {
  return hay.find(needle) != std::string::npos;
}

// A two-element chain over bool carrying one of everything the commands
// consume: matrices, categories, a module, a cocategory, a comodule, and
// functions.
const char* const kChainWs = R"(quantale bool
set Y { y0 y1 }
set Z { z0 z1 }
matrix order : Y -> Y { y0 y0 = 1; y1 y1 = 1; y1 y0 = 1 }
matrix step : Y -> Y { y1 y0 = 1 }
matrix bridge : Y -> Z { z0 y0 = 1 }
category A on Y from order
category B on Y from order
module M : Y -> A from order
cocategory C on Z { z0 = unit; z1 = bottom }
matrix kmat : Y -> Z { z0 y0 = 1; z0 y1 = 1 }
comodule K : Y -> C from kmat
function g : Z -> Y { z0 = y0; z1 = y1 }
function h : Z -> Z { z0 = z0; z1 = z0 }
function e : Y -> Y { y0 = y0; y1 = y1 }
)";

// Link strengths over the five-point Lukasiewicz chain; exercises rational
// literals in both fraction and decimal spellings.
const char* const kPathWs = R"(quantale lukasiewicz 5
set N { p q r s }
matrix links : N -> N { q p = 3/4; r q = 0.75; s r = 1; r p = 1/4 }
)";

}  // namespace

TEST_CASE("help and argument errors follow the exit-code contract") {
  const CliResult help = run({"--help"});
  CHECK(help.exit_code == 0);
  CHECK(contains(help.out, "qmat"));
  CHECK(contains(help.out, "measuring"));
  CHECK(help.err.empty());

  const CliResult none = run({});
  CHECK(none.exit_code == 2);
  CHECK(none.err == "no command given; see --help\n");
  CHECK(none.out.empty());

  const CliResult unknown = run({"frobnicate"});
  CHECK(unknown.exit_code == 2);
  CHECK(contains(unknown.err, "argument error: "));

  const CliResult missing = run({"check", "order"});
  CHECK(missing.exit_code == 2);
  CHECK(missing.err == "--input <workspace file> is required\n");

  const CliResult unopenable =
      run({"check", "order", "--input", "/nonexistent/nowhere.qws"});
  CHECK(unopenable.exit_code == 2);
  CHECK(unopenable.err ==
        "cannot open workspace file '/nonexistent/nowhere.qws'\n");

  // A structure command given too few names is an argument error, not a
  // workspace error.
  const CliResult arity = run({"compose", "order"});
  CHECK(arity.exit_code == 2);
  CHECK(contains(arity.err, "argument error: "));
}

TEST_CASE("check re-runs laws and reports witnesses") {
  const std::string ws = write_ws(kChainWs);

  // A lawful category passes with exit 0.
  const CliResult ok = run({"check", "A", "--input", ws});
  CHECK(ok.exit_code == 0);
  CHECK(ok.out == "check A: PASS\n");
  CHECK(ok.err.empty());

  // A bare endo-matrix is checked against the category laws; `step` has no
  // identities, so it fails with a witness line per violated law.
  const CliResult bad = run({"check", "step", "--input", ws});
  CHECK(bad.exit_code == 1);
  CHECK(contains(bad.out, "check step: FAIL\n"));
  CHECK(contains(bad.out, "  identity: "));

  // Non-endo matrices, sets, and functions have nothing to violate.
  const CliResult rect = run({"check", "bridge", "--input", ws});
  CHECK(rect.exit_code == 0);
  CHECK(rect.out == "check bridge: PASS\n");
  const CliResult fn = run({"check", "g", "--input", ws});
  CHECK(fn.exit_code == 0);

  // Modules, comodules, and cocategories re-run their own laws.
  for (const std::string name : {"M", "K", "C"}) {
    const CliResult r = run({"check", name, "--input", ws});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "check " + name + ": PASS\n");
  }

  const CliResult gone = run({"check", "zebra", "--input", ws});
  CHECK(gone.exit_code == 2);
  CHECK(gone.err == "nothing named 'zebra' in the workspace\n");

  // JSON report shape.
  const CliResult jr = run({"check", "step", "--json", "--input", ws});
  CHECK(jr.exit_code == 1);
  const json j = json::parse(jr.out);
  CHECK(j["kind"] == "report");
  CHECK(j["name"] == "step");
  CHECK(j["pass"] == false);
  REQUIRE(j["violations"].is_array());
  REQUIRE(!j["violations"].empty());
  CHECK(j["violations"][0].contains("law"));
  CHECK(j["violations"][0].contains("witness"));
}

TEST_CASE("workspace parse errors carry positions and exit 2") {
  // An unlawful cocategory weight is rejected while loading: 1/2 is not
  // below its own square on the three-point Lukasiewicz chain.
  const std::string half = write_ws(
      "quantale lukasiewicz 3\n"
      "set Z { z0 }\n"
      "cocategory D on Z { z0 = 1/2 }\n");
  const CliResult r = run({"check", "D", "--input", half});
  CHECK(r.exit_code == 2);
  CHECK(contains(r.err, "line 3"));
  CHECK(contains(r.err, "cocategory D rejected"));
  CHECK(contains(r.err, "cocomposition"));

  // Dangling set references name the missing identifier.
  const std::string dangling = write_ws(
      "quantale bool\n"
      "set X { a }\n"
      "matrix R : X -> W { }\n");
  const CliResult d = run({"check", "R", "--input", dangling});
  CHECK(d.exit_code == 2);
  CHECK(contains(d.err, "line 3"));
  CHECK(contains(d.err, "unknown set 'W'"));

  // Duplicate names are rejected.
  const std::string dup = write_ws(
      "quantale bool\n"
      "set X { a }\n"
      "set X { b }\n");
  const CliResult du = run({"check", "X", "--input", dup});
  CHECK(du.exit_code == 2);
  CHECK(contains(du.err, "duplicate set 'X'"));

  // Exactly one quantale per workspace.
  const std::string two = write_ws("quantale bool\nquantale godel 3\n");
  const CliResult tq = run({"check", "x", "--input", two});
  CHECK(tq.exit_code == 2);
  CHECK(contains(tq.err, "a workspace has a single quantale"));

  // A workspace that never declares a quantale cannot be used at all.
  const std::string none = write_ws("# nothing here\n");
  const CliResult nq = run({"check", "x", "--input", none});
  CHECK(nq.exit_code == 2);
  CHECK(contains(nq.err, "workspace declares no quantale"));
}

TEST_CASE("measuring the two-element chain keeps the three monotone maps") {
  const std::string ws = write_ws(kChainWs);
  const CliResult r = run({"measure", "A", "B", "--json", "--input", ws});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["kind"] == "cocategory");
  CHECK(j["name"] == "P(A,B)");
  CHECK(j["src"] == j["tgt"]);

  // Of the four maps on {y0,y1} only the order-reversing swap is excluded.
  REQUIRE(j["entries"].size() == 3);
  for (const auto& e : j["entries"]) {
    CHECK(e["q"] == "1");
    CHECK(e["t"] == e["s"]);  // cocategories are diagonal
    CHECK(e["t"] != "{y0↦y1,y1↦y0}");
  }

  // The dual computation produces a lawful comodule over P(M.over, M.over).
  const CliResult q = run({"comeasure", "M", "M", "--json", "--input", ws});
  REQUIRE(q.exit_code == 0);
  const json jq = json::parse(q.out);
  CHECK(jq["kind"] == "comodule");
  CHECK(jq["name"] == "Q(M,M)");
  CHECK(!jq["entries"].empty());
}

TEST_CASE("verify runs a law suite on the workspace quantale") {
  const std::string ws = write_ws(kChainWs);

  const CliResult r = run({"verify", "fibrant", "--bound", "2",
                           "--input", ws});
  CHECK(r.exit_code == 0);
  CHECK(contains(r.out, "suite fibrant\n"));
  CHECK(contains(r.out, "cases 88\n"));
  CHECK(contains(r.out, "result PASS\n"));

  const CliResult j = run({"verify", "fibrant", "--bound", "2", "--json",
                           "--input", ws});
  CHECK(j.exit_code == 0);
  const json jj = json::parse(j.out);
  CHECK(jj["suite"] == "fibrant");
  CHECK(jj["cases"] == 88);
  CHECK(jj["failures"].is_array());
  CHECK(jj["failures"].empty());
  CHECK(jj["result"] == "PASS");

  // Seeded mode samples rather than enumerates and stays deterministic.
  const CliResult s1 = run({"verify", "monoidal", "--bound", "2", "--seed",
                            "7", "--input", ws});
  const CliResult s2 = run({"verify", "monoidal", "--bound", "2", "--seed",
                            "7", "--input", ws});
  CHECK(s1.exit_code == 0);
  CHECK(s1.out == s2.out);

  const CliResult bad = run({"verify", "nonsense", "--input", ws});
  CHECK(bad.exit_code == 2);
  CHECK(bad.err == "unknown suite 'nonsense'\n");
}

TEST_CASE("structure commands print reloadable workspace snippets") {
  const std::string ws = write_ws(kChainWs);
  const qmat::Workspace direct = qmat::parse_workspace(kChainWs);
  const qmat::VMatrix& order = direct.matrices.at("order");

  // compose: text output reloads to the same matrix the library computes.
  const CliResult comp = run({"compose", "order", "order", "--input", ws});
  REQUIRE(comp.exit_code == 0);
  CHECK(contains(comp.out, "quantale bool\n"));
  CHECK(contains(comp.out, "set Y {"));
  {
    const qmat::Workspace re = qmat::parse_workspace(comp.out);
    CHECK(re.matrices.at("compose(order,order)") == hcompose(order, order));
  }

  // tensor and hom round-trip the same way.
  const CliResult ten = run({"tensor", "order", "step", "--input", ws});
  REQUIRE(ten.exit_code == 0);
  {
    const qmat::Workspace re = qmat::parse_workspace(ten.out);
    CHECK(re.matrices.at("tensor(order,step)") ==
          tensor_matrices(order, direct.matrices.at("step")));
  }
  const CliResult hom = run({"hom", "step", "order", "--input", ws});
  REQUIRE(hom.exit_code == 0);
  {
    const qmat::Workspace re = qmat::parse_workspace(hom.out);
    CHECK(re.matrices.at("hom(step,order)") ==
          internal_hom(direct.matrices.at("step"), order, direct.cap));
  }

  // convolve emits a category statement.
  const CliResult conv = run({"convolve", "C", "A", "--input", ws});
  REQUIRE(conv.exit_code == 0);
  {
    const qmat::Workspace re = qmat::parse_workspace(conv.out);
    const qmat::QCategory got = re.categories.at("convolve(C,A)");
    const qmat::QCategory want = qmat::convolution_category(
        direct.cocategories.at("C"), direct.categories.at("A"), direct.cap);
    CHECK(got.hom == want.hom);
  }

  // measure / comeasure emit cocategory / comodule statements that reload.
  const CliResult meas = run({"measure", "A", "B", "--input", ws});
  REQUIRE(meas.exit_code == 0);
  {
    const qmat::Workspace re = qmat::parse_workspace(meas.out);
    const qmat::QCocategory got = re.cocategories.at("P(A,B)");
    const qmat::QCocategory want = qmat::measure_P(
        direct.categories.at("A"), direct.categories.at("B"), direct.cap);
    CHECK(got.weight == want.weight);
  }
  const CliResult com = run({"comeasure", "M", "M", "--input", ws});
  REQUIRE(com.exit_code == 0);
  {
    const qmat::Workspace re = qmat::parse_workspace(com.out);
    const qmat::QComodule got = re.comodules.at("Q(M,M)");
    const qmat::QComodule want = qmat::comeasure_Q(
        direct.modules.at("M"), direct.modules.at("M"), direct.cap);
    CHECK(got.mat == want.mat);
  }

  // restrict along g lands in categories or modules by name.
  const CliResult rc = run({"restrict", "g", "A", "--input", ws});
  REQUIRE(rc.exit_code == 0);
  {
    const qmat::Workspace re = qmat::parse_workspace(rc.out);
    const qmat::QCategory got = re.categories.at("restrict(g,A)");
    CHECK(got.hom == qmat::pullback_category(direct.functions.at("g"),
                                             direct.categories.at("A"))
                         .hom);
  }
  const CliResult rm = run({"restrict", "g", "M", "--input", ws});
  REQUIRE(rm.exit_code == 0);
  {
    const qmat::Workspace re = qmat::parse_workspace(rm.out);
    CHECK(re.modules.count("restrict(g,M)") == 1);
  }

  // corestrict along h pushes cocategories and comodules forward.
  const CliResult cc = run({"corestrict", "h", "C", "--input", ws});
  REQUIRE(cc.exit_code == 0);
  {
    const qmat::Workspace re = qmat::parse_workspace(cc.out);
    const qmat::QCocategory got = re.cocategories.at("corestrict(h,C)");
    CHECK(got.weight == qmat::pushforward_cocategory(
                            direct.functions.at("h"),
                            direct.cocategories.at("C"))
                            .weight);
  }
  const CliResult ck = run({"corestrict", "h", "K", "--input", ws});
  REQUIRE(ck.exit_code == 0);
  {
    const qmat::Workspace re = qmat::parse_workspace(ck.out);
    CHECK(re.comodules.count("corestrict(h,K)") == 1);
  }

  // tensorcat / tensormod reload and announce their closure rounds.
  const CliResult tc = run({"tensorcat", "C", "A", "--input", ws});
  REQUIRE(tc.exit_code == 0);
  CHECK(contains(tc.out, "# rounds "));
  {
    const qmat::Workspace re = qmat::parse_workspace(tc.out);
    const qmat::QCategory got = re.categories.at("tensorcat(C,A)");
    CHECK(got.hom == qmat::tensor_cat(direct.cocategories.at("C"),
                                      direct.categories.at("A"))
                         .hom);
  }
  const CliResult tm = run({"tensormod", "K", "M", "--input", ws});
  REQUIRE(tm.exit_code == 0);
  CHECK(contains(tm.out, "# rounds "));
  {
    const qmat::Workspace re = qmat::parse_workspace(tm.out);
    const qmat::QModule got = re.modules.at("tensormod(K,M)");
    CHECK(got.mat == qmat::tensor_mod(direct.comodules.at("K"),
                                      direct.modules.at("M"))
                         .mat);
  }
}

TEST_CASE("star closes the strongest-path matrix and reports rounds") {
  const std::string ws = write_ws(kPathWs);
  const CliResult r = run({"star", "links", "--input", ws});
  REQUIRE(r.exit_code == 0);
  CHECK(contains(r.out, "quantale lukasiewicz 5\n"));
  CHECK(contains(r.out, "# rounds "));

  const qmat::Workspace direct = qmat::parse_workspace(kPathWs);
  const qmat::Workspace re = qmat::parse_workspace(r.out);
  const qmat::QCategory got = re.categories.at("star(links)");
  CHECK(got.hom == qmat::star_closure(direct.matrices.at("links")).category.hom);

  // Both rational spellings denote the same element; the 2-hop connection
  // p -> q -> r costs max(0, 3/4 + 3/4 - 1) = 1/2.
  const qmat::FinSet& n = direct.matrices.at("links").src();
  const qmat::Quantale& q5 = *direct.quantale;
  CHECK(got.hom(n.index_of("r"), n.index_of("p")) == q5.index_of("1/2"));

  const CliResult bad = run({"star", "bridge", "--input", write_ws(kChainWs)});
  CHECK(bad.exit_code == 2);
  CHECK(bad.err == "star needs an endo-matrix\n");
}

TEST_CASE("json output is sparse, sorted, and deterministic") {
  const std::string ws = write_ws(kChainWs);

  const CliResult r = run({"compose", "order", "order", "--json",
                           "--input", ws});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  CHECK(j["kind"] == "matrix");
  CHECK(j["name"] == "compose(order,order)");
  CHECK(j["src"] == "Y");
  CHECK(j["tgt"] == "Y");

  // No bottom entries appear, and rows are sorted by (target, source).
  std::vector<std::pair<std::string, std::string>> keys;
  for (const auto& e : j["entries"]) {
    CHECK(e["q"] != "0");
    keys.emplace_back(e["t"].get<std::string>(), e["s"].get<std::string>());
  }
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  CHECK(keys.size() == 3);  // the chain relation is already transitive

  // Same invocation, byte-identical output.
  const CliResult again = run({"compose", "order", "order", "--json",
                               "--input", ws});
  CHECK(again.out == r.out);

  // Unknown names carry their kind.
  const CliResult miss = run({"compose", "order", "nope", "--input", ws});
  CHECK(miss.exit_code == 2);
  CHECK(miss.err == "unknown matrix 'nope'\n");
}

TEST_CASE("boundary mistakes in commands are reported, not computed") {
  const std::string ws = write_ws(kChainWs);

  // bridge : Y -> Z cannot be composed with itself.
  const CliResult comp = run({"compose", "bridge", "bridge", "--input", ws});
  CHECK(comp.exit_code == 2);
  CHECK(contains(comp.err, "hcompose: target of the first factor"));

  // e : Y -> Y is not defined on the objects of C (a cocategory on Z).
  const CliResult cr = run({"corestrict", "e", "C", "--input", ws});
  CHECK(cr.exit_code == 2);
  CHECK(contains(cr.err, "function e is not defined on the objects of C"));

  // h : Z -> Z does not land in the objects of A (a category on Y).
  const CliResult rs = run({"restrict", "h", "A", "--input", ws});
  CHECK(rs.exit_code == 2);
  CHECK(contains(rs.err, "function h does not land in the objects of A"));
}

TEST_CASE("quoted labels and table quantales survive a round trip") {
  // Labels with spaces and reserved characters must be quoted; the table
  // quantale here is the three-point Godel chain in disguise.
  const std::string ws = write_ws(
      "quantale table {\n"
      "  elements lo \"mid point\" hi;\n"
      "  bottom lo;\n"
      "  unit hi;\n"
      "  join lo lo = lo; join lo \"mid point\" = \"mid point\";\n"
      "  join lo hi = hi; join \"mid point\" \"mid point\" = \"mid point\";\n"
      "  join \"mid point\" hi = hi; join hi hi = hi;\n"
      "  tensor lo lo = lo; tensor lo \"mid point\" = lo;\n"
      "  tensor lo hi = lo;\n"
      "  tensor \"mid point\" \"mid point\" = \"mid point\";\n"
      "  tensor \"mid point\" hi = \"mid point\"; tensor hi hi = hi\n"
      "}\n"
      "set W { \"a b\" \"c:d\" }\n"
      "matrix R : W -> W { \"a b\" \"a b\" = \"mid point\"; "
      "\"c:d\" \"a b\" = hi }\n");

  const CliResult r = run({"tensor", "R", "R", "--input", ws});
  REQUIRE(r.exit_code == 0);
  CHECK(contains(r.out, "quantale table {"));
  CHECK(contains(r.out, "\"mid point\""));
  CHECK(contains(r.out, "(a b,"));  // product labels stay quoted as a whole

  // The emitted snippet reparses to the library's own product.
  const qmat::Workspace direct = qmat::parse_workspace(
      std::string((std::ostringstream()
                   << std::ifstream(ws).rdbuf())
                      .str()));
  const qmat::Workspace re = qmat::parse_workspace(r.out);
  CHECK(re.matrices.at("tensor(R,R)") ==
        tensor_matrices(direct.matrices.at("R"), direct.matrices.at("R")));

  // JSON escapes nothing exotic but carries the labels verbatim.
  const CliResult js = run({"tensor", "R", "R", "--json", "--input", ws});
  REQUIRE(js.exit_code == 0);
  const json j = json::parse(js.out);
  bool saw_quoted = false;
  for (const auto& e : j["entries"])
    if (e["t"] == "(c:d,c:d)" || contains(e["t"].get<std::string>(), "a b"))
      saw_quoted = true;
  CHECK(saw_quoted);
}

TEST_CASE("inline categories default their diagonal to the unit") {
  const std::string ws = write_ws(
      "quantale godel 3\n"
      "set X { x0 x1 }\n"
      "category A on X { x1 x0 = 1/2 }\n"
      "function f : X -> X { x0 = x0; x1 = x1 }\n");
  const CliResult r = run({"restrict", "f", "A", "--json", "--input", ws});
  REQUIRE(r.exit_code == 0);
  const json j = json::parse(r.out);
  // Identity restriction: the diagonal carries the filled-in units and the
  // declared arrow survives.
  std::size_t units = 0;
  bool saw_arrow = false;
  for (const auto& e : j["entries"]) {
    if (e["t"] == e["s"] && e["q"] == "1") ++units;
    if (e["t"] == "x1" && e["s"] == "x0" && e["q"] == "1/2") saw_arrow = true;
  }
  CHECK(units == 2);
  CHECK(saw_arrow);
}
