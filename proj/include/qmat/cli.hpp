#pragma once

/**
 * Command dispatch over a workspace file.
 *
 * Every command loads the workspace named by --input, runs one operation,
 * and prints the result either as a standalone workspace snippet (the
 * default; reloading it reproduces the structure entry for entry) or, with
 * --json, as an object {"kind","name","src","tgt","entries":[{"t","s","q"}]}
 * with sorted keys and entries. Exit codes: 0 success or PASS, 1 a check or
 * suite failed, 2 parse or validation errors.
 */

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "qmat/cat.hpp"
#include "qmat/conv.hpp"
#include "qmat/error.hpp"
#include "qmat/lawcheck.hpp"
#include "qmat/mod.hpp"
#include "qmat/sweedler.hpp"
#include "qmat/vmat.hpp"
#include "qmat/workspace.hpp"

namespace qmat {

struct CliResult {
  int exit_code = 0;
  std::string out;
  std::string err;
};

namespace detail {

/// One printable structure: carriers to declare, statements to print, and
/// the matrix backing the JSON rendering.
struct CliOutput {
  std::string kind;
  std::string name;
  std::vector<FinSet> sets;
  VMatrix matrix;
  std::string body;
  std::string comment;
};

inline CliOutput output_matrix(const std::string& name, const VMatrix& m) {
  return {"matrix", name, {m.src(), m.tgt()}, m, render_matrix(name, m), ""};
}

inline CliOutput output_category(const std::string& name, const QCategory& a) {
  return {"category", name,          {a.objects}, a.hom,
          render_category(name, a),  ""};
}

inline CliOutput output_cocategory(const std::string& name,
                                   const QCocategory& c) {
  return {"cocategory",  name, {c.objects}, cocategory_matrix(c),
          render_cocategory(name, c), ""};
}

inline CliOutput output_module(const std::string& name, const QModule& m) {
  return {"module", name,      {m.src, m.over.objects}, m.mat,
          render_module(name, m), ""};
}

inline CliOutput output_comodule(const std::string& name,
                                 const QComodule& k) {
  return {"comodule", name,        {k.src, k.over.objects}, k.mat,
          render_comodule(name, k), ""};
}

inline std::string cli_text(const Quantale& q, const CliOutput& o) {
  std::string s = render_quantale(q);
  std::set<std::string> seen;
  for (const FinSet& fs : o.sets)
    if (seen.insert(fs.name()).second) s += render_set(fs);
  if (!o.comment.empty()) s += "# " + o.comment + "\n";
  return s + o.body;
}

inline nlohmann::json cli_json(const CliOutput& o) {
  const VMatrix& m = o.matrix;
  const Quantale& q = m.quantale();
  std::vector<std::array<std::string, 3>> rows;
  for (std::size_t y = 0; y < m.tgt().size(); ++y)
    for (std::size_t x = 0; x < m.src().size(); ++x)
      if (m(y, x) != q.bottom())
        rows.push_back({m.tgt().label(y), m.src().label(x),
                        q.label(m(y, x))});
  std::sort(rows.begin(), rows.end());
  nlohmann::json entries = nlohmann::json::array();
  for (const auto& r : rows)
    entries.push_back({{"t", r[0]}, {"s", r[1]}, {"q", r[2]}});
  return {{"kind", o.kind},
          {"name", o.name},
          {"src", m.src().name()},
          {"tgt", m.tgt().name()},
          {"entries", entries}};
}

template <typename T>
const T& need(const std::map<std::string, T>& m, const std::string& name,
              const std::string& kind) {
  const auto it = m.find(name);
  if (it == m.end())
    throw ValidationError("unknown " + kind + " '" + name + "'");
  return it->second;
}

/// `check` re-runs the verifier for a named structure; for a plain
/// endo-matrix it asks whether the matrix satisfies the category laws.
inline std::pair<bool, LawReport> check_structure(const Workspace& ws,
                                                  const std::string& name) {
  if (const auto it = ws.matrices.find(name); it != ws.matrices.end()) {
    const VMatrix& m = it->second;
    if (m.src() != m.tgt())
      return {true, LawReport{}};
    return {true, verify_category(m).report};
  }
  if (const auto it = ws.categories.find(name); it != ws.categories.end())
    return {true, verify_category(it->second.hom).report};
  if (const auto it = ws.cocategories.find(name); it != ws.cocategories.end())
    return {true, verify_cocategory(ws.quantale, it->second.objects,
                                    it->second.weight)
                      .report};
  if (const auto it = ws.modules.find(name); it != ws.modules.end())
    return {true, verify_module(it->second.over, it->second.mat).report};
  if (const auto it = ws.comodules.find(name); it != ws.comodules.end())
    return {true, verify_comodule(it->second.over, it->second.mat).report};
  if (ws.functions.count(name) || ws.sets.count(name))
    return {true, LawReport{}};
  return {false, LawReport{}};
}

}  // namespace detail

inline CliResult run_cli(const std::vector<std::string>& args) {
  CliResult res;
  CLI::App app{"finite quantale matrices: composition, measuring, law suites",
               "qmat"};
  app.require_subcommand(0, 1);
  std::string input;
  bool as_json = false;
  std::size_t cap = kDefaultHomCap;
  std::optional<std::uint64_t> seed;
  std::size_t bound = 2;
  app.add_option("--input", input, "workspace file to load");
  app.add_flag("--json", as_json, "emit structured JSON instead of text");
  app.add_option("--cap", cap, "cap on materialized function carriers");
  app.add_option("--seed", seed, "run suites in seeded random mode");

  std::vector<std::string> pos;
  const auto sub = [&](const std::string& name, const std::string& desc,
                       int nargs) {
    CLI::App* s = app.add_subcommand(name, desc);
    s->fallthrough();
    s->add_option("names", pos, "structure names")
        ->expected(nargs)
        ->required();
    return s;
  };
  sub("check", "re-run the laws of a named structure", 1);
  sub("compose", "horizontal composite of two matrices", 2);
  sub("tensor", "tensor product of two matrices", 2);
  sub("hom", "internal hom of two matrices", 2);
  sub("convolve", "convolution category of a cocategory and a category", 2);
  sub("star", "reflexive-transitive closure of an endo-matrix", 1);
  sub("restrict", "restrict a module (or category) along a function", 2);
  sub("corestrict", "corestrict a comodule (or cocategory) along a function",
      2);
  sub("measure", "measuring cocategory of two categories", 2);
  sub("comeasure", "measuring comodule of two modules", 2);
  sub("tensorcat", "tensor category of a cocategory and a category", 2);
  sub("tensormod", "tensor module of a comodule and a module", 2);
  CLI::App* verify =
      app.add_subcommand("verify", "run a named law suite on the quantale");
  verify->fallthrough();
  std::string suite_arg;
  verify->add_option("suite", suite_arg, "suite name")->required();
  verify->add_option("--bound", bound, "carrier size bound");

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    res.out = app.help();
    return res;
  } catch (const CLI::CallForAllHelp&) {
    res.out = app.help("", CLI::AppFormatMode::All);
    return res;
  } catch (const CLI::ParseError& e) {
    res.err = std::string("argument error: ") + e.what() + "\n";
    res.exit_code = 2;
    return res;
  }

  const auto triggered = app.get_subcommands();
  if (triggered.empty()) {
    res.err = "no command given; see --help\n";
    res.exit_code = 2;
    return res;
  }
  const std::string cmd = triggered.front()->get_name();

  try {
    if (input.empty())
      throw ValidationError("--input <workspace file> is required");
    std::ifstream file(input);
    if (!file)
      throw ValidationError("cannot open workspace file '" + input + "'");
    std::ostringstream text;
    text << file.rdbuf();
    Workspace ws = parse_workspace(text.str());
    ws.cap = cap;
    if (!ws.quantale)
      throw ValidationError("workspace declares no quantale");
    const Quantale& q = *ws.quantale;

    if (cmd == "verify") {
      const auto suite = suite_from_name(suite_arg);
      if (!suite)
        throw ValidationError("unknown suite '" + suite_arg + "'");
      SuiteBounds sb;
      sb.carrier = bound;
      sb.cap = ws.cap;
      sb.seed = seed;
      SuiteResult r = run_suite(*suite, ws.quantale, sb);
      if (as_json) {
        nlohmann::json j{{"cases", r.cases},
                         {"failures", r.failures},
                         {"result", r.pass() ? "PASS" : "FAIL"},
                         {"suite", r.suite}};
        res.out = j.dump(2) + "\n";
      } else {
        res.out = r.serialize();
      }
      res.exit_code = r.pass() ? 0 : 1;
      return res;
    }

    if (cmd == "check") {
      const auto [found, report] = detail::check_structure(ws, pos[0]);
      if (!found)
        throw ValidationError("nothing named '" + pos[0] +
                              "' in the workspace");
      if (as_json) {
        nlohmann::json violations = nlohmann::json::array();
        for (const auto& v : report.violations)
          violations.push_back({{"law", v.law}, {"witness", v.witness}});
        nlohmann::json j{{"kind", "report"},
                         {"name", pos[0]},
                         {"pass", report.pass()},
                         {"violations", violations}};
        res.out = j.dump(2) + "\n";
      } else {
        res.out = "check " + pos[0] + ": " +
                  (report.pass() ? "PASS" : "FAIL") + "\n";
        for (const auto& v : report.violations)
          res.out += "  " + v.law + ": " + v.witness + "\n";
      }
      res.exit_code = report.pass() ? 0 : 1;
      return res;
    }

    // Structure-producing commands.
    std::optional<detail::CliOutput> out;
    if (cmd == "compose") {
      const VMatrix& t = detail::need(ws.matrices, pos[0], "matrix");
      const VMatrix& s = detail::need(ws.matrices, pos[1], "matrix");
      out = detail::output_matrix("compose(" + pos[0] + "," + pos[1] + ")",
                                  hcompose(t, s));
    } else if (cmd == "tensor") {
      const VMatrix& a = detail::need(ws.matrices, pos[0], "matrix");
      const VMatrix& b = detail::need(ws.matrices, pos[1], "matrix");
      out = detail::output_matrix("tensor(" + pos[0] + "," + pos[1] + ")",
                                  tensor_matrices(a, b));
    } else if (cmd == "hom") {
      const VMatrix& s = detail::need(ws.matrices, pos[0], "matrix");
      const VMatrix& t = detail::need(ws.matrices, pos[1], "matrix");
      out = detail::output_matrix("hom(" + pos[0] + "," + pos[1] + ")",
                                  internal_hom(s, t, ws.cap));
    } else if (cmd == "convolve") {
      const QCocategory& c = detail::need(ws.cocategories, pos[0],
                                          "cocategory");
      const QCategory& a = detail::need(ws.categories, pos[1], "category");
      out = detail::output_category("convolve(" + pos[0] + "," + pos[1] + ")",
                                    convolution_category(c, a, ws.cap));
    } else if (cmd == "star") {
      const VMatrix& g = detail::need(ws.matrices, pos[0], "matrix");
      if (g.src() != g.tgt())
        throw ValidationError("star needs an endo-matrix");
      const StarResult st = star_closure(g);
      out = detail::output_category("star(" + pos[0] + ")", st.category);
      out->comment = "rounds " + std::to_string(st.rounds);
    } else if (cmd == "restrict") {
      const Func& f = detail::need(ws.functions, pos[0], "function");
      if (const auto it = ws.modules.find(pos[1]); it != ws.modules.end()) {
        const QModule& n = it->second;
        if (f.cod() != n.over.objects)
          throw BoundaryError("function " + pos[0] + " does not land in the "
                              "objects of " + pos[1]);
        const QCategory a = pullback_category(f, n.over);
        out = detail::output_module(
            "restrict(" + pos[0] + "," + pos[1] + ")",
            restrict_scalars(f, a, n));
      } else {
        const QCategory& b = detail::need(ws.categories, pos[1], "category");
        if (f.cod() != b.objects)
          throw BoundaryError("function " + pos[0] + " does not land in the "
                              "objects of " + pos[1]);
        out = detail::output_category(
            "restrict(" + pos[0] + "," + pos[1] + ")",
            pullback_category(f, b));
      }
    } else if (cmd == "corestrict") {
      const Func& f = detail::need(ws.functions, pos[0], "function");
      if (const auto it = ws.comodules.find(pos[1]);
          it != ws.comodules.end()) {
        const QComodule& k = it->second;
        if (f.dom() != k.over.objects)
          throw BoundaryError("function " + pos[0] + " is not defined on the "
                              "objects of " + pos[1]);
        const QCocategory d = pushforward_cocategory(f, k.over);
        out = detail::output_comodule(
            "corestrict(" + pos[0] + "," + pos[1] + ")",
            corestrict_scalars(f, d, k));
      } else {
        const QCocategory& c = detail::need(ws.cocategories, pos[1],
                                            "cocategory");
        if (f.dom() != c.objects)
          throw BoundaryError("function " + pos[0] + " is not defined on the "
                              "objects of " + pos[1]);
        out = detail::output_cocategory(
            "corestrict(" + pos[0] + "," + pos[1] + ")",
            pushforward_cocategory(f, c));
      }
    } else if (cmd == "measure") {
      const QCategory& a = detail::need(ws.categories, pos[0], "category");
      const QCategory& b = detail::need(ws.categories, pos[1], "category");
      out = detail::output_cocategory("P(" + pos[0] + "," + pos[1] + ")",
                                      measure_P(a, b, ws.cap));
    } else if (cmd == "comeasure") {
      const QModule& m = detail::need(ws.modules, pos[0], "module");
      const QModule& n = detail::need(ws.modules, pos[1], "module");
      out = detail::output_comodule("Q(" + pos[0] + "," + pos[1] + ")",
                                    comeasure_Q(m, n, ws.cap));
    } else if (cmd == "tensorcat") {
      const QCocategory& c = detail::need(ws.cocategories, pos[0],
                                          "cocategory");
      const QCategory& b = detail::need(ws.categories, pos[1], "category");
      std::size_t rounds = 0;
      out = detail::output_category(
          "tensorcat(" + pos[0] + "," + pos[1] + ")",
          tensor_cat(c, b, &rounds));
      out->comment = "rounds " + std::to_string(rounds);
    } else if (cmd == "tensormod") {
      const QComodule& k = detail::need(ws.comodules, pos[0], "comodule");
      const QModule& n = detail::need(ws.modules, pos[1], "module");
      std::size_t rounds = 0;
      out = detail::output_module(
          "tensormod(" + pos[0] + "," + pos[1] + ")",
          tensor_mod(k, n, &rounds));
      out->comment = "rounds " + std::to_string(rounds);
    } else {
      throw ValidationError("unhandled command '" + cmd + "'");
    }

    res.out = as_json ? detail::cli_json(*out).dump(2) + "\n"
                      : detail::cli_text(q, *out);
    return res;
  } catch (const InternalError& e) {
    res.err = std::string("internal error: ") + e.what() + "\n";
    res.exit_code = 2;
    return res;
  } catch (const Error& e) {
    res.err = std::string(e.what()) + "\n";
    res.exit_code = 2;
    return res;
  }
}

inline int run_cli_main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const CliResult res = run_cli(args);
  std::fputs(res.out.c_str(), stdout);
  std::fputs(res.err.c_str(), stderr);
  return res.exit_code;
}

}  // namespace qmat
