#pragma once

/**
 * Workspace files: a small line-oriented text format declaring one quantale
 * plus named sets, matrices, categories, cocategories, modules, comodules,
 * and functions.
 *
 *   quantale (bool | godel <n> | lukasiewicz <n>
 *             | table { elements a b ...; bottom a; unit b;
 *                       join a b = c; ...; tensor a b = c; ... })
 *   set X { a b c }
 *   matrix M : X -> Y { y x = q; ...; default = bottom }
 *   category A on X from M
 *   category A on X { x x' = q; ...; default = bottom }
 *   cocategory C on Z { z = q; ...; default = bottom }
 *   module M : U -> A from <matrix>
 *   comodule K : V -> C from <matrix>
 *   function f : X -> Y { a = y1; ... }
 *
 * `#` starts a comment. Matrix entries are keyed target-then-source. Labels
 * are bare words unless they contain whitespace, one of `{ } = ; # " :`, or
 * `->`, in which case they are double-quoted. Entry values are quantale
 * element labels, the keywords `bottom`/`unit`, or (on chain quantales) any
 * rational spelling of an element such as `0.5` or `2/4`; arithmetic is
 * exact throughout. Omitted matrix entries take the block's `default`
 * (bottom if absent); an inline category additionally defaults its omitted
 * diagonal to the unit. Every structure is verified as it loads, and every
 * error carries a line and column.
 *
 * The render_* functions emit structures back in this syntax; reloading
 * their output yields entry-equal structures.
 */

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
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

struct Workspace {
  QPtr quantale;  // null until the quantale statement is seen
  std::map<std::string, FinSet> sets;
  std::map<std::string, VMatrix> matrices;
  std::map<std::string, QCategory> categories;
  std::map<std::string, QCocategory> cocategories;
  std::map<std::string, QModule> modules;
  std::map<std::string, QComodule> comodules;
  std::map<std::string, Func> functions;
  std::size_t cap = kDefaultHomCap;
};

namespace detail {

// ---- lexer --------------------------------------------------------------

struct Token {
  enum class Kind { word, lbrace, rbrace, equals, semi, colon, arrow, end };
  Kind kind = Kind::end;
  std::string text;
  bool quoted = false;
  int line = 1;
  int col = 1;
};

inline bool is_space_byte(char c) {
  return c == ' ' || c == '\t' || c == '\r' || c == '\n';
}

inline bool is_special_byte(char c) {
  return c == '{' || c == '}' || c == '=' || c == ';' || c == '#' ||
         c == '"' || c == ':';
}

class Lexer {
 public:
  explicit Lexer(const std::string& text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token next() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    skip_blank();
    tok_ = Token{Token::Kind::end, "", false, line_, col_};
    if (pos_ >= text_.size()) return;
    const char c = text_[pos_];
    if (c == '{') return single(Token::Kind::lbrace, "{");
    if (c == '}') return single(Token::Kind::rbrace, "}");
    if (c == '=') return single(Token::Kind::equals, "=");
    if (c == ';') return single(Token::Kind::semi, ";");
    if (c == ':') return single(Token::Kind::colon, ":");
    if (c == '-' && pos_ + 1 < text_.size() && text_[pos_ + 1] == '>') {
      tok_.kind = Token::Kind::arrow;
      tok_.text = "->";
      step();
      step();
      return;
    }
    if (c == '"') {
      step();
      tok_.kind = Token::Kind::word;
      tok_.quoted = true;
      while (pos_ < text_.size() && text_[pos_] != '"') {
        if (text_[pos_] == '\n')
          throw ParseError(tok_.line, tok_.col, "unterminated quoted label");
        tok_.text += text_[pos_];
        step();
      }
      if (pos_ >= text_.size())
        throw ParseError(tok_.line, tok_.col, "unterminated quoted label");
      step();
      return;
    }
    tok_.kind = Token::Kind::word;
    while (pos_ < text_.size() && !is_space_byte(text_[pos_]) &&
           !is_special_byte(text_[pos_])) {
      if (text_[pos_] == '-' && pos_ + 1 < text_.size() &&
          text_[pos_ + 1] == '>')
        break;
      tok_.text += text_[pos_];
      step();
    }
  }

  void single(Token::Kind k, const char* s) {
    tok_.kind = k;
    tok_.text = s;
    step();
  }

  void skip_blank() {
    while (pos_ < text_.size()) {
      if (is_space_byte(text_[pos_])) {
        step();
      } else if (text_[pos_] == '#') {
        while (pos_ < text_.size() && text_[pos_] != '\n') step();
      } else {
        break;
      }
    }
  }

  void step() {
    if (text_[pos_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++pos_;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  int line_ = 1;
  int col_ = 1;
  Token tok_;
};

// ---- element literals ---------------------------------------------------

/// Exact rational out of "3", "2/4", or "0.25"; no floating point.
inline std::optional<std::pair<std::uint64_t, std::uint64_t>> parse_rational(
    const std::string& s) {
  std::uint64_t num = 0, den = 1;
  std::size_t i = 0;
  bool digits = false;
  for (; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) {
    num = num * 10 + static_cast<std::uint64_t>(s[i] - '0');
    digits = true;
  }
  if (!digits) return std::nullopt;
  if (i == s.size()) return std::make_pair(num, den);
  if (s[i] == '/') {
    std::uint64_t d = 0;
    bool ddigits = false;
    for (++i; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) {
      d = d * 10 + static_cast<std::uint64_t>(s[i] - '0');
      ddigits = true;
    }
    if (!ddigits || i != s.size() || d == 0) return std::nullopt;
    return std::make_pair(num, d);
  }
  if (s[i] == '.') {
    for (++i; i < s.size() && s[i] >= '0' && s[i] <= '9'; ++i) {
      num = num * 10 + static_cast<std::uint64_t>(s[i] - '0');
      den *= 10;
    }
    if (i != s.size() || den == 1) return std::nullopt;
    return std::make_pair(num, den);
  }
  return std::nullopt;
}

inline std::optional<Elem> element_by_rational(const Quantale& q,
                                               const std::string& text) {
  const auto want = parse_rational(text);
  if (!want) return std::nullopt;
  for (Elem e = 0; e < q.size(); ++e) {
    const auto have = parse_rational(q.label(e));
    if (have && want->first * have->second == have->first * want->second)
      return e;
  }
  return std::nullopt;
}

inline Elem resolve_element(const Quantale& q, const Token& tok) {
  if (!tok.quoted) {
    if (tok.text == "bottom") return q.bottom();
    if (tok.text == "unit") return q.unit();
  }
  for (Elem e = 0; e < q.size(); ++e)
    if (q.label(e) == tok.text) return e;
  if (!tok.quoted)
    if (const auto e = element_by_rational(q, tok.text)) return *e;
  throw ParseError(tok.line, tok.col,
                   "'" + tok.text + "' is not an element of quantale " +
                       q.name());
}

// ---- parser ---------------------------------------------------------------

class Parser {
 public:
  explicit Parser(const std::string& text) : lex_(text) {}

  Workspace run() {
    Workspace ws;
    while (lex_.peek().kind != Token::Kind::end) {
      const Token head = expect_word("statement keyword");
      if (head.text == "quantale" && !head.quoted) {
        parse_quantale(ws, head);
      } else if (head.text == "set" && !head.quoted) {
        parse_set(ws);
      } else if (head.text == "matrix" && !head.quoted) {
        parse_matrix(ws, head);
      } else if (head.text == "category" && !head.quoted) {
        parse_category(ws, head);
      } else if (head.text == "cocategory" && !head.quoted) {
        parse_cocategory(ws, head);
      } else if (head.text == "module" && !head.quoted) {
        parse_module(ws);
      } else if (head.text == "comodule" && !head.quoted) {
        parse_comodule(ws);
      } else if (head.text == "function" && !head.quoted) {
        parse_function(ws);
      } else {
        throw ParseError(head.line, head.col,
                         "unknown statement '" + head.text + "'");
      }
    }
    return ws;
  }

 private:
  Token expect(Token::Kind k, const std::string& what) {
    const Token t = lex_.next();
    if (t.kind != k)
      throw ParseError(t.line, t.col,
                       "expected " + what + ", got '" +
                           (t.kind == Token::Kind::end ? "end of input"
                                                       : t.text) +
                           "'");
    return t;
  }

  Token expect_word(const std::string& what) {
    return expect(Token::Kind::word, what);
  }

  Token expect_keyword(const std::string& kw) {
    const Token t = expect_word("'" + kw + "'");
    if (t.text != kw || t.quoted)
      throw ParseError(t.line, t.col,
                       "expected '" + kw + "', got '" + t.text + "'");
    return t;
  }

  /// Clauses inside braces are ';'-separated; the one before '}' may omit it.
  void end_clause() {
    if (lex_.peek().kind == Token::Kind::semi)
      lex_.next();
    else if (lex_.peek().kind != Token::Kind::rbrace)
      expect(Token::Kind::semi, "';'");
  }

  bool at_keyword(const std::string& kw) const {
    return lex_.peek().kind == Token::Kind::word && !lex_.peek().quoted &&
           lex_.peek().text == kw;
  }

  const Quantale& quantale(const Workspace& ws, const Token& where) const {
    if (!ws.quantale)
      throw ParseError(where.line, where.col,
                       "no quantale declared before this statement");
    return *ws.quantale;
  }

  std::size_t parse_number(const std::string& what) {
    const Token t = expect_word(what);
    std::size_t n = 0;
    if (t.text.empty() || t.quoted)
      throw ParseError(t.line, t.col, "expected " + what);
    for (char c : t.text) {
      if (c < '0' || c > '9')
        throw ParseError(t.line, t.col,
                         "expected " + what + ", got '" + t.text + "'");
      n = n * 10 + static_cast<std::size_t>(c - '0');
    }
    return n;
  }

  const FinSet& lookup_set(const Workspace& ws, const Token& name) const {
    const auto it = ws.sets.find(name.text);
    if (it == ws.sets.end())
      throw ParseError(name.line, name.col,
                       "unknown set '" + name.text + "'");
    return it->second;
  }

  const VMatrix& lookup_matrix(const Workspace& ws, const Token& name) const {
    const auto it = ws.matrices.find(name.text);
    if (it == ws.matrices.end())
      throw ParseError(name.line, name.col,
                       "unknown matrix '" + name.text + "'");
    return it->second;
  }

  std::size_t set_index(const FinSet& s, const Token& t) const {
    for (std::size_t i = 0; i < s.size(); ++i)
      if (s.label(i) == t.text) return i;
    throw ParseError(t.line, t.col, "'" + t.text + "' is not an element of " +
                                        s.name());
  }

  template <typename T>
  void insert_named(std::map<std::string, T>& into, const Token& name,
                    T value, const std::string& kind) {
    if (!into.emplace(name.text, std::move(value)).second)
      throw ParseError(name.line, name.col,
                       "duplicate " + kind + " '" + name.text + "'");
  }

  // quantale bool | godel n | lukasiewicz n | table { ... }
  void parse_quantale(Workspace& ws, const Token& head) {
    if (ws.quantale)
      throw ParseError(head.line, head.col,
                       "a workspace has a single quantale");
    const Token form = expect_word("quantale form");
    try {
      if (form.text == "bool" && !form.quoted) {
        ws.quantale = share(Quantale::boolean());
      } else if (form.text == "godel" && !form.quoted) {
        ws.quantale = share(Quantale::godel(parse_number("chain length")));
      } else if (form.text == "lukasiewicz" && !form.quoted) {
        ws.quantale =
            share(Quantale::lukasiewicz(parse_number("chain length")));
      } else if (form.text == "table" && !form.quoted) {
        ws.quantale = share(parse_quantale_table(form));
      } else {
        throw ParseError(form.line, form.col,
                         "expected bool, godel, lukasiewicz, or table");
      }
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(form.line, form.col, e.what());
    }
  }

  Quantale parse_quantale_table(const Token& head) {
    expect(Token::Kind::lbrace, "'{'");
    std::vector<std::string> labels;
    std::optional<Elem> bottom, unit;
    // Cell lists; symmetric gaps are mirrored before checking completeness.
    struct Cell {
      std::size_t a, b, c;
      int line, col;
    };
    std::vector<Cell> joins, tensors;
    const auto label_index = [&](const Token& t) {
      for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == t.text) return i;
      throw ParseError(t.line, t.col,
                       "'" + t.text + "' is not a declared element");
    };
    while (lex_.peek().kind != Token::Kind::rbrace) {
      const Token clause = expect_word("table clause");
      if (clause.text == "elements" && !clause.quoted) {
        if (!labels.empty())
          throw ParseError(clause.line, clause.col,
                           "duplicate elements clause");
        while (lex_.peek().kind == Token::Kind::word)
          labels.push_back(lex_.next().text);
        if (labels.empty())
          throw ParseError(clause.line, clause.col,
                           "elements clause lists at least one element");
      } else if ((clause.text == "bottom" || clause.text == "unit") &&
                 !clause.quoted) {
        auto& slot = clause.text == "bottom" ? bottom : unit;
        if (slot)
          throw ParseError(clause.line, clause.col,
                           "duplicate " + clause.text + " clause");
        slot = label_index(expect_word("element label"));
      } else if ((clause.text == "join" || clause.text == "tensor") &&
                 !clause.quoted) {
        const Token a = expect_word("element label");
        const Token bt = expect_word("element label");
        expect(Token::Kind::equals, "'='");
        const Token c = expect_word("element label");
        (clause.text == "join" ? joins : tensors)
            .push_back({label_index(a), label_index(bt), label_index(c),
                        clause.line, clause.col});
      } else {
        throw ParseError(clause.line, clause.col,
                         "expected elements, bottom, unit, join, or tensor");
      }
      end_clause();
    }
    expect(Token::Kind::rbrace, "'}'");
    if (labels.empty())
      throw ParseError(head.line, head.col, "table lacks an elements clause");
    if (!bottom || !unit)
      throw ParseError(head.line, head.col,
                       "table needs bottom and unit clauses");
    const std::size_t n = labels.size();
    const auto build = [&](const std::vector<Cell>& cells, bool join_table,
                           const char* op) {
      std::vector<std::optional<Elem>> t(n * n);
      for (const Cell& c : cells) {
        if (t[c.a * n + c.b] && *t[c.a * n + c.b] != c.c)
          throw ParseError(c.line, c.col,
                           std::string(op) + " " + labels[c.a] + " " +
                               labels[c.b] + " given twice");
        t[c.a * n + c.b] = c.c;
      }
      // Commutativity lets one triangle imply the other, and every join
      // is idempotent; anything still missing is an error.
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if (!t[a * n + b] && t[b * n + a]) t[a * n + b] = *t[b * n + a];
      if (join_table)
        for (std::size_t a = 0; a < n; ++a)
          if (!t[a * n + a]) t[a * n + a] = a;
      std::vector<Elem> out(n * n);
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          if (!t[a * n + b])
            throw ParseError(head.line, head.col,
                             std::string(op) + " " + labels[a] + " " +
                                 labels[b] + " is not specified");
          out[a * n + b] = *t[a * n + b];
        }
      return out;
    };
    return Quantale::from_tables("table", labels, build(joins, true, "join"),
                                 *bottom, build(tensors, false, "tensor"),
                                 *unit);
  }

  void parse_set(Workspace& ws) {
    const Token name = expect_word("set name");
    expect(Token::Kind::lbrace, "'{'");
    std::vector<std::string> labels;
    while (lex_.peek().kind == Token::Kind::word)
      labels.push_back(lex_.next().text);
    expect(Token::Kind::rbrace, "'}'");
    try {
      insert_named(ws.sets, name, FinSet(name.text, std::move(labels)),
                   "set");
    } catch (const ParseError&) {
      throw;
    } catch (const Error& e) {
      throw ParseError(name.line, name.col, e.what());
    }
  }

  /// Entry block `{ y x = q; ...; default = q; }` for src -> tgt.
  VMatrix parse_entry_block(const Workspace& ws, const Token& head,
                            const FinSet& src, const FinSet& tgt,
                            bool diagonal_unit) {
    const Quantale& q = quantale(ws, head);
    expect(Token::Kind::lbrace, "'{'");
    std::vector<std::optional<Elem>> cells(src.size() * tgt.size());
    std::optional<Elem> fallback;
    while (lex_.peek().kind != Token::Kind::rbrace) {
      const Token first = expect_word("entry key or default");
      if (first.text == "default" && !first.quoted) {
        if (fallback)
          throw ParseError(first.line, first.col, "duplicate default clause");
        expect(Token::Kind::equals, "'='");
        fallback = resolve_element(q, expect_word("element"));
      } else {
        const std::size_t y = set_index(tgt, first);
        const Token second = expect_word("source label");
        const std::size_t x = set_index(src, second);
        expect(Token::Kind::equals, "'='");
        if (cells[y * src.size() + x])
          throw ParseError(first.line, first.col,
                           "entry " + first.text + " " + second.text +
                               " given twice");
        cells[y * src.size() + x] = resolve_element(q, expect_word("element"));
      }
      end_clause();
    }
    expect(Token::Kind::rbrace, "'}'");
    VMatrix m(ws.quantale, src, tgt);
    for (std::size_t y = 0; y < tgt.size(); ++y)
      for (std::size_t x = 0; x < src.size(); ++x) {
        const auto& cell = cells[y * src.size() + x];
        Elem v = fallback.value_or(q.bottom());
        if (diagonal_unit && y == x && !cell) v = q.unit();
        m.set(y, x, cell.value_or(v));
      }
    return m;
  }

  void parse_matrix(Workspace& ws, const Token& head) {
    const Token name = expect_word("matrix name");
    expect(Token::Kind::colon, "':'");
    const FinSet src = lookup_set(ws, expect_word("source set"));
    expect(Token::Kind::arrow, "'->'");
    const FinSet tgt = lookup_set(ws, expect_word("target set"));
    insert_named(ws.matrices, name,
                 parse_entry_block(ws, head, src, tgt, false), "matrix");
  }

  void parse_category(Workspace& ws, const Token& head) {
    const Token name = expect_word("category name");
    expect_keyword("on");
    const FinSet x = lookup_set(ws, expect_word("object set"));
    Checked<QCategory> checked = [&] {
      if (at_keyword("from")) {
        lex_.next();
        const Token mat = expect_word("matrix name");
        const VMatrix& m = lookup_matrix(ws, mat);
        if (m.src() != x || m.tgt() != x)
          throw ParseError(mat.line, mat.col,
                           "matrix " + mat.text + " is not an endo-matrix on " +
                               x.name());
        return verify_category(m);
      }
      return verify_category(parse_entry_block(ws, head, x, x, true));
    }();
    if (!checked.ok())
      throw ParseError(name.line, name.col,
                       "category " + name.text + " rejected: " +
                           checked.report.to_string());
    insert_named(ws.categories, name, std::move(*checked.value), "category");
  }

  void parse_cocategory(Workspace& ws, const Token& head) {
    const Token name = expect_word("cocategory name");
    expect_keyword("on");
    const FinSet z = lookup_set(ws, expect_word("object set"));
    const Quantale& q = quantale(ws, head);
    expect(Token::Kind::lbrace, "'{'");
    std::vector<std::optional<Elem>> weights(z.size());
    std::optional<Elem> fallback;
    while (lex_.peek().kind != Token::Kind::rbrace) {
      const Token first = expect_word("object label or default");
      expect(Token::Kind::equals, "'='");
      const Elem v = resolve_element(q, expect_word("element"));
      if (first.text == "default" && !first.quoted) {
        if (fallback)
          throw ParseError(first.line, first.col, "duplicate default clause");
        fallback = v;
      } else {
        const std::size_t i = set_index(z, first);
        if (weights[i])
          throw ParseError(first.line, first.col,
                           "weight " + first.text + " given twice");
        weights[i] = v;
      }
      end_clause();
    }
    expect(Token::Kind::rbrace, "'}'");
    std::vector<Elem> w(z.size());
    for (std::size_t i = 0; i < z.size(); ++i)
      w[i] = weights[i].value_or(fallback.value_or(q.bottom()));
    Checked<QCocategory> checked = verify_cocategory(ws.quantale, z, w);
    if (!checked.ok())
      throw ParseError(name.line, name.col,
                       "cocategory " + name.text + " rejected: " +
                           checked.report.to_string());
    insert_named(ws.cocategories, name, std::move(*checked.value),
                 "cocategory");
  }

  void parse_module(Workspace& ws) {
    const Token name = expect_word("module name");
    expect(Token::Kind::colon, "':'");
    const FinSet u = lookup_set(ws, expect_word("source set"));
    expect(Token::Kind::arrow, "'->'");
    const Token catname = expect_word("category name");
    const auto cat = ws.categories.find(catname.text);
    if (cat == ws.categories.end())
      throw ParseError(catname.line, catname.col,
                       "unknown category '" + catname.text + "'");
    expect_keyword("from");
    const Token mat = expect_word("matrix name");
    const VMatrix& m = lookup_matrix(ws, mat);
    if (m.src() != u || m.tgt() != cat->second.objects)
      throw ParseError(mat.line, mat.col,
                       "matrix " + mat.text + " is not " + u.name() + " -> " +
                           cat->second.objects.name());
    Checked<QModule> checked = verify_module(cat->second, m);
    if (!checked.ok())
      throw ParseError(name.line, name.col,
                       "module " + name.text + " rejected: " +
                           checked.report.to_string());
    insert_named(ws.modules, name, std::move(*checked.value), "module");
  }

  void parse_comodule(Workspace& ws) {
    const Token name = expect_word("comodule name");
    expect(Token::Kind::colon, "':'");
    const FinSet v = lookup_set(ws, expect_word("source set"));
    expect(Token::Kind::arrow, "'->'");
    const Token cocname = expect_word("cocategory name");
    const auto coc = ws.cocategories.find(cocname.text);
    if (coc == ws.cocategories.end())
      throw ParseError(cocname.line, cocname.col,
                       "unknown cocategory '" + cocname.text + "'");
    expect_keyword("from");
    const Token mat = expect_word("matrix name");
    const VMatrix& m = lookup_matrix(ws, mat);
    if (m.src() != v || m.tgt() != coc->second.objects)
      throw ParseError(mat.line, mat.col,
                       "matrix " + mat.text + " is not " + v.name() + " -> " +
                           coc->second.objects.name());
    Checked<QComodule> checked = verify_comodule(coc->second, m);
    if (!checked.ok())
      throw ParseError(name.line, name.col,
                       "comodule " + name.text + " rejected: " +
                           checked.report.to_string());
    insert_named(ws.comodules, name, std::move(*checked.value), "comodule");
  }

  void parse_function(Workspace& ws) {
    const Token name = expect_word("function name");
    expect(Token::Kind::colon, "':'");
    const FinSet dom = lookup_set(ws, expect_word("domain set"));
    expect(Token::Kind::arrow, "'->'");
    const FinSet cod = lookup_set(ws, expect_word("codomain set"));
    expect(Token::Kind::lbrace, "'{'");
    std::vector<std::optional<std::size_t>> table(dom.size());
    while (lex_.peek().kind != Token::Kind::rbrace) {
      const Token a = expect_word("domain label");
      const std::size_t i = set_index(dom, a);
      expect(Token::Kind::equals, "'='");
      const std::size_t j = set_index(cod, expect_word("codomain label"));
      if (table[i])
        throw ParseError(a.line, a.col, "image of " + a.text + " given twice");
      table[i] = j;
      end_clause();
    }
    const Token close = expect(Token::Kind::rbrace, "'}'");
    std::vector<std::size_t> t(dom.size());
    for (std::size_t i = 0; i < dom.size(); ++i) {
      if (!table[i])
        throw ParseError(close.line, close.col,
                         "function " + name.text + " misses the image of " +
                             dom.label(i));
      t[i] = *table[i];
    }
    insert_named(ws.functions, name, Func(dom, cod, std::move(t)),
                 "function");
  }

  Lexer lex_;
};

}  // namespace detail

inline Workspace parse_workspace(const std::string& text) {
  return detail::Parser(text).run();
}

// ---- rendering back to workspace syntax ----------------------------------

/// Quotes a label whenever rereading it bare would go wrong.
inline std::string quote_label(const std::string& s) {
  bool needs = s.empty() || s == "bottom" || s == "unit" || s == "default";
  for (std::size_t i = 0; i < s.size() && !needs; ++i) {
    const char c = s[i];
    if (detail::is_space_byte(c) || detail::is_special_byte(c)) needs = true;
    if (c == '-' && i + 1 < s.size() && s[i + 1] == '>') needs = true;
  }
  if (!needs) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\n')
      throw ValidationError("label '" + s + "' cannot be quoted");
    out += c;
  }
  return out + "\"";
}

inline std::string render_quantale(const Quantale& q) {
  switch (q.family()) {
    case QuantaleFamily::boolean:
      return "quantale bool\n";
    case QuantaleFamily::godel:
      return "quantale godel " + std::to_string(q.chain_length()) + "\n";
    case QuantaleFamily::lukasiewicz:
      return "quantale lukasiewicz " + std::to_string(q.chain_length()) +
             "\n";
    case QuantaleFamily::table:
      break;
  }
  std::string out = "quantale table {\n  elements";
  for (Elem e = 0; e < q.size(); ++e) out += " " + quote_label(q.label(e));
  out += ";\n  bottom " + quote_label(q.label(q.bottom())) + ";\n  unit " +
         quote_label(q.label(q.unit())) + ";\n";
  for (Elem a = 0; a < q.size(); ++a)
    for (Elem b = a; b < q.size(); ++b)
      out += "  join " + quote_label(q.label(a)) + " " +
             quote_label(q.label(b)) + " = " +
             quote_label(q.label(q.join(a, b))) + ";\n";
  for (Elem a = 0; a < q.size(); ++a)
    for (Elem b = a; b < q.size(); ++b)
      out += "  tensor " + quote_label(q.label(a)) + " " +
             quote_label(q.label(b)) + " = " +
             quote_label(q.label(q.tensor(a, b))) + ";\n";
  return out + "}\n";
}

inline std::string render_set(const FinSet& s) {
  std::string out = "set " + quote_label(s.name()) + " {";
  for (std::size_t i = 0; i < s.size(); ++i)
    out += " " + quote_label(s.label(i));
  return out + " }\n";
}

namespace detail {

/// Non-bottom entries in carrier order; omitted cells reload as bottom.
inline std::string render_entries(const VMatrix& m) {
  const Quantale& q = m.quantale();
  std::string out = "{";
  for (std::size_t y = 0; y < m.tgt().size(); ++y)
    for (std::size_t x = 0; x < m.src().size(); ++x)
      if (m(y, x) != q.bottom())
        out += " " + quote_label(m.tgt().label(y)) + " " +
               quote_label(m.src().label(x)) + " = " +
               quote_label(q.label(m(y, x))) + ";";
  return out + " }";
}

}  // namespace detail

inline std::string render_matrix(const std::string& name, const VMatrix& m) {
  return "matrix " + quote_label(name) + " : " + quote_label(m.src().name()) +
         " -> " + quote_label(m.tgt().name()) + " " +
         detail::render_entries(m) + "\n";
}

inline std::string render_category(const std::string& name,
                                   const QCategory& a) {
  return "category " + quote_label(name) + " on " +
         quote_label(a.objects.name()) + " " + detail::render_entries(a.hom) +
         "\n";
}

inline std::string render_cocategory(const std::string& name,
                                     const QCocategory& c) {
  const Quantale& q = *c.q;
  std::string out = "cocategory " + quote_label(name) + " on " +
                    quote_label(c.objects.name()) + " {";
  for (std::size_t z = 0; z < c.objects.size(); ++z)
    if (c.weight[z] != q.bottom())
      out += " " + quote_label(c.objects.label(z)) + " = " +
             quote_label(q.label(c.weight[z])) + ";";
  return out + " }\n";
}

/// Modules and comodules render with their carrier matrix and base structure
/// under derived names, so the emitted text reloads standalone.
inline std::string render_module(const std::string& name, const QModule& m) {
  std::string out = render_matrix("mat(" + name + ")", m.mat);
  out += render_category("base(" + name + ")", m.over);
  out += "module " + quote_label(name) + " : " + quote_label(m.src.name()) +
         " -> " + quote_label("base(" + name + ")") + " from " +
         quote_label("mat(" + name + ")") + "\n";
  return out;
}

inline std::string render_comodule(const std::string& name,
                                   const QComodule& k) {
  std::string out = render_matrix("mat(" + name + ")", k.mat);
  out += render_cocategory("base(" + name + ")", k.over);
  out += "comodule " + quote_label(name) + " : " + quote_label(k.src.name()) +
         " -> " + quote_label("base(" + name + ")") + " from " +
         quote_label("mat(" + name + ")") + "\n";
  return out;
}

inline std::string render_function(const std::string& name, const Func& f) {
  std::string out = "function " + quote_label(name) + " : " +
                    quote_label(f.dom().name()) + " -> " +
                    quote_label(f.cod().name()) + " {";
  for (std::size_t i = 0; i < f.dom().size(); ++i)
    out += " " + quote_label(f.dom().label(i)) + " = " +
           quote_label(f.cod().label(f(i))) + ";";
  return out + " }\n";
}

}  // namespace qmat
