#include <cctype>
#include <optional>
#include <fstream>
#include <set>
#include <sstream>

#include "relhilb/errors.hpp"
#include "relhilb/polynomial_text.hpp"
#include "relhilb/problem.hpp"

namespace relhilb {

const Ideal& Problem::ideal(const std::string& name) const {
  for (const auto& [n, I] : ideals)
    if (n == name) return I;
  throw UsageError("no ideal named '" + name + "' in " + origin);
}

namespace {

enum class Tok { ident, number, string, punct, newline, end };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

std::vector<Token> lex(std::string_view src, std::vector<std::string_view>& lines) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1, i = 0, line_start = 0;
  auto push_line = [&](std::size_t end) { lines.push_back(src.substr(line_start, end - line_start)); };
  while (i < src.size()) {
    char c = src[i];
    if (c == '\n') {
      out.push_back({Tok::newline, "\n", line, col});
      push_line(i);
      ++i;
      ++line;
      col = 1;
      line_start = i;
      continue;
    }
    if (c == '#') {
      while (i < src.size() && src[i] != '\n') ++i, ++col;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i, ++col;
      continue;
    }
    const std::size_t start_col = col;
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) ++j;
      out.push_back({Tok::ident, std::string(src.substr(i, j - i)), line, start_col});
      col += j - i;
      i = j;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) ++j;
      out.push_back({Tok::number, std::string(src.substr(i, j - i)), line, start_col});
      col += j - i;
      i = j;
    } else if (c == '"') {
      std::size_t j = i + 1;
      while (j < src.size() && src[j] != '"' && src[j] != '\n') ++j;
      if (j >= src.size() || src[j] != '"') throw ParseError("unterminated string", line, start_col);
      out.push_back({Tok::string, std::string(src.substr(i + 1, j - i - 1)), line, start_col});
      col += j - i + 1;
      i = j + 1;
    } else {
      out.push_back({Tok::punct, std::string(1, c), line, start_col});
      ++i, ++col;
    }
  }
  push_line(src.size());
  out.push_back({Tok::end, "", line, col});
  return out;
}

class Parser {
 public:
  Parser(std::string_view src, std::string origin) : origin_(std::move(origin)) { toks_ = lex(src, lines_); }

  Problem run() {
    Problem p;
    p.origin = origin_;
    std::set<std::string> names;
    while (true) {
      skip_newlines();
      const Token& t = peek();
      if (t.kind == Tok::end) break;
      if (t.kind != Tok::ident) fail("expected 'ring', 'ideal' or 'task'", t);
      if (t.text == "ring") {
        if (p.ring) fail("second ring block", t);
        next();
        p.ring = ring_block();
      } else if (t.text == "ideal") {
        if (!p.ring) fail("ideal declared before the ring block", t);
        next();
        const Token& name = expect(Tok::ident, "ideal name");
        if (!names.insert(name.text).second) fail("duplicate ideal '" + name.text + "'", name);
        p.ideals.emplace_back(name.text, ideal_decl(p.ring, name.text));
      } else if (t.text == "task") {
        p.tasks.push_back(rest_of_line(t));
      } else {
        fail("unknown statement '" + t.text + "'", t);
      }
    }
    if (!p.ring) throw ParseError("missing ring block", peek().line, peek().col);
    return p;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& next() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& msg, const Token& t) const { throw ParseError(msg, t.line, t.col); }

  void skip_newlines() {
    while (peek().kind == Tok::newline) ++pos_;
  }

  const Token& expect(Tok kind, const std::string& what) {
    if (peek().kind != kind) fail("expected " + what, peek());
    return next();
  }

  void expect_punct(char c) {
    if (peek().kind != Tok::punct || peek().text[0] != c) fail(std::string("expected '") + c + "'", peek());
    next();
  }

  bool at_punct(char c) const { return peek().kind == Tok::punct && peek().text[0] == c; }

  std::string rest_of_line(const Token& t) {
    std::string_view line = lines_[t.line - 1];
    std::string_view rest = line.substr(t.col - 1 + t.text.size());
    if (auto hash = rest.find('#'); hash != std::string_view::npos) rest = rest.substr(0, hash);
    while (peek().kind != Tok::newline && peek().kind != Tok::end) ++pos_;
    std::string s(rest);
    s.erase(0, s.find_first_not_of(" \t\r"));
    s.erase(s.find_last_not_of(" \t\r") + 1);
    if (s.empty()) fail("empty task", t);
    return s;
  }

  // [a, "b", ...]; entries are identifiers or strings.
  std::vector<Token> list() {
    expect_punct('[');
    std::vector<Token> out;
    skip_newlines();
    while (!at_punct(']')) {
      if (peek().kind != Tok::ident && peek().kind != Tok::string) fail("expected a list entry", peek());
      out.push_back(next());
      skip_newlines();
      if (at_punct(',')) {
        next();
        skip_newlines();
      } else if (!at_punct(']')) {
        fail("expected ',' or ']'", peek());
      }
    }
    next();
    return out;
  }

  bool boolean() {
    const Token& t = expect(Tok::ident, "true or false");
    if (t.text == "true") return true;
    if (t.text == "false") return false;
    fail("expected true or false", t);
  }

  void end_statement() {
    if (at_punct(';')) {
      next();
      return;
    }
    if (peek().kind == Tok::newline || at_punct('}')) return;
    fail("expected end of statement", peek());
  }

  Ring ring_block() {
    const Token& open = peek();
    expect_punct('{');
    std::string label = "ring";
    std::vector<std::string> vars;
    std::vector<Token> relations;
    std::optional<unsigned> dim;
    bool gorenstein = false;
    std::set<std::string> seen;
    while (true) {
      skip_newlines();
      if (at_punct('}')) {
        next();
        break;
      }
      const Token& key = expect(Tok::ident, "key");
      if (!seen.insert(key.text).second) fail("duplicate key '" + key.text + "'", key);
      expect_punct('=');
      if (key.text == "label") {
        label = expect(Tok::string, "string").text;
      } else if (key.text == "vars") {
        for (const Token& v : list()) vars.push_back(v.text);
      } else if (key.text == "relations") {
        for (const Token& r : list()) {
          if (r.kind != Tok::string) fail("relations must be quoted", r);
          relations.push_back(r);
        }
      } else if (key.text == "dim") {
        dim = static_cast<unsigned>(std::stoul(expect(Tok::number, "integer").text));
      } else if (key.text == "gorenstein") {
        gorenstein = boolean();
      } else {
        fail("unknown key '" + key.text + "'", key);
      }
      end_statement();
    }
    if (vars.empty()) fail("ring block without vars", open);
    if (!dim) fail("ring block without dim", open);
    std::vector<Polynomial> rel;
    for (const Token& r : relations) rel.push_back(parse_at(r, vars));
    return std::make_shared<const RingPresentation>(label, vars, std::move(rel), *dim, gorenstein);
  }

  Polynomial parse_at(const Token& t, const std::vector<std::string>& vars) {
    try {
      return parse_polynomial(t.text, vars);
    } catch (const SyntaxError& e) {
      throw ParseError(e.message(), t.line, t.col + e.column());
    } catch (const UnknownVariable& e) {
      throw ParseError(e.what(), t.line, t.col);
    }
  }

  Ideal ideal_decl(const Ring& ring, const std::string& name) {
    expect_punct('=');
    Ideal I;
    if (peek().kind == Tok::ident && peek().text == "maximal") {
      next();
      I = Ideal::maximal(ring).named(name);
    } else if (peek().kind == Tok::ident && peek().text == "unit") {
      next();
      I = Ideal::unit(ring).named(name);
    } else {
      std::vector<Polynomial> gens;
      for (const Token& g : list()) {
        if (g.kind != Tok::string) fail("generators must be quoted", g);
        gens.push_back(parse_at(g, ring->variables()));
      }
      I = Ideal(ring, std::move(gens), {}, name);
    }
    if (peek().kind == Tok::ident && peek().text == "flags") {
      next();
      expect_punct('{');
      IdealFlags flags;
      while (true) {
        skip_newlines();
        if (at_punct('}')) {
          next();
          break;
        }
        const Token& key = expect(Tok::ident, "flag");
        expect_punct('=');
        if (key.text == "integrally_closed") {
          flags.integrally_closed = boolean();
        } else if (key.text == "asymptotically_normal") {
          flags.asymptotically_normal = boolean();
        } else {
          fail("unknown flag '" + key.text + "'", key);
        }
        end_statement();
      }
      I = I.with_flags(flags);
    }
    if (peek().kind != Tok::newline && peek().kind != Tok::end) fail("trailing input after ideal", peek());
    return I;
  }

  std::string origin_;
  std::vector<Token> toks_;
  std::vector<std::string_view> lines_;
  std::size_t pos_ = 0;
};

}  // namespace

Problem parse_problem(std::string_view text, std::string origin) { return Parser(text, std::move(origin)).run(); }

Problem load_problem(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  std::string text = ss.str();
  return parse_problem(text, path);
}

}  // namespace relhilb
