#include "relhilb/polynomial_text.hpp"

#include <cctype>

#include "relhilb/errors.hpp"

namespace relhilb {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const std::vector<std::string>& vars, MonomialOrder order)
      : text_(text), vars_(vars), order_(order) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(message, 0, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc = term();
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    skip_space();
    bool negative = false;
    while (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) {
      negative ^= text_[pos_] == '-';
      ++pos_;
      skip_space();
    }
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return negative ? -acc : acc;
  }

  unsigned natural() {
    skip_space();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected a natural number exponent");
    std::string digits(text_.substr(start, pos_ - start));
    if (digits.size() > 5) fail("exponent too large");
    return static_cast<unsigned>(std::stoul(digits));
  }

  Polynomial power(Polynomial base) {
    if (!accept('^')) return base;
    unsigned e = natural();
    Polynomial r = Polynomial::constant(vars_.size(), BigRational(1), order_);
    for (unsigned i = 0; i < e; ++i) r = r * base;
    return r;
  }

  Polynomial factor() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return power(std::move(inner));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::size_t den_start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (den_start == pos_) fail("expected denominator");
      }
      BigRational value;
      try {
        value = BigRational::parse(text_.substr(start, pos_ - start));
      } catch (const ValidationError& e) {
        pos_ = start;
        fail(e.what());
      }
      return Polynomial::constant(vars_.size(), value, order_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return power(Polynomial::variable(vars_.size(), i, order_));
      throw UnknownVariable("unknown variable '" + name + "' at column " + std::to_string(start + 1));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  const std::vector<std::string>& vars_;
  MonomialOrder order_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const std::vector<std::string>& variables,
                            MonomialOrder order) {
  return Parser(text, variables, order).parse();
}

std::string to_string(const Polynomial& f, const std::vector<std::string>& variables) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const Term& t : f.terms()) {
    BigRational c = t.coeff;
    if (first) {
      if (c.sign() < 0) out += "-";
    } else {
      out += c.sign() < 0 ? " - " : " + ";
    }
    if (c.sign() < 0) c = -c;
    std::string mono;
    for (std::size_t i = 0; i < t.monomial.arity(); ++i) {
      unsigned e = t.monomial[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += i < variables.size() ? variables[i] : "x" + std::to_string(i);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    if (mono.empty()) out += c.to_string();
    else if (c.is_one()) out += mono;
    else out += c.to_string() + "*" + mono;
    first = false;
  }
  return out;
}

std::vector<std::string> default_variable_names(std::size_t arity) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < arity; ++i) names.push_back("x" + std::to_string(i));
  return names;
}

}  // namespace relhilb
