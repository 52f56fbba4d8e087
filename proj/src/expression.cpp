#include "expression.hpp"

#include <cctype>
#include <string>

namespace detarr::detail {
namespace {

class ExprParser {
 public:
  ExprParser(std::string_view text, int ambient) : text_(text), n_(ambient) {}

  ParsedExpr parse() {
    ParsedExpr e = sum();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("parse error at offset " + std::to_string(pos_) + ": " + msg, pos_);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  ParsedExpr zero() const { return ParsedExpr{Polynomial(n_), false, {}}; }

  void ensure_field(ParsedExpr& e) const {
    if (!e.has_field) {
      e.has_field = true;
      e.field.assign(2 * n_, Polynomial(n_));
    }
  }

  void add_into(ParsedExpr& acc, const ParsedExpr& rhs, bool subtract) const {
    if (subtract) {
      acc.scalar -= rhs.scalar;
    } else {
      acc.scalar += rhs.scalar;
    }
    if (rhs.has_field) {
      ensure_field(acc);
      for (std::size_t s = 0; s < acc.field.size(); ++s) {
        if (subtract) {
          acc.field[s] -= rhs.field[s];
        } else {
          acc.field[s] += rhs.field[s];
        }
      }
    }
  }

  ParsedExpr multiply(const ParsedExpr& a, const ParsedExpr& b) {
    if (a.has_field && b.has_field) fail("product of two derivation operators");
    ParsedExpr r = zero();
    r.scalar = a.scalar * b.scalar;
    const ParsedExpr* vec = a.has_field ? &a : (b.has_field ? &b : nullptr);
    if (vec != nullptr) {
      const Polynomial& factor = a.has_field ? b.scalar : a.scalar;
      ensure_field(r);
      for (std::size_t s = 0; s < r.field.size(); ++s) r.field[s] = factor * vec->field[s];
    }
    return r;
  }

  ParsedExpr sum() {
    ParsedExpr acc = term();
    while (true) {
      if (accept('+')) {
        add_into(acc, term(), false);
      } else if (accept('-')) {
        add_into(acc, term(), true);
      } else {
        return acc;
      }
    }
  }

  ParsedExpr term() {
    ParsedExpr acc = unary();
    while (accept('*')) acc = multiply(acc, unary());
    return acc;
  }

  ParsedExpr unary() {
    if (accept('-')) {
      ParsedExpr e = unary();
      ParsedExpr r = zero();
      add_into(r, e, true);
      return r;
    }
    return power();
  }

  ParsedExpr power() {
    ParsedExpr base = atom();
    if (accept('^')) {
      if (base.has_field) fail("cannot raise a derivation operator to a power");
      skip_ws();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected exponent");
      const unsigned long e = std::stoul(std::string(text_.substr(start, pos_ - start)));
      if (e > 255) fail("exponent too large");
      base.scalar = base.scalar.pow(static_cast<unsigned>(e));
    }
    return base;
  }

  int index() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected variable index");
    const long i = std::stol(std::string(text_.substr(start, pos_ - start)));
    if (i < 1 || i > n_) fail("variable index " + std::to_string(i) + " outside 1.." + std::to_string(n_));
    return static_cast<int>(i);
  }

  ParsedExpr atom() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      ParsedExpr e = sum();
      if (!accept(')')) fail("expected ')'");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      ParsedExpr e = zero();
      e.scalar = Polynomial::constant(n_, Integer(std::string(text_.substr(start, pos_ - start))));
      return e;
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      const int i = index();
      ParsedExpr e = zero();
      e.scalar = Polynomial::variable(n_, c == 'x' ? VarId::x(i) : VarId::y(i));
      return e;
    }
    if (text_.substr(pos_, 3) == "d/d") {
      pos_ += 3;
      if (pos_ >= text_.size() || (text_[pos_] != 'x' && text_[pos_] != 'y')) fail("expected d/dx<i> or d/dy<i>");
      const VarKind kind = text_[pos_] == 'x' ? VarKind::X : VarKind::Y;
      ++pos_;
      const int i = index();
      ParsedExpr e = zero();
      ensure_field(e);
      e.field[VarId{kind, i}.slot()] = Polynomial::constant(n_, 1);
      return e;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

ParsedExpr parse_expression(std::string_view text, int ambient) {
  check_ambient(ambient);
  return ExprParser(text, ambient).parse();
}

}  // namespace detarr::detail
