#include <cctype>
#include <string>

#include "gauss/error.hpp"
#include "gauss/radical.hpp"

namespace gauss::radical {

namespace {

int precedence(const Expr& e) {
  switch (e.op()) {
    case Op::Add:
    case Op::Sub: return 1;
    case Op::Mul:
    case Op::Div: return 2;
    case Op::Leaf: {
      const auto& q = e.value();
      return (q < 0 || q.get_den() != 1) ? 2 : 3;
    }
    case Op::Sqrt: return 3;
  }
  return 3;
}

const char* sexpr_name(Op op) {
  switch (op) {
    case Op::Add: return "add";
    case Op::Sub: return "sub";
    case Op::Mul: return "mul";
    case Op::Div: return "div";
    case Op::Sqrt: return "sqrt";
    case Op::Leaf: break;
  }
  return "";
}

void write_text(const Expr& e, std::string& out);

void write_text_operand(const Expr& e, bool parens, std::string& out) {
  if (parens) out += '(';
  write_text(e, out);
  if (parens) out += ')';
}

void write_text(const Expr& e, std::string& out) {
  switch (e.op()) {
    case Op::Leaf:
      out += e.value().get_str();
      return;
    case Op::Sqrt:
      out += "sqrt(";
      write_text(e.child(), out);
      out += ')';
      return;
    case Op::Add:
    case Op::Sub: {
      // Any leaf may lead a sum; on the right only nonnegative leaves and
      // products stay bare.
      write_text(e.lhs(), out);
      out += e.op() == Op::Add ? " + " : " - ";
      const bool rhs_parens =
          precedence(e.rhs()) <= 1 || (e.rhs().is_leaf() && e.rhs().value() < 0);
      write_text_operand(e.rhs(), rhs_parens, out);
      return;
    }
    case Op::Mul:
    case Op::Div: {
      const bool lhs_parens = precedence(e.lhs()) < 2 ||
                              (e.lhs().is_leaf() && e.lhs().value().get_den() != 1);
      write_text_operand(e.lhs(), lhs_parens, out);
      out += e.op() == Op::Mul ? "*" : "/";
      write_text_operand(e.rhs(), precedence(e.rhs()) <= 2, out);
      return;
    }
  }
}

void write_latex_leaf(const BigRational& q, std::string& out) {
  if (q.get_den() == 1) {
    out += q.get_str();
    return;
  }
  if (q < 0) out += '-';
  out += "\\frac{" + num::BigInt(abs(q.get_num())).get_str() + "}{" + q.get_den().get_str() + "}";
}

void write_latex(const Expr& e, std::string& out);

void write_latex_operand(const Expr& e, bool parens, std::string& out) {
  if (parens) out += "\\left(";
  write_latex(e, out);
  if (parens) out += "\\right)";
}

bool negative_leaf(const Expr& e) { return e.is_leaf() && e.value() < 0; }

void write_latex(const Expr& e, std::string& out) {
  switch (e.op()) {
    case Op::Leaf:
      write_latex_leaf(e.value(), out);
      return;
    case Op::Sqrt:
      out += "\\sqrt{";
      write_latex(e.child(), out);
      out += '}';
      return;
    case Op::Add:
    case Op::Sub:
      write_latex(e.lhs(), out);
      out += e.op() == Op::Add ? "+" : "-";
      write_latex_operand(e.rhs(), precedence(e.rhs()) == 1 || negative_leaf(e.rhs()), out);
      return;
    case Op::Mul:
      write_latex_operand(e.lhs(), precedence(e.lhs()) == 1, out);
      out += " \\cdot ";
      write_latex_operand(e.rhs(), precedence(e.rhs()) == 1 || negative_leaf(e.rhs()), out);
      return;
    case Op::Div:
      out += "\\frac{";
      write_latex(e.lhs(), out);
      out += "}{";
      write_latex(e.rhs(), out);
      out += '}';
      return;
  }
}

void write_sexpr(const Expr& e, std::string& out) {
  if (e.is_leaf()) {
    out += e.value().get_str();
    return;
  }
  out += '(';
  out += sexpr_name(e.op());
  out += ' ';
  write_sexpr(e.lhs(), out);
  if (e.op() != Op::Sqrt) {
    out += ' ';
    write_sexpr(e.rhs(), out);
  }
  out += ')';
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expr parse() {
    Expr e = expr();
    skip_space();
    if (pos_ != text_.size()) throw ParseError(pos_, "trailing input");
    return e;
  }

 private:
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  Expr expr() {
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unexpected end of input");
    if (text_[pos_] == '(') return list();
    if (text_[pos_] == ')') throw ParseError(pos_, "unexpected ')'");
    return atom();
  }

  std::string_view word() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && !std::isspace(static_cast<unsigned char>(text_[pos_])) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  Expr atom() {
    const std::size_t start = pos_;
    const std::string_view w = word();
    std::size_t i = 0;
    if (i < w.size() && w[i] == '-') ++i;
    const std::size_t num_begin = i;
    while (i < w.size() && std::isdigit(static_cast<unsigned char>(w[i]))) ++i;
    if (i == num_begin) throw ParseError(start, "expected a rational atom");
    const std::size_t slash = i;
    if (i < w.size() && w[i] == '/') {
      ++i;
      const std::size_t den_begin = i;
      while (i < w.size() && std::isdigit(static_cast<unsigned char>(w[i]))) ++i;
      if (i == den_begin) throw ParseError(start + i, "expected denominator digits");
    }
    if (i != w.size()) throw ParseError(start + i, "malformed rational atom");
    const num::BigInt numerator(std::string(w.substr(0, slash)));
    num::BigInt denominator = 1;
    if (slash < w.size()) denominator = num::BigInt(std::string(w.substr(slash + 1)));
    if (denominator == 0) throw ParseError(start, "zero denominator");
    return Expr(num::make_rational(numerator, denominator));
  }

  Expr list() {
    const std::size_t open = pos_;
    ++pos_;
    skip_space();
    const std::size_t op_pos = pos_;
    const std::string_view name = word();
    int arity = 2;
    Op op;
    if (name == "add") op = Op::Add;
    else if (name == "sub") op = Op::Sub;
    else if (name == "mul") op = Op::Mul;
    else if (name == "div") op = Op::Div;
    else if (name == "sqrt") { op = Op::Sqrt; arity = 1; }
    else throw ParseError(op_pos, "unknown operator '" + std::string(name) + "'");
    Expr a = expr();
    Expr result = op == Op::Sqrt ? sqrt(a) : Expr::make(op, a, expr());
    skip_space();
    if (pos_ >= text_.size()) throw ParseError(pos_, "unclosed '(' opened at " + std::to_string(open));
    if (text_[pos_] != ')') {
      throw ParseError(pos_, "expected ')' after " + std::to_string(arity) + " operand(s)");
    }
    ++pos_;
    return result;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

std::string serialize(const Expr& e, Format format) {
  std::string out;
  switch (format) {
    case Format::Text: write_text(e, out); break;
    case Format::Latex: write_latex(e, out); break;
    case Format::Sexpr: write_sexpr(e, out); break;
  }
  return out;
}

Expr parse_sexpr(std::string_view text) { return Parser(text).parse(); }

}  // namespace gauss::radical
