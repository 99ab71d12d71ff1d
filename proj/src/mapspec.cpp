#include "coincider/mapspec.hpp"

#include <cctype>
#include <cmath>

#include "coincider/errors.hpp"
#include "json.hpp"

namespace coincider {

namespace {

struct Token {
  enum class Kind { Number, Ident, Op, LParen, RParen, Comma, End };
  Kind kind = Kind::End;
  std::string text;
};

class Lexer {
 public:
  explicit Lexer(const std::string& s) : s_(s) { advance(); }
  const Token& peek() const { return current_; }
  Token take() {
    Token t = current_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ >= s_.size()) {
      current_ = {Token::Kind::End, ""};
      return;
    }
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      std::string num;
      while (pos_ < s_.size() &&
             (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '.')) {
        num.push_back(s_[pos_++]);
      }
      current_ = {Token::Kind::Number, num};
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string ident;
      while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) ||
                                  s_[pos_] == '_')) {
        ident.push_back(s_[pos_++]);
      }
      current_ = {Token::Kind::Ident, ident};
    } else if (c == '(') {
      ++pos_;
      current_ = {Token::Kind::LParen, "("};
    } else if (c == ')') {
      ++pos_;
      current_ = {Token::Kind::RParen, ")"};
    } else if (c == ',') {
      ++pos_;
      current_ = {Token::Kind::Comma, ","};
    } else if (c == '+' || c == '-' || c == '*' || c == '/' || c == '^') {
      ++pos_;
      current_ = {Token::Kind::Op, std::string(1, c)};
    } else {
      throw InvalidInputError("unexpected character '" + std::string(1, c) + "' in expression");
    }
  }

  const std::string& s_;
  std::size_t pos_ = 0;
  Token current_;
};

class Parser {
 public:
  Parser(const std::string& text, int d) : lex_(text), d_(d) {}

  ExprPtr parse() {
    ExprPtr e = sum();
    if (lex_.peek().kind != Token::Kind::End) {
      throw InvalidInputError("trailing input in expression near '" + lex_.peek().text + "'");
    }
    return e;
  }

 private:
  static ExprPtr binary(char op, ExprPtr l, ExprPtr r) {
    auto e = std::make_shared<Expr>();
    e->kind = Expr::Kind::Binary;
    e->op = op;
    e->args = {std::move(l), std::move(r)};
    return e;
  }

  ExprPtr sum() {
    ExprPtr left = product();
    while (lex_.peek().kind == Token::Kind::Op &&
           (lex_.peek().text == "+" || lex_.peek().text == "-")) {
      const char op = lex_.take().text[0];
      left = binary(op, std::move(left), product());
    }
    return left;
  }

  ExprPtr product() {
    ExprPtr left = unary();
    while (lex_.peek().kind == Token::Kind::Op &&
           (lex_.peek().text == "*" || lex_.peek().text == "/")) {
      const char op = lex_.take().text[0];
      left = binary(op, std::move(left), unary());
    }
    return left;
  }

  // Unary minus binds looser than '^': -x^2 is -(x^2), while the exponent
  // itself may carry a sign: x^-2.
  ExprPtr unary() {
    if (lex_.peek().kind == Token::Kind::Op && lex_.peek().text == "-") {
      lex_.take();
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Unary;
      e->op = '-';
      e->args = {unary()};
      return e;
    }
    return power();
  }

  ExprPtr power() {
    ExprPtr base = primary();
    if (lex_.peek().kind == Token::Kind::Op && lex_.peek().text == "^") {
      lex_.take();
      return binary('^', std::move(base), unary());  // right associative
    }
    return base;
  }

  ExprPtr primary() {
    Token t = lex_.take();
    if (t.kind == Token::Kind::Number) {
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Constant;
      e->constant = parse_rational(t.text);
      return e;
    }
    if (t.kind == Token::Kind::LParen) {
      ExprPtr inner = sum();
      expect_rparen();
      return inner;
    }
    if (t.kind == Token::Kind::Ident) {
      if (t.text.size() >= 2 && t.text[0] == 'x') {
        bool digits = true;
        for (std::size_t i = 1; i < t.text.size(); ++i) {
          if (!std::isdigit(static_cast<unsigned char>(t.text[i]))) digits = false;
        }
        if (digits) {
          const int idx = std::stoi(t.text.substr(1));
          if (idx < 1 || idx > d_) {
            throw InvalidInputError("variable " + t.text + " out of range for dimension " +
                                    std::to_string(d_));
          }
          auto e = std::make_shared<Expr>();
          e->kind = Expr::Kind::Variable;
          e->var_index = idx - 1;
          return e;
        }
      }
      const int arity = (t.text == "sin" || t.text == "cos" || t.text == "exp") ? 1
                        : (t.text == "min" || t.text == "max" || t.text == "pow") ? 2
                                                                                  : 0;
      if (arity == 0) throw InvalidInputError("unknown function or variable '" + t.text + "'");
      if (lex_.take().kind != Token::Kind::LParen) {
        throw InvalidInputError("expected '(' after " + t.text);
      }
      auto e = std::make_shared<Expr>();
      e->kind = Expr::Kind::Call;
      e->fn = t.text;
      e->args.push_back(sum());
      for (int i = 1; i < arity; ++i) {
        if (lex_.take().kind != Token::Kind::Comma) {
          throw InvalidInputError(t.text + " expects " + std::to_string(arity) + " arguments");
        }
        e->args.push_back(sum());
      }
      expect_rparen();
      return e;
    }
    throw InvalidInputError("unexpected token '" + t.text + "' in expression");
  }

  void expect_rparen() {
    if (lex_.take().kind != Token::Kind::RParen) throw InvalidInputError("expected ')'");
  }

  Lexer lex_;
  int d_;
};

bool is_integer_constant(const Expr& e, long long* out) {
  if (e.kind == Expr::Kind::Unary && e.op == '-') {
    if (!is_integer_constant(*e.args[0], out)) return false;
    *out = -*out;
    return true;
  }
  if (e.kind != Expr::Kind::Constant) return false;
  if (boost::multiprecision::denominator(e.constant) != 1) return false;
  *out = static_cast<long long>(boost::multiprecision::numerator(e.constant));
  return true;
}

}  // namespace

ExprPtr parse_expr(const std::string& text, int d) { return Parser(text, d).parse(); }

double eval_double(const Expr& e, const std::vector<double>& x) {
  switch (e.kind) {
    case Expr::Kind::Constant:
      return static_cast<double>(e.constant);
    case Expr::Kind::Variable:
      return x[e.var_index];
    case Expr::Kind::Unary:
      return -eval_double(*e.args[0], x);
    case Expr::Kind::Binary: {
      const double a = eval_double(*e.args[0], x);
      const double b = eval_double(*e.args[1], x);
      switch (e.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/':
          if (b == 0) throw EvaluationError("division by zero");
          return a / b;
        case '^': return std::pow(a, b);
      }
      throw EvaluationError("bad operator");
    }
    case Expr::Kind::Call: {
      const double a = eval_double(*e.args[0], x);
      if (e.fn == "sin") return std::sin(a);
      if (e.fn == "cos") return std::cos(a);
      if (e.fn == "exp") return std::exp(a);
      const double b = eval_double(*e.args[1], x);
      if (e.fn == "min") return std::min(a, b);
      if (e.fn == "max") return std::max(a, b);
      if (e.fn == "pow") return std::pow(a, b);
      throw EvaluationError("bad function");
    }
  }
  throw EvaluationError("bad expression node");
}

namespace {

Rational rational_pow(const Rational& base, long long n) {
  if (n == 0) return Rational(1);
  if (base == 0) {
    if (n < 0) throw EvaluationError("zero raised to a negative power");
    return Rational(0);
  }
  Rational acc = 1;
  Rational b = base;
  long long e = n < 0 ? -n : n;
  while (e > 0) {
    if (e & 1) acc *= b;
    b *= b;
    e >>= 1;
  }
  return n < 0 ? Rational(1) / acc : acc;
}

}  // namespace

Rational eval_rational(const Expr& e, const std::vector<Rational>& x) {
  switch (e.kind) {
    case Expr::Kind::Constant:
      return e.constant;
    case Expr::Kind::Variable:
      return x[e.var_index];
    case Expr::Kind::Unary:
      return -eval_rational(*e.args[0], x);
    case Expr::Kind::Binary: {
      const Rational a = eval_rational(*e.args[0], x);
      if (e.op == '^') {
        long long n = 0;
        if (!is_integer_constant(*e.args[1], &n)) {
          throw NonRationalError("only integer constant exponents evaluate exactly");
        }
        return rational_pow(a, n);
      }
      const Rational b = eval_rational(*e.args[1], x);
      switch (e.op) {
        case '+': return a + b;
        case '-': return a - b;
        case '*': return a * b;
        case '/':
          if (b == 0) throw EvaluationError("division by zero");
          return a / b;
      }
      throw EvaluationError("bad operator");
    }
    case Expr::Kind::Call: {
      if (e.fn == "sin" || e.fn == "cos" || e.fn == "exp") {
        throw NonRationalError(e.fn + " is not exactly evaluable");
      }
      const Rational a = eval_rational(*e.args[0], x);
      if (e.fn == "pow") {
        long long n = 0;
        if (!is_integer_constant(*e.args[1], &n)) {
          throw NonRationalError("only integer constant exponents evaluate exactly");
        }
        return rational_pow(a, n);
      }
      const Rational b = eval_rational(*e.args[1], x);
      if (e.fn == "min") return a < b ? a : b;
      if (e.fn == "max") return a > b ? a : b;
      throw EvaluationError("bad function");
    }
  }
  throw EvaluationError("bad expression node");
}

std::vector<double> MapSpec::eval(const std::vector<double>& x) const {
  if (static_cast<int>(x.size()) != d) throw EvaluationError("point dimension mismatch");
  std::vector<double> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(eval_double(*c, x));
  return out;
}

std::vector<Rational> MapSpec::eval(const std::vector<Rational>& x) const {
  if (static_cast<int>(x.size()) != d) throw EvaluationError("point dimension mismatch");
  std::vector<Rational> out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(eval_rational(*c, x));
  return out;
}

namespace {

bool expr_rational_evaluable(const Expr& e) {
  switch (e.kind) {
    case Expr::Kind::Constant:
    case Expr::Kind::Variable:
      return true;
    case Expr::Kind::Unary:
      return expr_rational_evaluable(*e.args[0]);
    case Expr::Kind::Binary: {
      if (e.op == '^') {
        long long n = 0;
        return is_integer_constant(*e.args[1], &n) && expr_rational_evaluable(*e.args[0]);
      }
      return expr_rational_evaluable(*e.args[0]) && expr_rational_evaluable(*e.args[1]);
    }
    case Expr::Kind::Call: {
      if (e.fn == "sin" || e.fn == "cos" || e.fn == "exp") return false;
      if (e.fn == "pow") {
        long long n = 0;
        return is_integer_constant(*e.args[1], &n) && expr_rational_evaluable(*e.args[0]);
      }
      return expr_rational_evaluable(*e.args[0]) && expr_rational_evaluable(*e.args[1]);
    }
  }
  return false;
}

}  // namespace

bool MapSpec::rational_evaluable() const {
  for (const auto& c : components) {
    if (!expr_rational_evaluable(*c)) return false;
  }
  return true;
}

MapSpec make_linear_map(const std::vector<Rational>& u) {
  if (u.empty()) throw InvalidInputError("linear map needs at least one coefficient");
  MapSpec spec;
  spec.d = static_cast<int>(u.size());
  // Build sum(u_i * x_i) as a left-leaning tree.
  ExprPtr acc;
  for (int i = 0; i < spec.d; ++i) {
    auto coeff = std::make_shared<Expr>();
    coeff->kind = Expr::Kind::Constant;
    coeff->constant = u[i];
    auto var = std::make_shared<Expr>();
    var->kind = Expr::Kind::Variable;
    var->var_index = i;
    auto term = std::make_shared<Expr>();
    term->kind = Expr::Kind::Binary;
    term->op = '*';
    term->args = {coeff, var};
    if (!acc) {
      acc = term;
    } else {
      auto sum = std::make_shared<Expr>();
      sum->kind = Expr::Kind::Binary;
      sum->op = '+';
      sum->args = {acc, term};
      acc = sum;
    }
  }
  spec.components = {acc};
  return spec;
}

MapSpec map_from_json_text(const std::string& json_text, int d) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidInputError(std::string("bad map JSON: ") + e.what());
  }
  MapSpec spec;
  spec.d = d;
  if (j.contains("builtin")) {
    const std::string name = j["builtin"].get<std::string>();
    if (name == "linear") {
      std::vector<Rational> u;
      for (const auto& entry : j.at("u")) {
        u.push_back(entry.is_string() ? parse_rational(entry.get<std::string>())
                                      : parse_rational(entry.dump()));
      }
      if (static_cast<int>(u.size()) != d) {
        throw InvalidInputError("linear map coefficient count must equal the dimension");
      }
      return make_linear_map(u);
    }
    throw InvalidInputError("unknown builtin map '" + name + "'");
  }
  std::vector<std::string> texts;
  if (j.contains("exprs")) {
    for (const auto& entry : j["exprs"]) texts.push_back(entry.get<std::string>());
  } else if (j.contains("expr")) {
    texts.push_back(j["expr"].get<std::string>());
  } else {
    throw InvalidInputError("map JSON needs 'expr', 'exprs', or 'builtin'");
  }
  for (const auto& t : texts) spec.components.push_back(parse_expr(t, d));
  if (j.contains("m") && j["m"].get<int>() != spec.m()) {
    throw InvalidInputError("declared m does not match the number of components");
  }
  return spec;
}

}  // namespace coincider
