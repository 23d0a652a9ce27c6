#include "stringchase/expr.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <optional>

#include "stringchase/errors.hpp"

namespace stringchase {

ExprPtr ExprNode::constant(double v) {
  auto e = std::make_shared<ExprNode>();
  e->kind = Kind::Constant;
  e->value = v;
  return e;
}

ExprPtr ExprNode::variable(int index) {
  auto e = std::make_shared<ExprNode>();
  e->kind = Kind::Variable;
  e->index = index;
  return e;
}

ExprPtr ExprNode::make_unary(UnaryOp op, ExprPtr arg) {
  auto e = std::make_shared<ExprNode>();
  e->kind = Kind::Unary;
  e->unary = op;
  e->lhs = std::move(arg);
  return e;
}

ExprPtr ExprNode::make_binary(BinaryOp op, ExprPtr a, ExprPtr b) {
  auto e = std::make_shared<ExprNode>();
  e->kind = Kind::Binary;
  e->binary = op;
  e->lhs = std::move(a);
  e->rhs = std::move(b);
  return e;
}

bool structurally_equal(const ExprNode& a, const ExprNode& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprNode::Kind::Constant: return a.value == b.value;
    case ExprNode::Kind::Variable: return a.index == b.index;
    case ExprNode::Kind::Unary: return a.unary == b.unary && structurally_equal(*a.lhs, *b.lhs);
    case ExprNode::Kind::Binary:
      return a.binary == b.binary && structurally_equal(*a.lhs, *b.lhs) && structurally_equal(*a.rhs, *b.rhs);
  }
  return false;
}

double evaluate(const ExprNode& e, std::span<const double> x) {
  switch (e.kind) {
    case ExprNode::Kind::Constant: return e.value;
    case ExprNode::Kind::Variable: return x[static_cast<std::size_t>(e.index - 1)];
    case ExprNode::Kind::Unary: {
      const double t = evaluate(*e.lhs, x);
      switch (e.unary) {
        case UnaryOp::Neg: return -t;
        case UnaryOp::Sin: return std::sin(t);
        case UnaryOp::Cos: return std::cos(t);
        case UnaryOp::ExpNeg: return std::exp(-t);
        case UnaryOp::Sqrt: return std::sqrt(std::max(t, 0.0));
        case UnaryOp::Abs: return std::abs(t);
      }
      break;
    }
    case ExprNode::Kind::Binary: {
      const double a = evaluate(*e.lhs, x);
      const double b = evaluate(*e.rhs, x);
      switch (e.binary) {
        case BinaryOp::Add: return a + b;
        case BinaryOp::Sub: return a - b;
        case BinaryOp::Mul: return a * b;
        case BinaryOp::Min: return std::min(a, b);
        case BinaryOp::Max: return std::max(a, b);
        case BinaryOp::Pow: return std::pow(a, b);
      }
      break;
    }
  }
  return 0.0;
}

namespace {

std::string format_constant(double v) {
  char buf[400];
  auto res = std::to_chars(buf, buf + sizeof buf, v, std::chars_format::fixed);
  return std::string(buf, res.ptr);
}

std::string_view unary_name(UnaryOp op) {
  switch (op) {
    case UnaryOp::Neg: return "-";
    case UnaryOp::Sin: return "sin";
    case UnaryOp::Cos: return "cos";
    case UnaryOp::ExpNeg: return "expneg";
    case UnaryOp::Sqrt: return "sqrt";
    case UnaryOp::Abs: return "abs";
  }
  return "?";
}

}  // namespace

std::string to_string(const ExprNode& e) {
  switch (e.kind) {
    case ExprNode::Kind::Constant: return format_constant(e.value);
    case ExprNode::Kind::Variable: return "x" + std::to_string(e.index);
    case ExprNode::Kind::Unary:
      if (e.unary == UnaryOp::Neg) return "-(" + to_string(*e.lhs) + ")";
      return std::string(unary_name(e.unary)) + "(" + to_string(*e.lhs) + ")";
    case ExprNode::Kind::Binary: {
      const std::string a = to_string(*e.lhs);
      const std::string b = to_string(*e.rhs);
      switch (e.binary) {
        case BinaryOp::Add: return "(" + a + " + " + b + ")";
        case BinaryOp::Sub: return "(" + a + " - " + b + ")";
        case BinaryOp::Mul: return "(" + a + " * " + b + ")";
        case BinaryOp::Min: return "min2(" + a + ", " + b + ")";
        case BinaryOp::Max: return "max2(" + a + ", " + b + ")";
        case BinaryOp::Pow: return "(" + a + ")^" + std::to_string(static_cast<long long>(e.rhs->value));
      }
    }
  }
  return {};
}

RealPoint MapSpec::eval(std::span<const double> x) const {
  RealPoint out;
  out.reserve(components.size());
  for (const auto& c : components) out.push_back(std::clamp(evaluate(*c, x), 0.0, 1.0));
  return out;
}

std::string MapSpec::to_string() const {
  std::string out;
  for (std::size_t i = 0; i < components.size(); ++i) {
    if (i > 0) out += "; ";
    out += stringchase::to_string(*components[i]);
  }
  return out;
}

bool structurally_equal(const MapSpec& a, const MapSpec& b) {
  if (a.n != b.n || a.components.size() != b.components.size()) return false;
  for (std::size_t i = 0; i < a.components.size(); ++i) {
    if (!structurally_equal(*a.components[i], *b.components[i])) return false;
  }
  return true;
}

namespace {

class Parser {
 public:
  Parser(std::string_view text, int n) : text_(text), n_(n) {}

  MapSpec parse() {
    MapSpec spec;
    spec.n = n_;
    spec.components.push_back(expr());
    while (accept(';')) spec.components.push_back(expr());
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    if (static_cast<int>(spec.components.size()) != n_) {
      throw Error(Errc::ComponentCountMismatch, "expected " + std::to_string(n_) + " components, got " +
                                                    std::to_string(spec.components.size()));
    }
    return spec;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, Errc code = Errc::SyntaxError) const {
    throw Error(code, msg + " at position " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }

  void expect(char c) {
    if (!accept(c)) {
      const char got = peek();
      fail(std::string("expected '") + c + "' but found " + (got ? std::string("'") + got + "'" : "end of input"));
    }
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    while (true) {
      if (accept('+')) {
        lhs = ExprNode::make_binary(BinaryOp::Add, lhs, term());
      } else if (accept('-')) {
        lhs = ExprNode::make_binary(BinaryOp::Sub, lhs, term());
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    while (accept('*')) lhs = ExprNode::make_binary(BinaryOp::Mul, lhs, factor());
    return lhs;
  }

  ExprPtr factor() {
    const bool negate = accept('-');
    ExprPtr base = atom();
    if (accept('^')) {
      skip_space();
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("exponent must be a nonnegative integer");
      long long exponent = 0;
      auto res = std::from_chars(text_.data() + start, text_.data() + pos_, exponent);
      if (res.ec != std::errc{}) fail("exponent out of range");
      base = ExprNode::make_binary(BinaryOp::Pow, base, ExprNode::constant(static_cast<double>(exponent)));
    }
    return negate ? ExprNode::make_unary(UnaryOp::Neg, base) : base;
  }

  ExprPtr atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      ExprPtr inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return identifier();
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected '") + c + "'");
  }

  ExprPtr number() {
    const std::size_t start = pos_;
    auto digits = [&] {
      const std::size_t from = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return pos_ > from;
    };
    digits();
    if (pos_ < text_.size() && text_[pos_] == '.') {
      ++pos_;
      if (!digits()) fail("expected digits after '.'");
    }
    double value = 0.0;
    auto res = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (res.ec != std::errc{}) fail("bad number");
    return ExprNode::constant(value);
  }

  ExprPtr identifier() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);

    if (name.size() > 1 && name[0] == 'x' &&
        std::all_of(name.begin() + 1, name.end(), [](char d) { return std::isdigit(static_cast<unsigned char>(d)); })) {
      int index = 0;
      auto res = std::from_chars(name.data() + 1, name.data() + name.size(), index);
      if (res.ec != std::errc{} || index < 1 || index > n_) {
        pos_ = start;
        fail("variable " + std::string(name) + " outside x1..x" + std::to_string(n_), Errc::IndexOutOfRange);
      }
      return ExprNode::variable(index);
    }

    static constexpr std::pair<std::string_view, UnaryOp> kUnary[] = {
        {"sin", UnaryOp::Sin}, {"cos", UnaryOp::Cos}, {"expneg", UnaryOp::ExpNeg},
        {"sqrt", UnaryOp::Sqrt}, {"abs", UnaryOp::Abs}};
    static constexpr std::pair<std::string_view, BinaryOp> kBinary[] = {{"min2", BinaryOp::Min},
                                                                        {"max2", BinaryOp::Max}};

    std::optional<UnaryOp> unary;
    std::optional<BinaryOp> binary;
    for (const auto& [fname, op] : kUnary) {
      if (name == fname) unary = op;
    }
    for (const auto& [fname, op] : kBinary) {
      if (name == fname) binary = op;
    }
    if (!unary && !binary) {
      pos_ = start;
      fail("unknown identifier '" + std::string(name) + "'", Errc::UnknownIdentifier);
    }

    expect('(');
    std::vector<ExprPtr> args{expr()};
    while (accept(',')) args.push_back(expr());
    expect(')');
    const std::size_t want = unary ? 1 : 2;
    if (args.size() != want) {
      pos_ = start;
      fail(std::string(name) + " takes " + std::to_string(want) + " argument(s), got " + std::to_string(args.size()),
           Errc::ArityError);
    }
    if (unary) return ExprNode::make_unary(*unary, args[0]);
    return ExprNode::make_binary(*binary, args[0], args[1]);
  }

  std::string_view text_;
  int n_;
  std::size_t pos_ = 0;
};

}  // namespace

MapSpec parse_map(std::string_view text, int n) {
  if (n < 1) throw Error(Errc::InvalidArgument, "dimension must be >= 1");
  return Parser(text, n).parse();
}

MapFn to_map_fn(MapSpec spec, std::string name) {
  const int n = spec.n;
  if (name.empty()) name = spec.to_string();
  auto shared = std::make_shared<const MapSpec>(std::move(spec));
  return MapFn(n, std::move(name), [shared](std::span<const double> x) { return shared->eval(x); });
}

}  // namespace stringchase
