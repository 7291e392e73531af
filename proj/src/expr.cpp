#include "cuntz/expr.hpp"

#include <cctype>

#include "cuntz/errors.hpp"
#include "cuntz/state.hpp"

namespace cuntz {

namespace {

struct Token {
  enum class Type {
    integer, ident, lparen, rparen, lbracket, rbracket, comma, plus, minus, star, slash, quote, assign, end
  };
  Type type;
  std::string text;
  int line;
  int column;
};

using T = Token::Type;

std::vector<Token> lex(std::string_view src, int first_line) {
  std::vector<Token> out;
  int line = first_line;
  int column = 1;
  std::size_t k = 0;
  auto advance = [&] {
    if (src[k] == '\n') {
      ++line;
      column = 1;
    } else {
      ++column;
    }
    ++k;
  };
  while (k < src.size()) {
    const char c = src[k];
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance();
      continue;
    }
    if (c == '#') {
      while (k < src.size() && src[k] != '\n') advance();
      continue;
    }
    const int l = line;
    const int col = column;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string text;
      while (k < src.size() && std::isdigit(static_cast<unsigned char>(src[k]))) {
        text.push_back(src[k]);
        advance();
      }
      out.push_back({T::integer, text, l, col});
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string text;
      while (k < src.size() &&
             (std::isalnum(static_cast<unsigned char>(src[k])) || src[k] == '_')) {
        text.push_back(src[k]);
        advance();
      }
      out.push_back({T::ident, text, l, col});
      continue;
    }
    T type;
    switch (c) {
      case '(': type = T::lparen; break;
      case ')': type = T::rparen; break;
      case '[': type = T::lbracket; break;
      case ']': type = T::rbracket; break;
      case ',': type = T::comma; break;
      case '+': type = T::plus; break;
      case '-': type = T::minus; break;
      case '*': type = T::star; break;
      case '/': type = T::slash; break;
      case '\'': type = T::quote; break;
      case '=': type = T::assign; break;
      default:
        throw ParseError(l, col, std::string("unexpected character '") + c + "'");
    }
    out.push_back({type, std::string(1, c), l, col});
    advance();
  }
  out.push_back({T::end, "", line, column});
  return out;
}

bool is_expr_call(const std::string& name) {
  return name == "phi" || name == "inner" || name == "apply";
}

class Parser {
 public:
  Parser(std::string_view src, int rank, int first_line) : tokens_(lex(src, first_line)), rank_(rank) {}

  Statement statement() {
    Statement st;
    if (peek().type == T::ident && peek().text == "let") {
      take();
      const Token& name = expect(T::ident, "a name after 'let'");
      if (reserved(name.text)) {
        throw ParseError(name.line, name.column, "'" + name.text + "' is reserved");
      }
      st.binding = name.text;
      expect(T::assign, "'='");
    }
    st.expr = expr();
    expect_end();
    return st;
  }

  AstPtr whole_expr() {
    AstPtr e = expr();
    expect_end();
    return e;
  }

  std::shared_ptr<const MapAst> whole_map() {
    auto m = map();
    expect_end();
    return m;
  }

 private:
  static bool reserved(const std::string& name) {
    return name == "S" || name == "i" || name == "let" || is_expr_call(name);
  }

  const Token& peek(std::size_t ahead = 0) const {
    return tokens_[std::min(pos_ + ahead, tokens_.size() - 1)];
  }
  const Token& take() { return tokens_[pos_ < tokens_.size() - 1 ? pos_++ : pos_]; }

  [[noreturn]] void fail(const Token& at, const std::string& what) const {
    throw ParseError(at.line, at.column, what);
  }

  const Token& expect(T type, const std::string& what) {
    if (peek().type != type) {
      fail(peek(), "expected " + what + (peek().type == T::end ? " before end of input"
                                                                : ", found '" + peek().text + "'"));
    }
    return take();
  }

  void expect_end() {
    if (peek().type != T::end) fail(peek(), "unexpected '" + peek().text + "'");
  }

  static std::shared_ptr<Ast> node(Ast::Kind kind, const Token& at) {
    auto a = std::make_shared<Ast>();
    a->kind = kind;
    a->line = at.line;
    a->column = at.column;
    return a;
  }

  static AstPtr binary(Ast::Kind kind, const Token& at, AstPtr lhs, AstPtr rhs) {
    auto a = node(kind, at);
    a->args = {std::move(lhs), std::move(rhs)};
    return a;
  }

  AstPtr expr() {
    AstPtr lhs;
    if (peek().type == T::minus || peek().type == T::plus) {
      const Token& sign = take();
      AstPtr operand = term();
      if (sign.type == T::minus) {
        auto neg = node(Ast::Kind::neg, sign);
        neg->args = {std::move(operand)};
        lhs = std::move(neg);
      } else {
        lhs = std::move(operand);
      }
    } else {
      lhs = term();
    }
    while (peek().type == T::plus || peek().type == T::minus) {
      const Token& op = take();
      AstPtr rhs = term();
      lhs = binary(op.type == T::plus ? Ast::Kind::add : Ast::Kind::sub, op, std::move(lhs),
                   std::move(rhs));
    }
    return lhs;
  }

  bool starts_factor() const {
    T t = peek().type;
    return t == T::integer || t == T::ident || t == T::lparen;
  }

  AstPtr term() {
    AstPtr lhs = factor();
    while (true) {
      if (peek().type == T::star || peek().type == T::slash) {
        const Token& op = take();
        AstPtr rhs = factor();
        lhs = binary(op.type == T::star ? Ast::Kind::mul : Ast::Kind::div, op, std::move(lhs),
                     std::move(rhs));
      } else if (starts_factor()) {
        const Token& at = peek();
        AstPtr rhs = factor();
        lhs = binary(Ast::Kind::mul, at, std::move(lhs), std::move(rhs));
      } else {
        return lhs;
      }
    }
  }

  AstPtr factor() {
    AstPtr p = primary();
    while (peek().type == T::quote) {
      const Token& q = take();
      auto adj = node(Ast::Kind::adjoint, q);
      adj->args = {std::move(p)};
      p = std::move(adj);
    }
    return p;
  }

  int generator_index() {
    const Token& t = expect(T::integer, "a generator index");
    int value = 0;
    try {
      value = std::stoi(t.text);
    } catch (const std::out_of_range&) {
      fail(t, "index exceeds rank " + std::to_string(rank_));
    }
    if (value < 1) fail(t, "generator indices start at 1");
    if (value > rank_) fail(t, "index exceeds rank " + std::to_string(rank_));
    return value;
  }

  // Comma separated items up to the closing parenthesis.
  template <class F>
  std::size_t list(F&& item) {
    std::size_t count = 0;
    if (peek().type == T::rparen) {
      take();
      return 0;
    }
    while (true) {
      item();
      ++count;
      if (peek().type == T::comma) {
        take();
        continue;
      }
      expect(T::rparen, "',' or ')'");
      return count;
    }
  }

  void check_arity(const Token& at, std::size_t expected, std::size_t got) const {
    if (expected != got) {
      fail(at, "arity mismatch: " + at.text + " expects " + std::to_string(expected) +
                   " argument" + (expected == 1 ? "" : "s") + ", got " + std::to_string(got));
    }
  }

  AstPtr primary() {
    const Token& t = peek();
    switch (t.type) {
      case T::integer: {
        take();
        auto a = node(Ast::Kind::scalar, t);
        a->value = Gaussian(Rational::parse(t.text));
        return a;
      }
      case T::lparen: {
        take();
        AstPtr inner = expr();
        expect(T::rparen, "')'");
        return inner;
      }
      case T::ident:
        break;
      default:
        fail(t, t.type == T::end ? "unexpected end of input" : "unexpected '" + t.text + "'");
    }

    take();
    if (t.text == "i") {
      auto a = node(Ast::Kind::scalar, t);
      a->value = Gaussian::i();
      return a;
    }
    if (t.text == "S") {
      expect(T::lbracket, "'[' after S");
      auto a = node(Ast::Kind::generator, t);
      a->letters.push_back(generator_index());
      while (peek().type == T::comma) {
        take();
        a->letters.push_back(generator_index());
      }
      expect(T::rbracket, "']'");
      return a;
    }
    if (peek().type == T::lparen) {
      take();
      if (t.text == "phi" || t.text == "inner") {
        auto a = node(t.text == "phi" ? Ast::Kind::phi : Ast::Kind::inner, t);
        std::size_t count = list([&] { a->args.push_back(expr()); });
        check_arity(t, t.text == "phi" ? 1 : 2, count);
        return a;
      }
      if (t.text == "apply") {
        auto a = node(Ast::Kind::apply, t);
        std::size_t count = list([&] {
          if (!a->map) {
            a->map = map();
          } else {
            a->args.push_back(expr());
          }
        });
        check_arity(t, 2, count);
        return a;
      }
      fail(t, "unknown function '" + t.text + "'");
    }
    auto a = node(Ast::Kind::name, t);
    a->name = t.text;
    return a;
  }

  std::shared_ptr<MapAst> map_node(MapAst::Kind kind, const Token& at) {
    auto m = std::make_shared<MapAst>();
    m->kind = kind;
    m->line = at.line;
    m->column = at.column;
    return m;
  }

  std::shared_ptr<const MapAst> map() {
    const Token& t = expect(T::ident, "a map");
    if (t.text == "Phi") return map_node(MapAst::Kind::phi, t);
    if (t.text == "Psi") return map_node(MapAst::Kind::psi, t);
    if (t.text == "id") return map_node(MapAst::Kind::id, t);

    std::shared_ptr<MapAst> m;
    if (t.text == "ad") {
      m = map_node(MapAst::Kind::ad, t);
    } else if (t.text == "kraus") {
      m = map_node(MapAst::Kind::kraus, t);
    } else if (t.text == "hom") {
      m = map_node(MapAst::Kind::hom, t);
    } else if (t.text == "compose") {
      m = map_node(MapAst::Kind::compose, t);
    } else if (t.text == "sum") {
      m = map_node(MapAst::Kind::sum, t);
    } else if (t.text == "qfree") {
      m = map_node(MapAst::Kind::qfree, t);
    } else {
      fail(t, "unknown map '" + t.text + "'");
    }
    expect(T::lparen, "'(' after " + t.text);

    switch (m->kind) {
      case MapAst::Kind::ad:
        check_arity(t, 1, list([&] { m->exprs.push_back(expr()); }));
        break;
      case MapAst::Kind::hom:
        check_arity(t, static_cast<std::size_t>(rank_), list([&] { m->exprs.push_back(expr()); }));
        break;
      case MapAst::Kind::compose:
        check_arity(t, 2, list([&] { m->maps.push_back(map()); }));
        break;
      case MapAst::Kind::sum:
        if (list([&] { m->maps.push_back(map()); }) == 0) fail(t, "sum needs at least one map");
        break;
      case MapAst::Kind::kraus:
        if (list([&] {
              expect(T::lparen, "'(' opening a (weight, operator) pair");
              m->exprs.push_back(expr());
              expect(T::comma, "','");
              m->exprs.push_back(expr());
              expect(T::rparen, "')' closing a (weight, operator) pair");
            }) == 0) {
          fail(t, "kraus needs at least one (weight, operator) pair");
        }
        break;
      case MapAst::Kind::qfree: {
        expect(T::lbracket, "'[' opening the matrix");
        while (true) {
          const Token& row_start = expect(T::lbracket, "'[' opening a matrix row");
          std::vector<AstPtr> row{expr()};
          while (peek().type == T::comma) {
            take();
            row.push_back(expr());
          }
          expect(T::rbracket, "']' closing a matrix row");
          if (static_cast<int>(row.size()) != rank_) {
            fail(row_start, "arity mismatch: matrix rows need " + std::to_string(rank_) + " entries");
          }
          m->rows.push_back(std::move(row));
          if (peek().type != T::comma) break;
          take();
        }
        expect(T::rbracket, "']' closing the matrix");
        expect(T::rparen, "')'");
        if (static_cast<int>(m->rows.size()) != rank_) {
          fail(t, "arity mismatch: qfree needs a " + std::to_string(rank_) + "x" +
                      std::to_string(rank_) + " matrix");
        }
        break;
      }
      default:
        break;
    }
    return m;
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  int rank_;
};

Element as_element(const Value& v, int rank) {
  if (const auto* e = std::get_if<Element>(&v)) return *e;
  return Element::scalar(rank, std::get<Gaussian>(v));
}

const Gaussian& as_scalar_value(const Value& v, const Ast& at, const std::string& what) {
  if (const auto* g = std::get_if<Gaussian>(&v)) return *g;
  throw ParseError(at.line, at.column, what + " must be a scalar");
}

}  // namespace

AstPtr parse(std::string_view src, int rank, int first_line) {
  if (rank < 2) throw DomainError("rank must be at least 2");
  return Parser(src, rank, first_line).whole_expr();
}

Statement parse_statement(std::string_view src, int rank, int first_line) {
  if (rank < 2) throw DomainError("rank must be at least 2");
  return Parser(src, rank, first_line).statement();
}

std::shared_ptr<const MapAst> parse_map(std::string_view src, int rank) {
  if (rank < 2) throw DomainError("rank must be at least 2");
  return Parser(src, rank, 1).whole_map();
}

std::string to_string(const Value& v) {
  return std::visit([](const auto& x) { return x.to_string(); }, v);
}

Value Evaluator::eval(const Ast& ast) const {
  using K = Ast::Kind;
  auto arg = [&](std::size_t k) { return eval(*ast.args[k]); };
  switch (ast.kind) {
    case K::scalar:
      return ast.value;
    case K::generator:
      return Element::isometry(Word(rank_, ast.letters));
    case K::name: {
      auto it = bindings_.find(ast.name);
      if (it == bindings_.end()) {
        throw ParseError(ast.line, ast.column, "unknown name '" + ast.name + "'");
      }
      return it->second;
    }
    case K::neg: {
      Value v = arg(0);
      if (auto* g = std::get_if<Gaussian>(&v)) return -*g;
      return -std::get<Element>(v);
    }
    case K::adjoint: {
      Value v = arg(0);
      if (auto* g = std::get_if<Gaussian>(&v)) return g->conj();
      return std::get<Element>(v).adjoint();
    }
    case K::add:
    case K::sub:
    case K::mul: {
      Value a = arg(0);
      Value b = arg(1);
      const auto* ga = std::get_if<Gaussian>(&a);
      const auto* gb = std::get_if<Gaussian>(&b);
      if (ga && gb) {
        if (ast.kind == K::add) return *ga + *gb;
        if (ast.kind == K::sub) return *ga - *gb;
        return *ga * *gb;
      }
      if (ast.kind == K::mul && ga) return std::get<Element>(b) * *ga;
      if (ast.kind == K::mul && gb) return std::get<Element>(a) * *gb;
      Element ea = as_element(a, rank_);
      Element eb = as_element(b, rank_);
      if (ast.kind == K::add) return ea + eb;
      if (ast.kind == K::sub) return ea - eb;
      return ea * eb;
    }
    case K::div: {
      Value a = arg(0);
      Value b = arg(1);
      const Gaussian& d = as_scalar_value(b, *ast.args[1], "a divisor");
      if (d.is_zero()) throw DivisionByZero();
      if (auto* g = std::get_if<Gaussian>(&a)) return *g / d;
      return std::get<Element>(a) * (Gaussian(1) / d);
    }
    case K::phi:
      return phi(as_element(arg(0), rank_));
    case K::inner:
      return inner(as_element(arg(0), rank_), as_element(arg(1), rank_));
    case K::apply:
      return apply(eval_map(*ast.map), as_element(arg(0), rank_));
  }
  throw Error("unreachable expression kind");
}

MapExpr Evaluator::eval_map(const MapAst& ast) const {
  using K = MapAst::Kind;
  auto element = [&](const AstPtr& e) { return as_element(eval(*e), rank_); };
  switch (ast.kind) {
    case K::phi:
      return canonical_endomorphism(rank_);
    case K::psi:
      return standard_left_inverse(rank_);
    case K::id:
      return MapExpr::identity(rank_);
    case K::ad:
      return MapExpr::ad(element(ast.exprs[0]));
    case K::kraus: {
      std::vector<std::pair<Rational, Element>> pairs;
      for (std::size_t k = 0; k + 1 < ast.exprs.size(); k += 2) {
        const Ast& w_ast = *ast.exprs[k];
        Value w = eval(w_ast);
        const Gaussian& g = as_scalar_value(w, w_ast, "a Kraus weight");
        if (!g.is_real() || g.re().sign() <= 0) {
          throw ParseError(w_ast.line, w_ast.column, "Kraus weights must be positive rationals");
        }
        pairs.emplace_back(g.re(), element(ast.exprs[k + 1]));
      }
      return MapExpr::kraus(std::move(pairs));
    }
    case K::hom: {
      std::vector<Element> images;
      for (const auto& e : ast.exprs) images.push_back(element(e));
      return MapExpr::homomorphism(std::move(images));
    }
    case K::compose:
      return MapExpr::compose(eval_map(*ast.maps[0]), eval_map(*ast.maps[1]));
    case K::sum: {
      std::vector<MapExpr> parts;
      for (const auto& m : ast.maps) parts.push_back(eval_map(*m));
      return MapExpr::sum(std::move(parts));
    }
    case K::qfree: {
      std::vector<std::vector<Gaussian>> rows;
      for (const auto& row : ast.rows) {
        std::vector<Gaussian> values;
        for (const auto& entry : row) {
          values.push_back(as_scalar_value(eval(*entry), *entry, "a matrix entry"));
        }
        rows.push_back(std::move(values));
      }
      return quasi_free(Matrix::from_rows(rows));
    }
  }
  throw Error("unreachable map kind");
}

Value Evaluator::run(const Statement& st) {
  Value v = eval(*st.expr);
  if (st.binding) {
    if (bindings_.count(*st.binding)) {
      throw ParseError(st.expr->line, st.expr->column,
                       "name '" + *st.binding + "' is already bound");
    }
    bindings_.emplace(*st.binding, v);
  }
  return v;
}

Value Evaluator::eval_text(std::string_view src, bool reduce) {
  Value v = run(parse_statement(src, rank_));
  if (reduce) {
    if (auto* e = std::get_if<Element>(&v)) return canonical_reduce(*e);
  }
  return v;
}

Value eval(const Ast& ast, int rank) {
  Value v = Evaluator(rank).eval(ast);
  if (auto* e = std::get_if<Element>(&v)) return canonical_reduce(*e);
  return v;
}

}  // namespace cuntz
