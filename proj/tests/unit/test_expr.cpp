#include "corpus.hpp"
#include "cuntz/errors.hpp"
#include "cuntz/expr.hpp"
#include "cuntz/maps.hpp"
#include "cuntz/random.hpp"
#include "doctest.h"

using namespace cuntz;

namespace {

Element as_element(const Value& v, int rank) {
  if (auto* g = std::get_if<Gaussian>(&v)) return Element::scalar(rank, *g);
  return std::get<Element>(v);
}

Value run(std::string_view src, int rank) { return eval(*parse(src, rank), rank); }

std::string printed(std::string_view src, int rank) { return to_string(run(src, rank)); }

// Line and column of the ParseError raised by `src`.
std::pair<int, int> error_at(std::string_view src, int rank) {
  try {
    run(src, rank);
  } catch (const ParseError& e) {
    return {e.line(), e.column()};
  }
  return {0, 0};
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("parse examples") {
  AstPtr ast = parse("S[1]S[1]'", 2);
  CHECK(ast->kind == Ast::Kind::mul);
  REQUIRE(ast->args.size() == 2);
  CHECK(ast->args[0]->kind == Ast::Kind::generator);
  CHECK(ast->args[1]->kind == Ast::Kind::adjoint);
  Element s = Element::generator(2, 1);
  Element square = (s + s.adjoint()) * (s + s.adjoint());
  CHECK(equals(as_element(run("(S[1]+S[1]')*(S[1]+S[1]')", 2), 2), square));
  CHECK_THROWS_WITH_AS(parse("S[3]", 2), doctest::Contains("index exceeds rank"), ParseError);
}

TEST_CASE("eval examples") {
  CHECK(printed("phi(S[1]S[1]')", 2) == "1/2");
  CHECK(printed("apply(Psi, S[1]S[1]')", 2) == "(1/2)*1");
  CHECK(printed("1 - (S[1]S[1]' + S[2]S[2]')", 2) == "0");
  CHECK(printed("inner(S[1], S[1])", 2) == "1");
  CHECK(printed("inner(i S[1], S[1])", 2) == "i");
  CHECK(printed("inner(S[1], i S[1])", 2) == "-i");
}

TEST_CASE("precedence") {
  CHECK(printed("S[1]S[2]'", 2) == "S[1]S[2]'");
  CHECK(printed("(S[1]S[2])'", 2) == "S[1,2]'");
  CHECK(printed("S[1]''", 2) == "S[1]");
  CHECK(printed("-S[1] + S[1]", 2) == "0");
  CHECK(printed("2 - 1 - 1", 2) == "0");
  CHECK(printed("S[1]/2/2", 2) == "(1/4)*S[1]");
  CHECK(printed("i i", 2) == "-1");
  CHECK(printed("i'", 2) == "-i");
  CHECK(printed("3/4", 2) == "3/4");
  CHECK(printed("3/4 + 0 S[1]", 2) == "(3/4)*1");
}

TEST_CASE("scalars stay scalars until mixed") {
  Value v = Evaluator(2).eval_text("phi(1) + 1/2");
  REQUIRE(std::holds_alternative<Gaussian>(v));
  CHECK(std::get<Gaussian>(v) == Gaussian(Rational(3, 2)));
}

TEST_CASE("map syntax") {
  CHECK(printed("apply(id, S[1])", 2) == "S[1]");
  CHECK(printed("apply(compose(Psi, Phi), S[1,2]S[2]')", 2) == "S[1,2]S[2]'");
  CHECK(printed("apply(qfree([[0,1],[1,0]]), S[1])", 2) == "S[2]");
  CHECK(printed("apply(hom(S[2], S[1]), S[1])", 2) == "S[2]");
  CHECK(printed("apply(kraus((1/2, 1)), S[1])", 2) == "(1/2)*S[1]");
  CHECK(printed("apply(sum(id, id), S[1])", 2) == "(2)*S[1]");
  CHECK(printed("apply(Phi, 1)", 3) == "1");
}

TEST_CASE("error positions") {
  CHECK(error_at("S[3]", 2) == std::pair{1, 3});
  CHECK(error_at("1 +\n  S[1] $", 2) == std::pair{2, 8});
  CHECK(error_at("foo(1)", 2) == std::pair{1, 1});
  CHECK(error_at("S[1] + (", 2).first == 1);
  CHECK(error_at("apply(Phi)", 2).first == 1);
  CHECK(error_at("x + 1", 2) == std::pair{1, 1});
}

TEST_CASE("parse errors") {
  auto throws_with = [](std::string_view src, int rank, const char* text) {
    CAPTURE(src);
    CHECK_THROWS_WITH_AS(run(src, rank), doctest::Contains(text), ParseError);
  };
  throws_with("S[0]", 2, "start at 1");
  throws_with("phi(1, 2)", 2, "arity mismatch");
  throws_with("inner(1)", 2, "arity mismatch");
  throws_with("apply(hom(S[1]), 1)", 2, "arity mismatch");
  throws_with("apply(qfree([[1,0]]), 1)", 2, "arity mismatch");
  throws_with("apply(qfree([[1,0,0],[0,1,0]]), 1)", 2, "arity mismatch");
  throws_with("sin(1)", 2, "unknown function");
  throws_with("apply(Foo, 1)", 2, "unknown map");
  throws_with("1 ? 2", 2, "unexpected character");
  throws_with("S[1] / S[2]", 2, "must be a scalar");
  throws_with("apply(kraus((-1, 1)), 1)", 2, "positive");
}

TEST_CASE("module errors propagate") {
  CHECK_THROWS_AS(run("S[1] / 0", 2), DivisionByZero);
  CHECK_THROWS_AS(run("apply(hom(S[1], S[1]), 1)", 2), DomainError);
  CHECK_THROWS_AS(run("apply(qfree([[1,1],[0,1]]), 1)", 2), DomainError);
}

TEST_CASE("bindings") {
  Evaluator ev(2);
  ev.run(parse_statement("let p = S[1]S[1]'", 2));
  ev.run(parse_statement("let q = 1 - p", 2));
  CHECK(to_string(ev.eval_text("p q")) == "0");
  CHECK(to_string(ev.eval_text("q")) == "S[2]S[2]'");
  CHECK_THROWS_AS(ev.run(parse_statement("let p = 1", 2)), ParseError);
  CHECK_THROWS_AS(parse_statement("let phi = 1", 2), ParseError);
  CHECK_THROWS_AS(parse_statement("let S = 1", 2), ParseError);
  CHECK(to_string(ev.eval_text("p # comment")) == "S[1]S[1]'");
}

TEST_CASE("corpus round trip") {
  auto corpus = load_corpus(std::string(CUNTZ_TEST_DATA) + "/data/corpus.txt");
  REQUIRE(corpus.size() == 30);
  for (const auto& [rank, text] : corpus) {
    CAPTURE(text);
    Element e = as_element(run(text, rank), rank);
    std::string once = e.to_string();
    Element back = as_element(run(once, rank), rank);
    CHECK(equals(back, e));
    CHECK(back == e);
    CHECK(back.to_string() == once);
    Element raw = as_element(Evaluator(rank).eval_text(text, false), rank);
    CHECK(equals(raw, e));
    CHECK(as_element(run(raw.to_string(), rank), rank) == e);
  }
}

TEST_CASE("printed random elements parse back") {
  for (int n : {2, 3}) {
    Sampler rng(80 + n);
    for (int t = 0; t < 100; ++t) {
      Element x = rng.element(n, 3, 4);
      Value v = Evaluator(n).eval_text(x.to_string(), false);
      CHECK(as_element(v, n) == x);
    }
  }
}

}
