#pragma once

// Expression language for the command-line front end.
//
//   statement := 'let' name '=' expr | expr
//   expr      := ['+'|'-'] term (('+'|'-') term)*
//   term      := factor (['*'|'/'] factor)*        juxtaposition multiplies
//   factor    := primary "'"*                      postfix adjoint
//   primary   := int | 'i' | 'S[' int (',' int)* ']' | '(' expr ')' | name
//              | 'phi(' expr ')' | 'inner(' expr ',' expr ')' | 'apply(' map ',' expr ')'
//   map       := 'Phi' | 'Psi' | 'id' | 'ad(' expr ')' | 'kraus(' ('(' expr ',' expr ')')+ ')'
//              | 'hom(' expr+ ')' | 'compose(' map ',' map ')' | 'sum(' map+ ')'
//              | 'qfree([' '[' expr+ ']'+ '])'
//
// `compose(F, G)` is F o G. Division is only by scalars.

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "cuntz/algebra.hpp"
#include "cuntz/maps.hpp"

namespace cuntz {

struct MapAst;

struct Ast {
  enum class Kind { scalar, generator, name, add, sub, neg, mul, div, adjoint, phi, inner, apply };

  Kind kind;
  int line = 1;
  int column = 1;
  Gaussian value;              // scalar
  std::vector<int> letters;    // generator
  std::string name;            // name
  std::vector<std::shared_ptr<const Ast>> args;
  std::shared_ptr<const MapAst> map;  // apply
};

using AstPtr = std::shared_ptr<const Ast>;

struct MapAst {
  enum class Kind { phi, psi, id, ad, kraus, hom, compose, sum, qfree };

  Kind kind;
  int line = 1;
  int column = 1;
  std::vector<AstPtr> exprs;  // ad, hom; kraus as (weight, op) pairs
  std::vector<std::shared_ptr<const MapAst>> maps;
  std::vector<std::vector<AstPtr>> rows;  // qfree
};

struct Statement {
  std::optional<std::string> binding;
  AstPtr expr;
};

// Throws ParseError with the line and column of the offending token. Generator
// indices above `rank` are rejected here.
AstPtr parse(std::string_view src, int rank, int first_line = 1);
Statement parse_statement(std::string_view src, int rank, int first_line = 1);
std::shared_ptr<const MapAst> parse_map(std::string_view src, int rank);

using Value = std::variant<Element, Gaussian>;

std::string to_string(const Value& v);

// Evaluates expressions of one rank. Bound names are immutable.
class Evaluator {
 public:
  explicit Evaluator(int rank) : rank_(rank) {}

  int rank() const { return rank_; }

  Value eval(const Ast& ast) const;
  MapExpr eval_map(const MapAst& ast) const;

  // Evaluates and, for `let`, binds. Throws ParseError when rebinding a name.
  Value run(const Statement& st);

  // Elements are returned in canonical display form when `reduce` is set.
  Value eval_text(std::string_view src, bool reduce = true);

 private:
  int rank_;
  std::map<std::string, Value> bindings_;
};

// One-shot evaluation in canonical display form.
Value eval(const Ast& ast, int rank);

}  // namespace cuntz
