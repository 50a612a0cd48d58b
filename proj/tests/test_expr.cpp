#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gaugeforge/expr.hpp"
#include "testutil.hpp"

using namespace gaugeforge;
using namespace gaugeforge::testutil;

TEST_SUITE("expr") {

TEST_CASE("structure of 2*t + i*x") {
  ExprPtr e = parse("2*t + i*x");
  REQUIRE(e->kind == FieldExpr::Kind::Add);
  CHECK(e->lhs->kind == FieldExpr::Kind::Mul);
  CHECK(e->lhs->lhs->kind == FieldExpr::Kind::Literal);
  CHECK(e->lhs->lhs->literal == Complex(2.0, 0.0));
  CHECK(e->lhs->rhs->kind == FieldExpr::Kind::Coordinate);
  CHECK(e->lhs->rhs->coordinate == 0);
  CHECK(e->rhs->kind == FieldExpr::Kind::Mul);
  CHECK(e->rhs->lhs->literal == Complex(0.0, 1.0));
  CHECK(e->rhs->rhs->coordinate == 1);
}

TEST_CASE("power binds tighter than call argument context") {
  ExprPtr e = parse("sin(x1)^2");
  REQUIRE(e->kind == FieldExpr::Kind::Pow);
  CHECK(e->exponent == 2);
  CHECK(e->lhs->kind == FieldExpr::Kind::Call);
  CHECK(e->lhs->func == FieldExpr::Func::Sin);
  CHECK(e->lhs->lhs->coordinate == 1);
}

TEST_CASE("precedence and associativity") {
  // ^ > unary- > * / > + -
  ExprPtr e = parse("-x^2");
  REQUIRE(e->kind == FieldExpr::Kind::Neg);
  CHECK(e->lhs->kind == FieldExpr::Kind::Pow);

  ExprPtr f = parse("1 - 2 - 3");
  REQUIRE(f->kind == FieldExpr::Kind::Sub);
  CHECK(f->rhs->literal == Complex(3.0, 0.0));  // (1-2)-3

  ExprPtr g = parse("2*t+3/z");
  REQUIRE(g->kind == FieldExpr::Kind::Add);
  CHECK(g->rhs->kind == FieldExpr::Kind::Div);

  SpacetimePoint p{{0.0, 2.0, 0.0, 0.0}};
  CHECK(eval_expr(parse("2*x^2"), p, 0).value() == Complex(8.0));
  CHECK(eval_expr(parse("-x^2"), p, 0).value() == Complex(-4.0));
}

TEST_CASE("syntax errors carry byte offsets") {
  try {
    parse("1+");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& err) {
    CHECK(err.offset() == 2);
    CHECK(!err.expected().empty());
  }

  try {
    parse("sin 3");
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& err) {
    CHECK(err.offset() == 4);
  }

  CHECK_THROWS_AS(parse("foo(t)"), SyntaxError);
  CHECK_THROWS_AS(parse("t^x"), SyntaxError);     // exponent must be literal
  CHECK_THROWS_AS(parse("t^1.5"), SyntaxError);
  CHECK_THROWS_AS(parse("(t"), SyntaxError);
  CHECK_THROWS_AS(parse(""), SyntaxError);
  CHECK_THROWS_AS(parse("t $ x"), SyntaxError);
}

TEST_CASE("evaluation basics") {
  SpacetimePoint p{{3.0, 0.0, 0.0, 0.0}};
  Jet j = eval_expr(parse("t*t"), p, 2);
  CHECK(j.value() == Complex(9.0));
  CHECK(j.grad(0) == Complex(6.0));
  CHECK(j.hess(0, 0) == Complex(2.0));

  Jet c = eval_expr(parse("conj(i)"), p, 2);
  CHECK(c.value() == Complex(0.0, -1.0));
  for (int mu = 0; mu < 4; ++mu) CHECK(c.grad(mu) == Complex(0.0));

  CHECK(std::abs(eval_expr(parse("cos(pi)"), p, 0).value() - Complex(-1.0)) < 1e-15);
  CHECK(eval_expr(parse("x0 + x1 + x2 + x3"), SpacetimePoint{{1, 2, 3, 4}}, 0).value() ==
        Complex(10.0));
}

TEST_CASE("division by zero propagates") {
  SpacetimePoint p{{0.0, 0.0, 0.0, 0.0}};
  CHECK_THROWS_AS(eval_expr(parse("1/t"), p, 0), DivisionByZeroValue);
}

TEST_CASE("corpus expressions match finite differences") {
  const char* corpus[] = {
      "2*t + i*x - 0.5*y*z",
      "sin(x)^2 + cos(y)^2",
      "exp(0.3*t + 0.1*y)",
      "conj(i*t + x)*x",
      "(t + 0.2i)*(z - 0.7)",
      "t^3 - 2*x^2*y + z",
      "sin(2*x)*cos(t) + 0.3i*exp(0.2*z)",
      "1/(t + 4)",
      "pi*x - exp(0.1*t)*sin(y)",
      "(0.4 + 0.9i)*z^2 + conj(0.4i*t)",
  };
  std::mt19937_64 rng(2024);
  for (const char* src : corpus) {
    ExprPtr e = parse(src);
    for (int trial = 0; trial < 5; ++trial) {
      SpacetimePoint p = random_point(rng);
      auto f = [&](const SpacetimePoint& q, int order) { return eval_expr(e, q, order); };
      CHECK_MESSAGE(fd_error(f, p) < 1e-5, src);
    }
  }
}

TEST_CASE("deterministic parse") {
  const std::string src = "sin(2*x)*cos(t) - (0.25 + 1i)*z^3";
  ExprPtr a = parse(src);
  ExprPtr b = parse(src);
  CHECK(a->structurally_equal(*b));
}

TEST_CASE("print round-trips the AST") {
  const char* corpus[] = {
      "2*t + i*x",
      "sin(x1)^2",
      "-x^2 + t^(-3)",
      "conj(i*t + x)*x / (y + 5)",
      "pi - 1.25i*exp(z)",
      "1e-3*t + 2.5E2*x",
      "cos(-y)",
  };
  SpacetimePoint p{{0.3, -0.2, 0.8, -0.5}};
  for (const char* src : corpus) {
    ExprPtr e = parse(src);
    ExprPtr round = parse(print(e));
    CHECK_MESSAGE(e->structurally_equal(*round), src);
    CHECK(eval_expr(e, p, 2).value() == eval_expr(round, p, 2).value());
  }
}

TEST_CASE("whitespace insensitivity") {
  SpacetimePoint p{{1.5, 2.5, 0.0, 0.0}};
  CHECK(eval_expr(parse("2*t+x"), p, 0).value() ==
        eval_expr(parse("  2 * t + x  "), p, 0).value());
  CHECK(parse("2*t+x")->structurally_equal(*parse(" 2  *t  +  x ")));
}

TEST_CASE("imaginary literal suffix") {
  SpacetimePoint p{};
  CHECK(eval_expr(parse("2.5i"), p, 0).value() == Complex(0.0, 2.5));
  CHECK(eval_expr(parse("1e1i"), p, 0).value() == Complex(0.0, 10.0));
  // 'i' only counts as a suffix when not part of a longer identifier
  CHECK_THROWS_AS(parse("2ix"), SyntaxError);
}

}  // TEST_SUITE
