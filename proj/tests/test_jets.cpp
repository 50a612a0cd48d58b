#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gaugeforge/jet.hpp"
#include "testutil.hpp"

using namespace gaugeforge;
using namespace gaugeforge::testutil;

TEST_SUITE("jets") {

TEST_CASE("coordinate seed") {
  SpacetimePoint p{{2.0, 0.0, 0.0, 0.0}};
  Jet j = Jet::coordinate(0, p, 2);
  CHECK(j.value() == Complex(2.0));
  CHECK(j.grad(0) == Complex(1.0));
  CHECK(j.grad(1) == Complex(0.0));
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) CHECK(j.hess(mu, nu) == Complex(0.0));
}

TEST_CASE("order-0 seed carries value only") {
  SpacetimePoint p{{0.0, 7.5, 0.0, 0.0}};
  Jet j = Jet::coordinate(1, p, 0);
  CHECK(j.value() == Complex(7.5));
  CHECK_THROWS_AS((void)j.grad(1), OrderExhausted);
}

TEST_CASE("square by power rule") {
  SpacetimePoint p{{0.0, 0.0, 0.0, 5.0}};
  Jet x3 = Jet::coordinate(3, p, 2);
  Jet sq = x3 * x3;
  CHECK(sq.value() == Complex(25.0));
  CHECK(sq.grad(3) == Complex(10.0));
  CHECK(sq.hess(3, 3) == Complex(2.0));
}

TEST_CASE("product rule t*t") {
  SpacetimePoint p{{3.0, 0.0, 0.0, 0.0}};
  Jet t = Jet::coordinate(0, p, 2);
  Jet r = t * t;
  CHECK(r.value() == Complex(9.0));
  CHECK(r.grad(0) == Complex(6.0));
  CHECK(r.hess(0, 0) == Complex(2.0));
}

TEST_CASE("t/t collapses to the constant 1") {
  SpacetimePoint p{{2.0, 0.0, 0.0, 0.0}};
  Jet t = Jet::coordinate(0, p, 2);
  Jet r = t / t;
  CHECK(r.value() == Complex(1.0));
  for (int mu = 0; mu < 4; ++mu) CHECK(std::abs(r.grad(mu)) == 0.0);
  for (int mu = 0; mu < 4; ++mu)
    for (int nu = 0; nu < 4; ++nu) CHECK(std::abs(r.hess(mu, nu)) == 0.0);
}

TEST_CASE("division by zero value") {
  Jet zero = Jet::constant(0.0);
  Jet one = Jet::constant(1.0);
  CHECK_THROWS_AS(one / zero, DivisionByZeroValue);
  CHECK_THROWS_AS(pow_int(zero, -1), DivisionByZeroValue);
}

TEST_CASE("mixed-order arithmetic truncates to the lower order") {
  SpacetimePoint p{{1.0, 2.0, 3.0, 4.0}};
  Jet a = Jet::coordinate(0, p, 2);
  Jet b = Jet::coordinate(1, p, 1);
  CHECK((a * b).order() == 1);
  CHECK((a + b).order() == 1);
  Jet c = Jet::coordinate(2, p, 0);
  CHECK((a * c).order() == 0);
}

TEST_CASE("product derivatives match finite differences on random jets") {
  std::mt19937_64 rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    SpacetimePoint p = random_point(rng);
    // random smooth fields built from primitives
    auto fa = [&](const SpacetimePoint& q, int order) {
      Jet t = Jet::coordinate(0, q, order);
      Jet x = Jet::coordinate(1, q, order);
      return sin(t * 0.7 + x * x * 0.3) + Complex(0.0, 0.5) * x;
    };
    auto fb = [&](const SpacetimePoint& q, int order) {
      Jet y = Jet::coordinate(2, q, order);
      Jet z = Jet::coordinate(3, q, order);
      return exp(y * 0.2 - z * 0.4) + cos(z) * 0.9;
    };
    auto prod = [&](const SpacetimePoint& q, int order) {
      return fa(q, order) * fb(q, order);
    };
    CHECK(fd_error(prod, p) < 1e-6);
  }
}

TEST_CASE("sin at the origin") {
  SpacetimePoint p{{0.0, 0.0, 0.0, 0.0}};
  Jet r = sin(Jet::coordinate(1, p, 2));
  CHECK(r.value() == Complex(0.0));
  CHECK(r.grad(1) == Complex(1.0));
  CHECK(r.hess(1, 1) == Complex(0.0));
}

TEST_CASE("conj is antilinear") {
  SpacetimePoint p{{1.0, 0.0, 0.0, 0.0}};
  Jet it = Complex(0.0, 1.0) * Jet::coordinate(0, p, 2);
  Jet c = conj(it);
  CHECK(c.value() == Complex(0.0, -1.0));
  CHECK(c.grad(0) == Complex(0.0, -1.0));
}

TEST_CASE("exp derivatives vs finite differences") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 10; ++trial) {
    SpacetimePoint p = random_point(rng);
    auto f = [](const SpacetimePoint& q, int order) {
      Jet t = Jet::coordinate(0, q, order);
      Jet y = Jet::coordinate(2, q, order);
      return exp(t * 0.3 + y * 0.1);
    };
    CHECK(fd_error(f, p) < 1e-6);
  }
}

TEST_CASE("every primitive matches finite differences") {
  std::mt19937_64 rng(1234);
  for (int trial = 0; trial < 10; ++trial) {
    SpacetimePoint p = random_point(rng);
    auto base = [](const SpacetimePoint& q, int order) {
      Jet t = Jet::coordinate(0, q, order);
      Jet x = Jet::coordinate(1, q, order);
      Jet y = Jet::coordinate(2, q, order);
      Jet z = Jet::coordinate(3, q, order);
      return t * 0.4 + x * y * 0.2 - z * 0.7 + Complex(0.0, 0.3) * x;
    };
    auto through = [&](auto&& g) {
      return [&, g](const SpacetimePoint& q, int order) { return g(base(q, order)); };
    };
    CHECK(fd_error(through([](const Jet& u) { return sin(u); }), p) < 1e-5);
    CHECK(fd_error(through([](const Jet& u) { return cos(u); }), p) < 1e-5);
    CHECK(fd_error(through([](const Jet& u) { return exp(u); }), p) < 1e-5);
    CHECK(fd_error(through([](const Jet& u) { return pow_int(u, 3); }), p) < 1e-5);
    CHECK(fd_error(through([](const Jet& u) { return u * u - u; }), p) < 1e-5);
    auto quot = [&](const SpacetimePoint& q, int order) {
      return base(q, order) / (base(q, order) * base(q, order) + 4.0);
    };
    CHECK(fd_error(quot, p) < 1e-5);
  }
}

TEST_CASE("hessian symmetry is exact") {
  std::mt19937_64 rng(99);
  for (int trial = 0; trial < 50; ++trial) {
    Jet a = random_jet(rng);
    Jet b = random_jet(rng);
    Jet r = (a * b) / (b * b + 3.0) + sin(a) * exp(b * 0.1);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = 0; nu < 4; ++nu) CHECK(r.hess(mu, nu) == r.hess(nu, mu));
  }
}

TEST_CASE("conjugation properties hold exactly") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    Jet a = random_jet(rng);
    Jet b = random_jet(rng);
    Jet lhs = conj(a * b);
    Jet rhs = conj(a) * conj(b);
    CHECK(lhs.value() == rhs.value());
    for (int mu = 0; mu < 4; ++mu) CHECK(lhs.grad(mu) == rhs.grad(mu));
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu; nu < 4; ++nu) CHECK(lhs.hess(mu, nu) == rhs.hess(mu, nu));
    Jet twice = conj(conj(a));
    CHECK(twice.value() == a.value());
    for (int mu = 0; mu < 4; ++mu) CHECK(twice.grad(mu) == a.grad(mu));
  }
}

TEST_CASE("multiplication is associative within 1e-13") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 50; ++trial) {
    Jet a = random_jet(rng);
    Jet b = random_jet(rng);
    Jet c = random_jet(rng);
    Jet lhs = (a * b) * c;
    Jet rhs = a * (b * c);
    CHECK(rel(lhs.value(), rhs.value()) < 1e-13);
    for (int mu = 0; mu < 4; ++mu) CHECK(rel(lhs.grad(mu), rhs.grad(mu)) < 1e-13);
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu; nu < 4; ++nu)
        CHECK(rel(lhs.hess(mu, nu), rhs.hess(mu, nu)) < 1e-13);
  }
}

TEST_CASE("partial extraction") {
  SpacetimePoint p{{3.0, 0.0, 0.0, 0.0}};
  Jet t = Jet::coordinate(0, p, 2);

  SUBCASE("of t^2") {
    Jet d = partial(t * t, 0);
    CHECK(d.order() == 1);
    CHECK(d.value() == Complex(6.0));
    CHECK(d.grad(0) == Complex(2.0));
    CHECK(d.grad(1) == Complex(0.0));
  }

  SUBCASE("twice from t^3 at t=1") {
    SpacetimePoint q{{1.0, 0.0, 0.0, 0.0}};
    Jet u = Jet::coordinate(0, q, 2);
    Jet dd = partial(partial(u * u * u, 0), 0);
    CHECK(dd.order() == 0);
    CHECK(std::abs(dd.value() - Complex(6.0)) < 1e-14);
  }

  SUBCASE("of sin equals cos to order 1") {
    std::mt19937_64 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
      SpacetimePoint q = random_point(rng);
      Jet x1 = Jet::coordinate(1, q, 2);
      Jet lhs = partial(sin(x1), 1);
      Jet rhs = cos(Jet::coordinate(1, q, 1));
      CHECK(rel(lhs.value(), rhs.value()) < 1e-14);
      for (int mu = 0; mu < 4; ++mu) CHECK(rel(lhs.grad(mu), rhs.grad(mu)) < 1e-14);
    }
  }

  SUBCASE("exhausted at order 0") {
    Jet c = Jet::constant(1.0, 0);
    CHECK_THROWS_AS(partial(c, 0), OrderExhausted);
  }
}

TEST_CASE("pow_int special cases") {
  Jet zero = Jet::constant(0.0);
  CHECK(pow_int(zero, 0).value() == Complex(1.0));
  CHECK(pow_int(zero, 2).value() == Complex(0.0));
  SpacetimePoint p{{0.0, 0.0, 0.0, 0.0}};
  Jet x = Jet::coordinate(1, p, 2);
  Jet sq = pow_int(x, 2);
  CHECK(sq.hess(1, 1) == Complex(2.0));  // d2(x^2) = 2 even at x = 0
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 10; ++trial) {
    Jet a = random_jet(rng) + 3.0;  // keep away from zero
    Jet direct = a * a * a;
    Jet viaPow = pow_int(a, 3);
    CHECK(rel(direct.value(), viaPow.value()) < 1e-14);
    for (int mu = 0; mu < 4; ++mu)
      CHECK(rel(direct.grad(mu), viaPow.grad(mu)) < 1e-13);
    Jet inv = pow_int(a, -2) * pow_int(a, 2);
    CHECK(rel(inv.value(), Complex(1.0)) < 1e-13);
  }
}

}  // TEST_SUITE
