#pragma once

#include <array>
#include <complex>

#include "gaugeforge/errors.hpp"

namespace gaugeforge {

using Complex = std::complex<double>;

/// A point of spacetime, coordinates (x0=t, x1, x2, x3) in natural units.
struct SpacetimePoint {
  std::array<double, 4> x{};

  double operator[](int mu) const { return x[static_cast<std::size_t>(mu)]; }
};

/// Denominator magnitudes below this raise DivisionByZeroValue.
inline constexpr double kDivisionEpsilon = 1e-300;

/// Truncated Taylor expansion of a complex-valued function of the four
/// real spacetime coordinates, up to second order.
///
/// A jet of order k carries the value, and for k >= 1 the four first
/// partials, and for k = 2 the 4x4 Hessian. The Hessian is stored as its
/// ten independent upper-triangle entries, so symmetry is exact by
/// construction. Arithmetic between jets of different orders truncates
/// the result to the lower order.
class Jet {
 public:
  Jet() : order_(2), v_(0.0) {}

  /// Constant function: derivatives of every order vanish. Constants are
  /// carried at order 2 so they never truncate the other operand.
  static Jet constant(Complex v, int order = 2);

  /// The coordinate function x^mu seeded at a point: value x^mu,
  /// gradient e_mu, Hessian zero.
  static Jet coordinate(int mu, const SpacetimePoint& p, int order);

  int order() const { return order_; }
  Complex value() const { return v_; }

  /// First partial d/dx^mu. Requires order >= 1.
  Complex grad(int mu) const;

  /// Second partial d^2/dx^mu dx^nu. Requires order = 2. Exactly
  /// symmetric in (mu, nu).
  Complex hess(int mu, int nu) const;

  void set_value(Complex v) { v_ = v; }
  void set_grad(int mu, Complex g);
  void set_hess(int mu, int nu, Complex h);

  friend Jet operator+(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a, const Jet& b);
  friend Jet operator*(const Jet& a, const Jet& b);
  friend Jet operator/(const Jet& a, const Jet& b);
  friend Jet operator-(const Jet& a);

  Jet& operator+=(const Jet& b) { return *this = *this + b; }
  Jet& operator-=(const Jet& b) { return *this = *this - b; }
  Jet& operator*=(const Jet& b) { return *this = *this * b; }

 private:
  static std::size_t hidx(int mu, int nu);

  int order_;
  Complex v_;
  std::array<Complex, 4> g_{};
  std::array<Complex, 10> h_{};
};

Jet operator+(const Jet& a, const Jet& b);
Jet operator-(const Jet& a, const Jet& b);
Jet operator*(const Jet& a, const Jet& b);
Jet operator/(const Jet& a, const Jet& b);
Jet operator-(const Jet& a);

inline Jet operator*(Complex c, const Jet& a) { return Jet::constant(c) * a; }
inline Jet operator*(const Jet& a, Complex c) { return a * Jet::constant(c); }
inline Jet operator*(double c, const Jet& a) { return Jet::constant(c) * a; }
inline Jet operator*(const Jet& a, double c) { return a * Jet::constant(c); }
inline Jet operator+(const Jet& a, Complex c) { return a + Jet::constant(c); }
inline Jet operator-(const Jet& a, Complex c) { return a - Jet::constant(c); }

/// Chain-rule primitives.
Jet sin(const Jet& a);
Jet cos(const Jet& a);
Jet exp(const Jet& a);

/// Entrywise complex conjugate. The coordinates are real, so conjugation
/// commutes with every partial derivative.
Jet conj(const Jet& a);

/// Integer power by binary exponentiation; n < 0 requires a nonzero value.
Jet pow_int(const Jet& a, int n);

/// The partial derivative d/dx^mu of `a` as a jet of one order less:
/// value = grad[mu], gradient (when a has order 2) = Hessian row mu.
/// Throws OrderExhausted for order-0 input.
Jet partial(const Jet& a, int mu);

}  // namespace gaugeforge
