#include "gaugeforge/jet.hpp"

#include <algorithm>
#include <cmath>

namespace gaugeforge {

SyntaxError::SyntaxError(std::size_t offset, std::vector<std::string> expected,
                         const std::string& detail)
    : Error(detail), offset_(offset), expected_(std::move(expected)) {}

ConfigError::ConfigError(std::string pointer, const std::string& detail)
    : Error(pointer + ": " + detail), pointer_(std::move(pointer)) {}

std::size_t Jet::hidx(int mu, int nu) {
  if (mu > nu) std::swap(mu, nu);
  // packed upper triangle: row offsets 0, 4, 7, 9
  static constexpr int offs[4] = {0, 4, 7, 9};
  return static_cast<std::size_t>(offs[mu] + (nu - mu));
}

Jet Jet::constant(Complex v, int order) {
  Jet j;
  j.order_ = order;
  j.v_ = v;
  return j;
}

Jet Jet::coordinate(int mu, const SpacetimePoint& p, int order) {
  Jet j;
  j.order_ = order;
  j.v_ = p[mu];
  if (order >= 1) j.g_[static_cast<std::size_t>(mu)] = 1.0;
  return j;
}

Complex Jet::grad(int mu) const {
  if (order_ < 1) throw OrderExhausted("grad requested from order-0 jet");
  return g_[static_cast<std::size_t>(mu)];
}

Complex Jet::hess(int mu, int nu) const {
  if (order_ < 2) throw OrderExhausted("hess requested from jet of order < 2");
  return h_[hidx(mu, nu)];
}

void Jet::set_grad(int mu, Complex g) {
  if (order_ < 1) throw OrderExhausted("grad write on order-0 jet");
  g_[static_cast<std::size_t>(mu)] = g;
}

void Jet::set_hess(int mu, int nu, Complex h) {
  if (order_ < 2) throw OrderExhausted("hess write on jet of order < 2");
  h_[hidx(mu, nu)] = h;
}

Jet operator+(const Jet& a, const Jet& b) {
  Jet r;
  r.order_ = std::min(a.order_, b.order_);
  r.v_ = a.v_ + b.v_;
  if (r.order_ >= 1)
    for (std::size_t m = 0; m < 4; ++m) r.g_[m] = a.g_[m] + b.g_[m];
  if (r.order_ == 2)
    for (std::size_t k = 0; k < 10; ++k) r.h_[k] = a.h_[k] + b.h_[k];
  return r;
}

Jet operator-(const Jet& a, const Jet& b) {
  Jet r;
  r.order_ = std::min(a.order_, b.order_);
  r.v_ = a.v_ - b.v_;
  if (r.order_ >= 1)
    for (std::size_t m = 0; m < 4; ++m) r.g_[m] = a.g_[m] - b.g_[m];
  if (r.order_ == 2)
    for (std::size_t k = 0; k < 10; ++k) r.h_[k] = a.h_[k] - b.h_[k];
  return r;
}

Jet operator-(const Jet& a) {
  Jet r;
  r.order_ = a.order_;
  r.v_ = -a.v_;
  for (std::size_t m = 0; m < 4; ++m) r.g_[m] = -a.g_[m];
  for (std::size_t k = 0; k < 10; ++k) r.h_[k] = -a.h_[k];
  return r;
}

Jet operator*(const Jet& a, const Jet& b) {
  Jet r;
  r.order_ = std::min(a.order_, b.order_);
  r.v_ = a.v_ * b.v_;
  if (r.order_ >= 1)
    for (std::size_t m = 0; m < 4; ++m)
      r.g_[m] = a.g_[m] * b.v_ + a.v_ * b.g_[m];
  if (r.order_ == 2) {
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu; nu < 4; ++nu) {
        const std::size_t k = Jet::hidx(mu, nu);
        const std::size_t m = static_cast<std::size_t>(mu);
        const std::size_t n = static_cast<std::size_t>(nu);
        r.h_[k] = a.h_[k] * b.v_ + a.g_[m] * b.g_[n] + a.g_[n] * b.g_[m] +
                  a.v_ * b.h_[k];
      }
  }
  return r;
}

Jet operator/(const Jet& a, const Jet& b) {
  if (std::abs(b.v_) < kDivisionEpsilon)
    throw DivisionByZeroValue();
  Jet r;
  r.order_ = std::min(a.order_, b.order_);
  r.v_ = a.v_ / b.v_;
  if (r.order_ >= 1)
    for (std::size_t m = 0; m < 4; ++m)
      r.g_[m] = (a.g_[m] - r.v_ * b.g_[m]) / b.v_;
  if (r.order_ == 2) {
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu; nu < 4; ++nu) {
        const std::size_t k = Jet::hidx(mu, nu);
        const std::size_t m = static_cast<std::size_t>(mu);
        const std::size_t n = static_cast<std::size_t>(nu);
        r.h_[k] = (a.h_[k] - r.g_[m] * b.g_[n] - r.g_[n] * b.g_[m] -
                   r.v_ * b.h_[k]) /
                  b.v_;
      }
  }
  return r;
}

namespace {

// f(u) with f' and f'' supplied: chain rule to order 2.
Jet chain(const Jet& u, Complex f, Complex df, Complex ddf) {
  Jet r = Jet::constant(f, u.order());
  if (u.order() >= 1)
    for (int m = 0; m < 4; ++m) r.set_grad(m, df * u.grad(m));
  if (u.order() == 2)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu; nu < 4; ++nu)
        r.set_hess(mu, nu, ddf * u.grad(mu) * u.grad(nu) + df * u.hess(mu, nu));
  return r;
}

Complex ipow(Complex z, int n) {
  if (n < 0) return 1.0 / ipow(z, -n);
  Complex r = 1.0;
  Complex base = z;
  unsigned e = static_cast<unsigned>(n);
  while (e) {
    if (e & 1u) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace

Jet sin(const Jet& a) {
  return chain(a, std::sin(a.value()), std::cos(a.value()), -std::sin(a.value()));
}

Jet cos(const Jet& a) {
  return chain(a, std::cos(a.value()), -std::sin(a.value()), -std::cos(a.value()));
}

Jet exp(const Jet& a) {
  const Complex e = std::exp(a.value());
  return chain(a, e, e, e);
}

Jet conj(const Jet& a) {
  Jet r = Jet::constant(std::conj(a.value()), a.order());
  if (a.order() >= 1)
    for (int m = 0; m < 4; ++m) r.set_grad(m, std::conj(a.grad(m)));
  if (a.order() == 2)
    for (int mu = 0; mu < 4; ++mu)
      for (int nu = mu; nu < 4; ++nu) r.set_hess(mu, nu, std::conj(a.hess(mu, nu)));
  return r;
}

Jet pow_int(const Jet& a, int n) {
  if (n < 0 && std::abs(a.value()) < kDivisionEpsilon)
    throw DivisionByZeroValue("negative power of zero value");
  const Complex u = a.value();
  const Complex f = ipow(u, n);
  // derivative factors; u^(n-1), u^(n-2) may hit 0^negative for n in {0, 1}
  // where the n / n(n-1) prefactor is zero anyway.
  const Complex df = (n == 0) ? Complex(0.0) : double(n) * ipow(u, n - 1);
  const Complex ddf = (n == 0 || n == 1)
                          ? Complex(0.0)
                          : double(n) * double(n - 1) * ipow(u, n - 2);
  return chain(a, f, df, ddf);
}

Jet partial(const Jet& a, int mu) {
  if (a.order() < 1) throw OrderExhausted("partial of order-0 jet");
  Jet r = Jet::constant(a.grad(mu), a.order() - 1);
  if (a.order() == 2)
    for (int nu = 0; nu < 4; ++nu) r.set_grad(nu, a.hess(mu, nu));
  return r;
}

}  // namespace gaugeforge
