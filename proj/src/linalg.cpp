#include "gaugeforge/linalg.hpp"

#include <algorithm>
#include <cmath>

namespace gaugeforge {

namespace {

void check_same(int a, int b) {
  if (a != b) throw DimensionMismatch();
}

}  // namespace

CMat CMat::identity(int n) {
  CMat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = Jet::constant(1.0);
  return m;
}

CVec operator+(const CVec& a, const CVec& b) {
  check_same(a.size(), b.size());
  CVec r(a.size());
  for (int i = 0; i < a.size(); ++i) r(i) = a(i) + b(i);
  return r;
}

CVec operator-(const CVec& a, const CVec& b) {
  check_same(a.size(), b.size());
  CVec r(a.size());
  for (int i = 0; i < a.size(); ++i) r(i) = a(i) - b(i);
  return r;
}

CVec operator-(const CVec& a) {
  CVec r(a.size());
  for (int i = 0; i < a.size(); ++i) r(i) = -a(i);
  return r;
}

CVec operator*(const Jet& s, const CVec& a) {
  CVec r(a.size());
  for (int i = 0; i < a.size(); ++i) r(i) = s * a(i);
  return r;
}

CMat operator+(const CMat& a, const CMat& b) {
  check_same(a.size(), b.size());
  CMat r(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) r(i, j) = a(i, j) + b(i, j);
  return r;
}

CMat operator-(const CMat& a, const CMat& b) {
  check_same(a.size(), b.size());
  CMat r(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) r(i, j) = a(i, j) - b(i, j);
  return r;
}

CMat operator-(const CMat& a) {
  CMat r(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) r(i, j) = -a(i, j);
  return r;
}

CMat operator*(const Jet& s, const CMat& a) {
  CMat r(a.size());
  for (int i = 0; i < a.size(); ++i)
    for (int j = 0; j < a.size(); ++j) r(i, j) = s * a(i, j);
  return r;
}

CMat operator*(const CMat& a, const CMat& b) {
  check_same(a.size(), b.size());
  const int n = a.size();
  CMat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Jet acc = a(i, 0) * b(0, j);
      for (int k = 1; k < n; ++k) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

CVec operator*(const CMat& m, const CVec& v) {
  check_same(m.size(), v.size());
  const int n = m.size();
  CVec r(n);
  for (int i = 0; i < n; ++i) {
    Jet acc = m(i, 0) * v(0);
    for (int k = 1; k < n; ++k) acc += m(i, k) * v(k);
    r(i) = acc;
  }
  return r;
}

CVec vec_mat(const CVec& v, const CMat& m) {
  check_same(m.size(), v.size());
  const int n = m.size();
  CVec r(n);
  for (int j = 0; j < n; ++j) {
    Jet acc = v(0) * m(0, j);
    for (int k = 1; k < n; ++k) acc += v(k) * m(k, j);
    r(j) = acc;
  }
  return r;
}

Jet dot(const CVec& a, const CVec& b) {
  check_same(a.size(), b.size());
  Jet acc = a(0) * b(0);
  for (int k = 1; k < a.size(); ++k) acc += a(k) * b(k);
  return acc;
}

CMat outer(const CVec& col, const CVec& row) {
  check_same(col.size(), row.size());
  const int n = col.size();
  CMat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = col(i) * row(j);
  return r;
}

Jet trace(const CMat& m) {
  Jet acc = m(0, 0);
  for (int k = 1; k < m.size(); ++k) acc += m(k, k);
  return acc;
}

CMat adjoint(const CMat& m) {
  const int n = m.size();
  CMat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = conj(m(j, i));
  return r;
}

CVec adjoint(const CVec& v) { return conj_entries(v); }

CMat conj_entries(const CMat& m) {
  const int n = m.size();
  CMat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = conj(m(i, j));
  return r;
}

CVec conj_entries(const CVec& v) {
  CVec r(v.size());
  for (int i = 0; i < v.size(); ++i) r(i) = conj(v(i));
  return r;
}

CMat partial(const CMat& m, int mu) {
  const int n = m.size();
  CMat r(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) r(i, j) = partial(m(i, j), mu);
  return r;
}

CVec partial(const CVec& v, int mu) {
  CVec r(v.size());
  for (int i = 0; i < v.size(); ++i) r(i) = partial(v(i), mu);
  return r;
}

double max_abs_value(const CMat& m) {
  double worst = 0.0;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j)
      worst = std::max(worst, std::abs(m(i, j).value()));
  return worst;
}

double max_abs_value(const CVec& v) {
  double worst = 0.0;
  for (int i = 0; i < v.size(); ++i)
    worst = std::max(worst, std::abs(v(i).value()));
  return worst;
}

Complex det_values(const CMat& m) {
  const int n = m.size();
  std::vector<Complex> a(static_cast<std::size_t>(n * n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      a[static_cast<std::size_t>(i * n + j)] = m(i, j).value();
  Complex det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row)
      if (std::abs(a[static_cast<std::size_t>(row * n + col)]) >
          std::abs(a[static_cast<std::size_t>(pivot * n + col)]))
        pivot = row;
    if (std::abs(a[static_cast<std::size_t>(pivot * n + col)]) == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j)
        std::swap(a[static_cast<std::size_t>(pivot * n + j)],
                  a[static_cast<std::size_t>(col * n + j)]);
      det = -det;
    }
    const Complex d = a[static_cast<std::size_t>(col * n + col)];
    det *= d;
    for (int row = col + 1; row < n; ++row) {
      const Complex factor = a[static_cast<std::size_t>(row * n + col)] / d;
      for (int j = col; j < n; ++j)
        a[static_cast<std::size_t>(row * n + j)] -=
            factor * a[static_cast<std::size_t>(col * n + j)];
    }
  }
  return det;
}

CMat mat_exp_i_hermitian(const CMat& h) {
  const int n = h.size();
  {
    double dev = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        dev = std::max(dev, std::abs(h(i, j).value() - std::conj(h(j, i).value())));
    if (dev > 1e-12)
      throw NotHermitian("generator deviates from Hermitian by " + std::to_string(dev));
  }

  // scale so the series argument is small, square back up afterwards
  int squarings = 0;
  double norm = max_abs_value(h) * n;
  while (norm > 0.25 && squarings < 40) {
    norm *= 0.5;
    ++squarings;
  }
  const double scale = std::ldexp(1.0, -squarings);

  CMat x(n);
  const Jet iscale = Jet::constant(Complex(0.0, scale));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) x(i, j) = iscale * h(i, j);

  CMat sum = CMat::identity(n);
  CMat term = CMat::identity(n);
  for (int k = 1; k <= 60; ++k) {
    term = term * x;
    term = Jet::constant(1.0 / k) * term;
    sum = sum + term;
    if (max_abs_value(term) < 1e-18) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

Jet lorentz_dot(const LorentzCoVec<Jet>& a, const LorentzCoVec<Jet>& b) {
  Jet acc = metric_sign(0) * (a[0] * b[0]);
  for (int mu = 1; mu < 4; ++mu) acc += metric_sign(mu) * (a[mu] * b[mu]);
  return acc;
}

}  // namespace gaugeforge
