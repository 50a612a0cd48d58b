#include "gaugeforge/gauge.hpp"

#include <cmath>

namespace gaugeforge {

namespace {

Jet ig_jet(double g) { return Jet::constant(Complex(0.0, g)); }

}  // namespace

RealMatrix RealMatrix::identity(int n) {
  RealMatrix m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

RealMatrix RealMatrix::transposed() const {
  RealMatrix r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

RealMatrix operator*(const RealMatrix& a, const RealMatrix& b) {
  if (a.n_ != b.n_) throw DimensionMismatch();
  RealMatrix r(a.n_);
  for (int i = 0; i < a.n_; ++i)
    for (int j = 0; j < a.n_; ++j) {
      double acc = 0.0;
      for (int k = 0; k < a.n_; ++k) acc += a(i, k) * b(k, j);
      r(i, j) = acc;
    }
  return r;
}

RealMatrix RealMatrix::inverse() const {
  const int n = n_;
  RealMatrix a = *this;
  RealMatrix inv = RealMatrix::identity(n);
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row)
      if (std::abs(a(row, col)) > std::abs(a(pivot, col))) pivot = row;
    if (std::abs(a(pivot, col)) < 1e-14)
      throw Error("singular mass matrix");
    if (pivot != col)
      for (int j = 0; j < n; ++j) {
        std::swap(a(pivot, j), a(col, j));
        std::swap(inv(pivot, j), inv(col, j));
      }
    const double d = a(col, col);
    for (int j = 0; j < n; ++j) {
      a(col, j) /= d;
      inv(col, j) /= d;
    }
    for (int row = 0; row < n; ++row) {
      if (row == col) continue;
      const double factor = a(row, col);
      if (factor == 0.0) continue;
      for (int j = 0; j < n; ++j) {
        a(row, j) -= factor * a(col, j);
        inv(row, j) -= factor * inv(col, j);
      }
    }
  }
  return inv;
}

double RealMatrix::det() const {
  const int n = n_;
  RealMatrix a = *this;
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int row = col + 1; row < n; ++row)
      if (std::abs(a(row, col)) > std::abs(a(pivot, col))) pivot = row;
    if (a(pivot, col) == 0.0) return 0.0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(a(pivot, j), a(col, j));
      det = -det;
    }
    det *= a(col, col);
    for (int row = col + 1; row < n; ++row) {
      const double factor = a(row, col) / a(col, col);
      for (int j = col; j < n; ++j) a(row, j) -= factor * a(col, j);
    }
  }
  return det;
}

CVec real_mul(const RealMatrix& r, const CVec& v) {
  if (r.size() != v.size()) throw DimensionMismatch();
  const int n = v.size();
  CVec out(n);
  for (int i = 0; i < n; ++i) {
    Jet acc = Jet::constant(r(i, 0)) * v(0);
    for (int j = 1; j < n; ++j) acc += Jet::constant(r(i, j)) * v(j);
    out(i) = acc;
  }
  return out;
}

CVec real_mul_T(const RealMatrix& r, const CVec& v) {
  if (r.size() != v.size()) throw DimensionMismatch();
  const int n = v.size();
  CVec out(n);
  for (int i = 0; i < n; ++i) {
    Jet acc = Jet::constant(r(0, i)) * v(0);
    for (int j = 1; j < n; ++j) acc += Jet::constant(r(j, i)) * v(j);
    out(i) = acc;
  }
  return out;
}

CouplingData CouplingData::make(int n, double g, RealMatrix m) {
  if (m.size() != n) throw DimensionMismatch("mass matrix size != N");
  CouplingData c;
  c.n = n;
  c.g = g;
  c.mass = m;
  c.mass_inv = m.inverse();
  c.det_mass = m.det();
  // M Mtilde = I within 1e-12
  RealMatrix check = c.mass * c.mass_inv;
  double dev = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      dev = std::max(dev, std::abs(check(i, j) - (i == j ? 1.0 : 0.0)));
  if (dev > 1e-12) throw Error("mass matrix inversion failed validation");
  return c;
}

double CouplingData::orthogonality_deviation() const {
  const RealMatrix mmt = mass * mass.transposed();
  const double d2 = det_mass * det_mass;
  double dev = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      dev = std::max(dev, std::abs(mmt(i, j) - (i == j ? d2 : 0.0)));
  return dev;
}

bool CouplingData::is_orthogonal(double tol) const {
  return orthogonality_deviation() <= tol;
}

GaugeMapEval eval_gauge_map(const GaugeMapSpec& spec, const SpacetimePoint& p,
                            int order) {
  const int n = spec.n;
  CMat h(n);
  if (spec.uses_lambda()) {
    if (n != 1) throw DimensionMismatch("lambda form requires N = 1");
    Jet lam = eval_expr(spec.lambda, p, order);
    h(0, 0) = 0.5 * (lam + conj(lam));
  } else {
    for (int i = 0; i < n; ++i) {
      const auto& row = spec.generator[static_cast<std::size_t>(i)];
      Jet d = eval_expr(row[0], p, order);
      h(i, i) = 0.5 * (d + conj(d));  // Hermitian diagonal by construction
      for (int j = i + 1; j < n; ++j) {
        Jet u = eval_expr(row[static_cast<std::size_t>(j - i)], p, order);
        h(i, j) = u;
        h(j, i) = conj(u);
      }
    }
  }
  GaugeMapEval out;
  out.U = mat_exp_i_hermitian(h);
  out.Udag = adjoint(out.U);
  out.shift = CVec(n);
  for (int i = 0; i < n; ++i)
    out.shift(i) = eval_expr(spec.shift[static_cast<std::size_t>(i)], p, order);
  out.shiftbar = adjoint(out.shift);
  return out;
}

GaugeMapEval inverse_map(const GaugeMapEval& m) {
  GaugeMapEval inv;
  inv.U = m.Udag;
  inv.Udag = m.U;
  inv.shift = -(m.Udag * m.shift);
  inv.shiftbar = adjoint(inv.shift);
  return inv;
}

GaugeMapEval compose_maps(const GaugeMapEval& second, const GaugeMapEval& first) {
  GaugeMapEval out;
  out.U = second.U * first.U;
  out.Udag = adjoint(out.U);
  out.shift = second.U * first.shift + second.shift;
  out.shiftbar = adjoint(out.shift);
  return out;
}

void transform_base(const CVec& phi, const std::array<CVec, 4>& pi_up,
                    const GaugeMapEval& map, CVec& phi_out,
                    std::array<CVec, 4>& pi_out) {
  if (phi.size() != map.n()) throw DimensionMismatch();
  phi_out = map.U * phi + map.shift;
  for (int mu = 0; mu < 4; ++mu) pi_out[static_cast<std::size_t>(mu)] =
      map.U * pi_up[static_cast<std::size_t>(mu)];
}

void inverse_base(const CVec& phi_t, const std::array<CVec, 4>& pi_t,
                  const GaugeMapEval& map, CVec& phi_out,
                  std::array<CVec, 4>& pi_out) {
  if (phi_t.size() != map.n()) throw DimensionMismatch();
  phi_out = map.Udag * (phi_t - map.shift);
  for (int mu = 0; mu < 4; ++mu) pi_out[static_cast<std::size_t>(mu)] =
      map.Udag * pi_t[static_cast<std::size_t>(mu)];
}

std::array<CMat, 4> transform_gauge_a(const std::array<CMat, 4>& a,
                                      const GaugeMapEval& map,
                                      const CouplingData& coupling) {
  if (coupling.g == 0.0) throw ZeroCoupling();
  if (a[0].size() != map.n()) throw DimensionMismatch();
  const Jet inv_ig = Jet::constant(1.0 / Complex(0.0, coupling.g));
  std::array<CMat, 4> out;
  for (int mu = 0; mu < 4; ++mu) {
    const CMat dU = partial(map.U, mu);
    out[static_cast<std::size_t>(mu)] =
        map.U * a[static_cast<std::size_t>(mu)] * map.Udag +
        inv_ig * (dU * map.Udag);
  }
  return out;
}

std::array<CVec, 4> transform_gauge_b(const std::array<CVec, 4>& b,
                                      const std::array<CMat, 4>& a_t,
                                      const GaugeMapEval& map,
                                      const CouplingData& coupling) {
  if (coupling.g == 0.0) throw ZeroCoupling();
  const Jet ig = ig_jet(coupling.g);
  std::array<CVec, 4> out;
  for (int mu = 0; mu < 4; ++mu) {
    const std::size_t m = static_cast<std::size_t>(mu);
    CVec rhs = map.U * real_mul(coupling.mass, b[m]) -
               ig * (a_t[m] * map.shift) + partial(map.shift, mu);
    out[m] = real_mul(coupling.mass_inv, rhs);
  }
  return out;
}

std::array<CVec, 4> transform_gauge_bbar(const std::array<CVec, 4>& b,
                                         const std::array<CMat, 4>& a_t,
                                         const GaugeMapEval& map,
                                         const CouplingData& coupling) {
  if (coupling.g == 0.0) throw ZeroCoupling();
  const Jet ig = ig_jet(coupling.g);
  std::array<CVec, 4> out;
  for (int mu = 0; mu < 4; ++mu) {
    const std::size_t m = static_cast<std::size_t>(mu);
    const CVec bbar = adjoint(b[m]);
    // row vector: bbar M^T U^dagger + ig shiftbar A_mu + d_mu shiftbar
    CVec row = vec_mat(real_mul(coupling.mass, bbar), map.Udag) +
               ig * vec_mat(map.shiftbar, a_t[m]) + partial(map.shiftbar, mu);
    // row times Mtilde^T
    out[m] = real_mul(coupling.mass_inv, row);
  }
  return out;
}

void transform_momenta_pq(const MomentumState& momenta, const CVec& phi,
                          const GaugeMapEval& map, const CouplingData& coupling,
                          MomentumState& out) {
  const Jet ig = ig_jet(coupling.g);
  const CVec phibar = adjoint(phi);
  const CVec phi_t = map.U * phi + map.shift;
  const CVec phibar_t = adjoint(phi_t);

  for (int mu = 0; mu < 4; ++mu) {
    const std::size_t m = static_cast<std::size_t>(mu);
    out.pi_up[m] = map.U * momenta.pi_up[m];
    out.pibar_up[m] = vec_mat(momenta.pibar_up[m], map.Udag);
  }

  out.p = LorentzTensor2<CMat>(CMat(coupling.n), momenta.p.skew());
  out.q = LorentzTensor2<CVec>(CVec(coupling.n), momenta.q.skew());
  out.qbar = LorentzTensor2<CVec>(CVec(coupling.n), momenta.qbar.skew());

  for (int mu = 0; mu < 4; ++mu)
    for (int nu = momenta.q.skew() ? mu + 1 : 0; nu < 4; ++nu) {
      if (momenta.q.skew() && mu >= nu) continue;
      const CVec q = momenta.q.get(mu, nu);
      const CVec qbar = momenta.qbar.get(mu, nu);
      const CMat p = momenta.p.get(mu, nu);

      // Q = M^T U Mtilde^T q ; Qbar = (qbar Mtilde U^dagger) M
      const CVec q_t = real_mul_T(coupling.mass,
                                  map.U * real_mul_T(coupling.mass_inv, q));
      const CVec qbar_t = real_mul_T(
          coupling.mass, vec_mat(real_mul_T(coupling.mass_inv, qbar), map.Udag));

      // homogeneous combination conjugated, then the capital offsets
      const CMat combo = p + ig * outer(real_mul_T(coupling.mass_inv, q), phibar) -
                         ig * outer(phi, real_mul_T(coupling.mass_inv, qbar));
      const CMat p_t =
          map.U * combo * map.Udag -
          ig * outer(real_mul_T(coupling.mass_inv, q_t), phibar_t) +
          ig * outer(phi_t, real_mul_T(coupling.mass_inv, qbar_t));

      out.q.set(mu, nu, q_t);
      out.qbar.set(mu, nu, qbar_t);
      out.p.set(mu, nu, p_t);
    }
}

FieldState transform_state(const FieldState& s, const GaugeMapEval& map,
                           const CouplingData& coupling) {
  FieldState out;
  out.phi = map.U * s.phi + map.shift;
  out.a = transform_gauge_a(s.a, map, coupling);
  out.b = transform_gauge_b(s.b, out.a, map, coupling);
  return out;
}

MomentumState transform_momentum_state(const MomentumState& m, const CVec& phi,
                                       const GaugeMapEval& map,
                                       const CouplingData& coupling) {
  MomentumState out;
  transform_momenta_pq(m, phi, map, coupling, out);
  return out;
}

LorentzCoVec<CVec> covariant_derivative(const FieldState& s,
                                        const CouplingData& coupling) {
  const Jet ig = ig_jet(coupling.g);
  LorentzCoVec<CVec> d{};
  for (int mu = 0; mu < 4; ++mu) {
    const std::size_t m = static_cast<std::size_t>(mu);
    d[mu] = partial(s.phi, mu) - ig * (s.a[m] * s.phi) -
            real_mul(coupling.mass, s.b[m]);
  }
  return d;
}

LorentzCoVec<CVec> covariant_derivative_adjoint(const FieldState& s,
                                                const CouplingData& coupling) {
  const Jet ig = ig_jet(coupling.g);
  const CVec phibar = adjoint(s.phi);
  LorentzCoVec<CVec> d{};
  for (int mu = 0; mu < 4; ++mu) {
    const std::size_t m = static_cast<std::size_t>(mu);
    d[mu] = partial(phibar, mu) + ig * vec_mat(phibar, s.a[m]) -
            real_mul(coupling.mass, adjoint(s.b[m]));
  }
  return d;
}

}  // namespace gaugeforge
