#pragma once

#include <array>
#include <optional>

#include "gaugeforge/expr.hpp"
#include "gaugeforge/linalg.hpp"

namespace gaugeforge {

/// Small dense real matrix (the mass matrix and its inverse live here).
class RealMatrix {
 public:
  RealMatrix() : n_(0) {}
  explicit RealMatrix(int n) : n_(n), a_(static_cast<std::size_t>(n * n)) {}
  static RealMatrix identity(int n);

  int size() const { return n_; }
  double& operator()(int i, int j) { return a_[static_cast<std::size_t>(i * n_ + j)]; }
  double operator()(int i, int j) const {
    return a_[static_cast<std::size_t>(i * n_ + j)];
  }

  RealMatrix transposed() const;
  RealMatrix inverse() const;  // Gauss-Jordan; throws Error when singular
  double det() const;

  friend RealMatrix operator*(const RealMatrix& a, const RealMatrix& b);

 private:
  int n_;
  std::vector<double> a_;
};

/// (R v)_i = sum_j R_ij v_j
CVec real_mul(const RealMatrix& r, const CVec& v);
/// (R^T v)_i = sum_j R_ji v_j; also the row action v R.
CVec real_mul_T(const RealMatrix& r, const CVec& v);

/// Multiplet size, coupling constant and mass matrix of a scenario.
///
/// The mass matrix must be invertible; orthogonality in the sense
/// M M^T = (det M)^2 I is validated where configurations are loaded, not
/// assumed here, so deliberately perturbed matrices can be driven through
/// the checks as negative controls.
struct CouplingData {
  int n = 1;
  double g = 1.0;
  RealMatrix mass;       // M
  RealMatrix mass_inv;   // Mtilde = M^-1
  double det_mass = 1.0;

  static CouplingData make(int n, double g, RealMatrix m);

  /// max |(M M^T - (det M)^2 I)_ij|
  double orthogonality_deviation() const;
  bool is_orthogonal(double tol = 1e-10) const;
};

/// Transformation data: U = exp(i generator) with the generator Hermitian
/// by construction (callers supply the diagonal, which is symmetrized to
/// real, and the strict upper triangle), plus the shift vector. For N=1 a
/// single real phase expression may stand in for the generator.
struct GaugeMapSpec {
  int n = 1;
  // generator[i] holds entries for columns j = i..n-1; [0] is the diagonal
  std::vector<std::vector<ExprPtr>> generator;
  std::vector<ExprPtr> shift;
  ExprPtr lambda;  // N=1 only, exclusive with generator

  bool uses_lambda() const { return static_cast<bool>(lambda); }
};

/// The map evaluated at one point: unitary U, its adjoint, and the shift,
/// all carrying jets of the evaluation order.
struct GaugeMapEval {
  CMat U;
  CMat Udag;
  CVec shift;
  CVec shiftbar;

  int n() const { return U.size(); }
};

GaugeMapEval eval_gauge_map(const GaugeMapSpec& spec, const SpacetimePoint& p,
                            int order);

/// The inverse transformation (U^dagger, -U^dagger shift).
GaugeMapEval inverse_map(const GaugeMapEval& m);

/// Applying `first` then `second` equals this single map
/// (U2 U1, U2 shift1 + shift2).
GaugeMapEval compose_maps(const GaugeMapEval& second, const GaugeMapEval& first);

/// Base fields and gauge fields at a point. a_mu is Hermitian over the
/// multiplet indices; all Lorentz indices here are lower.
struct FieldState {
  CVec phi;
  std::array<CMat, 4> a;
  std::array<CVec, 4> b;
};

/// Conjugate momenta. pi carries an upper Lorentz index; p and q carry
/// two lower indices and are skew for canonical (field-derived) momenta,
/// while arbitrary test momenta may be non-skew.
struct MomentumState {
  std::array<CVec, 4> pi_up;
  std::array<CVec, 4> pibar_up;
  LorentzTensor2<CMat> p;
  LorentzTensor2<CVec> q;
  LorentzTensor2<CVec> qbar;
};

/// Phi = U phi + shift, Pi^mu = U pi^mu.
void transform_base(const CVec& phi, const std::array<CVec, 4>& pi_up,
                    const GaugeMapEval& map, CVec& phi_out,
                    std::array<CVec, 4>& pi_out);

/// phi = U^dagger (Phi - shift), pi^mu = U^dagger Pi^mu.
void inverse_base(const CVec& phi_t, const std::array<CVec, 4>& pi_t,
                  const GaugeMapEval& map, CVec& phi_out,
                  std::array<CVec, 4>& pi_out);

/// A_mu = U a_mu U^dagger + (1/(ig)) (d_mu U) U^dagger.
/// Requires g != 0 and U of order >= 1.
std::array<CMat, 4> transform_gauge_a(const std::array<CMat, 4>& a,
                                      const GaugeMapEval& map,
                                      const CouplingData& coupling);

/// B_mu = Mtilde (U M b_mu - ig A_mu shift + d_mu shift).
std::array<CVec, 4> transform_gauge_b(const std::array<CVec, 4>& b,
                                      const std::array<CMat, 4>& a_t,
                                      const GaugeMapEval& map,
                                      const CouplingData& coupling);

/// Adjoint-side rule
/// Bbar_mu = (bbar_mu M^T U^dagger + ig shiftbar A_mu + d_mu shiftbar) Mtilde^T,
/// evaluated independently of B for conjugation cross-checks.
std::array<CVec, 4> transform_gauge_bbar(const std::array<CVec, 4>& b,
                                         const std::array<CMat, 4>& a_t,
                                         const GaugeMapEval& map,
                                         const CouplingData& coupling);

/// Momentum rules:
///   Q_munu    = M^T U Mtilde^T q_munu
///   Qbar_munu = (qbar_munu Mtilde U^dagger) M
///   P_munu    = U (p + ig Mtilde^T q (x) phibar - ig phi (x) qbar Mtilde) U^dagger
///               - ig Mtilde^T Q (x) Phibar + ig Phi (x) Qbar Mtilde
/// with (x) the multiplet outer product.
void transform_momenta_pq(const MomentumState& momenta, const CVec& phi,
                          const GaugeMapEval& map, const CouplingData& coupling,
                          MomentumState& out);

/// Whole-state convenience wrappers used by the verifier.
FieldState transform_state(const FieldState& s, const GaugeMapEval& map,
                           const CouplingData& coupling);
MomentumState transform_momentum_state(const MomentumState& m, const CVec& phi,
                                       const GaugeMapEval& map,
                                       const CouplingData& coupling);

/// The amended derivative (D phi)_mu = d_mu phi - ig a_mu phi - M b_mu
/// (lower Lorentz index).
LorentzCoVec<CVec> covariant_derivative(const FieldState& s,
                                        const CouplingData& coupling);

/// Adjoint partner (Dbar phibar)_mu = d_mu phibar + ig phibar a_mu - bbar_mu M^T.
LorentzCoVec<CVec> covariant_derivative_adjoint(const FieldState& s,
                                                const CouplingData& coupling);

}  // namespace gaugeforge
