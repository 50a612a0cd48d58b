#pragma once

#include <string>

#include "gaugeforge/gauge.hpp"

namespace gaugeforge {

/// A Hamiltonian or Lagrangian density value with its role tag. Physical
/// densities are real up to roundoff; reality_deviation measures the
/// violation scale-free.
struct ScalarDensity {
  Jet value;
  std::string role;

  double reality_deviation() const;
};

/// f_munu = d_mu a_nu - d_nu a_mu + ig (a_nu a_mu - a_mu a_nu), skew.
/// `drop_commutator` omits the ig commutator; only the covariance
/// negative control uses it.
LorentzTensor2<CMat> field_tensor_f(const std::array<CMat, 4>& a,
                                    const CouplingData& coupling,
                                    bool drop_commutator = false);

/// Canonical momenta of the b fields from the field derivatives:
///   q_munu    = d_mu b_nu - d_nu b_mu
///               + ig Mtilde (a_nu M b_mu - a_mu M b_nu + f_munu phi)
///   qbar_munu = d_mu bbar_nu - d_nu bbar_mu
///               - ig (bbar_mu M^T a_nu - bbar_nu M^T a_mu + phibar f_munu) Mtilde^T
/// Both skew; qbar is the entrywise conjugate of q for Hermitian a.
void momentum_q(const FieldState& s, const CouplingData& coupling,
                LorentzTensor2<CVec>& q, LorentzTensor2<CVec>& qbar);

/// Same tensors without the f phi term (the renormalizable part).
void renorm_tensor_h(const FieldState& s, const CouplingData& coupling,
                     LorentzTensor2<CVec>& h, LorentzTensor2<CVec>& hbar);

/// p_munu = f_munu - ig (Mtilde^T q_munu (x) phibar - phi (x) qbar_munu Mtilde).
LorentzTensor2<CMat> momentum_p(const LorentzTensor2<CMat>& f,
                                const LorentzTensor2<CVec>& q,
                                const LorentzTensor2<CVec>& qbar, const CVec& phi,
                                const CouplingData& coupling);

/// The homogeneously transforming combination
/// p + ig Mtilde^T q (x) phibar - ig phi (x) qbar Mtilde (equal to f when
/// the momenta are canonical).
CMat momentum_combination(const CMat& p, const CVec& q, const CVec& qbar,
                          const CVec& phi, const CouplingData& coupling);

/// pi^mu from the minimal coupling rule plus the derived p, q, qbar.
MomentumState canonical_momenta(const FieldState& s, const CouplingData& coupling);

/// H = pibar^alpha pi_alpha.
ScalarDensity hamiltonian_kg(const MomentumState& m);

enum class GaugeHamiltonianVariant { Full, Reduced };

/// The gauge-field Hamiltonian. Full keeps the symmetric-derivative terms
/// verbatim; Reduced drops every product that vanishes for skew momenta.
/// The two agree when p and q are skew.
ScalarDensity hamiltonian_gauge(const FieldState& s, const MomentumState& m,
                                const CouplingData& coupling,
                                GaugeHamiltonianVariant variant);

/// Free gauge-field kinetic terms:
/// -1/2 qbar^ab q_ab - 1/4 (p + ...)^ab (p + ...)_ab.
Jet hamiltonian_kin(const FieldState& s, const MomentumState& m,
                    const CouplingData& coupling);

/// The locally form-invariant amended Hamiltonian (Klein-Gordon system
/// part plus gauge terms with the symmetric-derivative pieces kept).
ScalarDensity hamiltonian_h2(const FieldState& s, const MomentumState& m,
                             const CouplingData& coupling);

/// The divergence of the explicitly x-dependent part of the amended
/// generating function, computed three independent ways:
///   direct         - from U, the shift, and their first and second
///                    derivatives (with the transformed momenta),
///   closed_form    - the same quantity rewritten in canonical variables
///                    on both sides of the map,
///   h2_difference  - H2(transformed) - H2(original).
struct DivergenceComparison {
  Complex direct;
  Complex closed_form;
  Complex h2_difference;
};

DivergenceComparison explicit_divergence_f2(const FieldState& s,
                                            const MomentumState& m,
                                            const GaugeMapEval& map,
                                            const CouplingData& coupling);

/// Gauge Lagrangian in canonical variables:
/// -1/4 tr f^ab f_ab - 1/2 qbar^ab q_ab
/// - pibar^a (ig a_a phi + M b_a) + (ig phibar a_a - bbar_a M^T) pi^a.
ScalarDensity lagrangian_gauge(const FieldState& s, const MomentumState& m,
                               const CouplingData& coupling);

/// Scale-free residual of the Legendre identity
/// p^ab d_b a_a + qbar^ab d_b b_a + d_b bbar_a q^ab - H_g = L_g.
double legendre_residual(const FieldState& s, const MomentumState& m,
                         const CouplingData& coupling);

/// L3 for the Klein-Gordon base system:
/// pibar^a pi_a - 1/4 tr f^ab f_ab - 1/2 qbar^ab q_ab with pi the
/// minimal-coupling momentum.
ScalarDensity lagrangian_l3_kg(const FieldState& s, const CouplingData& coupling);

/// L3 = L_r + L_nr with L_r built from the h tensors. The first line of
/// L_nr (the curl-of-b cross terms) vanishes for real fields; the rest
/// carries the (g/det M)^2 couplings.
struct RenormalizableSplit {
  ScalarDensity l_r;
  ScalarDensity l_nr;
  Jet l_nr_first_line;
  LorentzTensor2<CVec> h;
  LorentzTensor2<CVec> hbar;
};

RenormalizableSplit split_renormalizable(const FieldState& s,
                                         const CouplingData& coupling);

/// Euler-Lagrange residual of the massive gauge field equation,
/// r^mu = d_a q^mua - ig M^T a_a Mtilde^T q^mua
///        + M^T (d^mu phi - ig a^mu phi) - M^T M b^mu,
/// with the divergence taken through the composite q jets. Requires
/// order-2 fields.
LorentzCoVec<CVec> proca_residual(const FieldState& s, const CouplingData& coupling);

/// Same residual with q supplied by the caller (used to drive transformed
/// fields whose q follows from the momentum transformation rule).
LorentzCoVec<CVec> proca_residual_with_q(const FieldState& s,
                                         const CouplingData& coupling,
                                         const LorentzTensor2<CVec>& q);

/// First canonical equation residual for the base fields:
/// d_mu phi - pi_mu - ig a_mu phi - M b_mu, per mu. Zero when pi is the
/// minimal-coupling momentum.
LorentzCoVec<CVec> base_equation_residual(const FieldState& s,
                                          const MomentumState& m,
                                          const CouplingData& coupling);

}  // namespace gaugeforge
