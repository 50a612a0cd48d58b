#pragma once

#include <array>
#include <vector>

#include "gaugeforge/jet.hpp"

namespace gaugeforge {

/// Minkowski metric, signature (+,-,-,-). The paper orders coordinates as
/// x^mu = (t,x,y,z) with x_mu = (t,-x,-y,-z); this constant is the single
/// place the signature enters.
inline constexpr std::array<double, 4> kMetricDiag{+1.0, -1.0, -1.0, -1.0};

inline double metric(int mu, int nu) {
  return mu == nu ? kMetricDiag[static_cast<std::size_t>(mu)] : 0.0;
}

/// Sign picked up when raising or lowering the index mu.
inline double metric_sign(int mu) { return kMetricDiag[static_cast<std::size_t>(mu)]; }

/// N-component complex-jet vector. Also used for adjoint (row) vectors;
/// whether a CVec is a column or a row is a naming convention at the use
/// site, matching the bra/ket-free style of the formulas.
class CVec {
 public:
  CVec() : n_(0) {}
  explicit CVec(int n) : n_(n), e_(static_cast<std::size_t>(n)) {}

  int size() const { return n_; }
  Jet& operator()(int i) { return e_[static_cast<std::size_t>(i)]; }
  const Jet& operator()(int i) const { return e_[static_cast<std::size_t>(i)]; }

 private:
  int n_;
  std::vector<Jet> e_;
};

/// N x N complex-jet matrix, row major.
class CMat {
 public:
  CMat() : n_(0) {}
  explicit CMat(int n) : n_(n), e_(static_cast<std::size_t>(n * n)) {}

  static CMat identity(int n);

  int size() const { return n_; }
  Jet& operator()(int i, int j) { return e_[static_cast<std::size_t>(i * n_ + j)]; }
  const Jet& operator()(int i, int j) const {
    return e_[static_cast<std::size_t>(i * n_ + j)];
  }

 private:
  int n_;
  std::vector<Jet> e_;
};

CVec operator+(const CVec& a, const CVec& b);
CVec operator-(const CVec& a, const CVec& b);
CVec operator-(const CVec& a);
CVec operator*(const Jet& s, const CVec& a);
CMat operator+(const CMat& a, const CMat& b);
CMat operator-(const CMat& a, const CMat& b);
CMat operator-(const CMat& a);
CMat operator*(const Jet& s, const CMat& a);
CMat operator*(const CMat& a, const CMat& b);
CVec operator*(const CMat& m, const CVec& v);

/// Row vector times matrix: (v M)_j = sum_i v_i M_ij.
CVec vec_mat(const CVec& v, const CMat& m);

/// sum_i a_i b_i; the caller supplies the adjoint side already conjugated.
Jet dot(const CVec& a, const CVec& b);

/// Column (x) row outer product over multiplet indices.
CMat outer(const CVec& col, const CVec& row);

Jet trace(const CMat& m);

/// Conjugate transpose; jet-conj entrywise.
CMat adjoint(const CMat& m);

/// Entrywise conjugate turning a column into its adjoint row (and back).
CVec adjoint(const CVec& v);

CMat conj_entries(const CMat& m);
CVec conj_entries(const CVec& v);

/// Extracts d/dx^mu of every entry (order drops by one).
CMat partial(const CMat& m, int mu);
CVec partial(const CVec& v, int mu);

/// Largest entry-value magnitude of m (jet values only).
double max_abs_value(const CMat& m);
double max_abs_value(const CVec& v);

/// Determinant of the jet-value matrix by LU with partial pivoting.
Complex det_values(const CMat& m);

/// U = exp(iH) for Hermitian H, by scaling-and-squaring on the jet
/// entries with the series truncated at term magnitude < 1e-18. Unitary
/// by construction, with derivatives propagated exactly through the
/// series. Throws NotHermitian when ||H - H^dagger|| > 1e-12 at value
/// level.
CMat mat_exp_i_hermitian(const CMat& h);

/// Four components with one lower Lorentz index.
template <typename T>
struct LorentzCoVec {
  std::array<T, 4> c;

  T& operator[](int mu) { return c[static_cast<std::size_t>(mu)]; }
  const T& operator[](int mu) const { return c[static_cast<std::size_t>(mu)]; }
};

/// Rank-2 tensor with two lower Lorentz indices. With the skew flag set,
/// only the six mu < nu components are stored and X_numu = -X_munu holds
/// exactly by construction (the diagonal is exactly zero).
template <typename T>
class LorentzTensor2 {
 public:
  LorentzTensor2() : skew_(false) {}
  LorentzTensor2(const T& zero, bool skew) : skew_(skew), zero_(zero) {
    full_.fill(zero);
  }

  bool skew() const { return skew_; }

  T get(int mu, int nu) const {
    if (skew_) {
      if (mu == nu) return zero_;
      if (mu < nu) return full_[idx(mu, nu)];
      return -full_[idx(nu, mu)];
    }
    return full_[idx(mu, nu)];
  }

  /// For skew tensors only mu < nu may be written; the mirror component
  /// follows from the constraint.
  void set(int mu, int nu, const T& v) {
    if (skew_) {
      if (mu >= nu) throw Error("skew tensor: set requires mu < nu");
      full_[idx(mu, nu)] = v;
      return;
    }
    full_[idx(mu, nu)] = v;
  }

 private:
  static std::size_t idx(int mu, int nu) {
    return static_cast<std::size_t>(mu * 4 + nu);
  }

  bool skew_;
  T zero_;
  std::array<T, 16> full_;
};

/// v^alpha v_alpha for two stored-lower Lorentz vectors (one index raised
/// through the metric).
Jet lorentz_dot(const LorentzCoVec<Jet>& a, const LorentzCoVec<Jet>& b);

}  // namespace gaugeforge
