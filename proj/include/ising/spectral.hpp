#pragma once

#include <vector>

#include "ising/model.hpp"

namespace ising {

enum class AngleKind { real, imaginary };

// One eigenvalue pair lambda^{+-1} of the column transfer matrix.
struct Mode {
  AngleKind kind = AngleKind::real;
  Real angle;             // |phi| for real angles, psi for phi = i psi
  int sigma = 1;          // (-1)^{mu-1}
  Real c;                 // lambda_+
  Real lambda_hat;        // > 1
  Real gamma_hat;         // log lambda_hat > 0
  Real lambda_hat_minus;  // (lambda_hat - 1/lambda_hat) / 2 > 0

  Real lambda() const { return sigma > 0 ? lambda_hat : 1 / lambda_hat; }
  Real gamma() const { return sigma * gamma_hat; }
  Real lambda_minus() const { return sigma * lambda_hat_minus; }
};

struct Spectrum {
  int M = 0;
  Real z;
  Real t;
  std::vector<Mode> modes;  // mu = 1..M stored at index mu-1
  int grid_points = 0;      // bracketing grid used for the real angles
  int digits = 0;
};

// Characteristic polynomial in the angle; the removable point sin(phi) = 0 uses
// the limit M cos(M phi) / cos(phi).
Real char_poly(const Real& phi, const Real& z, const Real& t, int M);
// Same polynomial at phi = i psi.
Real char_poly_imaginary(const Real& psi, const Real& z, const Real& t, int M);

Spectrum find_modes(const Context& ctx, const Real& z, const Real& t, int M);

struct ModeDefects {
  Real char_poly;    // max |P_M(phi_mu)| / scale
  Real sin_ratio;    // max |sin(M phi)/sin(phi) + z_-/lambda_-|, relative
  Real half_angle;   // squared half-angle identities
  Real tan_product;  // tan(M phi/2) tan(phi/2) = (z - t lambda)/(tz - lambda)
  Real tan_m_half;   // squared tan(M phi/2) identity
  Real prod_lambda;  // |prod lambda_mu - t| / t
  int sigma_sum = 0;
};

ModeDefects mode_defects(const Spectrum& s);

// Dense symmetric block transfer matrix [[T+, T-], [T-, T+]] (validation only).
struct T2System {
  DenseMatrix T_plus;
  DenseMatrix T_minus;

  DenseMatrix full() const;
  // [[T+, -T-], [-T-, T+]]
  DenseMatrix inverse_by_symmetry() const;
};

T2System build_T2(const Real& z, const Real& t, int M);

// Rows mu, columns m = -M+1, -M+3, ..., M-1 (validation only).
DenseMatrix eigvec_matrix(const Spectrum& s);

// Z from det M with the constant C2 (validation path); refuses when L max gamma_hat
// exceeds half the working digits.
Real logZ_via_detM(const Context& ctx, const Real& L, const Spectrum& s);

struct ResidualSystem {
  int M = 0;
  Real L;
  std::vector<Real> c, g, f, p, v;
  std::vector<int> p_sign;
  std::vector<Real> log_abs_p;
  // Y = -A B with A_ik = lhat_{e_i}^{-L} v_{e_i} / (c_{e_i} - c_{o_k}),
  //             B_kj = lhat_{o_k}^{-L} v_{o_k} / (c_{o_k} - c_{e_j})
  DenseMatrix A;
  DenseMatrix B;
  DenseMatrix Y;
  DenseMatrix T_eo;  // 1 / (c_e - c_o)
  DenseMatrix T_oe;
  Real log_d_oe;  // log |prod_{o,e} (c_o - c_e)|
  int d_oe_sign = 1;
  Real log_q_o;
  Real log_q_e;
};

ResidualSystem residual_system(const Spectrum& s, const Real& L);

// max |P_e T_eo P_o T_oe - 1|
Real cauchy_inverse_defect(const ResidualSystem& rs);

// log det(1 + Y); throws ConsistencyError when det(1 + Y) <= 0.
Real log_zsres(const ResidualSystem& rs);

// Closed product for det(1 + Y) at L = 0. The overall sign of the product depends on
// the mode ordering and is fixed by taking the positive value.
Real log_zsres_closed_L0(const Spectrum& s);

struct SpectralResult {
  Real logZ;
  Real log_zsres;   // log det(1 + Y)
  Real log_strip;   // logZ - log_zsres
  int bracket_sign = 1;
  int digits = 0;
};

// Homogeneous open rectangle with real L >= 0.
SpectralResult spectral_logZ(const Spectrum& s, const ResidualSystem& rs);
SpectralResult spectral_logZ(const Context& ctx, const Real& L, int M, const Real& z, const Real& t);

Real logZ_spectral(const Context& ctx, const LatticeSpec& spec, const Real& z, const Real& t);

}  // namespace ising
