#pragma once

#include <iosfwd>
#include <optional>
#include <vector>

#include "ising/qseries.hpp"
#include "ising/spectral.hpp"

namespace ising {

struct ThermoReport {
  Real Kh, Kv;
  int L = 0, M = 0;
  Real logZ;
  Real F;            // -log Z
  Real F_strip;      // F - F_strip_res
  Real F_strip_res;  // -log det(1 + Y)
  Real casimir_strip;
  std::optional<Real> corner_residual;
};

// Homogeneous open rectangle via the spectral path.
ThermoReport report(const Context& ctx, const LatticeSpec& spec, const Real& Kh, const Real& Kv);

// (1/M) d/dL log det(1 + Y) = (1/M) tr[(1 + Y)^{-1} dY/dL]
Real casimir_force_strip(const Spectrum& s, const ResidualSystem& rs);
Real casimir_force_strip(const Context& ctx, const Real& L, int M, const Real& z, const Real& t);
// Central difference of log det(1 + Y) in the real strip length.
Real casimir_force_strip_fd(const Context& ctx, const Real& L, int M, const Real& z, const Real& t,
                            const Real& dL = Real("1e-4"));

struct CornerExtraction {
  std::vector<int> sizes;
  std::vector<Real> constants;  // F(L,L) - L^2 f_b - 2 L f_s, shifted by log 2 below T_c
  Real f_c;                     // value at the largest size
  Real f_c_product;
  Real residual;  // f_c - f_c_product
  bool monotone = true;  // successive differences shrink
};

// Square L = M lattices, isotropic K away from K_c; sizes must be even.
CornerExtraction extract_corner(const Context& ctx, const Real& K, const std::vector<int>& sizes);

void write_report_header(std::ostream& out);
void write_report_row(std::ostream& out, const ThermoReport& r, int digits);

}  // namespace ising
