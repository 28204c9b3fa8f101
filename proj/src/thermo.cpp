#include "ising/thermo.hpp"

#include <ostream>

namespace ising {

ThermoReport report(const Context& ctx, const LatticeSpec& spec, const Real& Kh, const Real& Kv) {
  PrecisionScope scope(ctx);
  spec.validate();
  if (spec.bc != VerticalBoundary::open) throw DomainError("thermo report needs open vertical boundaries");
  auto h = HomogeneousCouplings::from_couplings(Kh, Kv);
  auto s = find_modes(ctx, h.z, h.t, spec.M);
  auto rs = residual_system(s, Real(spec.L));
  auto sr = spectral_logZ(s, rs);
  if (sr.bracket_sign != 1) throw ConsistencyError("spectral product is negative; Z would not be real");
  ThermoReport r;
  r.Kh = Kh;
  r.Kv = Kv;
  r.L = spec.L;
  r.M = spec.M;
  r.logZ = sr.logZ;
  r.F = -sr.logZ;
  r.F_strip_res = -sr.log_zsres;
  r.F_strip = r.F - r.F_strip_res;
  r.casimir_strip = casimir_force_strip(s, rs);
  return r;
}

Real casimir_force_strip(const Spectrum& s, const ResidualSystem& rs) {
  const std::size_t h = rs.Y.rows();
  DenseMatrix ge(h, h), go(h, h);
  for (std::size_t i = 0; i < h; ++i) {
    ge(i, i) = s.modes[2 * i + 1].gamma_hat;
    go(i, i) = s.modes[2 * i].gamma_hat;
  }
  // Y = -A B with both factors carrying exp(-L gamma_hat) on their rows
  DenseMatrix dY = ge * rs.A * rs.B + rs.A * go * rs.B;
  DenseMatrix X = solve(DenseMatrix::identity(h) + rs.Y, dY);
  Real tr = 0;
  for (std::size_t i = 0; i < h; ++i) tr += X(i, i);
  return tr / s.M;
}

Real casimir_force_strip(const Context& ctx, const Real& L, int M, const Real& z, const Real& t) {
  PrecisionScope scope(ctx);
  auto s = find_modes(ctx, z, t, M);
  return casimir_force_strip(s, residual_system(s, L));
}

Real casimir_force_strip_fd(const Context& ctx, const Real& L, int M, const Real& z, const Real& t,
                            const Real& dL) {
  PrecisionScope scope(ctx);
  if (!(L - dL >= 0)) throw DomainError("finite difference needs L >= dL");
  auto s = find_modes(ctx, z, t, M);
  Real up = log_zsres(residual_system(s, L + dL));
  Real down = log_zsres(residual_system(s, L - dL));
  return (up - down) / (2 * dL) / M;
}

CornerExtraction extract_corner(const Context& ctx, const Real& K, const std::vector<int>& sizes) {
  PrecisionScope scope(ctx);
  if (sizes.empty()) throw DomainError("corner extraction needs at least one size");
  auto pieces = free_energy_pieces(ctx, K);
  const Real z = tanh(K);
  const Real t = dual(z);
  CornerExtraction out;
  out.sizes = sizes;
  for (int L : sizes) {
    if (L < 2 || L % 2) throw DomainError("corner extraction sizes must be even, got " + std::to_string(L));
    Real F = -spectral_logZ(ctx, Real(L), L, z, t).logZ;
    Real c = F - Real(L) * L * pieces.f_b - 2 * Real(L) * pieces.f_s;
    // the two ordered states contribute log 2 to -F below T_c
    if (pieces.phase == Phase::below) c += log(Real(2));
    out.constants.push_back(c);
  }
  for (std::size_t i = 2; i < out.constants.size(); ++i) {
    Real prev = abs(out.constants[i - 1] - out.constants[i - 2]);
    Real cur = abs(out.constants[i] - out.constants[i - 1]);
    if (cur > prev) out.monotone = false;
  }
  out.f_c = out.constants.back();
  out.f_c_product = pieces.f_c;
  out.residual = out.f_c - out.f_c_product;
  return out;
}

void write_report_header(std::ostream& out) {
  out << "Kh,Kv,L,M,logZ,F,F_strip,F_strip_res,casimir_strip\n";
}

void write_report_row(std::ostream& out, const ThermoReport& r, int digits) {
  out << format_real(r.Kh, digits) << ',' << format_real(r.Kv, digits) << ',' << r.L << ',' << r.M << ','
      << format_real(r.logZ, digits) << ',' << format_real(r.F, digits) << ',' << format_real(r.F_strip, digits)
      << ',' << format_real(r.F_strip_res, digits) << ',' << format_real(r.casimir_strip, digits) << '\n';
}

}  // namespace ising
