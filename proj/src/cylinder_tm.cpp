#include "ising/cylinder_tm.hpp"

#include "ising/pfaffian.hpp"

namespace ising {

namespace {

void check_unit_interval(const Real& x, const char* what, int ell, int m) {
  if (!(x > 0 && x <= 1))
    throw DomainError(std::string("transfer matrix needs ") + what + " in (0,1] at ell=" + std::to_string(ell) +
                      " m=" + std::to_string(m) + "; the constant C2dag contains 1/z_-");
}

}  // namespace

std::vector<TMFactorPair> build_factors(const ReducedCouplings& red) {
  const int L = red.spec.L, M = red.spec.M;
  const auto uM = static_cast<std::size_t>(M);
  const auto H = shift_matrix(M, true);
  DenseMatrix left(2 * uM, 2 * uM), right(2 * uM, 2 * uM);
  left.set_block(0, 0, H.transpose());
  right.set_block(0, 0, H);
  for (std::size_t i = 0; i < uM; ++i) {
    left(uM + i, uM + i) = 1;
    right(uM + i, uM + i) = 1;
  }

  std::vector<TMFactorPair> out;
  for (int ell = 1; ell <= L; ++ell) {
    TMFactorPair f;
    f.ell = ell;
    f.Vz = DenseMatrix(2 * uM, 2 * uM);
    DenseMatrix vt(2 * uM, 2 * uM);
    for (int m = 1; m <= M; ++m) {
      const auto i = static_cast<std::size_t>(m - 1);
      Real z = ell < L ? red.z_at(ell, m) : Real(1);
      check_unit_interval(z, "z", ell, m);
      auto zp = pm(z);
      f.Vz(i, i) = zp.plus;
      f.Vz(uM + i, uM + i) = zp.plus;
      f.Vz(i, uM + i) = -zp.minus;
      f.Vz(uM + i, i) = -zp.minus;

      const Real& t = red.t_at(ell, m);
      check_unit_interval(t, "t", ell, m);
      auto tp = pm(t);
      vt(i, i) = tp.plus;
      vt(uM + i, uM + i) = tp.plus;
      vt(i, uM + i) = tp.minus;
      vt(uM + i, i) = tp.minus;
    }
    f.Vt = left * vt * right;
    out.push_back(std::move(f));
  }
  return out;
}

DenseMatrix interleave_blocks(const DenseMatrix& v) {
  const std::size_t M = v.rows() / 2;
  DenseMatrix out(v.rows(), v.cols());
  for (std::size_t b = 0; b < 2; ++b)
    for (std::size_t m = 0; m < M; ++m)
      for (std::size_t b2 = 0; b2 < 2; ++b2)
        for (std::size_t m2 = 0; m2 < M; ++m2) out(2 * m + b, 2 * m2 + b2) = v(b * M + m, b2 * M + m2);
  return out;
}

CylinderResult cylinder_logZ(const Context& ctx, const CouplingGrid& grid, int renormalize_every) {
  PrecisionScope scope(ctx);
  if (renormalize_every < 1) throw DomainError("renormalization cadence must be >= 1");
  const auto& spec = grid.spec();
  const auto uM = static_cast<std::size_t>(spec.M);
  auto red = reduce(grid);
  for (int ell = 1; ell < spec.L; ++ell)
    for (int m = 1; m <= spec.M; ++m)
      if (red.z_at(ell, m) == 0)
        throw DomainError("transfer-matrix path needs nonzero horizontal couplings: C2dag contains 1/z_- (ell=" +
                          std::to_string(ell) + ", m=" + std::to_string(m) + ")");
  auto factors = build_factors(red);

  Real log_scale = 0;
  auto renormalize = [&](DenseMatrix& p) {
    Real s = max_abs(p);
    p *= 1 / s;
    log_scale += log(s);
  };

  DenseMatrix P = factors[0].Vt;
  for (int ell = 2; ell <= spec.L; ++ell) {
    const auto k = static_cast<std::size_t>(ell - 1);
    P = factors[k].Vt * (factors[k - 1].Vz * P);
    if ((ell - 1) % renormalize_every == 0) renormalize(P);
  }
  renormalize(P);

  DenseMatrix corner(uM, uM);
  for (std::size_t i = 0; i < uM; ++i)
    for (std::size_t j = 0; j < uM; ++j)
      corner(i, j) = (P(i, j) + P(i, uM + j) + P(uM + i, j) + P(uM + i, uM + j)) / 2;

  auto det = log_abs_det(corner);
  if (det.sign == 0) throw PrecisionError("transfer-matrix corner block is numerically singular; raise --digits");

  // infinity-norm condition number of the corner block
  auto row_norm = [uM](const DenseMatrix& a) {
    Real best = 0;
    for (std::size_t i = 0; i < uM; ++i) {
      Real row = 0;
      for (std::size_t j = 0; j < uM; ++j) row += abs(a(i, j));
      best = std::max(best, row);
    }
    return best;
  };
  Real kappa = row_norm(corner) * row_norm(inverse(corner));
  CylinderResult r;
  r.digits_lost = log10(kappa);
  r.digits = ctx.digits();
  if (r.digits_lost > ctx.digits() - 10)
    throw PrecisionError("transfer-matrix product loses about " + format_real(r.digits_lost, 3) + " of " +
                         std::to_string(ctx.digits()) + " digits; raise --digits or use the spectral path");

  auto c = constants(grid);
  r.sign_c2dag = c.c2dag.sign;
  if (det.sign != 1) throw ConsistencyError("transfer-matrix corner determinant is not positive");
  r.logZ = (c.c2dag.log_abs + det.log_abs + static_cast<long>(uM) * log_scale) / 2;
  return r;
}

}  // namespace ising
