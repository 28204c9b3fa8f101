#include "ising/pfaffian.hpp"

namespace ising {

DenseMatrix shift_matrix(int n, bool minus) {
  DenseMatrix h(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i + 1 < n; ++i) h(static_cast<std::size_t>(i), static_cast<std::size_t>(i + 1)) = 1;
  if (minus) h(static_cast<std::size_t>(n - 1), 0) -= 1;
  return h;
}

KasteleynSystem build_A(const ReducedCouplings& red) {
  const int L = red.spec.L, M = red.spec.M;
  const auto N = static_cast<std::size_t>(L * M);
  const auto uM = static_cast<std::size_t>(M);
  KasteleynSystem ks;
  ks.Zh = DenseMatrix(N, N);
  ks.Zv = DenseMatrix(N, N);
  for (int ell = 1; ell <= L; ++ell)
    for (int m = 1; m <= M; ++m) {
      const std::size_t i = red.index(ell, m);
      if (ell < L) ks.Zh(i, i + uM) = red.z_at(ell, m);
      if (m < M)
        ks.Zv(i, i + 1) += red.zv_at(ell, m);
      // wrap-around bond carries the -1 of H_M^-; it vanishes for open rows
      if (m == M) ks.Zv(i, i + 1 - uM) -= red.zv_at(ell, m);
    }

  const DenseMatrix I = DenseMatrix::identity(N);
  const DenseMatrix mI = Real(-1) * I;
  const DenseMatrix Zh1 = I + ks.Zh;
  const DenseMatrix Zv1 = I + ks.Zv;
  const DenseMatrix* layout[4][4] = {};
  DenseMatrix zero(N, N);
  DenseMatrix mZv1T = Real(-1) * Zv1.transpose();
  DenseMatrix mZh1T = Real(-1) * Zh1.transpose();
  layout[0][0] = &zero; layout[0][1] = &Zv1;  layout[0][2] = &mI;    layout[0][3] = &mI;
  layout[1][0] = &mZv1T; layout[1][1] = &zero; layout[1][2] = &I;    layout[1][3] = &mI;
  layout[2][0] = &I;    layout[2][1] = &mI;   layout[2][2] = &zero;  layout[2][3] = &Zh1;
  layout[3][0] = &I;    layout[3][1] = &I;    layout[3][2] = &mZh1T; layout[3][3] = &zero;

  ks.A = DenseMatrix(4 * N, 4 * N);
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) ks.A.set_block(a * N, b * N, *layout[a][b]);

  for (std::size_t i = 0; i < 4 * N; ++i)
    for (std::size_t j = 0; j <= i; ++j)
      if (ks.A(i, j) != -ks.A(j, i)) throw ConsistencyError("build_A: matrix is not antisymmetric");
  return ks;
}

Real logZ_pfaffian(const Context& ctx, const CouplingGrid& grid) {
  PrecisionScope scope(ctx);
  auto ks = build_A(reduce(grid));
  auto det = log_abs_det(ks.A);
  if (det.sign != 1)
    throw ConsistencyError("Kasteleyn determinant is not positive (sign " + std::to_string(det.sign) + ")");
  return (log_c0(grid).log_abs + det.log_abs) / 2;
}

namespace {

DenseMatrix diag_column(const ReducedCouplings& red, int ell, bool vertical) {
  const auto M = static_cast<std::size_t>(red.spec.M);
  DenseMatrix d(M, M);
  for (std::size_t m = 0; m < M; ++m)
    d(m, m) = vertical ? red.zv_at(ell, static_cast<int>(m) + 1) : red.z_at(ell, static_cast<int>(m) + 1);
  return d;
}

// +-[(1 +- Z^T)^{-1} - (1 +- Z)^{-1}]^{-1}
DenseMatrix a_pm(const DenseMatrix& Z, int s) {
  const auto I = DenseMatrix::identity(Z.rows());
  const Real rs = s;
  DenseMatrix inner = inverse(I + rs * Z.transpose()) - inverse(I + rs * Z);
  return rs * inverse(inner);
}

DenseMatrix d_block(const DenseMatrix& Z) {
  const auto I = DenseMatrix::identity(Z.rows());
  const auto Zt = Z.transpose();
  return (I - Zt) * inverse(I - Z * Zt) - (I - Z) * inverse(I - Zt * Z);
}

}  // namespace

DenseMatrix schur_block_c44(const ReducedCouplings& red) {
  const int L = red.spec.L, M = red.spec.M;
  if (M % 2) throw DomainError("Schur reduction needs even M");
  const auto uM = static_cast<std::size_t>(M);
  const auto H = shift_matrix(M, true);
  const auto N = static_cast<std::size_t>(L * M);
  DenseMatrix C(N, N);
  std::vector<DenseMatrix> plus(static_cast<std::size_t>(L));
  for (int ell = 1; ell <= L; ++ell) {
    const auto Z = diag_column(red, ell, true) * H;
    DenseMatrix Al = a_pm(Z, -1);
    plus[static_cast<std::size_t>(ell - 1)] = a_pm(Z, 1);
    if (ell > 1) {
      const auto zprev = diag_column(red, ell - 1, false);
      Al += zprev * plus[static_cast<std::size_t>(ell - 2)] * zprev;
    }
    const auto r0 = static_cast<std::size_t>(ell - 1) * uM;
    C.set_block(r0, r0, Al);
    if (ell < L) {
      DenseMatrix B = Real(-1) * (inverse(d_block(Z)) * diag_column(red, ell, false));
      C.set_block(r0, r0 + uM, B);
      C.set_block(r0 + uM, r0, Real(-1) * B.transpose());
    }
  }
  return C;
}

Real schur_check(const Context& ctx, const CouplingGrid& grid) {
  PrecisionScope scope(ctx);
  const auto& spec = grid.spec();
  if (spec.M % 2) throw DomainError("Schur reduction needs even M, got M=" + std::to_string(spec.M));
  auto red = reduce(grid);

  // det A_{44-removed} = prod_ell (prod_{odd m} zv + prod_{even m} zv)^2, m 1-based
  Real log_reduced = 0;
  for (int ell = 1; ell <= spec.L; ++ell) {
    Real po = 1, pe = 1;
    for (int m = 1; m <= spec.M; ++m) (m % 2 ? po : pe) *= red.zv_at(ell, m);
    Real s = po + pe;
    if (s == 0)
      throw DomainError("Schur reduction needs an invertible reduced block; vertical couplings vanish in column " +
                        std::to_string(ell));
    log_reduced += 2 * log(abs(s));
  }

  auto ks = build_A(red);
  auto det_a = log_abs_det(ks.A);
  auto det_c = log_abs_det(schur_block_c44(red));
  if (det_a.sign == 0) throw ConsistencyError("Kasteleyn matrix is singular");
  // relative defect of the two positive determinants
  Real rel = exp(log_reduced + det_c.log_abs - det_a.log_abs);
  if (det_c.sign != det_a.sign) return 1 + rel;
  return abs(rel - 1);
}

}  // namespace ising
