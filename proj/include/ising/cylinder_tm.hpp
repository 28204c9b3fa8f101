#pragma once

#include <vector>

#include "ising/model.hpp"

namespace ising {

// 2M x 2M factors for column ell: Vz from z_{ell,m} (identity for ell = L),
// Vt from the dual vertical couplings t_{ell,m} conjugated with H_M^-.
struct TMFactorPair {
  int ell = 0;
  DenseMatrix Vz;
  DenseMatrix Vt;
};

std::vector<TMFactorPair> build_factors(const ReducedCouplings& reduced);

// Reorders a 2x2 arrangement of M x M blocks into an M x M arrangement of 2x2 blocks.
DenseMatrix interleave_blocks(const DenseMatrix& v);

struct CylinderResult {
  Real logZ;
  // log10 of the condition number of the final corner block: digits lost to cancellation
  Real digits_lost;
  int sign_c2dag = 1;
  int digits = 0;
};

// Throws PrecisionError when the corner determinant keeps fewer than 10 reliable digits.
CylinderResult cylinder_logZ(const Context& ctx, const CouplingGrid& grid, int renormalize_every = 1);

inline Real logZ_cylinder(const Context& ctx, const CouplingGrid& grid) {
  return cylinder_logZ(ctx, grid).logZ;
}

}  // namespace ising
