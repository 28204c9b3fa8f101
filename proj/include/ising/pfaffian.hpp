#pragma once

#include "ising/model.hpp"

namespace ising {

// Antisymmetric 4LM x 4LM matrix; site index ell*M + m (0-based, column-major in ell).
struct KasteleynSystem {
  DenseMatrix A;
  DenseMatrix Zh;
  DenseMatrix Zv;
};

// n x n shift matrix with ones on the superdiagonal; `minus` adds -1 at (n-1, 0).
DenseMatrix shift_matrix(int n, bool minus);

KasteleynSystem build_A(const ReducedCouplings& reduced);

Real logZ_pfaffian(const Context& ctx, const CouplingGrid& grid);

// Closed form of the Schur complement of the last diagonal block (M x M blocks,
// block tridiagonal in ell). Throws DomainError for odd M or vanishing vertical couplings.
DenseMatrix schur_block_c44(const ReducedCouplings& reduced);

// Relative defect |det A - det A_{44-removed} det C44| / |det A| with the reduced
// determinant from its product formula.
Real schur_check(const Context& ctx, const CouplingGrid& grid);

}  // namespace ising
