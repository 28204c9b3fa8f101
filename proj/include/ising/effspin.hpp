#pragma once

#include <vector>

#include "ising/spectral.hpp"

namespace ising {

// Constrained long-range spin model whose partition sum equals det(1 + Y).
// Spins s_mu in {0,1}; a configuration is balanced when it flips as many
// odd (sigma = +1) as even (sigma = -1) modes.
struct EffModel {
  int M = 0;
  Real L;
  std::vector<Real> gamma_hat;
  std::vector<int> sigma;
  DenseMatrix K;  // K_{mu nu} = -sigma_mu sigma_nu log(v_mu v_nu / (c_mu - c_nu)^2)
  // true when every pair has (c_mu - c_nu)^2 > v_mu v_nu, i.e. sign K = sigma sigma
  bool sign_pattern_ok = true;
};

inline constexpr int kEffMaxModes = 16;

// Throws DomainError when some v_mu v_nu <= 0 (log argument not positive).
EffModel build_eff_model(const Spectrum& s, const ResidualSystem& rs);

struct EffSums {
  Real log_z;          // log Z_eff
  Real magnetization;  // (1/M) <sum gamma_hat_mu s_mu>
  // Z_eff = 1 + sum_k order[k-1]: order k collects configurations with k flips per sublattice
  std::vector<Real> order;
  long long configurations = 0;
};

// Exact enumeration of all balanced configurations; M <= kEffMaxModes.
EffSums eff_sums(const EffModel& m);

Real log_z_eff(const EffModel& m);
Real magnetization_eff(const EffModel& m);

}  // namespace ising
