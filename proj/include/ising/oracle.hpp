#pragma once

#include <cstdint>

#include "ising/model.hpp"

namespace ising {

inline constexpr int kOracleMaxSites = 24;

struct OracleResult {
  Real logZ;
  std::uint64_t nconfig = 0;  // 2^{LM}
  int digits = 0;
};

// Sum over all 2^{LM} spin states. With fix_first_spin the state space is
// halved using spin-flip symmetry and the sum doubled.
OracleResult brute_force_logZ(const Context& ctx, const CouplingGrid& grid,
                              bool fix_first_spin = true);

}  // namespace ising
