#pragma once

#include <cstdint>
#include <string>

#include "ising/model.hpp"

namespace test_support {

// Deterministic couplings in [lo, hi] with 1/1000 resolution.
inline ising::CouplingGrid random_grid(const ising::LatticeSpec& spec, std::uint32_t seed, double lo,
                                       double hi) {
  std::vector<ising::Real> kh, kv;
  auto next = [&seed, lo, hi]() {
    seed = seed * 1664525u + 1013904223u;
    int step = static_cast<int>((seed >> 9) % 1001u);
    int ilo = static_cast<int>(lo * 1000), ihi = static_cast<int>(hi * 1000);
    return ising::Real(ilo + (ihi - ilo) * step / 1000) / 1000;
  };
  for (int k = 0; k < spec.sites(); ++k) {
    kh.push_back(next());
    kv.push_back(next());
  }
  return ising::CouplingGrid(spec, kh, kv);
}

inline ising::Real rel_diff(const ising::Real& a, const ising::Real& b) {
  return abs(a - b) / std::max(abs(a), abs(b));
}

}  // namespace test_support
