#include "ising/oracle.hpp"

#include <bit>

namespace ising {

namespace {

struct Bond {
  int a;
  int b;
  Real K;
};

std::vector<Bond> collect_bonds(const CouplingGrid& grid, Real& constant) {
  const auto& spec = grid.spec();
  const int L = spec.L, M = spec.M;
  auto site = [M](int ell, int m) { return (ell - 1) * M + (m - 1); };
  std::vector<Bond> bonds;
  constant = 0;
  for (int ell = 1; ell <= L; ++ell)
    for (int m = 1; m <= M; ++m) {
      if (ell < L && grid.kh(ell, m) != 0) bonds.push_back({site(ell, m), site(ell + 1, m), grid.kh(ell, m)});
      const Real& kv = grid.kv(ell, m);
      if (kv == 0) continue;
      if (m < M)
        bonds.push_back({site(ell, m), site(ell, m + 1), kv});
      else if (spec.bc == VerticalBoundary::periodic) {
        if (M == 1)
          constant += kv;  // sigma^2 = 1
        else
          bonds.push_back({site(ell, M), site(ell, 1), kv});
      }
    }
  return bonds;
}

}  // namespace

OracleResult brute_force_logZ(const Context& ctx, const CouplingGrid& grid, bool fix_first_spin) {
  PrecisionScope scope(ctx);
  const auto& spec = grid.spec();
  const int n_sites = spec.sites();
  if (n_sites > kOracleMaxSites)
    throw DomainError("oracle refuses LM = " + std::to_string(n_sites) +
                      ": enumeration is bounded by LM <= " + std::to_string(kOracleMaxSites));

  Real constant;
  auto bonds = collect_bonds(grid, constant);

  // neighbor lists; a pair joined by two bonds appears twice
  std::vector<std::vector<std::pair<int, Real>>> nbr(static_cast<std::size_t>(n_sites));
  for (const auto& b : bonds) {
    nbr[static_cast<std::size_t>(b.a)].push_back({b.b, b.K});
    nbr[static_cast<std::size_t>(b.b)].push_back({b.a, b.K});
  }

  // flip factor exp(-2 s_i h_i) indexed by own spin bit and neighbor spin bits
  std::vector<std::vector<Real>> factor(static_cast<std::size_t>(n_sites));
  for (int i = 0; i < n_sites; ++i) {
    const auto& ni = nbr[static_cast<std::size_t>(i)];
    const std::size_t patterns = std::size_t{1} << (ni.size() + 1);
    auto& tab = factor[static_cast<std::size_t>(i)];
    tab.resize(patterns);
    for (std::size_t p = 0; p < patterns; ++p) {
      int si = (p & 1) ? -1 : 1;
      Real h = 0;
      for (std::size_t k = 0; k < ni.size(); ++k) {
        int sj = (p >> (k + 1)) & 1 ? -1 : 1;
        h += sj * ni[k].second;
      }
      tab[p] = exp(-2 * si * h);
    }
  }

  Real e_ref = 0;
  for (const auto& b : bonds) e_ref += abs(b.K);

  std::uint32_t state = 0;  // bit set = spin down
  auto energy = [&]() {
    Real e = 0;
    for (const auto& b : bonds) {
      int sa = (state >> b.a) & 1 ? -1 : 1;
      int sb = (state >> b.b) & 1 ? -1 : 1;
      e += sa * sb * b.K;
    }
    return e;
  };

  const int offset = fix_first_spin ? 1 : 0;
  const int n_free = n_sites - offset;
  const std::uint64_t count = std::uint64_t{1} << n_free;

  Real w = exp(energy() - e_ref);
  Real acc = w;
  for (std::uint64_t k = 1; k < count; ++k) {
    const int i = std::countr_zero(k) + offset;
    const auto& ni = nbr[static_cast<std::size_t>(i)];
    std::size_t p = (state >> i) & 1;
    for (std::size_t q = 0; q < ni.size(); ++q) p |= static_cast<std::size_t>((state >> ni[q].first) & 1) << (q + 1);
    w *= factor[static_cast<std::size_t>(i)][p];
    state ^= std::uint32_t{1} << i;
    if ((k & 0xffff) == 0) w = exp(energy() - e_ref);
    acc += w;
  }

  OracleResult r;
  r.logZ = e_ref + constant + log(acc);
  if (fix_first_spin) r.logZ += log(Real(2));
  r.nconfig = std::uint64_t{1} << n_sites;
  r.digits = ctx.digits();
  return r;
}

}  // namespace ising
