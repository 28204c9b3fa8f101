#include "ising/effspin.hpp"

#include <algorithm>
#include <functional>

namespace ising {

EffModel build_eff_model(const Spectrum& s, const ResidualSystem& rs) {
  const int M = s.M;
  if (static_cast<int>(rs.v.size()) != M) throw DomainError("residual system does not match the spectrum");
  const auto uM = static_cast<std::size_t>(M);
  EffModel m;
  m.M = M;
  m.L = rs.L;
  m.K = DenseMatrix(uM, uM);
  for (const auto& md : s.modes) {
    m.gamma_hat.push_back(md.gamma_hat);
    m.sigma.push_back(md.sigma);
  }
  for (std::size_t a = 0; a < uM; ++a) {
    for (std::size_t b = a + 1; b < uM; ++b) {
      const Real vv = rs.v[a] * rs.v[b];
      if (!(vv > 0))
        throw DomainError("effective coupling log argument is not positive for modes " + std::to_string(a + 1) +
                          "," + std::to_string(b + 1));
      const Real d = rs.c[a] - rs.c[b];
      const Real ratio = log(vv) - 2 * log(abs(d));
      if (!(ratio < 0)) m.sign_pattern_ok = false;
      m.K(a, b) = -m.sigma[a] * m.sigma[b] * ratio;
      m.K(b, a) = m.K(a, b);
    }
  }
  return m;
}

EffSums eff_sums(const EffModel& m) {
  const int M = m.M;
  if (M > kEffMaxModes) throw DomainError("effective spin enumeration limited to M <= 16");
  if (M < 2 || M % 2) throw DomainError("effective spin model needs even M >= 2");
  const int h = M / 2;
  // odd modes sit at even 0-based positions
  std::vector<std::size_t> odd, even;
  for (int k = 0; k < h; ++k) {
    odd.push_back(static_cast<std::size_t>(2 * k));
    even.push_back(static_cast<std::size_t>(2 * k + 1));
  }
  std::vector<std::vector<std::vector<std::size_t>>> subsets(static_cast<std::size_t>(h) + 1);
  for (unsigned mask = 0; mask < (1u << h); ++mask) {
    std::vector<std::size_t> pick;
    for (int k = 0; k < h; ++k)
      if (mask & (1u << k)) pick.push_back(static_cast<std::size_t>(k));
    subsets[pick.size()].push_back(pick);
  }

  struct Term {
    Real log_w;
    Real field;
    int k;
  };
  std::vector<Term> terms;
  std::vector<std::size_t> flipped;
  for (int k = 0; k <= h; ++k) {
    for (const auto& so : subsets[static_cast<std::size_t>(k)]) {
      for (const auto& se : subsets[static_cast<std::size_t>(k)]) {
        flipped.clear();
        for (auto i : so) flipped.push_back(odd[i]);
        for (auto i : se) flipped.push_back(even[i]);
        Real lw = 0, field = 0;
        for (std::size_t a = 0; a < flipped.size(); ++a) {
          field += m.gamma_hat[flipped[a]];
          for (std::size_t b = a + 1; b < flipped.size(); ++b) lw += m.K(flipped[a], flipped[b]);
        }
        terms.push_back({lw - m.L * field, field, k});
      }
    }
  }
  Real top = terms.front().log_w;
  for (const auto& t : terms) top = std::max(top, t.log_w);
  Real z = 0, mag = 0;
  EffSums out;
  out.order.assign(static_cast<std::size_t>(h), Real(0));
  for (const auto& t : terms) {
    Real w = exp(t.log_w - top);
    z += w;
    mag += w * t.field;
    if (t.k > 0) out.order[static_cast<std::size_t>(t.k - 1)] += exp(t.log_w);
  }
  out.log_z = top + log(z);
  out.magnetization = mag / z / M;
  out.configurations = static_cast<long long>(terms.size());
  return out;
}

Real log_z_eff(const EffModel& m) { return eff_sums(m).log_z; }

Real magnetization_eff(const EffModel& m) { return eff_sums(m).magnetization; }

}  // namespace ising
