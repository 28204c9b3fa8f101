#include "ising/model.hpp"

#include <fstream>
#include <sstream>

namespace ising {

void LatticeSpec::validate() const {
  if (L < 1 || M < 1)
    throw DomainError("lattice needs L >= 1 and M >= 1, got L=" + std::to_string(L) +
                      " M=" + std::to_string(M));
}

CouplingGrid::CouplingGrid(const LatticeSpec& spec, std::vector<Real> kh, std::vector<Real> kv)
    : spec_(spec), kh_(std::move(kh)), kv_(std::move(kv)) {
  spec_.validate();
  const auto n = static_cast<std::size_t>(spec_.sites());
  if (kh_.size() != n || kv_.size() != n)
    throw DomainError("coupling grid needs " + std::to_string(n) + " entries per direction");
  for (std::size_t k = 0; k < n; ++k)
    if (!isfinite(kh_[k]) || !isfinite(kv_[k])) throw DomainError("coupling grid has non-finite entries");
  for (int m = 1; m <= spec_.M; ++m) kh_[index(spec_.L, m)] = 0;
  if (spec_.bc == VerticalBoundary::open)
    for (int ell = 1; ell <= spec_.L; ++ell) kv_[index(ell, spec_.M)] = 0;
}

CouplingGrid CouplingGrid::homogeneous(const LatticeSpec& spec, const Real& kh, const Real& kv) {
  const auto n = static_cast<std::size_t>(spec.L) * static_cast<std::size_t>(spec.M);
  return CouplingGrid(spec, std::vector<Real>(n, kh), std::vector<Real>(n, kv));
}

bool CouplingGrid::is_homogeneous() const {
  const Real& h = kh(1, 1);
  const Real& v = kv(1, 1);
  for (int ell = 1; ell <= spec_.L; ++ell)
    for (int m = 1; m <= spec_.M; ++m) {
      if (ell < spec_.L && kh(ell, m) != h) return false;
      if (m < spec_.M && kv(ell, m) != v) return false;
      if (m == spec_.M && spec_.bc == VerticalBoundary::periodic && kv(ell, m) != v) return false;
    }
  return true;
}

Real CouplingGrid::total_abs() const {
  Real s = 0;
  for (const auto& k : kh_) s += abs(k);
  for (const auto& k : kv_) s += abs(k);
  return s;
}

ReducedCouplings reduce(const CouplingGrid& grid) {
  ReducedCouplings r;
  r.spec = grid.spec();
  const int L = r.spec.L, M = r.spec.M;
  r.z.resize(static_cast<std::size_t>(L * M));
  r.zv.resize(r.z.size());
  r.t.resize(r.z.size());
  for (int ell = 1; ell <= L; ++ell)
    for (int m = 1; m <= M; ++m) {
      auto k = r.index(ell, m);
      r.z[k] = tanh(grid.kh(ell, m));
      r.zv[k] = tanh(grid.kv(ell, m));
      r.t[k] = dual(r.zv[k]);
    }
  return r;
}

HomogeneousCouplings HomogeneousCouplings::from_couplings(const Real& kh, const Real& kv) {
  HomogeneousCouplings h;
  h.z = tanh(kh);
  h.t = dual(tanh(kv));
  h.validate();
  return h;
}

void HomogeneousCouplings::validate() const {
  if (!(z > 0 && z < 1 && t > 0 && t < 1))
    throw DomainError("homogeneous couplings need 0 < z < 1 and 0 < t < 1 (positive finite K)");
}

PlusMinus pm(const Real& a) {
  if (a == 0) throw DomainError("pm: argument must be nonzero");
  Real inv = 1 / a;
  return {(a + inv) / 2, (a - inv) / 2};
}

Real dual(const Real& z) {
  if (z == -1) throw DomainError("dual: z = -1 has no dual");
  return (1 - z) / (1 + z);
}

namespace {

// 2 log cosh K without overflow for large |K|.
Real two_log_cosh(const Real& k) {
  Real a = abs(k);
  return 2 * (a + log1p(exp(-2 * a)) - log(Real(2)));
}

}  // namespace

LogValue log_c3(const Real& L, int M, const Real& z, const Real& t) {
  if (M % 2) throw DomainError("C3 needs even M");
  auto zp = pm(z);
  auto tp = pm(t);
  if (zp.minus == 0 || tp.minus == 0) throw DomainError("C3 needs z_- and t_- nonzero");
  Real two = 2;
  // z^M (2/z_-)^{LM} (2/(t_- z_-))^{M^2/2}; both powers are even for even M
  LogValue c3;
  c3.log_abs = M * log(abs(z)) + L * M * log(abs(two / zp.minus)) +
               Real(M) * M / 2 * log(abs(two / (tp.minus * zp.minus)));
  c3.sign = 1;
  return c3;
}

LogValue log_c0(const CouplingGrid& grid) {
  const int L = grid.spec().L, M = grid.spec().M;
  Real c0 = Real(L) * M * log(Real(4));
  for (int ell = 1; ell <= L; ++ell)
    for (int m = 1; m <= M; ++m) {
      if (ell < L) c0 += two_log_cosh(grid.kh(ell, m));
      c0 += two_log_cosh(grid.kv(ell, m));
    }
  return {c0, 1};
}

Constants constants(const CouplingGrid& grid) {
  const auto& spec = grid.spec();
  const int L = spec.L, M = spec.M;
  auto red = reduce(grid);
  Constants out;

  out.c0 = log_c0(grid);

  Real c1 = 0;
  int s1 = 1;
  for (int ell = 1; ell <= L; ++ell)
    for (int m = 1; m <= M; ++m) {
      if (ell < L) {
        const Real& z = red.z_at(ell, m);
        if (z == 0) throw DomainError("C1 needs nonzero horizontal couplings");
        c1 += log(abs(z));
        if (z < 0) s1 = -s1;
      }
      c1 += log1p(-red.zv_at(ell, m) * red.zv_at(ell, m));
    }
  out.c1 = {c1, s1};

  // C2dag = 2^{(L+1)M} prod_{ell<L,m} 1/z_{ell,m,-}
  Real c2 = Real(L + 1) * M * log(Real(2));
  int s2 = 1;
  for (int ell = 1; ell < L; ++ell)
    for (int m = 1; m <= M; ++m) {
      const Real& z = red.z_at(ell, m);
      if (z == 0) throw DomainError("C2dag needs 1/z_- with nonzero horizontal coupling");
      Real zm = pm(z).minus;
      if (zm == 0) throw DomainError("C2dag needs z_- != 0 (|z| = 1)");
      c2 -= log(abs(zm));
      if (zm < 0) s2 = -s2;
    }
  out.c2dag = {c2, s2};

  Real gap = abs(out.c2dag.log_abs - (out.c0.log_abs + out.c1.log_abs));
  Real eps = pow(Real(10), 6 - static_cast<int>(Real::default_precision()));
  if (gap > eps * L * M * (1 + abs(out.c2dag.log_abs)))
    throw ConsistencyError("C2dag differs from C0*C1 in magnitude");

  if (grid.is_homogeneous() && L > 1) {
    const Real& z = red.z_at(1, 1);
    LogValue c2v{out.c2dag.log_abs + M * log(abs(z)), out.c2dag.sign};
    if (z < 0 && M % 2) c2v.sign = -c2v.sign;
    out.c2 = c2v;
    if (spec.bc == VerticalBoundary::open && M % 2 == 0 && M > 1) {
      const Real& t = red.t_at(1, 1);
      out.c3 = log_c3(Real(L), M, z, t);
    }
  }
  return out;
}

CriticalCoupling critical_coupling_isotropic() {
  Real zc = sqrt(Real(2)) - 1;
  return {zc, atanh(zc)};
}

CouplingGrid load_grid_csv(std::istream& in, const LatticeSpec& spec) {
  spec.validate();
  const auto n = static_cast<std::size_t>(spec.sites());
  std::vector<Real> kh(n, Real(0)), kv(n, Real(0));
  std::string line;
  if (!std::getline(in, line)) throw DomainError("grid csv: missing header row");
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::stringstream ss(line);
    std::string f[4];
    for (auto& s : f) {
      if (!std::getline(ss, s, ',')) throw DomainError("grid csv line " + std::to_string(lineno) + ": expected 4 columns");
      auto b = s.find_first_not_of(" \t\r"), e = s.find_last_not_of(" \t\r");
      s = b == std::string::npos ? "" : s.substr(b, e - b + 1);
    }
    int ell = 0, m = 0;
    try {
      ell = std::stoi(f[0]);
      m = std::stoi(f[1]);
    } catch (const std::exception&) {
      throw DomainError("grid csv line " + std::to_string(lineno) + ": bad index");
    }
    if (ell < 1 || ell > spec.L || m < 1 || m > spec.M)
      throw DomainError("grid csv line " + std::to_string(lineno) + ": site outside lattice");
    auto k = static_cast<std::size_t>((ell - 1) * spec.M + (m - 1));
    kh[k] = parse_real(f[2]);
    kv[k] = parse_real(f[3]);
  }
  return CouplingGrid(spec, std::move(kh), std::move(kv));
}

CouplingGrid load_grid_csv(const std::string& path, const LatticeSpec& spec) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open grid file " + path);
  return load_grid_csv(in, spec);
}

LatticeSpec grid_csv_extent(const std::string& path, VerticalBoundary bc) {
  std::ifstream in(path);
  if (!in) throw DomainError("cannot open grid file " + path);
  std::string line;
  if (!std::getline(in, line)) throw DomainError("grid csv: missing header row");
  LatticeSpec spec{0, 0, bc};
  while (std::getline(in, line)) {
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::stringstream ss(line);
    std::string a, b;
    std::getline(ss, a, ',');
    std::getline(ss, b, ',');
    try {
      spec.L = std::max(spec.L, std::stoi(a));
      spec.M = std::max(spec.M, std::stoi(b));
    } catch (const std::exception&) {
      throw DomainError("grid csv: bad index in line '" + line + "'");
    }
  }
  spec.validate();
  return spec;
}

}  // namespace ising
