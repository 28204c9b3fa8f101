#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ising/numerics.hpp"

namespace ising {

enum class VerticalBoundary { open, periodic };

// L columns, M rows. The horizontal direction is always open.
struct LatticeSpec {
  int L = 1;
  int M = 1;
  VerticalBoundary bc = VerticalBoundary::open;

  int sites() const { return L * M; }
  void validate() const;
};

// Reduced couplings K on every bond; indices are 1-based (ell, m).
// Kh[L, .] = 0 always and Kv[., M] = 0 for open vertical boundaries.
class CouplingGrid {
 public:
  CouplingGrid(const LatticeSpec& spec, std::vector<Real> kh, std::vector<Real> kv);
  static CouplingGrid homogeneous(const LatticeSpec& spec, const Real& kh, const Real& kv);

  const LatticeSpec& spec() const { return spec_; }
  const Real& kh(int ell, int m) const { return kh_[index(ell, m)]; }
  const Real& kv(int ell, int m) const { return kv_[index(ell, m)]; }
  bool is_homogeneous() const;
  Real total_abs() const;

 private:
  std::size_t index(int ell, int m) const {
    return static_cast<std::size_t>((ell - 1) * spec_.M + (m - 1));
  }
  LatticeSpec spec_;
  std::vector<Real> kh_;
  std::vector<Real> kv_;
};

struct ReducedCouplings {
  LatticeSpec spec;
  std::vector<Real> z;   // tanh Kh
  std::vector<Real> zv;  // tanh Kv
  std::vector<Real> t;   // dual of zv

  std::size_t index(int ell, int m) const {
    return static_cast<std::size_t>((ell - 1) * spec.M + (m - 1));
  }
  const Real& z_at(int ell, int m) const { return z[index(ell, m)]; }
  const Real& zv_at(int ell, int m) const { return zv[index(ell, m)]; }
  const Real& t_at(int ell, int m) const { return t[index(ell, m)]; }
};

ReducedCouplings reduce(const CouplingGrid& grid);

struct HomogeneousCouplings {
  Real z;
  Real t;
  Real z_boundary = 1;  // z_{L,m}
  Real t_boundary = 1;  // t_{ell,M}

  static HomogeneousCouplings from_couplings(const Real& kh, const Real& kv);
  void validate() const;
};

struct PlusMinus {
  Real plus;
  Real minus;
};

// a_{+-} = (a +- 1/a) / 2
PlusMinus pm(const Real& a);
// (1 - z) / (1 + z)
Real dual(const Real& z);

struct LogValue {
  Real log_abs;
  int sign = 1;
};

struct Constants {
  LogValue c0;
  LogValue c1;
  LogValue c2dag;
  std::optional<LogValue> c2;  // homogeneous grids only
  std::optional<LogValue> c3;  // homogeneous, open, even M
};

// C0 alone; defined for every grid including zero couplings.
LogValue log_c0(const CouplingGrid& grid);
// Throws DomainError when a horizontal coupling with ell < L vanishes.
Constants constants(const CouplingGrid& grid);

// log C3 for homogeneous couplings on an L x M open rectangle (L may be any real).
LogValue log_c3(const Real& L, int M, const Real& z, const Real& t);

struct CriticalCoupling {
  Real z_c;
  Real K_c;
};

CriticalCoupling critical_coupling_isotropic();

// CSV with header and columns ell, m, Kh, Kv. Missing bonds default to 0.
CouplingGrid load_grid_csv(std::istream& in, const LatticeSpec& spec);
CouplingGrid load_grid_csv(const std::string& path, const LatticeSpec& spec);
// Reads only the lattice extent from a grid file (max ell, max m).
LatticeSpec grid_csv_extent(const std::string& path, VerticalBoundary bc);

}  // namespace ising
