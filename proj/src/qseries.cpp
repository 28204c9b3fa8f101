#include "ising/qseries.hpp"

#include <numeric>
#include <ostream>
#include <sstream>

#include "ising/model.hpp"

namespace ising {

Real PeriodicCoeffMatrix::coefficient(long k) const {
  const auto r = static_cast<std::size_t>(k % period);
  Real out = 0, kj = 1;
  for (const auto& row : numerators) {
    out += kj * row[r];
    kj *= k;
  }
  return out / denominator;
}

std::string PeriodicCoeffMatrix::str() const {
  std::ostringstream os;
  for (std::size_t j = 0; j < numerators.size(); ++j) {
    if (j) os << '\n';
    for (std::size_t r = 0; r < numerators[j].size(); ++r) {
      if (r) os << ' ';
      long n = numerators[j][r];
      long g = std::gcd(n, static_cast<long>(denominator));
      long d = denominator / (g ? g : 1);
      os << (g ? n / g : 0);
      if (n != 0 && d != 1) os << '/' << d;
    }
  }
  return os.str();
}

namespace tables {

const PeriodicCoeffMatrix& t_product() {
  static const PeriodicCoeffMatrix m{8, 1, {{0, 1, 0, -1, 0, -1, 0, 1}}};
  return m;
}
const PeriodicCoeffMatrix& bulk_below() {
  static const PeriodicCoeffMatrix m{8, 1, {{0, 0, -1, 0, 2, 0, -1, 0}, {0, -1, 0, 1, 0, -1, 0, 1}}};
  return m;
}
const PeriodicCoeffMatrix& surface_below() {
  static const PeriodicCoeffMatrix m{8, 4, {{0, 3, -4, -3, 8, -3, -4, 3}, {0, 1, 0, 1, 0, -1, 0, -1}}};
  return m;
}
const PeriodicCoeffMatrix& surface_below_root() {
  static const PeriodicCoeffMatrix m{8, 2, {{0, -1, 0, 1, 0, 1, 0, -1}, {0, -1, 0, -1, 0, 1, 0, 1}}};
  return m;
}
const PeriodicCoeffMatrix& corner_below() {
  static const PeriodicCoeffMatrix m{8, 2, {{0, -4, 6, -4, -2, -4, 6, -4}, {0, -4, 1, 4, 0, -4, -1, 4}}};
  return m;
}
const PeriodicCoeffMatrix& bulk_above() {
  static const PeriodicCoeffMatrix m{8, 1, {{0, 2, -4, 2, 0, 2, -4, 2}, {0, -1, 0, 1, 0, -1, 0, 1}}};
  return m;
}
const PeriodicCoeffMatrix& bulk_above_period4() {
  static const PeriodicCoeffMatrix m{4, 1, {{0, 2, -4, 2}, {0, -1, 0, 1}}};
  return m;
}
const PeriodicCoeffMatrix& surface_above() {
  static const PeriodicCoeffMatrix m{8, 4, {{0, 1, 4, -1, -8, -1, 4, 1}, {0, -1, 0, -1, 0, 1, 0, 1}}};
  return m;
}
const PeriodicCoeffMatrix& corner_above() {
  static const PeriodicCoeffMatrix m{8, 2, {{0, 0, 0, 0, -6, 0, 0, 0}, {0, 0, -1, 0, 0, 0, 1, 0}}};
  return m;
}
const PeriodicCoeffMatrix& corner_above_q2() {
  static const PeriodicCoeffMatrix m{4, 1, {{0, 0, -3, 0}, {0, -1, 0, 1}}};
  return m;
}

}  // namespace tables

PiProduct pi_product(const Context& ctx, const PeriodicCoeffMatrix& c, const Real& q) {
  PrecisionScope scope(ctx);
  if (!(q >= 0) || !(q < 1)) throw DomainError("Pi(C|q) needs 0 <= q < 1, got q=" + format_real(q, 6));
  PiProduct out{Real(0), 0};
  if (q == 0) return out;
  // |c_k| <= A + B k with A, B from the table rows
  Real A = 0, B = 0;
  for (std::size_t j = 0; j < c.numerators.size(); ++j) {
    long mx = 0;
    for (long v : c.numerators[j]) mx = std::max(mx, std::abs(v));
    Real bound = Real(mx) / c.denominator;
    if (j == 0) A = bound;
    else B += bound;  // only m <= 1 tables occur; higher rows are bounded loosely
  }
  if (A == 0 && B == 0) return out;
  const Real eps = pow(Real(10), -ctx.digits() - 5);
  const Real one_minus_q = 1 - q;
  Real qk = 1;
  for (long k = 1;; ++k) {
    qk *= q;
    const Real ck = c.coefficient(k);
    if (ck != 0) out.log_value += ck * log1p(-qk);
    out.terms = k;
    // tail sum_{j>k} (A + B j) q^j |log(1-q^j)|/q^j <= q^{k+1} (A + B(k+1)) / (1-q)^3
    if (qk * q * (A + B * (k + 1)) < eps * one_minus_q * one_minus_q * one_minus_q) break;
    if (k > 10000000) throw PrecisionError("Pi(C|q) did not converge; q too close to 1");
  }
  return out;
}

Real t_of_q(const Context& ctx, const Real& q) {
  PrecisionScope scope(ctx);
  if (q == 0) return Real(0);
  return sqrt(q) * exp(pi_product(ctx, tables::t_product(), q).log_value);
}

Real q_of_t(const Context& ctx, const Real& t, double cutoff) {
  PrecisionScope scope(ctx);
  const Real qmax(cutoff);
  const Real tmax = t_of_q(ctx, qmax);
  if (!(t > 0) || !(t < tmax))
    throw DomainError("t=" + format_real(t, 10) + " outside the invertible range (0, t(q=" +
                      format_real(qmax, 3) + ")); too close to the critical point");
  // t ~ sqrt(q) for small q, so the leading guess brackets from below
  auto f = [&](const Real& q) { return t_of_q(ctx, q) - t; };
  return bracketed_root(f, Real(0), qmax, ctx.tol(4), ctx.tol(0));
}

Real log_corner_above_direct(const Context& ctx, const Real& q) {
  PrecisionScope scope(ctx);
  if (!(q >= 0) || !(q < 1)) throw DomainError("q outside [0,1)");
  const Real q2 = q * q;
  const Real eps = pow(Real(10), -ctx.digits() - 5);
  Real out = 0;
  for (long k = 0;; ++k) {
    Real a = pow(q2, 4 * k + 1), b = pow(q2, 4 * k + 2), c = pow(q2, 4 * k + 3);
    out += -3 * log1p(-b) + (4 * k + 3) * log1p(-c) - (4 * k + 1) * log1p(-a);
    if (a * (4 * k + 8) < eps * (1 - q2) * (1 - q2) * (1 - q2)) break;
  }
  return out;
}

FreeEnergyPieces free_energy_pieces(const Context& ctx, const Real& K, bool errata) {
  PrecisionScope scope(ctx);
  if (!(K > 0)) throw DomainError("free energy products need K > 0");
  FreeEnergyPieces p;
  p.K = K;
  p.z = tanh(K);
  p.errata = errata;
  const Real Kc = critical_coupling_isotropic().K_c;
  if (K == Kc) throw DomainError("free energy products diverge at K = K_c");
  p.phase = K > Kc ? Phase::below : Phase::above;
  const Real one_m_z2 = 1 - p.z * p.z;
  auto logpi = [&](const PeriodicCoeffMatrix& c, const Real& q) { return pi_product(ctx, c, q).log_value; };
  if (p.phase == Phase::below) {
    p.q = q_of_t(ctx, dual(p.z));
    p.f_b_sing = log(p.q) / 2 - logpi(tables::bulk_below(), p.q);
    p.f_s_sing = log(Real(2)) - logpi(tables::surface_below(), p.q) - logpi(tables::surface_below_root(), sqrt(p.q));
    p.f_c = -logpi(tables::corner_below(), p.q);
    if (!errata) p.f_c -= log(Real(2));
    // the bulk product below T_c already is the full bulk free energy
    p.f_b_reg = 0;
  } else {
    p.q = q_of_t(ctx, p.z);
    p.f_b_sing = -logpi(tables::bulk_above(), p.q);
    p.f_s_sing = -logpi(tables::surface_above(), p.q);
    p.f_c = -logpi(tables::corner_above(), p.q);
    p.f_b_reg = -log(2 * (1 + p.z * p.z) / one_m_z2);
  }
  // -1/4 log(1 - z^2) enters twice per boundary row (finite-size fits confirm the factor)
  p.f_s_reg = -log(one_m_z2) / 2;
  p.f_b = p.f_b_sing + p.f_b_reg;
  p.f_s = p.f_s_sing + p.f_s_reg;
  p.near_critical = p.q > Real("0.5");
  return p;
}

void write_qseries_table(std::ostream& out, const Context& ctx, const std::vector<Real>& Ks, bool errata) {
  PrecisionScope scope(ctx);
  out << "K,q,f_b,f_s,f_c\n";
  for (const auto& K : Ks) {
    auto p = free_energy_pieces(ctx, K, errata);
    out << format_real(K, ctx.digits()) << ',' << format_real(p.q, ctx.digits()) << ','
        << format_real(p.f_b, ctx.digits()) << ',' << format_real(p.f_s, ctx.digits()) << ','
        << format_real(p.f_c, ctx.digits()) << '\n';
  }
}

}  // namespace ising
