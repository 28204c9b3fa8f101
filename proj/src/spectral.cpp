#include "ising/spectral.hpp"

#include <algorithm>

namespace ising {

namespace {

int working_digits() { return static_cast<int>(Real::default_precision()); }

Real ten_pow(int k) { return pow(Real(10), k); }

struct Derived {
  PlusMinus zp, tp;
  Real shift;  // t_- z_+ / z_-
};

Derived derived(const Real& z, const Real& t) {
  Derived d{pm(z), pm(t), Real(0)};
  d.shift = d.tp.minus * d.zp.plus / d.zp.minus;
  return d;
}

Real poly_scale(const Derived& d, int M) { return 1 + M * (abs(d.tp.plus) + abs(d.shift)); }

void check_homogeneous(const Real& z, const Real& t, int M) {
  if (M < 2 || M % 2) throw DomainError("spectral path needs even M >= 2, got M=" + std::to_string(M));
  if (!(z > 0 && z < 1 && t > 0 && t < 1))
    throw DomainError("spectral path needs 0 < z < 1 and 0 < t < 1");
}

Mode real_mode(const Real& phi, const Real& z, const Real& t, const Derived& d) {
  Mode md;
  md.kind = AngleKind::real;
  md.angle = phi;
  md.c = d.tp.plus * d.zp.plus - d.tp.minus * d.zp.minus * cos(phi);
  // c - 1 written as a sum of non-negative terms
  Real s = sin(phi / 2);
  Real cm1 = (t - z) * (t - z) / (2 * t * z) + 2 * d.tp.minus * d.zp.minus * s * s;
  md.lambda_hat_minus = sqrt(cm1 * (md.c + 1));
  md.lambda_hat = md.c + md.lambda_hat_minus;
  md.gamma_hat = log1p(cm1 + md.lambda_hat_minus);
  return md;
}

Mode imaginary_mode(const Real& psi, const Derived& d, int M) {
  Mode md;
  md.kind = AngleKind::imaginary;
  md.angle = psi;
  md.lambda_hat_minus = -d.zp.minus * sinh(psi) / sinh(M * psi);
  md.c = sqrt(1 + md.lambda_hat_minus * md.lambda_hat_minus);
  md.lambda_hat = md.c + md.lambda_hat_minus;
  md.gamma_hat = asinh(md.lambda_hat_minus);
  return md;
}

}  // namespace

Real char_poly(const Real& phi, const Real& z, const Real& t, int M) {
  auto d = derived(z, t);
  Real s = sin(phi);
  Real ratio;
  if (abs(s) < ten_pow(-working_digits() / 2))
    ratio = M * cos(M * phi) / cos(phi);
  else
    ratio = sin(M * phi) / s;
  return cos(M * phi) + (d.tp.plus * cos(phi) - d.shift) * ratio;
}

Real char_poly_imaginary(const Real& psi, const Real& z, const Real& t, int M) {
  auto d = derived(z, t);
  Real ratio;
  if (abs(psi) < ten_pow(-working_digits() / 2))
    ratio = M * cosh(M * psi) / cosh(psi);
  else
    ratio = sinh(M * psi) / sinh(psi);
  return cosh(M * psi) + (d.tp.plus * cosh(psi) - d.shift) * ratio;
}

Spectrum find_modes(const Context& ctx, const Real& z, const Real& t, int M) {
  PrecisionScope scope(ctx);
  check_homogeneous(z, t, M);
  const auto d = derived(z, t);
  const Real PI = pi();
  auto P = [&](const Real& x) { return char_poly(x, z, t, M); };
  const Real tol = ten_pow(3 - ctx.digits());
  const Real tiny = ten_pow(-ctx.digits());

  std::vector<Real> roots;
  int n = 8 * M;
  for (int attempt = 0; attempt < 6; ++attempt, n *= 2) {
    roots.clear();
    std::vector<Real> xs(static_cast<std::size_t>(n) + 1), fs(xs.size());
    for (int i = 0; i <= n; ++i) {
      xs[static_cast<std::size_t>(i)] = PI * i / n;
      fs[static_cast<std::size_t>(i)] = P(xs[static_cast<std::size_t>(i)]);
    }
    if (fs[0] == 0) throw PrecisionError("characteristic polynomial vanishes at phi = 0 (band edge); change the couplings or digits");
    for (std::size_t i = 0; i + 1 < xs.size(); ++i) {
      if (fs[i + 1] == 0) {
        roots.push_back(xs[i + 1]);
        continue;
      }
      if (fs[i] != 0 && (fs[i] > 0) != (fs[i + 1] > 0))
        roots.push_back(bracketed_root(P, xs[i], xs[i + 1], tol, tiny));
    }
    if (static_cast<int>(roots.size()) == M || static_cast<int>(roots.size()) == M - 1) break;
  }
  Spectrum sp;
  sp.M = M;
  sp.z = z;
  sp.t = t;
  sp.grid_points = n;
  sp.digits = ctx.digits();
  const int found = static_cast<int>(roots.size());
  if (found != M && found != M - 1)
    throw PrecisionError("found " + std::to_string(found) + " of " + std::to_string(M) +
                         " real mode angles after grid refinement; raise --digits");

  if (found == M - 1) {
    auto Q = [&](const Real& x) { return char_poly_imaginary(x, z, t, M); };
    Real hi = 2 * atanh(std::max(z, t));
    Real f0 = Q(Real(0));
    int expand = 0;
    while ((Q(hi) > 0) == (f0 > 0)) {
      if (++expand > 8) throw PrecisionError("imaginary mode angle not bracketed; raise --digits");
      hi *= 2;
    }
    Real psi = bracketed_root(Q, Real(0), hi, tol * (1 + hi), tiny);
    if (!(psi > 0)) throw PrecisionError("imaginary mode angle collapsed to zero");
    sp.modes.push_back(imaginary_mode(psi, d, M));
  }
  for (const auto& r : roots) sp.modes.push_back(real_mode(r, z, t, d));

  std::stable_sort(sp.modes.begin(), sp.modes.end(), [](const Mode& a, const Mode& b) { return a.c < b.c; });
  const Real gap = ten_pow(-ctx.digits() / 2);
  for (std::size_t mu = 0; mu < sp.modes.size(); ++mu) {
    sp.modes[mu].sigma = mu % 2 == 0 ? 1 : -1;
    if (!(sp.modes[mu].gamma_hat > 0)) throw PrecisionError("mode with lambda_hat = 1; raise --digits");
    if (mu > 0 && sp.modes[mu].c - sp.modes[mu - 1].c < gap)
      throw PrecisionError("degenerate modes: |c_mu - c_nu| below 10^(-digits/2)");
  }
  return sp;
}

ModeDefects mode_defects(const Spectrum& s) {
  const Real& z = s.z;
  const Real& t = s.t;
  const int M = s.M;
  const auto d = derived(z, t);
  const Real scale = poly_scale(d, M);
  const Real tmzm = d.tp.minus * d.zp.minus;
  ModeDefects out{Real(0), Real(0), Real(0), Real(0), Real(0), Real(0), 0};
  auto rel = [](const Real& a, const Real& b) { return abs(a - b) / std::max(Real(1), Real(abs(b))); };
  Real sum_gamma = 0;
  for (const auto& md : s.modes) {
    const Real lam = md.lambda();
    sum_gamma += md.gamma();
    out.sigma_sum += md.sigma;
    Real s2, c2, tan_prod, tan_m2;
    if (md.kind == AngleKind::real) {
      const Real& phi = md.angle;
      out.char_poly = std::max(out.char_poly, Real(abs(char_poly(phi, z, t, M)) / scale));
      out.sin_ratio = std::max(out.sin_ratio, rel(sin(M * phi) / sin(phi), -d.zp.minus / md.lambda_minus()));
      s2 = pow(sin(phi / 2), 2);
      c2 = pow(cos(phi / 2), 2);
      tan_prod = tan(M * phi / 2) * tan(phi / 2);
      tan_m2 = pow(tan(M * phi / 2), 2);
    } else {
      const Real& psi = md.angle;
      out.char_poly = std::max(out.char_poly, Real(abs(char_poly_imaginary(psi, z, t, M)) / scale));
      // lambda_- comes from the sin-ratio identity itself; check it against the angle instead
      out.sin_ratio = std::max(out.sin_ratio, rel(d.tp.plus * d.zp.plus - tmzm * cosh(psi), md.c));
      s2 = -pow(sinh(psi / 2), 2);
      c2 = pow(cosh(psi / 2), 2);
      tan_prod = -tanh(M * psi / 2) * tanh(psi / 2);
      tan_m2 = -pow(tanh(M * psi / 2), 2);
    }
    const Real den = 4 * t * z * lam * tmzm;
    out.half_angle = std::max(out.half_angle, rel(s2, (z - t * lam) * (t - z * lam) / den));
    out.half_angle = std::max(out.half_angle, rel(c2, (lam - t * z) * (1 - t * z * lam) / den));
    out.tan_product = std::max(out.tan_product, rel(tan_prod, (z - t * lam) / (t * z - lam)));
    out.tan_m_half = std::max(out.tan_m_half,
                              rel(tan_m2, (z - t * lam) * (1 - t * z * lam) / ((t - z * lam) * (lam - t * z))));
  }
  out.prod_lambda = abs(exp(sum_gamma) - t) / t;
  return out;
}

DenseMatrix T2System::full() const {
  const auto M = T_plus.rows();
  DenseMatrix f(2 * M, 2 * M);
  f.set_block(0, 0, T_plus);
  f.set_block(M, M, T_plus);
  f.set_block(0, M, T_minus);
  f.set_block(M, 0, T_minus);
  return f;
}

DenseMatrix T2System::inverse_by_symmetry() const {
  T2System flipped{T_plus, Real(-1) * T_minus};
  return flipped.full();
}

T2System build_T2(const Real& z, const Real& t, int M) {
  if (M < 2) throw DomainError("T2 needs M >= 2");
  const auto zp = pm(z);
  const auto tp = pm(t);
  const Real a = tp.plus * zp.plus;
  const Real b = -tp.plus * zp.minus;
  const Real a0p = a + (1 - tp.plus) * (zp.plus + 1) / 2;
  const Real a0m = a + (1 - tp.plus) * (zp.plus - 1) / 2;
  const Real b0 = -(1 + tp.plus) * zp.minus / 2;
  const Real c = -tp.minus * zp.minus / 2;
  const Real dp = tp.minus * (1 + zp.plus) / 2;
  const Real dm = -tp.minus * (1 - zp.plus) / 2;
  const auto uM = static_cast<std::size_t>(M);
  T2System s{DenseMatrix(uM, uM), DenseMatrix(uM, uM)};
  for (std::size_t i = 0; i < uM; ++i) {
    s.T_plus(i, i) = a;
    if (i + 1 < uM) {
      s.T_plus(i, i + 1) = c;
      s.T_plus(i + 1, i) = c;
    }
    const std::size_t j = uM - 1 - i;
    s.T_minus(i, j) = b;
    if (j >= 1) s.T_minus(i, j - 1) = dm;
    if (j + 1 < uM) s.T_minus(i, j + 1) = dp;
  }
  s.T_plus(0, 0) = a0p;
  s.T_plus(uM - 1, uM - 1) = a0m;
  s.T_minus(0, uM - 1) = b0;
  s.T_minus(uM - 1, 0) = b0;
  return s;
}

DenseMatrix eigvec_matrix(const Spectrum& s) {
  const Real& z = s.z;
  const Real& t = s.t;
  const int M = s.M;
  const auto d = derived(z, t);
  const auto uM = static_cast<std::size_t>(M);
  const Real w1 = (1 - t) * (1 + z);
  const Real w2 = (1 + t) * (1 - z);
  DenseMatrix x(uM, uM);
  for (std::size_t mu = 0; mu < uM; ++mu) {
    const Mode& md = s.modes[mu];
    const Real lm = md.lambda_minus();
    const Real D = M * lm * lm + d.zp.plus * md.c - d.tp.plus;
    const Real root_cm1 = md.lambda_hat_minus / sqrt(md.c + 1);  // sqrt(lambda_+ - 1)
    const bool imag = md.kind == AngleKind::imaginary;
    if (D == 0 || (D > 0) == imag)
      throw ConsistencyError("eigenvector normalization degenerate at mode " + std::to_string(mu + 1));
    const Real pref = sqrt(4 * t * z) * d.tp.minus * d.zp.minus * lm / (sqrt(abs(D)) * root_cm1);
    const Real phi = md.sigma * md.angle;
    for (std::size_t j = 0; j < uM; ++j) {
      const int m = -M + 1 + 2 * static_cast<int>(j);
      Real e1 = (M + 1 + m) * phi / 2, e2 = (M - 1 + m) * phi / 2;
      x(mu, j) = imag ? pref * (sinh(e1) / w1 - sinh(e2) / w2) : pref * (sin(e1) / w1 - sin(e2) / w2);
    }
  }
  return x;
}

Real logZ_via_detM(const Context& ctx, const Real& L, const Spectrum& s) {
  PrecisionScope scope(ctx);
  const int M = s.M;
  Real gmax = 0;
  for (const auto& md : s.modes) gmax = std::max(gmax, md.gamma_hat);
  if (L * gmax > Real(ctx.digits()) * log(Real(10)) / 2)
    throw PrecisionError("det M route: L * max gamma_hat = " + format_real(L * gmax, 4) +
                         " exceeds half the working digits; use the spectral path");
  const auto x = eigvec_matrix(s);
  const auto uM = static_cast<std::size_t>(M);
  DenseMatrix mm(uM, uM);
  for (std::size_t mu = 0; mu < uM; ++mu) {
    const Mode& md = s.modes[mu];
    const Real ch = cosh(md.gamma_hat * L / 2);
    const Real sh = md.sigma * sinh(md.gamma_hat * L / 2);
    for (std::size_t j = 0; j < uM; ++j) mm(mu, j) = ch * x(mu, j) + sh * x(mu, uM - 1 - j);
  }
  auto det = log_abs_det(mm);
  if (det.sign == 0) throw PrecisionError("det M vanished numerically");
  const Real zm = pm(s.z).minus;
  const Real log_c2 = M * log(s.z) + (L + 1) * M * log(Real(2)) - (L - 1) * M * log(abs(zm));
  return log_c2 / 2 + det.log_abs;
}

ResidualSystem residual_system(const Spectrum& s, const Real& L) {
  const int M = s.M;
  if (M < 2 || M % 2 || static_cast<int>(s.modes.size()) != M) throw DomainError("residual system needs a full even-M spectrum");
  if (L < 0) throw DomainError("residual system needs L >= 0");
  const Real& z = s.z;
  const Real& t = s.t;
  const auto uM = static_cast<std::size_t>(M);
  const std::size_t h = uM / 2;
  ResidualSystem rs;
  rs.M = M;
  rs.L = L;
  rs.c.resize(uM);
  rs.g.resize(uM);
  rs.f.resize(uM);
  rs.p.resize(uM);
  rs.v.resize(uM);
  rs.p_sign.resize(uM);
  rs.log_abs_p.resize(uM);
  for (std::size_t mu = 0; mu < uM; ++mu) rs.c[mu] = s.modes[mu].c;

  for (std::size_t mu = 0; mu < uM; ++mu) {
    const Mode& md = s.modes[mu];
    Real lp = 0;
    int sg = 1;
    for (std::size_t nu = 0; nu < uM; ++nu) {
      if (nu == mu) continue;
      const Real diff = rs.c[mu] - rs.c[nu];
      if (diff == 0) throw PrecisionError("coincident c_mu; raise --digits");
      lp -= md.sigma * s.modes[nu].sigma * log(abs(diff));
      if (diff < 0) sg = -sg;
    }
    rs.log_abs_p[mu] = lp;
    rs.p_sign[mu] = sg;
    rs.p[mu] = sg * exp(lp);
    const Real lam = md.lambda();
    const Real zs = md.sigma > 0 ? z : 1 / z;  // z^{sigma}
    rs.v[mu] = rs.p[mu] * (t / zs - lam) / (t * zs - lam);
    const Real half = exp(md.gamma() * L / 2);  // lambda^{L/2}
    rs.g[mu] = -half * (t * z - lam);
    rs.f[mu] = (t / z - lam) / half;
  }

  rs.A = DenseMatrix(h, h);
  rs.B = DenseMatrix(h, h);
  rs.T_eo = DenseMatrix(h, h);
  rs.T_oe = DenseMatrix(h, h);
  rs.log_d_oe = 0;
  rs.log_q_o = 0;
  rs.log_q_e = 0;
  for (std::size_t i = 0; i < h; ++i) {
    const std::size_t e = 2 * i + 1;
    const std::size_t o = 2 * i;
    const Real de = exp(-L * s.modes[e].gamma_hat) * rs.v[e];
    const Real dodd = exp(-L * s.modes[o].gamma_hat) * rs.v[o];
    for (std::size_t k = 0; k < h; ++k) {
      rs.T_eo(i, k) = 1 / (rs.c[e] - rs.c[2 * k]);
      rs.T_oe(i, k) = 1 / (rs.c[o] - rs.c[2 * k + 1]);
      rs.A(i, k) = de * rs.T_eo(i, k);
      rs.B(i, k) = dodd * rs.T_oe(i, k);
      const Real doe = rs.c[o] - rs.c[2 * k + 1];
      rs.log_d_oe += log(abs(doe));
      if (doe < 0) rs.d_oe_sign = -rs.d_oe_sign;
      if (k > i) {
        rs.log_q_o += log(abs(rs.c[o] - rs.c[2 * k]));
        rs.log_q_e += log(abs(rs.c[e] - rs.c[2 * k + 1]));
      }
    }
  }
  rs.Y = Real(-1) * (rs.A * rs.B);
  return rs;
}

Real cauchy_inverse_defect(const ResidualSystem& rs) {
  const std::size_t h = rs.T_eo.rows();
  DenseMatrix pe(h, h), po(h, h);
  for (std::size_t i = 0; i < h; ++i) {
    pe(i, i) = rs.p[2 * i + 1];
    po(i, i) = rs.p[2 * i];
  }
  return max_abs_diff(pe * rs.T_eo * po * rs.T_oe, DenseMatrix::identity(h));
}

Real log_zsres(const ResidualSystem& rs) {
  auto det = log_abs_det(DenseMatrix::identity(rs.Y.rows()) + rs.Y);
  if (det.sign != 1)
    throw ConsistencyError(det.sign == 0 ? "1 + Y is singular" : "det(1 + Y) is negative");
  return det.log_abs;
}

Real log_zsres_closed_L0(const Spectrum& s) {
  const int M = s.M;
  const auto uM = static_cast<std::size_t>(M);
  const Real& z = s.z;
  const Real& t = s.t;
  std::vector<Real> lam(uM);
  for (std::size_t mu = 0; mu < uM; ++mu) lam[mu] = s.modes[mu].lambda();
  Real out = 0;
  auto acc = [&out](const Real& x, int power) {
    if (x == 0) throw PrecisionError("closed L=0 product has a vanishing factor");
    out += power * log(abs(x));
  };
  const Real base = 2 * t * pm(z).minus;
  for (int k = 0; k < M / 2; ++k) acc(base, 1);
  for (std::size_t a = 0; a < uM; a += 2)
    for (std::size_t b = 1; b < uM; b += 2) acc(lam[a] - lam[b], 1);
  for (std::size_t mu = 0; mu < uM; ++mu) {
    const Real zs = s.modes[mu].sigma > 0 ? z : 1 / z;
    acc(t * zs - lam[mu], -1);
  }
  for (std::size_t start : {std::size_t{0}, std::size_t{1}})
    for (std::size_t a = start; a < uM; a += 2)
      for (std::size_t b = a + 2; b < uM; b += 2) acc(1 - lam[a] * lam[b], -1);
  return out;
}

SpectralResult spectral_logZ(const Spectrum& s, const ResidualSystem& rs) {
  const int M = s.M;
  const auto d = derived(s.z, s.t);
  const Real tmzm = d.tp.minus * d.zp.minus;
  const auto c3 = log_c3(rs.L, M, s.z, s.t);
  Real sum = 0;
  int sign = c3.sign;
  for (std::size_t mu = 0; mu < s.modes.size(); ++mu) {
    const Mode& md = s.modes[mu];
    // (t+ z+ - c)^2 - t-^2 z-^2 = -(t- z- sin phi)^2
    Real num = md.kind == AngleKind::real ? Real(-pow(tmzm * sin(md.angle), 2)) : Real(pow(tmzm * sinh(md.angle), 2));
    Real den = M * md.lambda_hat_minus * md.lambda_hat_minus + d.zp.plus * md.c - d.tp.plus;
    if (num == 0 || den == 0) throw PrecisionError("degenerate mode factor in the final product");
    sum += log(abs(num)) - log(abs(den)) + log(md.lambda_hat_minus) - log(abs(rs.v[mu])) + rs.L * md.gamma_hat;
    if ((num < 0) != (den < 0)) sign = -sign;
    if (rs.v[mu] < 0) sign = -sign;
  }
  SpectralResult r;
  r.log_zsres = log_zsres(rs);
  r.bracket_sign = sign;
  r.log_strip = (c3.log_abs + 2 * rs.log_d_oe + sum) / 2;
  r.logZ = r.log_strip + r.log_zsres;
  r.digits = s.digits;
  return r;
}

SpectralResult spectral_logZ(const Context& ctx, const Real& L, int M, const Real& z, const Real& t) {
  PrecisionScope scope(ctx);
  auto s = find_modes(ctx, z, t, M);
  auto rs = residual_system(s, L);
  return spectral_logZ(s, rs);
}

Real logZ_spectral(const Context& ctx, const LatticeSpec& spec, const Real& z, const Real& t) {
  spec.validate();
  if (spec.bc != VerticalBoundary::open) throw DomainError("spectral path needs open vertical boundaries");
  PrecisionScope scope(ctx);
  auto r = spectral_logZ(ctx, Real(spec.L), spec.M, z, t);
  if (r.bracket_sign != 1) throw ConsistencyError("spectral product is negative; Z would not be real");
  return r.logZ;
}

}  // namespace ising
