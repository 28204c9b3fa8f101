#include "ising/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <mutex>
#include <sstream>
#include <utility>

namespace ising {

namespace {

std::mutex g_scope_mutex;
int g_active_scopes = 0;
int g_active_digits = 0;
unsigned g_saved_precision = 0;

}  // namespace

Context::Context(int digits) : digits_(digits) {
  if (digits < kMinDigits)
    throw DomainError("precision must be at least " + std::to_string(kMinDigits) + " digits, got " +
                      std::to_string(digits));
}

Real Context::tol(int k) const {
  return boost::multiprecision::pow(Real(10), k - digits_);
}

Context set_precision(int digits) { return Context(digits); }

PrecisionScope::PrecisionScope(const Context& ctx) {
  std::lock_guard<std::mutex> lock(g_scope_mutex);
  if (g_active_scopes > 0 && g_active_digits != ctx.digits())
    throw DomainError("conflicting precision: " + std::to_string(ctx.digits()) +
                      " digits requested while " + std::to_string(g_active_digits) +
                      " digits are in use");
  if (g_active_scopes++ == 0) {
    g_saved_precision = Real::default_precision();
    g_active_digits = ctx.digits();
    Real::default_precision(static_cast<unsigned>(ctx.digits()));
  }
}

PrecisionScope::~PrecisionScope() {
  std::lock_guard<std::mutex> lock(g_scope_mutex);
  // the last scope to close restores, whichever thread opened the first one
  if (--g_active_scopes == 0) Real::default_precision(g_saved_precision);
}

Real pi() {
  Real r;
  mpfr_const_pi(r.backend().data(), GMP_RNDN);
  return r;
}

Real parse_real(const std::string& text) {
  try {
    return Real(text);
  } catch (const std::exception&) {
    throw DomainError("not a number: '" + text + "'");
  }
}

std::string format_real(const Real& x, int digits) {
  if (boost::multiprecision::isnan(x)) return "nan";
  if (boost::multiprecision::isinf(x)) return x < 0 ? "-inf" : "inf";
  return x.str(digits > 1 ? digits - 1 : 1, std::ios_base::scientific);
}

DenseMatrix::DenseMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Real(0)) {}

DenseMatrix DenseMatrix::identity(std::size_t n) {
  DenseMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

DenseMatrix DenseMatrix::transpose() const {
  DenseMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

DenseMatrix DenseMatrix::block(std::size_t r0, std::size_t c0, std::size_t nr,
                               std::size_t nc) const {
  DenseMatrix b(nr, nc);
  for (std::size_t i = 0; i < nr; ++i)
    for (std::size_t j = 0; j < nc; ++j) b(i, j) = (*this)(r0 + i, c0 + j);
  return b;
}

void DenseMatrix::set_block(std::size_t r0, std::size_t c0, const DenseMatrix& b) {
  for (std::size_t i = 0; i < b.rows(); ++i)
    for (std::size_t j = 0; j < b.cols(); ++j) (*this)(r0 + i, c0 + j) = b(i, j);
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& b) {
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += b.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator-=(const DenseMatrix& b) {
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= b.data_[k];
  return *this;
}

DenseMatrix& DenseMatrix::operator*=(const Real& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
  DenseMatrix c(a.rows(), b.cols());
  Real tmp;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Real& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        tmp = aik;
        tmp *= b(k, j);
        c(i, j) += tmp;
      }
    }
  return c;
}

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) { return a += b; }
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b) { return a -= b; }
DenseMatrix operator*(const Real& s, DenseMatrix a) { return a *= s; }

Real max_abs(const DenseMatrix& a) {
  Real m = 0;
  for (const auto& x : a.data()) m = std::max(m, Real(abs(x)));
  return m;
}

Real max_abs_diff(const DenseMatrix& a, const DenseMatrix& b) {
  Real m = 0;
  for (std::size_t k = 0; k < a.data().size(); ++k)
    m = std::max(m, Real(abs(a.data()[k] - b.data()[k])));
  return m;
}

namespace {

// In-place LU; returns false on an exactly zero pivot.
bool lu_decompose(DenseMatrix& a, std::vector<std::size_t>& perm, int& parity) {
  const std::size_t n = a.rows();
  perm.resize(n);
  for (std::size_t i = 0; i < n; ++i) perm[i] = i;
  parity = 1;
  Real tmp;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    Real best = abs(a(k, k));
    for (std::size_t i = k + 1; i < n; ++i) {
      Real v = abs(a(i, k));
      if (v > best) {
        best = v;
        p = i;
      }
    }
    if (best == 0) return false;
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      std::swap(perm[k], perm[p]);
      parity = -parity;
    }
    const Real& piv = a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      a(i, k) /= piv;
      const Real& lik = a(i, k);
      for (std::size_t j = k + 1; j < n; ++j) {
        tmp = lik;
        tmp *= a(k, j);
        a(i, j) -= tmp;
      }
    }
  }
  return true;
}

}  // namespace

LogDet log_abs_det(DenseMatrix a) {
  if (a.rows() != a.cols()) throw DomainError("log_abs_det: matrix is not square");
  std::vector<std::size_t> perm;
  int sign = 1;
  if (!lu_decompose(a, perm, sign))
    return {Real(-std::numeric_limits<double>::infinity()), 0};
  Real acc = 0;
  for (std::size_t k = 0; k < a.rows(); ++k) {
    if (a(k, k) < 0) sign = -sign;
    acc += log(abs(a(k, k)));
  }
  return {acc, sign};
}

DenseMatrix solve(DenseMatrix a, DenseMatrix b) {
  if (a.rows() != a.cols() || b.rows() != a.rows()) throw DomainError("solve: shape mismatch");
  const std::size_t n = a.rows();
  std::vector<std::size_t> perm;
  int parity = 1;
  if (!lu_decompose(a, perm, parity)) throw DomainError("solve: singular matrix");
  DenseMatrix x(n, b.cols());
  for (std::size_t c = 0; c < b.cols(); ++c) {
    std::vector<Real> y(n);
    for (std::size_t i = 0; i < n; ++i) {
      Real s = b(perm[i], c);
      for (std::size_t j = 0; j < i; ++j) s -= a(i, j) * y[j];
      y[i] = s;
    }
    for (std::size_t i = n; i-- > 0;) {
      Real s = y[i];
      for (std::size_t j = i + 1; j < n; ++j) s -= a(i, j) * x(j, c);
      x(i, c) = s / a(i, i);
    }
  }
  return x;
}

DenseMatrix inverse(const DenseMatrix& a) { return solve(a, DenseMatrix::identity(a.rows())); }

std::vector<Real> symmetric_eigenvalues(DenseMatrix a, const Real& tol) {
  const std::size_t n = a.rows();
  if (n != a.cols()) throw DomainError("symmetric_eigenvalues: matrix is not square");
  Real scale = std::max(max_abs(a), Real(1));
  for (int sweep = 0; sweep < 100; ++sweep) {
    Real off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off = std::max(off, Real(abs(a(p, q))));
    if (off <= tol * scale) break;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        if (a(p, q) == 0) continue;
        Real theta = (a(q, q) - a(p, p)) / (2 * a(p, q));
        Real t = (theta >= 0 ? Real(1) : Real(-1)) / (abs(theta) + sqrt(theta * theta + 1));
        Real c = 1 / sqrt(t * t + 1);
        Real s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          Real akp = a(k, p), akq = a(k, q);
          a(k, p) = c * akp - s * akq;
          a(k, q) = s * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          Real apk = a(p, k), aqk = a(q, k);
          a(p, k) = c * apk - s * aqk;
          a(q, k) = s * apk + c * aqk;
        }
      }
  }
  std::vector<Real> ev(n);
  for (std::size_t i = 0; i < n; ++i) ev[i] = a(i, i);
  std::sort(ev.begin(), ev.end());
  return ev;
}

Real bracketed_root(const std::function<Real(const Real&)>& f, Real a, Real b, const Real& tol,
                    const Real& scale) {
  Real fa = f(a), fb = f(b);
  if (fa == 0) return a;
  if (fb == 0) return b;
  if ((fa > 0) == (fb > 0)) throw DomainError("invalid bracket");
  const Real ftol = tol * scale;
  Real c = a, fc = fa, d = b - a, e = d;
  for (int it = 0; it < 10000; ++it) {
    if ((fb > 0) == (fc > 0)) {
      c = a;
      fc = fa;
      d = b - a;
      e = d;
    }
    if (abs(fc) < abs(fb)) {
      a = b;
      b = c;
      c = a;
      fa = fb;
      fb = fc;
      fc = fa;
    }
    Real half = tol / 2;
    Real m = (c - b) / 2;
    if (abs(m) <= half || abs(fb) <= ftol || fb == 0) return b;
    if (abs(e) >= half && abs(fa) > abs(fb)) {
      Real p, q, r;
      Real s = fb / fa;
      if (a == c) {
        p = 2 * m * s;
        q = 1 - s;
      } else {
        q = fa / fc;
        r = fb / fc;
        p = s * (2 * m * q * (q - r) - (b - a) * (r - 1));
        q = (q - 1) * (r - 1) * (s - 1);
      }
      if (p > 0)
        q = -q;
      else
        p = -p;
      if (2 * p < std::min(Real(3 * m * q - abs(half * q)), Real(abs(e * q)))) {
        e = d;
        d = p / q;
      } else {
        d = m;
        e = m;
      }
    } else {
      d = m;
      e = m;
    }
    a = b;
    fa = fb;
    if (abs(d) > half)
      b += d;
    else
      b += (m > 0 ? half : -half);
    fb = f(b);
  }
  return b;
}

}  // namespace ising
