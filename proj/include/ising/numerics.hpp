#pragma once

#include <boost/multiprecision/mpfr.hpp>

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

#include "ising/errors.hpp"

namespace ising {

using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

inline constexpr int kDefaultDigits = 40;
inline constexpr int kMinDigits = 15;

// Working precision in significant decimal digits.
class Context {
 public:
  explicit Context(int digits = kDefaultDigits);
  int digits() const { return digits_; }
  // 10^(k - digits)
  Real tol(int k) const;

 private:
  int digits_;
};

Context set_precision(int digits);

// Installs the context's precision as the default for newly created Reals.
// MPFR-backed Boost numbers keep this default process-wide, so scopes that
// overlap in time (any thread) must agree on the digits; a conflicting scope throws.
class PrecisionScope {
 public:
  explicit PrecisionScope(const Context& ctx);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;
};

Real pi();
Real parse_real(const std::string& text);
std::string format_real(const Real& x, int digits);

class DenseMatrix {
 public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols);
  static DenseMatrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Real& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Real& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  const std::vector<Real>& data() const { return data_; }

  DenseMatrix transpose() const;
  DenseMatrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const DenseMatrix& b);

  DenseMatrix& operator+=(const DenseMatrix& b);
  DenseMatrix& operator-=(const DenseMatrix& b);
  DenseMatrix& operator*=(const Real& s);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Real> data_;
};

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator-(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator*(const Real& s, DenseMatrix a);

Real max_abs(const DenseMatrix& a);
Real max_abs_diff(const DenseMatrix& a, const DenseMatrix& b);

struct LogDet {
  Real log_abs;  // -inf when singular
  int sign;      // +1, -1, or 0 when singular
};

// Gaussian elimination with partial pivoting (ties go to the lowest row index).
LogDet log_abs_det(DenseMatrix a);
// Solves a x = b; throws DomainError when a is singular.
DenseMatrix solve(DenseMatrix a, DenseMatrix b);
DenseMatrix inverse(const DenseMatrix& a);

// Cyclic Jacobi rotations; eigenvalues in ascending order. Used only for validation.
std::vector<Real> symmetric_eigenvalues(DenseMatrix a, const Real& tol);

// Brent's method on a sign-changing bracket; falls back to bisection whenever
// the interpolation step is not trusted. Stops once |f(x)| <= tol * scale or the
// bracket is narrower than tol.
Real bracketed_root(const std::function<Real(const Real&)>& f, Real a, Real b, const Real& tol,
                    const Real& scale = Real(1));

}  // namespace ising
