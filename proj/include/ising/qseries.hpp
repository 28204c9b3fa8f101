#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ising/numerics.hpp"

namespace ising {

// Exponent table for Pi(C|q) = prod_{k>=1} (1 - q^k)^{c_k} with
// c_k = sum_j C[j][k mod p] k^j. Entries are exact rationals num/denominator.
struct PeriodicCoeffMatrix {
  int period = 1;
  int denominator = 1;
  std::vector<std::vector<long>> numerators;  // rows j = 0..m, each of length period

  int order() const { return static_cast<int>(numerators.size()) - 1; }
  Real coefficient(long k) const;
  // rows as "0 3/4 -1 ..." separated by newlines, for transcription review
  std::string str() const;
};

namespace tables {
const PeriodicCoeffMatrix& t_product();         // t^< = z^> = sqrt(q) Pi(.|q)
const PeriodicCoeffMatrix& bulk_below();        // with prefactor q^{-1/2}
const PeriodicCoeffMatrix& surface_below();     // with prefactor 1/2
const PeriodicCoeffMatrix& surface_below_root();  // evaluated at sqrt(q)
const PeriodicCoeffMatrix& corner_below();      // printed prefactor 2 dropped by the erratum
const PeriodicCoeffMatrix& bulk_above();
const PeriodicCoeffMatrix& bulk_above_period4();
const PeriodicCoeffMatrix& surface_above();
const PeriodicCoeffMatrix& corner_above();
const PeriodicCoeffMatrix& corner_above_q2();  // evaluated at q^2
}  // namespace tables

struct PiProduct {
  Real log_value;
  long terms = 0;  // truncation index
};

// Truncates once the linear-growth majorant of the tail drops below 10^(-digits-5).
PiProduct pi_product(const Context& ctx, const PeriodicCoeffMatrix& c, const Real& q);

inline constexpr double kQCutoff = 0.9;

Real t_of_q(const Context& ctx, const Real& q);
// Inverse of t_of_q on (0, t_of_q(cutoff)); DomainError outside.
Real q_of_t(const Context& ctx, const Real& t, double cutoff = kQCutoff);

// e^{-f_c^>} from the explicit k-product, as a check of the q^2 rewrite
Real log_corner_above_direct(const Context& ctx, const Real& q);

enum class Phase { below, above };

struct FreeEnergyPieces {
  Phase phase = Phase::above;
  Real K, z, q;
  Real f_b_sing, f_s_sing, f_c;
  Real f_b_reg, f_s_reg;
  Real f_b, f_s;  // totals
  bool errata = true;
  bool near_critical = false;  // q above 1/2, products converge slowly
};

// Isotropic coupling K > 0, K != K_c. With errata = false the printed
// corner constant -log 2 below T_c is kept.
FreeEnergyPieces free_energy_pieces(const Context& ctx, const Real& K, bool errata = true);

// CSV rows K,q,f_b,f_s,f_c
void write_qseries_table(std::ostream& out, const Context& ctx, const std::vector<Real>& Ks, bool errata = true);

}  // namespace ising
