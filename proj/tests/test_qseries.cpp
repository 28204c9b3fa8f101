#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "ising/model.hpp"
#include "ising/qseries.hpp"

using namespace ising;

namespace {

// Onsager bulk free energy per site, frozen from an independent 45-digit quadrature
const std::pair<const char*, const char*> kOnsager[] = {
    {"0.1", "-0.7032312422858324346270863049940681458557"},
    {"0.25", "-0.7591064785354549138925864613144412061476"},
    {"0.3", "-0.7905590709512628658974186990213544877683"},
    {"0.6", "-1.210132388288412939227877760257852733831"},
    {"0.7", "-1.404221519729130159387046900467588475659"},
    {"1.0", "-2.00034828370071028062534886541787875468"},
    {"2.0", "-4.000000112610734449923186812193409095785"},
};

}  // namespace

TEST_CASE("tables print as transcribed") {
  CHECK(tables::surface_below().str() == "0 3/4 -1 -3/4 2 -3/4 -1 3/4\n0 1/4 0 1/4 0 -1/4 0 -1/4");
  CHECK(tables::surface_below_root().str() == "0 -1/2 0 1/2 0 1/2 0 -1/2\n0 -1/2 0 -1/2 0 1/2 0 1/2");
  CHECK(tables::corner_below().str() == "0 -2 3 -2 -1 -2 3 -2\n0 -2 1/2 2 0 -2 -1/2 2");
  CHECK(tables::bulk_below().str() == "0 0 -1 0 2 0 -1 0\n0 -1 0 1 0 -1 0 1");
  CHECK(tables::bulk_above().str() == "0 2 -4 2 0 2 -4 2\n0 -1 0 1 0 -1 0 1");
  CHECK(tables::bulk_above_period4().str() == "0 2 -4 2\n0 -1 0 1");
  CHECK(tables::surface_above().str() == "0 1/4 1 -1/4 -2 -1/4 1 1/4\n0 -1/4 0 -1/4 0 1/4 0 1/4");
  CHECK(tables::corner_above().str() == "0 0 0 0 -3 0 0 0\n0 0 -1/2 0 0 0 1/2 0");
  CHECK(tables::corner_above_q2().str() == "0 0 -3 0\n0 -1 0 1");
  CHECK(tables::t_product().str() == "0 1 0 -1 0 -1 0 1");
}

TEST_CASE("coefficients follow the periodic polynomial") {
  Context ctx(40);
  PrecisionScope scope(ctx);
  const auto& c = tables::corner_below();
  CHECK(c.coefficient(1) == -4);          // -2 - 2
  CHECK(c.coefficient(2) == Real(4));     // 3 + 1/2 * 2
  CHECK(c.coefficient(10) == Real(8));    // 3 + 1/2 * 10
  CHECK(c.coefficient(14) == Real(-4));   // 3 - 1/2 * 14
  CHECK(c.coefficient(8) == 0);
}

TEST_CASE("trivial products") {
  Context ctx(40);
  PrecisionScope scope(ctx);
  CHECK(pi_product(ctx, tables::bulk_above(), Real(0)).log_value == 0);
  PeriodicCoeffMatrix zero{4, 1, {{0, 0, 0, 0}, {0, 0, 0, 0}}};
  CHECK(pi_product(ctx, zero, Real("0.7")).log_value == 0);
  CHECK_THROWS_AS(pi_product(ctx, zero, Real(1)), DomainError);
}

TEST_CASE("Euler function by direct multiplication") {
  Context ctx(40);
  PrecisionScope scope(ctx);
  PeriodicCoeffMatrix euler{1, 1, {{1}}};
  Real q("0.1"), direct = 1, qk = 1;
  for (int k = 1; k < 200; ++k) {
    qk *= q;
    direct *= 1 - qk;
  }
  auto r = pi_product(ctx, euler, q);
  CHECK(abs(exp(r.log_value) - direct) < ctx.tol(3));
  CHECK(r.terms > 30);
  CHECK(r.terms < 200);
}

TEST_CASE("q and t round trip") {
  Context ctx(40);
  PrecisionScope scope(ctx);
  for (const char* qs : {"0.01", "0.05", "0.1", "0.2", "0.3", "0.4", "0.5"}) {
    Real q(qs);
    Real t = t_of_q(ctx, q);
    CHECK(abs(q_of_t(ctx, t) - q) < Real("1e-10"));
    CHECK(abs(t_of_q(ctx, q_of_t(ctx, t)) - t) < ctx.tol(4));
  }
  Real prev = 0;
  for (int i = 1; i <= 80; ++i) {
    Real t = t_of_q(ctx, Real(i) / 100);
    CHECK(t > prev);
    prev = t;
  }
  CHECK(abs(t_of_q(ctx, Real("1e-12")) / sqrt(Real("1e-12")) - 1) < Real("1e-11"));
  CHECK(q_of_t(ctx, Real("1e-8")) < Real("1e-15"));
  // t approaches the critical value as q grows
  CHECK(abs(t_of_q(ctx, Real("0.8")) - critical_coupling_isotropic().z_c) < Real("1e-9"));
  CHECK_THROWS_AS(q_of_t(ctx, critical_coupling_isotropic().z_c), DomainError);
}

TEST_CASE("equivalent printed forms agree") {
  Context ctx(40);
  PrecisionScope scope(ctx);
  for (const char* qs : {"0.01", "0.1", "0.25", "0.5"}) {
    Real q(qs);
    CHECK(abs(pi_product(ctx, tables::bulk_above(), q).log_value -
              pi_product(ctx, tables::bulk_above_period4(), q).log_value) < Real("1e-20"));
    Real c = pi_product(ctx, tables::corner_above(), q).log_value;
    CHECK(abs(c - pi_product(ctx, tables::corner_above_q2(), q * q).log_value) < Real("1e-20"));
    CHECK(abs(c - log_corner_above_direct(ctx, q)) < Real("1e-20"));
  }
}

TEST_CASE("bulk free energy matches Onsager on both sides") {
  Context ctx(40);
  PrecisionScope scope(ctx);
  for (auto [k, f] : kOnsager) {
    auto p = free_energy_pieces(ctx, Real(k));
    CAPTURE(k);
    CHECK(abs(p.f_b - Real(f)) < ctx.tol(8));
    CHECK(p.phase == (Real(k) > critical_coupling_isotropic().K_c ? Phase::below : Phase::above));
  }
}

TEST_CASE("corner free energy decays toward zero at low temperature") {
  Context ctx(40);
  PrecisionScope scope(ctx);
  Real prev = 1;
  for (const char* k : {"0.7", "1.0", "1.5", "2.0", "3.0"}) {
    auto p = free_energy_pieces(ctx, Real(k));
    CHECK(p.f_c < 0);
    CHECK(abs(p.f_c) < prev);
    prev = abs(p.f_c);
  }
  CHECK(prev < Real("1e-4"));
  auto printed = free_energy_pieces(ctx, Real("3.0"), false);
  CHECK(abs(printed.f_c + log(Real(2))) < Real("1e-4"));
}

TEST_CASE("near-critical flag and refusal at the critical point") {
  Context ctx(40);
  PrecisionScope scope(ctx);
  CHECK_FALSE(free_energy_pieces(ctx, Real("0.25")).near_critical);
  CHECK(free_energy_pieces(ctx, Real("0.4406")).near_critical);
  CHECK_THROWS_AS(free_energy_pieces(ctx, critical_coupling_isotropic().K_c), DomainError);
  CHECK_THROWS_AS(free_energy_pieces(ctx, Real(0)), DomainError);
}

TEST_CASE("table output") {
  Context ctx(20);
  PrecisionScope scope(ctx);
  std::ostringstream os;
  write_qseries_table(os, ctx, {Real("0.25"), Real("0.7")});
  auto text = os.str();
  CHECK(text.rfind("K,q,f_b,f_s,f_c\n", 0) == 0);
  CHECK(std::count(text.begin(), text.end(), '\n') == 3);
}
