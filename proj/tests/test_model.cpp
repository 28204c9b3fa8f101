#include <doctest.h>

#include <sstream>

#include "ising/model.hpp"

using namespace ising;

TEST_CASE("pm combinator") {
  Context ctx(40);
  PrecisionScope scope(ctx);
  auto one = pm(Real(1));
  CHECK(one.plus == 1);
  CHECK(one.minus == 0);
  auto two = pm(Real(2));
  CHECK(two.plus == Real("1.25"));
  CHECK(two.minus == Real("0.75"));
  for (const char* s : {"0.3", "1.7", "0.01", "12.5"}) {
    Real a(s);
    auto p = pm(a);
    CHECK(abs(p.plus + p.minus - a) < ctx.tol(2));
    CHECK(abs(p.plus - p.minus - 1 / a) < ctx.tol(2));
    CHECK(abs(p.plus * p.plus - p.minus * p.minus - 1) < ctx.tol(3) * (1 + p.plus * p.plus));
  }
  CHECK_THROWS_AS(pm(Real(0)), DomainError);
}

TEST_CASE("dual coupling") {
  Context ctx(40);
  PrecisionScope scope(ctx);
  CHECK(dual(Real(0)) == 1);
  CHECK(abs(dual(Real("0.5")) - Real(1) / 3) < ctx.tol(1));
  auto crit = critical_coupling_isotropic();
  CHECK(abs(dual(crit.z_c) - crit.z_c) < ctx.tol(1));
  CHECK(abs(crit.z_c - Real("0.41421356237309504880168872420969807857")) < ctx.tol(1));
  CHECK(abs(crit.K_c - Real("0.44068679350977151261630466248989615451")) < ctx.tol(2));
  CHECK(abs(crit.z_c * crit.z_c + 2 * crit.z_c - 1) < ctx.tol(1));
  for (const char* s : {"-0.9", "-0.3", "0", "0.2", "0.99", "1"}) {
    Real z(s);
    CHECK(abs(dual(dual(z)) - z) < ctx.tol(2));
  }
  CHECK_THROWS_AS(dual(Real(-1)), DomainError);
}

TEST_CASE("coupling grid enforces boundary zeros") {
  Context ctx(40);
  PrecisionScope scope(ctx);
  LatticeSpec open{3, 4, VerticalBoundary::open};
  auto g = CouplingGrid::homogeneous(open, Real("0.3"), Real("0.5"));
  for (int m = 1; m <= 4; ++m) CHECK(g.kh(3, m) == 0);
  for (int ell = 1; ell <= 3; ++ell) CHECK(g.kv(ell, 4) == 0);
  CHECK(g.kv(2, 3) == Real("0.5"));
  CHECK(g.is_homogeneous());

  LatticeSpec cyl{3, 4, VerticalBoundary::periodic};
  auto gp = CouplingGrid::homogeneous(cyl, Real("0.3"), Real("0.5"));
  CHECK(gp.kv(2, 4) == Real("0.5"));
  CHECK(gp.kh(3, 2) == 0);

  CHECK_THROWS_AS(CouplingGrid(open, std::vector<Real>(3), std::vector<Real>(12)), DomainError);
  CHECK_THROWS_AS((LatticeSpec{0, 2}.validate()), DomainError);
}

TEST_CASE("constants") {
  Context ctx(40);
  PrecisionScope scope(ctx);
  LatticeSpec s{1, 2};
  auto zero = CouplingGrid::homogeneous(s, Real(0), Real(0));
  CHECK(abs(log_c0(zero).log_abs - 2 * log(Real(4))) < ctx.tol(1));

  LatticeSpec s33{3, 3};
  auto g = CouplingGrid::homogeneous(s33, Real("0.4"), Real("0.7"));
  auto c = constants(g);
  CHECK(abs(c.c2dag.log_abs - c.c0.log_abs - c.c1.log_abs) < ctx.tol(3));
  // (L-1)M = 6 is even
  CHECK(c.c2dag.sign == 1);
  CHECK(c.c2.has_value());
  CHECK_FALSE(c.c3.has_value());  // odd M

  LatticeSpec s23{2, 3};
  auto c23 = constants(CouplingGrid::homogeneous(s23, Real("0.4"), Real("0.7")));
  CHECK(c23.c2dag.sign == -1);

  // C3 at M = 2, L = 2, z = t
  LatticeSpec s22{2, 2};
  Real kc = critical_coupling_isotropic().K_c;
  auto c22 = constants(CouplingGrid::homogeneous(s22, kc, kc));
  REQUIRE(c22.c3.has_value());
  Real z = tanh(kc);
  Real zm = (z - 1 / z) / 2;
  Real expect = log(z * z * pow(2 / zm, 4) * pow(2 / (zm * zm), 2));
  CHECK(abs(c22.c3->log_abs - expect) < ctx.tol(3));

  auto nz = CouplingGrid::homogeneous(s22, Real(0), Real("0.3"));
  CHECK_THROWS_AS(constants(nz), DomainError);
}

TEST_CASE("grid csv") {
  Context ctx(40);
  PrecisionScope scope(ctx);
  std::istringstream in("ell,m,Kh,Kv\n1,1,0.1,0.2\n1,2,0.3,0.4\n2,1,0.5,0.6\n2,2,0.7,0.8\n");
  LatticeSpec s{2, 2};
  auto g = load_grid_csv(in, s);
  CHECK(g.kh(1, 2) == Real("0.3"));
  CHECK(g.kv(2, 1) == Real("0.6"));
  CHECK(g.kh(2, 1) == 0);  // boundary zero overrides the file
  CHECK(g.kv(2, 2) == 0);
  std::istringstream bad("ell,m,Kh,Kv\n3,1,0.1,0.2\n");
  CHECK_THROWS_AS(load_grid_csv(bad, s), DomainError);
  std::istringstream empty("");
  CHECK_THROWS_AS(load_grid_csv(empty, s), DomainError);
}
