#include <doctest.h>

#include "ising/oracle.hpp"
#include "ising/pfaffian.hpp"
#include "support.hpp"

using namespace ising;
using test_support::random_grid;
using test_support::rel_diff;

TEST_CASE("A is antisymmetric with the expected skeleton at K = 0") {
  Context ctx(40);
  PrecisionScope scope(ctx);
  LatticeSpec s{1, 2};
  auto g = CouplingGrid::homogeneous(s, Real(0), Real(0));
  auto ks = build_A(reduce(g));
  CHECK(ks.A.rows() == 8);
  CHECK(max_abs(ks.Zh) == 0);
  CHECK(max_abs(ks.Zv) == 0);
  auto d = log_abs_det(ks.A);
  CHECK(d.sign == 1);
  CHECK(abs(d.log_abs) < ctx.tol(2));
  CHECK(abs(logZ_pfaffian(ctx, g) - 2 * log(Real(2))) < ctx.tol(2));

  LatticeSpec s22{2, 2};
  auto ks2 = build_A(reduce(CouplingGrid::homogeneous(s22, Real("0.4"), Real("0.4"))));
  CHECK(max_abs(ks2.A + ks2.A.transpose()) == 0);
}

TEST_CASE("shift matrices") {
  Context ctx(40);
  PrecisionScope scope(ctx);
  auto h = shift_matrix(3, true);
  CHECK(h(0, 1) == 1);
  CHECK(h(1, 2) == 1);
  CHECK(h(2, 0) == -1);
  CHECK(shift_matrix(1, true)(0, 0) == -1);
  CHECK(shift_matrix(1, false)(0, 0) == 0);
}

TEST_CASE("pfaffian matches frozen oracle values") {
  Context ctx(40);
  PrecisionScope scope(ctx);
  auto pf = [&](int L, int M, const char* kh, const char* kv, VerticalBoundary bc) {
    return logZ_pfaffian(ctx, CouplingGrid::homogeneous({L, M, bc}, Real(kh), Real(kv)));
  };
  const auto O = VerticalBoundary::open, P = VerticalBoundary::periodic;
  CHECK(rel_diff(pf(2, 2, "0.3", "0.3", O), Real("2.957127728533600261569648120561732877717")) < ctx.tol(10));
  CHECK(rel_diff(pf(3, 4, "0.2", "0.6", O), Real("10.09087570819609110494498873738980599699")) < ctx.tol(10));
  CHECK(rel_diff(pf(3, 3, "0.4", "0.25", P), Real("7.111816728736947709271139004651085965539")) < ctx.tol(10));
  CHECK(rel_diff(pf(2, 3, "-0.5", "0.7", O), Real("5.597624457608164954346136121792050081094")) < ctx.tol(10));
  CHECK(rel_diff(pf(4, 2, "0.2", "0.55", P), Real("7.78677109692000753323802920854145652517")) < ctx.tol(10));
  CHECK(abs(pf(3, 4, "0", "0", O) - 12 * log(Real(2))) < ctx.tol(2));
}

TEST_CASE("pfaffian matches the oracle on random grids") {
  Context ctx(40);
  PrecisionScope scope(ctx);
  std::uint32_t seed = 7;
  for (auto bc : {VerticalBoundary::open, VerticalBoundary::periodic})
    for (int L = 1; L <= 4; ++L)
      for (int M = 1; M <= 5; ++M) {
        if (L * M > 20) continue;
        auto g = random_grid({L, M, bc}, ++seed, -0.9, 0.9);
        CAPTURE(L);
        CAPTURE(M);
        Real o = brute_force_logZ(ctx, g).logZ;
        CHECK(rel_diff(logZ_pfaffian(ctx, g), o) < ctx.tol(10));
      }
}

TEST_CASE("Schur factorization of det A") {
  Context ctx(40);
  PrecisionScope scope(ctx);
  auto g = CouplingGrid::homogeneous({2, 2}, Real("0.4"), Real("0.4"));
  CHECK(schur_check(ctx, g) < ctx.tol(6));
  CHECK(schur_check(ctx, random_grid({3, 4}, 11, 0.1, 0.9)) < ctx.tol(6));
  CHECK(schur_check(ctx, random_grid({2, 4, VerticalBoundary::periodic}, 12, 0.1, 0.9)) < ctx.tol(6));
  CHECK(schur_check(ctx, random_grid({3, 2, VerticalBoundary::periodic}, 13, 0.1, 0.9)) < ctx.tol(6));
  CHECK(schur_check(ctx, CouplingGrid::homogeneous({4, 6}, Real("0.7"), Real("0.25"))) < ctx.tol(6));
  CHECK_THROWS_AS(schur_check(ctx, CouplingGrid::homogeneous({2, 3}, Real("0.4"), Real("0.4"))), DomainError);
  // at K = 0 the reduced block is singular
  CHECK_THROWS_AS(schur_check(ctx, CouplingGrid::homogeneous({2, 2}, Real(0), Real(0))), DomainError);
}
