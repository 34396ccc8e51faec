#include "houghton/errors.hpp"
#include "houghton/intlinalg.hpp"
#include "linalg_oracle.hpp"

#include <doctest.h>

using namespace houghton;

namespace {

IntMatrix M(const std::vector<IntVector>& rows) {
  return IntMatrix::from_rows(rows, rows.empty() ? 0 : rows.front().size());
}

void check_smith(const IntMatrix& a, const SmithForm& f) {
  CHECK(f.U * a * f.V == f.S);
  CHECK(abs_int(testing::cofactor_det(f.U)) == 1);
  CHECK(abs_int(testing::cofactor_det(f.V)) == 1);
  const IntVector d = f.diagonal();
  for (std::size_t i = 0; i < f.S.rows(); ++i)
    for (std::size_t j = 0; j < f.S.cols(); ++j)
      if (i != j) CHECK(f.S(i, j) == 0);
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    CHECK(d[i] >= 0);
    if (d[i] != 0) CHECK(d[i + 1] % d[i] == 0);
    else CHECK(d[i + 1] == 0);
  }
}

}  // namespace

TEST_CASE("smith normal form examples") {
  const IntMatrix a = M({{1, 0}, {0, 0}});
  const SmithForm f = smith_normal_form(a);
  CHECK(f.S == a);
  CHECK(f.U == IntMatrix::identity(2));
  CHECK(f.V == IntMatrix::identity(2));
  CHECK(f.rank == 1);

  CHECK(smith_normal_form(M({{0}})).S == M({{0}}));

  const IntMatrix b = M({{2, 0}, {0, 3}});
  const SmithForm g = smith_normal_form(b);
  check_smith(b, g);
  CHECK(g.diagonal() == IntVector{1, 6});

  const SmithForm empty = smith_normal_form(IntMatrix(0, 3));
  CHECK(empty.S.rows() == 0);
  CHECK(empty.V == IntMatrix::identity(3));
}

TEST_CASE("smith normal form against determinantal divisors") {
  std::mt19937 rng(41);
  for (int it = 0; it < 80; ++it) {
    const std::size_t r = 1 + rng() % 4, c = 1 + rng() % 4;
    const IntMatrix a = testing::random_matrix(rng, r, c, 6);
    const SmithForm f = smith_normal_form(a);
    check_smith(a, f);
    const IntVector d = f.diagonal();
    Int prod = 1;
    for (std::size_t k = 1; k <= std::min(r, c); ++k) {
      prod *= d[k - 1];
      CHECK(prod == testing::determinantal_divisor(a, k));
    }
  }
}

TEST_CASE("determinant") {
  std::mt19937 rng(43);
  for (int it = 0; it < 50; ++it) {
    const std::size_t n = 1 + rng() % 5;
    const IntMatrix a = testing::random_matrix(rng, n, n, 9);
    CHECK(determinant(a) == testing::cofactor_det(a));
  }
  CHECK_THROWS_AS(determinant(IntMatrix(2, 3)), InputError);
}

TEST_CASE("diophantine examples") {
  const auto id = solve_diophantine(IntMatrix::identity(3), {4, -2, 7});
  REQUIRE(id);
  CHECK(id->particular == IntVector{4, -2, 7});
  CHECK(id->kernel.empty());
  CHECK_FALSE(solve_diophantine(M({{2}}), {1}));
  const auto k = solve_diophantine(M({{2, 4}}), {6});
  REQUIRE(k);
  CHECK(k->kernel.size() == 1);
  CHECK_THROWS_AS(solve_diophantine(M({{1, 2}}), {1, 2}), InputError);
}

TEST_CASE("diophantine feasibility against the box oracle") {
  std::mt19937 rng(47);
  int feasible = 0;
  for (int it = 0; it < 60; ++it) {
    const std::size_t r = 1 + rng() % 3, c = 1 + rng() % 4;
    const IntMatrix a = testing::random_matrix(rng, r, c, 4);
    IntVector b(r);
    for (auto& x : b) x = static_cast<int>(rng() % 9) - 4;
    const auto sol = solve_diophantine(a, b);
    if (sol) {
      ++feasible;
      CHECK(a * sol->particular == b);
      for (const auto& v : sol->kernel) CHECK(a * v == IntVector(r));
    }
    const auto verdict = testing::certified_feasibility(a, b, 6, 8);
    if (verdict == testing::Feasibility::Feasible) CHECK(sol.has_value());
    if (verdict == testing::Feasibility::Infeasible) CHECK_FALSE(sol.has_value());
  }
  CHECK(feasible > 0);
}

TEST_CASE("feasibility in block-constant translations") {
  // Already block constant.
  const auto zero = feasibility_in_Tp({IntVector{1, -1, 0, 0}}, {2, 2, -2, -2}, 2, 2);
  REQUIRE(zero);
  CHECK(zero->alpha == IntVector{0});
  CHECK(zero->blockValues == IntVector{2, -2});
  CHECK_FALSE(feasibility_in_Tp({}, {1, 0, -1, 0}, 2, 2));
  // One delta repairs the discrepancy in the first block.
  const IntVector delta{1, 0, 0, -1};
  const IntVector tx{0, 1, -1, 0};
  const auto sol = feasibility_in_Tp({delta}, tx, 2, 2);
  REQUIRE(sol);
  IntVector sum(4);
  for (int i = 0; i < 4; ++i) sum[i] = sol->alpha[0] * delta[i] + tx[i];
  CHECK(sum[0] == sum[1]);
  CHECK(sum[2] == sum[3]);
  CHECK(sol->blockValues == IntVector{sum[0], sum[2]});
  CHECK_THROWS_AS(feasibility_in_Tp({IntVector{1, -1}}, {0, 0, 0, 0}, 2, 2), InputError);
}

TEST_CASE("lattice basis and echelon shape") {
  const auto basis = lattice_basis({IntVector{2, -2, 0}, IntVector{0, 3, -3}, IntVector{2, 1, -3}}, 3);
  CHECK(basis.size() == 2);
  for (const auto& v : basis) {
    Int s = 0;
    for (const Int& x : v) s += x;
    CHECK(s == 0);
  }
  CHECK(lattice_basis({}, 4).empty());
}
