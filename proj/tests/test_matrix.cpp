#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"
#include "knotslice/matrix.hpp"

using namespace knotslice;

namespace {

// Leibniz expansion; fine up to 7x7.
Integer leibniz(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += perm[i] > perm[j];
    Integer term = inversions % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t n, int spread) {
  std::uniform_int_distribution<int> d(-spread, spread);
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = d(rng);
  return m;
}

}  // namespace

TEST_SUITE("matrix") {
  TEST_CASE("determinant agrees with the Leibniz expansion") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 300; ++trial) {
      const auto n = static_cast<std::size_t>(1 + trial % 6);
      const auto m = random_matrix(rng, n, 3);
      CHECK(determinant(m) == leibniz(m));
    }
    CHECK(determinant(IntMatrix()) == 1);
  }

  TEST_CASE("Sylvester criterion") {
    CHECK(is_positive_definite(IntMatrix{{5, -1}, {-1, 2}}));
    CHECK_FALSE(is_positive_definite(IntMatrix{{-2, 3}, {3, -2}}));
    CHECK_FALSE(is_positive_definite(IntMatrix{{1, 2}, {2, 1}}));
    const auto minors = leading_minors(IntMatrix{{5, -1}, {-1, 2}});
    REQUIRE(minors.size() == 2);
    CHECK(minors[0] == 5);
    CHECK(minors[1] == 9);
  }

  TEST_CASE("rank over the rationals") {
    CHECK(rank(IntMatrix{{1, 2}, {2, 4}}) == 1);
    CHECK(rank(IntMatrix{{1, 2, 3}, {4, 5, 6}, {7, 8, 9}}) == 2);
    CHECK(rank(IntMatrix::identity(4)) == 4);
    CHECK(rank(IntMatrix(3, 3)) == 0);
  }

  TEST_CASE("rational solve and adjugate") {
    const IntMatrix at{{2, 1}, {-1, 1}};
    const auto x = solve_rational(at, {0, -1});
    REQUIRE(x);
    CHECK((*x)[0] == Rational(1, 3));
    CHECK((*x)[1] == Rational(-2, 3));
    CHECK_FALSE(solve_rational(IntMatrix{{1, 2}, {2, 4}}, {1, 1}));

    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 50; ++trial) {
      const auto m = random_matrix(rng, 4, 2);
      const auto adj = adjugate(m);
      const Integer det = determinant(m);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) {
          Integer s = 0;
          for (std::size_t k = 0; k < 4; ++k) s += adj[i][k] * m(k, j);
          CHECK(s == (i == j ? det : Integer(0)));
        }
    }
  }

  TEST_CASE("Hermite normal form spans the same lattice") {
    std::mt19937_64 rng(5);
    for (int trial = 0; trial < 100; ++trial) {
      auto m = random_matrix(rng, 3, 3);
      if (determinant(m) == 0) continue;
      const auto h = hermite_normal_form(m);
      CHECK(abs(determinant(h)) == abs(determinant(m)));
      for (std::size_t i = 0; i < 3; ++i) {
        CHECK(h(i, i) > 0);
        for (std::size_t j = i + 1; j < 3; ++j) CHECK(h(i, j) == 0);
        for (std::size_t j = 0; j < i; ++j) {
          CHECK(h(i, j) >= 0);
          CHECK(h(i, j) < h(i, i));
        }
      }
      // Every column of m is an integer combination of the columns of h.
      for (std::size_t c = 0; c < 3; ++c) {
        const auto x = solve_rational(h, m.column(c));
        REQUIRE(x);
        for (const auto& v : *x) CHECK(denominator(v) == 1);
      }
    }
  }

  TEST_CASE("array text") {
    CHECK(IntMatrix{{2, -1}, {1, 1}}.to_array_text() == "[[2,-1],[1,1]]");
    CHECK((IntMatrix{{2, -1}, {1, 1}}.transposed() * IntMatrix{{2, -1}, {1, 1}}) == IntMatrix{{5, -1}, {-1, 2}});
  }
}
