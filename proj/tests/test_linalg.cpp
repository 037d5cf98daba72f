#include "dieout/linalg.hpp"

#include "helpers.hpp"
#include "oracle.hpp"

#include <doctest.h>
#include <random>

using namespace dieout;

TEST_CASE("rank of the 3x2 interaction example") {
  SystemSpec spec = testing::make_spec({"-1", "1", "-1"},
                                       {{"1", "2"}, {"1", "1"}, {"3", "1"}});
  CHECK(rank(spec.S) == 2);
  CHECK(rank(transpose(spec.S)) == 2);
}

TEST_CASE("null space of the transpose gives the kernel line") {
  RatMat st = {{1, 1, 3}, {2, 1, 1}};
  auto basis = null_space(st, 3);
  REQUIRE(basis.size() == 1);
  CHECK(basis[0] == RatVec{2, -5, 1});
}

TEST_CASE("null space of a zero matrix is the standard basis") {
  RatMat z(2, RatVec(3, Rational(0)));
  auto basis = null_space(z, 3);
  REQUIRE(basis.size() == 3);
  CHECK(basis[0] == RatVec{1, 0, 0});
  CHECK(basis[1] == RatVec{0, 1, 0});
  CHECK(basis[2] == RatVec{0, 0, 1});
}

TEST_CASE("eliminated vectors really annihilate the matrix") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    SystemSpec spec = testing::random_spec(6, 3, rng);
    auto basis = null_space(spec.S, 3);
    for (const auto& v : basis) {
      for (size_t i = 0; i < spec.S.size(); ++i) {
        Rational acc = 0;
        for (int j = 0; j < 3; ++j) acc += spec.S[i][j] * v[j];
        CHECK(acc == 0);
      }
    }
    CHECK((int)basis.size() == 3 - rank(spec.S));
  }
}

TEST_CASE("rank agrees with the fraction-free oracle and the transpose") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    SystemSpec spec = testing::random_spec(5, 4, rng, 0.35);
    int r = rank(spec.S);
    CHECK(r == oracle::rational_rank(spec.S));
    CHECK(r == rank(transpose(spec.S)));
  }
}

TEST_CASE("select_rows") {
  RatMat m = {{1, 2}, {3, 4}, {5, 6}};
  RatMat s = select_rows(m, {2, 0});
  CHECK(s == RatMat{{5, 6}, {1, 2}});
  CHECK_THROWS(select_rows(m, {3}));
}
