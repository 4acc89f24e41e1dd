#include <doctest.h>

#include <irrlat/errors.hpp>
#include <irrlat/matrix.hpp>

#include "generators.hpp"
#include "oracles.hpp"

using namespace irrlat;

TEST_CASE("determinant matches cofactor expansion on random matrices") {
  testgen::Rng rng(20240601);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = testgen::uniform(rng, 1, 5);
    ZMatrix m = testgen::random_matrix(rng, n, n, -9, 9);
    CHECK(determinant(m) == oracles::cofactor_determinant(m));
  }
}

TEST_CASE("determinant basics") {
  CHECK(determinant(ZMatrix{}) == 1);
  CHECK(determinant(ZMatrix::identity(4)) == 1);
  CHECK(determinant(ZMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(determinant(ZMatrix{{2, 0}, {0, 3}}) == 6);
  CHECK(determinant(ZMatrix{{1, 2}, {2, 4}}) == 0);
  CHECK_THROWS_AS(determinant(ZMatrix(2, 3)), invariant_error);
}

TEST_CASE("rank over the rationals") {
  CHECK(rank(ZMatrix{}) == 0);
  CHECK(rank(ZMatrix::identity(3)) == 3);
  CHECK(rank(ZMatrix{{1, 2, 3}, {2, 4, 6}}) == 1);
  CHECK(rank(ZMatrix{{1, 0, 0}, {0, 0, 1}}) == 2);
  CHECK(rank(ZMatrix(3, 4)) == 0);

  testgen::Rng rng(7);
  for (int trial = 0; trial < 30; ++trial) {
    ZMatrix m = testgen::random_full_rank_square(rng, 4, -5, 5);
    CHECK(rank(m) == 4);
    // duplicating a row drops the rank of the stack back to 4
    ZMatrix doubled = vstack(m, m);
    CHECK(rank(doubled) == 4);
  }
}

TEST_CASE("matrix product and transpose") {
  ZMatrix a{{1, 2}, {3, 4}};
  ZMatrix b{{0, 1}, {1, 0}};
  CHECK(a * b == ZMatrix{{2, 1}, {4, 3}});
  CHECK(a.transposed() == ZMatrix{{1, 3}, {2, 4}});
  CHECK((Int(2) * a) == ZMatrix{{2, 4}, {6, 8}});
  CHECK_THROWS_AS(a * ZMatrix(3, 2), invariant_error);
}

TEST_CASE("block stacking") {
  ZMatrix a{{1}};
  ZMatrix b{{2}};
  CHECK(block_diagonal(a, b) == ZMatrix{{1, 0}, {0, 2}});
  CHECK(vstack(a, b) == ZMatrix{{1}, {2}});
  ZMatrix empty(0, 1);
  CHECK(vstack(empty, a) == a);
}
