#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "toricdual/lattice.hpp"
#include "toricdual/linalg.hpp"

using namespace toricdual;

namespace {

// independent oracle: cofactor expansion, no elimination shared with det()
Int det_cofactor(const IntMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 1) return m(0, 0);
  Int acc = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (m(0, j) == 0) continue;
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor(r - 1, cc++) = m(r, c);
      }
    }
    Int term = m(0, j) * det_cofactor(minor);
    acc += (j % 2 == 0) ? term : -term;
  }
  return acc;
}

IntMatrix random_matrix(std::mt19937& rng, std::size_t r, std::size_t c, int lo, int hi) {
  std::uniform_int_distribution<int> d(lo, hi);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

IntMatrix random_unimodular(std::mt19937& rng, std::size_t n) {
  // product of random elementary operations
  IntMatrix u = IntMatrix::identity(n);
  std::uniform_int_distribution<int> pick(0, int(n) - 1), coef(-2, 2);
  for (int step = 0; step < 20; ++step) {
    std::size_t i = std::size_t(pick(rng)), j = std::size_t(pick(rng));
    if (i == j) continue;
    u.add_row(i, j, Int(coef(rng)));
  }
  return u;
}

bool is_hnf(const IntMatrix& h) {
  std::size_t last_pivot_col = 0;
  bool first = true;
  for (std::size_t i = 0; i < h.rows(); ++i) {
    std::size_t j = 0;
    while (j < h.cols() && h(i, j) == 0) ++j;
    if (j == h.cols()) {
      // all rows after a zero row must be zero
      for (std::size_t r = i; r < h.rows(); ++r)
        for (std::size_t c = 0; c < h.cols(); ++c)
          if (h(r, c) != 0) return false;
      return true;
    }
    if (!first && j <= last_pivot_col) return false;
    if (h(i, j) <= 0) return false;
    for (std::size_t r = 0; r < i; ++r)
      if (h(r, j) < 0 || h(r, j) >= h(i, j)) return false;
    last_pivot_col = j;
    first = false;
  }
  return true;
}

}  // namespace

TEST_CASE("hnf basics") {
  IntMatrix id = IntMatrix::identity(3);
  auto r = hnf(id);
  CHECK(r.h == id);
  CHECK(r.u == id);

  IntMatrix swap{{Int(0), Int(1)}, {Int(1), Int(0)}};
  auto r2 = hnf(swap);
  CHECK(r2.h == IntMatrix::identity(2));
  CHECK(r2.u == swap);

  IntMatrix m{{Int(2), Int(4)}, {Int(6), Int(8)}};
  auto r3 = hnf(m);
  CHECK(is_hnf(r3.h));
  CHECK(abs(det(r3.h)) == abs(det_cofactor(m)));
  CHECK(abs(det_cofactor(m)) == 8);
  CHECK(r3.u * m == r3.h);
  CHECK(abs(det(r3.u)) == 1);
}

TEST_CASE("snf basics") {
  IntMatrix d24{{Int(2), Int(0)}, {Int(0), Int(4)}};
  auto r = snf(d24);
  CHECK(r.s == d24);

  IntMatrix swap{{Int(0), Int(1)}, {Int(1), Int(0)}};
  CHECK(snf(swap).s == IntMatrix::identity(2));

  IntMatrix m{{Int(2), Int(1)}, {Int(1), Int(-2)}};
  auto r3 = snf(m);
  IntMatrix expect{{Int(1), Int(0)}, {Int(0), Int(5)}};
  CHECK(r3.s == expect);
  CHECK(r3.u * m * r3.v == r3.s);
  CHECK(abs(det(r3.u)) == 1);
  CHECK(abs(det(r3.v)) == 1);
}

TEST_CASE("kernel_basis") {
  IntMatrix zero(1, 3);
  CHECK(kernel_basis(zero) == IntMatrix::identity(3));

  CHECK(kernel_basis(IntMatrix::identity(3)).cols() == 0);

  IntMatrix ones{{Int(1), Int(1), Int(1)}};
  IntMatrix k = kernel_basis(ones);
  REQUIRE(k.cols() == 2);
  for (std::size_t c = 0; c < 2; ++c)
    CHECK(k(0, c) + k(1, c) + k(2, c) == 0);
  // saturation: all invariant factors of the kernel basis are 1
  auto s = snf(k);
  CHECK(s.s(0, 0) == 1);
  CHECK(s.s(1, 1) == 1);
}

TEST_CASE("signature") {
  CHECK(signature(gram_U()) == Signature{1, 1, 0});
  CHECK(signature(gram_E(8)) == Signature{0, 8, 0});
  IntMatrix four{{Int(4)}};
  CHECK(signature(four) == Signature{1, 0, 0});
  IntMatrix zero(2, 2);
  CHECK(signature(zero) == Signature{0, 0, 2});
}

TEST_CASE("det and rank") {
  CHECK(det(IntMatrix::identity(4)) == 1);
  IntMatrix m{{Int(2), Int(1)}, {Int(1), Int(-2)}};
  CHECK(det(m) == -5);
  // det(U) = -1 and det(E7) = -2, so the sum has determinant +2
  IntMatrix ue7 = direct_sum(gram_U(), gram_E(7));
  CHECK(det(ue7) == det_cofactor(ue7));
  CHECK(det(ue7) == 2);
  CHECK(rank(ue7) == 9);
  CHECK(rank(IntMatrix(2, 3)) == 0);
  CHECK_THROWS_AS(det(IntMatrix(2, 3)), NonSquareMatrix);
}

TEST_CASE("randomized normal-form postconditions") {
  std::mt19937 rng(20240811);
  for (int iter = 0; iter < 300; ++iter) {
    std::size_t r = 1 + std::size_t(rng() % 4), c = 1 + std::size_t(rng() % 4);
    IntMatrix m = random_matrix(rng, r, c, -6, 6);

    auto h = hnf(m);
    CHECK(h.u * m == h.h);
    CHECK(abs(det(h.u)) == 1);
    CHECK(is_hnf(h.h));

    auto s = snf(m);
    CHECK(s.u * m * s.v == s.s);
    CHECK(abs(det(s.u)) == 1);
    CHECK(abs(det(s.v)) == 1);
    for (std::size_t i = 0; i + 1 < std::min(r, c); ++i) {
      CHECK(s.s(i, i) >= 0);
      if (s.s(i, i) != 0) CHECK(s.s(i + 1, i + 1) % s.s(i, i) == 0);
      if (s.s(i, i) == 0) CHECK(s.s(i + 1, i + 1) == 0);
    }
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j)
        if (i != j) CHECK(s.s(i, j) == 0);

    if (r == c) {
      Int dm = det_cofactor(m);
      Int prod = 1;
      for (std::size_t i = 0; i < r; ++i) prod *= s.s(i, i);
      CHECK(prod == abs(dm));
    }

    IntMatrix k = kernel_basis(m);
    CHECK(k.cols() == c - rank(m));
    IntMatrix prod = m * k;
    for (std::size_t i = 0; i < prod.rows(); ++i)
      for (std::size_t j = 0; j < prod.cols(); ++j) CHECK(prod(i, j) == 0);
    if (k.cols() > 0) {
      auto ks = snf(k);
      for (std::size_t i = 0; i < k.cols(); ++i) CHECK(ks.s(i, i) == 1);
    }
  }
}

TEST_CASE("signature is congruence-invariant") {
  std::mt19937 rng(7);
  for (int iter = 0; iter < 100; ++iter) {
    std::size_t n = 2 + std::size_t(rng() % 3);
    IntMatrix a = random_matrix(rng, n, n, -4, 4);
    IntMatrix g = a + a.transposed();
    IntMatrix p = random_unimodular(rng, n);
    CHECK(signature(congruence(g, p)) == signature(g));
  }
}
