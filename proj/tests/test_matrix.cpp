#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>
#include <random>
#include <vector>

#include "polyfield/field.hpp"
#include "polyfield/matrix.hpp"

using namespace polyfield;

namespace {

FpMat random_invertible(std::uint32_t p, int n, std::mt19937& rng) {
  std::uniform_int_distribution<std::uint32_t> d(0, p - 1);
  for (;;) {
    FpMat m(p, n);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) m(i, j) = d(rng);
    try {
      (void)m.inverse();
      return m;
    } catch (const std::domain_error&) {
    }
  }
}

}  // namespace

TEST_CASE("FpMat ring operations and inverse") {
  std::mt19937 rng(12345);
  for (std::uint32_t p : {3u, 5u, 7u, 13u}) {
    for (int n : {1, 2, 3, 5}) {
      FpMat e = FpMat::identity(p, n);
      CHECK(e.is_identity());
      for (int trial = 0; trial < 5; ++trial) {
        FpMat a = random_invertible(p, n, rng);
        FpMat b = random_invertible(p, n, rng);
        CHECK(a.mul(e) == a);
        CHECK(e.mul(a) == a);
        CHECK(a.mul(a.inverse()).is_identity());
        CHECK(a.inverse().mul(a).is_identity());
        // (ab)^{-1} = b^{-1} a^{-1}
        CHECK(a.mul(b).inverse() == b.inverse().mul(a.inverse()));
        // transpose is an anti-homomorphism
        CHECK(a.mul(b).transpose() == b.transpose().mul(a.transpose()));
        // pow agrees with repeated multiplication
        FpMat acc = e;
        for (int k = 0; k <= 6; ++k) {
          CHECK(a.pow(static_cast<std::uint64_t>(k)) == acc);
          acc = acc.mul(a);
        }
      }
    }
  }
}

TEST_CASE("FpMat columns are images of basis vectors") {
  // column convention: (A*B)(x) = A(B(x))
  FpMat a(5, 2);
  a(0, 0) = 1; a(0, 1) = 2;
  a(1, 0) = 3; a(1, 1) = 4;
  std::vector<std::uint32_t> e0 = {1, 0};
  std::vector<std::uint32_t> e1 = {0, 1};
  CHECK(a.apply(e0) == std::vector<std::uint32_t>{1, 3});
  CHECK(a.apply(e1) == std::vector<std::uint32_t>{2, 4});
  FpMat b(5, 2);
  b(0, 0) = 0; b(0, 1) = 1;
  b(1, 0) = 1; b(1, 1) = 0;
  CHECK(a.mul(b).apply(e0) == a.apply(b.apply(e0)));
}

TEST_CASE("encode/decode round-trip") {
  std::mt19937 rng(777);
  for (std::uint32_t p : {3u, 5u, 7u, 11u}) {
    for (int n : {2, 3, 4, 5, 6}) {
      // codes pack n^2 digits radix p into 128 bits; skip if out of range
      double digits = n * n * std::log2(double(p));
      if (digits > 127) continue;
      for (int trial = 0; trial < 8; ++trial) {
        FpMat a = random_invertible(p, n, rng);
        CHECK(FpMat::decode(a.encode(), p, n) == a);
      }
    }
  }
}

TEST_CASE("negated") {
  FpMat a = FpMat::identity(7, 3);
  FpMat m = a.negated();
  for (int i = 0; i < 3; ++i) CHECK(m(i, i) == 6);
  CHECK(m.mul(m).is_identity());
}

TEST_CASE("IntMat char_poly on companion and diagonal matrices") {
  // companion matrix of x^3 - 2x^2 + 5x - 7
  IntMat c(3);
  c(0, 2) = 7; c(1, 2) = -5; c(2, 2) = 2;
  c(1, 0) = 1; c(2, 1) = 1;
  CHECK(c.char_poly() == std::vector<long long>{-7, 5, -2, 1});

  IntMat d(2);
  d(0, 0) = 3; d(1, 1) = -4;
  // (x-3)(x+4) = x^2 + x - 12
  CHECK(d.char_poly() == std::vector<long long>{-12, 1, 1});

  CHECK(IntMat::identity(4).char_poly() ==
        std::vector<long long>{1, -4, 6, -4, 1});
}

TEST_CASE("Cayley-Hamilton for random small integer matrices") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int n : {2, 3, 4}) {
    for (int trial = 0; trial < 10; ++trial) {
      IntMat a(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) a(i, j) = d(rng);
      std::vector<long long> cp = a.char_poly();
      IntMat acc(n);  // zero
      for (int k = 0; k <= n; ++k)
        acc = acc.add(a.pow(static_cast<std::uint64_t>(k)).scaled(cp[std::size_t(k)]));
      CHECK(acc.is_zero());
    }
  }
}

TEST_CASE("IntMat reduce commutes with multiplication") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> d(-9, 9);
  for (std::uint32_t p : {3u, 7u}) {
    for (int trial = 0; trial < 10; ++trial) {
      IntMat a(3), b(3);
      for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) { a(i, j) = d(rng); b(i, j) = d(rng); }
      CHECK(a.mul(b).reduce(p) == a.reduce(p).mul(b.reduce(p)));
    }
  }
}

TEST_CASE("IntMat multiplication overflow is detected") {
  IntMat a(2);
  a(0, 0) = 1LL << 62;
  a(1, 1) = 1LL << 62;
  CHECK_THROWS_AS(a.mul(a), std::overflow_error);
}

TEST_CASE("Fp2Mat embed and to_base round-trip") {
  QuadExtField ext(3);
  FpMat a = FpMat::identity(3, 2);
  a(0, 1) = 2;
  Fp2Mat m = Fp2Mat::embed(&ext, a);
  CHECK(m.is_base());
  CHECK(m.to_base() == a);
  Fp2Mat e = Fp2Mat::identity(&ext, 4);
  CHECK(e.is_identity());
}

TEST_CASE("polynomial printing") {
  CHECK(poly_to_string({1, 0, -1, -1, -1, 0, 1}) ==
        "x^6 - x^4 - x^3 - x^2 + 1");
}
