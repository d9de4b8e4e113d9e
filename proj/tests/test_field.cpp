#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "polyfield/field.hpp"

using namespace polyfield;

TEST_CASE("prime field axioms over small primes") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    PrimeField f(p);
    for (std::uint32_t a = 0; a < p; ++a) {
      CHECK(f.add(a, f.neg(a)) == 0);
      CHECK(f.add(a, 0) == a);
      CHECK(f.mul(a, 1) == a);
      if (a != 0) {
        CHECK(f.mul(a, f.inv(a)) == 1);
        // Fermat: a^(p-1) = 1
        CHECK(f.pow(a, p - 1) == 1);
      }
      for (std::uint32_t b = 0; b < p; ++b) {
        CHECK(f.add(a, b) == f.add(b, a));
        CHECK(f.mul(a, b) == f.mul(b, a));
        CHECK(f.sub(f.add(a, b), b) == a);
        for (std::uint32_t c = 0; c < p; ++c) {
          CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
        }
      }
    }
    CHECK(f.mul(2, f.half()) == 1);
  }
}

TEST_CASE("reduce maps signed integers to canonical representatives") {
  PrimeField f(7);
  CHECK(f.reduce(-1) == 6);
  CHECK(f.reduce(-14) == 0);
  CHECK(f.reduce(15) == 1);
  CHECK(f.reduce(0) == 0);
}

TEST_CASE("legendre symbol is multiplicative and matches square counting") {
  for (std::uint64_t p : {3ull, 5ull, 7ull, 11ull, 13ull, 17ull}) {
    PrimeField f(static_cast<std::uint32_t>(p));
    for (long long a = 0; a < static_cast<long long>(p); ++a) {
      // direct check against existence of a root
      bool has_root = false;
      for (std::uint64_t x = 0; x < p; ++x)
        if ((x * x) % p == static_cast<std::uint64_t>(a)) has_root = true;
      SquareClass want = a == 0 ? SquareClass::Zero
                                : (has_root ? SquareClass::Square
                                            : SquareClass::NonSquare);
      CHECK(legendre(a, p) == want);
      CHECK(f.square_class(static_cast<std::uint32_t>(a)) == want);
      for (long long b = 0; b < static_cast<long long>(p); ++b)
        CHECK(legendre(a * b, p) == legendre(a, p) * legendre(b, p));
    }
  }
  CHECK_THROWS(legendre(1, 2));
  CHECK_THROWS(legendre(1, 15));
}

TEST_CASE("sqrt_mod lands in the base field exactly for residues") {
  for (std::uint32_t p = 3; p <= 97; p += 2) {
    if (!is_prime(p)) continue;
    QuadExtField ext(p);
    const PrimeField& f = ext.base();
    // d really is a non-residue
    CHECK(legendre(ext.d(), p) == SquareClass::NonSquare);
    for (std::uint32_t a = 0; a < p; ++a) {
      Fp2 r = sqrt_mod(a, ext);
      // r^2 = a in GF(p^2)
      Fp2 sq = ext.mul(r, r);
      CHECK(sq.a == a);
      CHECK(sq.b == 0);
      if (f.square_class(a) == SquareClass::Square) {
        CHECK(r.b == 0);
        CHECK(sqrt_mod_p(a, f) == r.a);
        // canonical: smaller of the two roots
        CHECK(r.a <= f.neg(r.a));
      } else if (f.square_class(a) == SquareClass::NonSquare) {
        CHECK(r.a == 0);
        CHECK(r.b != 0);
        CHECK_THROWS(sqrt_mod_p(a, f));
      } else {
        CHECK(r.a == 0);
        CHECK(r.b == 0);
      }
    }
  }
}

TEST_CASE("quadratic extension inverse and norms") {
  for (std::uint32_t p : {3u, 5u, 7u, 13u}) {
    QuadExtField ext(p);
    for (std::uint32_t a = 0; a < p; ++a)
      for (std::uint32_t b = 0; b < p; ++b) {
        Fp2 x{a, b};
        if (a == 0 && b == 0) continue;
        Fp2 prod = ext.mul(x, ext.inv(x));
        CHECK(prod == ext.embed(1));
      }
  }
}

TEST_CASE("square-class semigroup") {
  CHECK(SquareClass::Square * SquareClass::Square == SquareClass::Square);
  CHECK(SquareClass::Square * SquareClass::NonSquare == SquareClass::NonSquare);
  CHECK(SquareClass::NonSquare * SquareClass::NonSquare == SquareClass::Square);
  CHECK(SquareClass::Zero * SquareClass::NonSquare == SquareClass::Zero);
}

TEST_CASE("smallest_nonresidue frozen values") {
  CHECK(smallest_nonresidue(3) == 2);
  CHECK(smallest_nonresidue(5) == 2);
  CHECK(smallest_nonresidue(7) == 3);
  CHECK(smallest_nonresidue(17) == 3);
  CHECK(smallest_nonresidue(73) == 5);
}

TEST_CASE("primality of small integers") {
  int count = 0;
  for (std::uint64_t n = 0; n <= 100; ++n)
    if (is_prime(n)) ++count;
  CHECK(count == 25);
  CHECK(is_prime(97));
  CHECK(!is_prime(91));
  CHECK(!is_prime(1));
}
