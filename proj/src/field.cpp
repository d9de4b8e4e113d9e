#include "polyfield/field.hpp"

namespace polyfield {

std::string to_string(SquareClass c) {
  switch (c) {
    case SquareClass::Zero: return "zero";
    case SquareClass::Square: return "square";
    default: return "nonsquare";
  }
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t q : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n == q) return true;
    if (n % q == 0) return false;
  }
  // deterministic Miller-Rabin for 64-bit range
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) d >>= 1, ++s;
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    a %= n;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool witness = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        witness = false;
        break;
      }
    }
    if (witness) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument("PrimeField: modulus must be an odd prime, got " +
                                std::to_string(p));
  inv2_ = (p + 1) / 2;
}

std::uint32_t PrimeField::pow(std::uint32_t a, std::uint64_t e) const {
  std::uint64_t r = 1, base = a % p_;
  while (e) {
    if (e & 1) r = (r * base) % p_;
    base = (base * base) % p_;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("PrimeField: inverse of zero");
  return pow(a % p_, p_ - 2);
}

SquareClass PrimeField::square_class(std::uint32_t a) const {
  a %= p_;
  if (a == 0) return SquareClass::Zero;
  return pow(a, (p_ - 1) / 2) == 1 ? SquareClass::Square
                                   : SquareClass::NonSquare;
}

SquareClass legendre(long long a, std::uint64_t p) {
  if (p == 2 || !is_prime(p))
    throw std::invalid_argument("legendre: p must be an odd prime, got " +
                                std::to_string(p));
  PrimeField f(static_cast<std::uint32_t>(p));
  return f.square_class(f.reduce(a));
}

std::uint32_t smallest_nonresidue(std::uint32_t p) {
  PrimeField f(p);
  for (std::uint32_t d = 2; d < p; ++d)
    if (f.square_class(d) == SquareClass::NonSquare) return d;
  throw std::logic_error("no non-residue found");  // unreachable for p >= 3
}

QuadExtField::QuadExtField(std::uint32_t p)
    : fp_(p), d_(smallest_nonresidue(p)) {}

QuadExtField::QuadExtField(std::uint32_t p, std::uint32_t d) : fp_(p), d_(d % p) {
  if (fp_.square_class(d_) != SquareClass::NonSquare)
    throw std::invalid_argument("QuadExtField: d must be a non-residue");
}

Fp2 QuadExtField::inv(Fp2 x) const {
  // 1/(a + b s) = (a - b s) / (a^2 - d b^2)
  std::uint32_t nrm =
      fp_.sub(fp_.mul(x.a, x.a), fp_.mul(d_, fp_.mul(x.b, x.b)));
  std::uint32_t ni = fp_.inv(nrm);
  return {fp_.mul(x.a, ni), fp_.mul(fp_.neg(x.b), ni)};
}

std::uint32_t sqrt_mod_p(std::uint32_t a, const PrimeField& f) {
  const std::uint32_t p = f.p();
  a %= p;
  if (a == 0) return 0;
  if (f.square_class(a) != SquareClass::Square)
    throw std::domain_error("sqrt_mod_p: not a residue");
  std::uint32_t r;
  if (p % 4 == 3) {
    r = f.pow(a, (p + 1) / 4);
  } else {
    // Tonelli-Shanks
    std::uint32_t q = p - 1;
    int s = 0;
    while ((q & 1) == 0) q >>= 1, ++s;
    std::uint32_t z = smallest_nonresidue(p);
    std::uint32_t m = s;
    std::uint32_t c = f.pow(z, q);
    std::uint32_t t = f.pow(a, q);
    r = f.pow(a, (q + 1) / 2);
    while (t != 1) {
      std::uint32_t i = 0, tt = t;
      while (tt != 1) {
        tt = f.mul(tt, tt);
        ++i;
      }
      std::uint32_t b = c;
      for (std::uint32_t j = 0; j + i + 1 < m; ++j) b = f.mul(b, b);
      m = i;
      c = f.mul(b, b);
      t = f.mul(t, c);
      r = f.mul(r, b);
    }
  }
  return std::min(r, p - r);  // deterministic: smaller representative
}

Fp2 sqrt_mod(std::uint32_t a, const QuadExtField& f) {
  const PrimeField& fp = f.base();
  a %= fp.p();
  if (a == 0) return {0, 0};
  if (fp.square_class(a) == SquareClass::Square)
    return {sqrt_mod_p(a, fp), 0};
  // a = (s sqrt(d))^2 with s = sqrt(a/d); a/d is a residue.
  std::uint32_t s = sqrt_mod_p(fp.mul(a, fp.inv(f.d())), fp);
  return {0, s};
}

}  // namespace polyfield
