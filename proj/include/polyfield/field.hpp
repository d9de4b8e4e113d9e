#ifndef POLYFIELD_FIELD_HPP
#define POLYFIELD_FIELD_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace polyfield {

// Square-class of a field element: {Square, NonSquare, Zero}, with Zero absorbing.
enum class SquareClass : int { Zero = 0, Square = 1, NonSquare = -1 };

inline SquareClass operator*(SquareClass a, SquareClass b) {
  if (a == SquareClass::Zero || b == SquareClass::Zero) return SquareClass::Zero;
  return a == b ? SquareClass::Square : SquareClass::NonSquare;
}

std::string to_string(SquareClass c);

bool is_prime(std::uint64_t n);

/// Arithmetic in GF(p) for an odd prime p. Elements are canonical
/// representatives in [0, p). Immutable after construction.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const {
    return a >= b ? a - b : a + p_ - b;
  }
  std::uint32_t neg(std::uint32_t a) const { return a == 0 ? 0 : p_ - a; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return static_cast<std::uint32_t>(
        (static_cast<std::uint64_t>(a) * b) % p_);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t inv(std::uint32_t a) const;

  // Canonical representative of a signed integer.
  std::uint32_t reduce(long long a) const {
    long long r = a % static_cast<long long>(p_);
    if (r < 0) r += p_;
    return static_cast<std::uint32_t>(r);
  }

  std::uint32_t half() const { return inv2_; }  // 1/2 mod p

  SquareClass square_class(std::uint32_t a) const;

 private:
  std::uint32_t p_;
  std::uint32_t inv2_;
};

/// legendre(a, p): Euler's criterion. Rejects p = 2 and composite p.
SquareClass legendre(long long a, std::uint64_t p);

/// Element a + b*sqrt(d) of GF(p^2), d a fixed non-residue mod p.
struct Fp2 {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  bool operator==(const Fp2&) const = default;
};

/// GF(p^2) = GF(p)(sqrt(d)) with d the smallest positive non-residue mod p.
/// A custom d may be supplied; it is verified to be a non-residue.
class QuadExtField {
 public:
  explicit QuadExtField(std::uint32_t p);
  QuadExtField(std::uint32_t p, std::uint32_t d);

  const PrimeField& base() const { return fp_; }
  std::uint32_t p() const { return fp_.p(); }
  std::uint32_t d() const { return d_; }

  Fp2 embed(std::uint32_t a) const { return {a, 0}; }
  Fp2 add(Fp2 x, Fp2 y) const { return {fp_.add(x.a, y.a), fp_.add(x.b, y.b)}; }
  Fp2 sub(Fp2 x, Fp2 y) const { return {fp_.sub(x.a, y.a), fp_.sub(x.b, y.b)}; }
  Fp2 neg(Fp2 x) const { return {fp_.neg(x.a), fp_.neg(x.b)}; }
  Fp2 mul(Fp2 x, Fp2 y) const {
    // (a + b s)(c + e s) = ac + bed + (ae + bc) s, s^2 = d
    return {fp_.add(fp_.mul(x.a, y.a), fp_.mul(fp_.mul(x.b, y.b), d_)),
            fp_.add(fp_.mul(x.a, y.b), fp_.mul(x.b, y.a))};
  }
  Fp2 inv(Fp2 x) const;
  bool is_base(Fp2 x) const { return x.b == 0; }

 private:
  PrimeField fp_;
  std::uint32_t d_;
};

/// Deterministic square root of a mod p. If a is a residue the result lies
/// in GF(p) (b = 0) with the smaller of the two roots; otherwise it is
/// s*sqrt(d) in GF(p^2) with s the smaller root of a/d. sqrt of 0 is 0.
Fp2 sqrt_mod(std::uint32_t a, const QuadExtField& f);

/// Convenience: square root known to exist in GF(p) itself (Tonelli-Shanks).
/// Throws if a is a non-residue.
std::uint32_t sqrt_mod_p(std::uint32_t a, const PrimeField& f);

std::uint32_t smallest_nonresidue(std::uint32_t p);

}  // namespace polyfield

#endif
