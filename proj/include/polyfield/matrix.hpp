#ifndef POLYFIELD_MATRIX_HPP
#define POLYFIELD_MATRIX_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "polyfield/field.hpp"

namespace polyfield {

/// Dense square matrix over GF(p). Column k holds the image of basis
/// vector k, so (A*B)(x) = A(B(x)).
class FpMat {
 public:
  FpMat() = default;
  FpMat(std::uint32_t p, int n) : p_(p), n_(n), a_(std::size_t(n) * n, 0) {}

  static FpMat identity(std::uint32_t p, int n);

  int dim() const { return n_; }
  std::uint32_t p() const { return p_; }

  std::uint32_t operator()(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }
  std::uint32_t& operator()(int i, int j) { return a_[std::size_t(i) * n_ + j]; }

  bool operator==(const FpMat&) const = default;

  FpMat mul(const FpMat& o) const;
  std::vector<std::uint32_t> apply(const std::vector<std::uint32_t>& v) const;
  FpMat transpose() const;
  FpMat inverse() const;     // throws std::domain_error if singular
  FpMat pow(std::uint64_t e) const;
  bool is_identity() const;
  FpMat negated() const;

  // Packed radix-p encoding of the n^2 entries (row-major). Injective.
  using Code = std::array<std::uint64_t, 2>;
  Code encode() const;
  static FpMat decode(const Code& c, std::uint32_t p, int n);

  const std::vector<std::uint32_t>& data() const { return a_; }
  std::vector<std::uint32_t>& data() { return a_; }

 private:
  std::uint32_t p_ = 0;
  int n_ = 0;
  std::vector<std::uint32_t> a_;
};

struct FpMatCodeHash {
  std::size_t operator()(const FpMat::Code& c) const {
    std::uint64_t h = c[0] * 0x9e3779b97f4a7c15ull;
    h ^= c[1] + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    return static_cast<std::size_t>(h);
  }
};

/// Dense square matrix over GF(p^2).
class Fp2Mat {
 public:
  Fp2Mat() = default;
  Fp2Mat(const QuadExtField* f, int n)
      : f_(f), n_(n), a_(std::size_t(n) * n, Fp2{}) {}

  static Fp2Mat identity(const QuadExtField* f, int n);
  static Fp2Mat embed(const QuadExtField* f, const FpMat& m);

  int dim() const { return n_; }
  const QuadExtField& field() const { return *f_; }

  Fp2 operator()(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }
  Fp2& operator()(int i, int j) { return a_[std::size_t(i) * n_ + j]; }

  bool operator==(const Fp2Mat& o) const { return n_ == o.n_ && a_ == o.a_; }

  Fp2Mat mul(const Fp2Mat& o) const;
  Fp2Mat inverse() const;
  bool is_identity() const;
  bool is_base() const;            // every entry lies in GF(p)
  FpMat to_base() const;           // throws if not is_base()

 private:
  const QuadExtField* f_ = nullptr;
  int n_ = 0;
  std::vector<Fp2> a_;
};

/// Square integer matrix (exact arithmetic for characteristic-0 lifts).
class IntMat {
 public:
  IntMat() = default;
  explicit IntMat(int n) : n_(n), a_(std::size_t(n) * n, 0) {}

  static IntMat identity(int n);

  int dim() const { return n_; }
  long long operator()(int i, int j) const { return a_[std::size_t(i) * n_ + j]; }
  long long& operator()(int i, int j) { return a_[std::size_t(i) * n_ + j]; }

  bool operator==(const IntMat&) const = default;

  IntMat mul(const IntMat& o) const;  // throws std::overflow_error on overflow
  IntMat pow(std::uint64_t e) const;
  IntMat scaled(long long s) const;
  IntMat add(const IntMat& o) const;
  bool is_zero() const;

  FpMat reduce(std::uint32_t p) const;

  /// Exact determinant by fraction-free (Bareiss) elimination.
  __int128 det() const;

  /// Exact characteristic polynomial det(xI - A), coefficients low-to-high
  /// (size n+1, leading coefficient 1), by the Faddeev-LeVerrier recursion.
  std::vector<long long> char_poly() const;

 private:
  int n_ = 0;
  std::vector<long long> a_;
};

std::string poly_to_string(const std::vector<long long>& coeffs);

}  // namespace polyfield

#endif
