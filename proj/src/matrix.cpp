#include "polyfield/matrix.hpp"

#include <stdexcept>

namespace polyfield {

FpMat FpMat::identity(std::uint32_t p, int n) {
  FpMat m(p, n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

FpMat FpMat::mul(const FpMat& o) const {
  FpMat r(p_, n_);
  const std::uint64_t p = p_;
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      std::uint64_t aik = (*this)(i, k);
      if (!aik) continue;
      for (int j = 0; j < n_; ++j) {
        std::uint64_t v = r(i, j) + aik * o(k, j) % p;
        r(i, j) = static_cast<std::uint32_t>(v >= p ? v - p : v);
      }
    }
  return r;
}

std::vector<std::uint32_t> FpMat::apply(
    const std::vector<std::uint32_t>& v) const {
  std::vector<std::uint32_t> r(n_, 0);
  const std::uint64_t p = p_;
  for (int i = 0; i < n_; ++i) {
    std::uint64_t acc = 0;
    for (int j = 0; j < n_; ++j) acc += std::uint64_t((*this)(i, j)) * v[j] % p;
    r[i] = static_cast<std::uint32_t>(acc % p);
  }
  return r;
}

FpMat FpMat::transpose() const {
  FpMat r(p_, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
  return r;
}

FpMat FpMat::inverse() const {
  PrimeField f(p_);
  FpMat a = *this, inv = identity(p_, n_);
  for (int col = 0; col < n_; ++col) {
    int piv = -1;
    for (int r = col; r < n_; ++r)
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("FpMat::inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < n_; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    std::uint32_t s = f.inv(a(col, col));
    for (int j = 0; j < n_; ++j) {
      a(col, j) = f.mul(a(col, j), s);
      inv(col, j) = f.mul(inv(col, j), s);
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col || a(r, col) == 0) continue;
      std::uint32_t m = a(r, col);
      for (int j = 0; j < n_; ++j) {
        a(r, j) = f.sub(a(r, j), f.mul(m, a(col, j)));
        inv(r, j) = f.sub(inv(r, j), f.mul(m, inv(col, j)));
      }
    }
  }
  return inv;
}

FpMat FpMat::pow(std::uint64_t e) const {
  FpMat r = identity(p_, n_), b = *this;
  while (e) {
    if (e & 1) r = r.mul(b);
    b = b.mul(b);
    e >>= 1;
  }
  return r;
}

bool FpMat::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j)
      if ((*this)(i, j) != (i == j ? 1u : 0u)) return false;
  return true;
}

FpMat FpMat::negated() const {
  FpMat r(p_, n_);
  for (std::size_t k = 0; k < a_.size(); ++k)
    r.data()[k] = a_[k] == 0 ? 0 : p_ - a_[k];
  return r;
}

namespace {
// largest k with p^k representable in a 64-bit word (p^k - 1 <= 2^64 - 1)
std::size_t digits_per_word(std::uint32_t p) {
  std::size_t k = 0;
  std::uint64_t cap = 1;
  while (cap <= (~0ull) / p) {
    cap *= p;
    ++k;
  }
  return k;
}
}  // namespace

FpMat::Code FpMat::encode() const {
  // n^2 radix-p digits, a fixed number per word so the map is injective
  Code c{0, 0};
  std::size_t total = a_.size();
  std::size_t in0 = std::min(total, digits_per_word(p_));
  if (total - in0 > digits_per_word(p_))
    throw std::domain_error("FpMat::encode: matrix too large for 128-bit code");
  for (std::size_t i = 0; i < in0; ++i) c[0] = c[0] * p_ + a_[i];
  for (std::size_t i = in0; i < total; ++i) c[1] = c[1] * p_ + a_[i];
  return c;
}

FpMat FpMat::decode(const Code& c, std::uint32_t p, int n) {
  FpMat m(p, n);
  std::size_t total = std::size_t(n) * n;
  std::size_t in0 = std::min(total, digits_per_word(p));
  std::vector<std::uint32_t>& digits = m.data();
  std::uint64_t w0 = c[0], w1 = c[1];
  for (std::size_t i = total; i > in0; --i) {
    digits[i - 1] = static_cast<std::uint32_t>(w1 % p);
    w1 /= p;
  }
  for (std::size_t i = in0; i > 0; --i) {
    digits[i - 1] = static_cast<std::uint32_t>(w0 % p);
    w0 /= p;
  }
  return m;
}

Fp2Mat Fp2Mat::identity(const QuadExtField* f, int n) {
  Fp2Mat m(f, n);
  for (int i = 0; i < n; ++i) m(i, i) = {1, 0};
  return m;
}

Fp2Mat Fp2Mat::embed(const QuadExtField* f, const FpMat& m) {
  Fp2Mat r(f, m.dim());
  for (int i = 0; i < m.dim(); ++i)
    for (int j = 0; j < m.dim(); ++j) r(i, j) = {m(i, j), 0};
  return r;
}

Fp2Mat Fp2Mat::mul(const Fp2Mat& o) const {
  Fp2Mat r(f_, n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      Fp2 aik = (*this)(i, k);
      if (aik.a == 0 && aik.b == 0) continue;
      for (int j = 0; j < n_; ++j)
        r(i, j) = f_->add(r(i, j), f_->mul(aik, o(k, j)));
    }
  return r;
}

Fp2Mat Fp2Mat::inverse() const {
  Fp2Mat a = *this, inv = identity(f_, n_);
  auto is_zero = [](Fp2 x) { return x.a == 0 && x.b == 0; };
  for (int col = 0; col < n_; ++col) {
    int piv = -1;
    for (int r = col; r < n_; ++r)
      if (!is_zero(a(r, col))) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::domain_error("Fp2Mat::inverse: singular matrix");
    if (piv != col)
      for (int j = 0; j < n_; ++j) {
        std::swap(a(piv, j), a(col, j));
        std::swap(inv(piv, j), inv(col, j));
      }
    Fp2 s = f_->inv(a(col, col));
    for (int j = 0; j < n_; ++j) {
      a(col, j) = f_->mul(a(col, j), s);
      inv(col, j) = f_->mul(inv(col, j), s);
    }
    for (int r = 0; r < n_; ++r) {
      if (r == col || is_zero(a(r, col))) continue;
      Fp2 m = a(r, col);
      for (int j = 0; j < n_; ++j) {
        a(r, j) = f_->sub(a(r, j), f_->mul(m, a(col, j)));
        inv(r, j) = f_->sub(inv(r, j), f_->mul(m, inv(col, j)));
      }
    }
  }
  return inv;
}

bool Fp2Mat::is_identity() const {
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) {
      Fp2 want{i == j ? 1u : 0u, 0u};
      if (!((*this)(i, j) == want)) return false;
    }
  return true;
}

bool Fp2Mat::is_base() const {
  for (const Fp2& x : a_)
    if (x.b != 0) return false;
  return true;
}

FpMat Fp2Mat::to_base() const {
  if (!is_base()) throw std::domain_error("Fp2Mat::to_base: entries not in GF(p)");
  FpMat r(f_->p(), n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = (*this)(i, j).a;
  return r;
}

IntMat IntMat::identity(int n) {
  IntMat m(n);
  for (int i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

namespace {
long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r))
    throw std::overflow_error("IntMat: integer overflow");
  return r;
}
long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r))
    throw std::overflow_error("IntMat: integer overflow");
  return r;
}
}  // namespace

IntMat IntMat::mul(const IntMat& o) const {
  IntMat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < n_; ++k) {
      long long aik = (*this)(i, k);
      if (!aik) continue;
      for (int j = 0; j < n_; ++j)
        r(i, j) = checked_add(r(i, j), checked_mul(aik, o(k, j)));
    }
  return r;
}

IntMat IntMat::pow(std::uint64_t e) const {
  IntMat r = identity(n_), b = *this;
  while (e) {
    if (e & 1) r = r.mul(b);
    b = b.mul(b);
    e >>= 1;
  }
  return r;
}

IntMat IntMat::scaled(long long s) const {
  IntMat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = checked_mul((*this)(i, j), s);
  return r;
}

IntMat IntMat::add(const IntMat& o) const {
  IntMat r(n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = checked_add((*this)(i, j), o(i, j));
  return r;
}

bool IntMat::is_zero() const {
  for (long long v : a_)
    if (v) return false;
  return true;
}

FpMat IntMat::reduce(std::uint32_t p) const {
  PrimeField f(p);
  FpMat r(p, n_);
  for (int i = 0; i < n_; ++i)
    for (int j = 0; j < n_; ++j) r(i, j) = f.reduce((*this)(i, j));
  return r;
}

__int128 IntMat::det() const {
  // Bareiss fraction-free elimination; divisions are exact.
  std::vector<__int128> a(a_.begin(), a_.end());
  auto at = [&](int i, int j) -> __int128& { return a[std::size_t(i) * n_ + j]; };
  __int128 prev = 1;
  int sign = 1;
  for (int k = 0; k < n_ - 1; ++k) {
    if (at(k, k) == 0) {
      int piv = -1;
      for (int r = k + 1; r < n_; ++r)
        if (at(r, k) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) return 0;
      for (int j = 0; j < n_; ++j) std::swap(at(k, j), at(piv, j));
      sign = -sign;
    }
    for (int i = k + 1; i < n_; ++i)
      for (int j = k + 1; j < n_; ++j)
        at(i, j) = (at(i, j) * at(k, k) - at(i, k) * at(k, j)) / prev;
    prev = at(k, k);
  }
  return sign * at(n_ - 1, n_ - 1);
}

std::vector<long long> IntMat::char_poly() const {
  // Faddeev-LeVerrier: M_0 = I, c_n = 1;
  // c_{n-k} = -tr(A M_{k-1}) / k, M_k = A M_{k-1} + c_{n-k} I.
  const int n = n_;
  std::vector<long long> c(n + 1, 0);
  c[n] = 1;
  IntMat M = identity(n);
  for (int k = 1; k <= n; ++k) {
    IntMat AM = mul(M);
    long long tr = 0;
    for (int i = 0; i < n; ++i) tr = checked_add(tr, AM(i, i));
    if (tr % k != 0) throw std::logic_error("char_poly: inexact division");
    c[n - k] = -tr / k;
    M = AM;
    for (int i = 0; i < n; ++i) M(i, i) = checked_add(M(i, i), c[n - k]);
  }
  return c;
}

std::string poly_to_string(const std::vector<long long>& coeffs) {
  std::string s;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    long long c = coeffs[i];
    if (c == 0) continue;
    if (!s.empty()) s += c > 0 ? " + " : " - ";
    else if (c < 0) s += "-";
    long long ab = c < 0 ? -c : c;
    if (ab != 1 || i == 0) s += std::to_string(ab);
    if (i > 0) {
      s += "x";
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s.empty() ? "0" : s;
}

}  // namespace polyfield
