#include "polyfield/space.hpp"

#include <numeric>
#include <stdexcept>

namespace polyfield {

namespace {

// Null space of a symmetric matrix over GF(p), deterministic smallest-index
// pivoting; returns a basis in reduced form.
std::vector<std::vector<std::uint32_t>> null_space(const FpMat& m) {
  const int n = m.dim();
  PrimeField f(m.p());
  FpMat a = m;
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < n && row < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    if (piv != row)
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(row, j));
    std::uint32_t s = f.inv(a(row, col));
    for (int j = 0; j < n; ++j) a(row, j) = f.mul(a(row, j), s);
    for (int r = 0; r < n; ++r) {
      if (r == row || a(r, col) == 0) continue;
      std::uint32_t mult = a(r, col);
      for (int j = 0; j < n; ++j)
        a(r, j) = f.sub(a(r, j), f.mul(mult, a(row, j)));
    }
    pivot_col.push_back(col);
    ++row;
  }
  std::vector<bool> is_pivot(std::size_t(n), false);
  for (int c : pivot_col) is_pivot[c] = true;
  std::vector<std::vector<std::uint32_t>> basis;
  for (int free = 0; free < n; ++free) {
    if (is_pivot[free]) continue;
    std::vector<std::uint32_t> v(std::size_t(n), 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r)
      v[pivot_col[r]] = f.neg(a(int(r), free));
    basis.push_back(std::move(v));
  }
  return basis;
}

__int128 det_mod_free(const FpMat& m) {
  // determinant over GF(p) by elimination
  PrimeField f(m.p());
  FpMat a = m;
  const int n = m.dim();
  std::uint32_t det = 1;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) return 0;
    if (piv != col) {
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(col, j));
      det = f.neg(det);
    }
    det = f.mul(det, a(col, col));
    std::uint32_t s = f.inv(a(col, col));
    for (int r = col + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      std::uint32_t mult = f.mul(a(r, col), s);
      for (int j = col; j < n; ++j)
        a(r, j) = f.sub(a(r, j), f.mul(mult, a(col, j)));
    }
  }
  return det;
}

}  // namespace

ModularSpace::ModularSpace(std::uint32_t p, FpMat gram) : gram_(std::move(gram)) {
  PrimeField f(p);
  for (int i = 0; i < gram_.dim(); ++i)
    for (int j = 0; j < i; ++j)
      if (gram_(i, j) != gram_(j, i))
        throw std::invalid_argument("ModularSpace: gram not symmetric");
  radical_ = null_space(gram_);
  std::uint32_t det = static_cast<std::uint32_t>(det_mod_free(gram_));
  disc_ = f.square_class(det);
}

ModularSpace ModularSpace::from_basic_system(const BasicSystem& s,
                                             std::uint32_t p) {
  PrimeField f(p);
  int n = s.gram2.dim();
  FpMat g(p, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g(i, j) = f.mul(f.reduce(s.gram2(i, j)), f.half());
  return ModularSpace(p, std::move(g));
}

int ModularSpace::witt_epsilon() const {
  if (singular())
    throw std::domain_error(
        "witt_epsilon: singular space; use quotient_form first");
  int n = dim();
  if (n % 2 == 1) return 0;
  int m = n / 2;
  PrimeField f(p());
  // epsilon = +1 iff (-1)^m * disc is a square
  SquareClass sign = (m % 2 == 0) ? SquareClass::Square
                                  : f.square_class(f.neg(1));
  return (sign * disc_) == SquareClass::Square ? +1 : -1;
}

std::uint32_t ModularSpace::dot(const std::vector<std::uint32_t>& x,
                                const std::vector<std::uint32_t>& y) const {
  PrimeField f(p());
  std::uint64_t acc = 0;
  for (int i = 0; i < dim(); ++i) {
    if (!x[i]) continue;
    std::uint64_t row = 0;
    for (int j = 0; j < dim(); ++j)
      row += std::uint64_t(gram_(i, j)) * y[j] % p();
    acc += std::uint64_t(x[i]) * (row % p()) % p();
  }
  return static_cast<std::uint32_t>(acc % p());
}

ModularSpace ModularSpace::subspace(const std::vector<int>& J) const {
  std::vector<int> keep;
  for (int i = 0; i < dim(); ++i)
    if (std::find(J.begin(), J.end(), i) == J.end()) keep.push_back(i);
  FpMat g(p(), static_cast<int>(keep.size()));
  for (std::size_t a = 0; a < keep.size(); ++a)
    for (std::size_t b = 0; b < keep.size(); ++b)
      g(int(a), int(b)) = gram_(keep[a], keep[b]);
  return ModularSpace(p(), std::move(g));
}

ModularSpace ModularSpace::quotient_form(std::vector<int>* kept) const {
  // Kept indices: a maximal set of basis vectors whose gram rows are
  // independent (smallest indices first); their images form a basis of V/rad
  // and the induced form is the corresponding gram submatrix.
  PrimeField f(p());
  const int n = dim();
  FpMat a = gram_;
  std::vector<int> keep;
  int row = 0;
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = row; r < n; ++r)
      if (a(r, col) != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    // column ops mirror row choice on the symmetric matrix; we only need
    // which columns of gram are independent, so eliminate on columns
    if (piv != row)
      for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(row, j));
    std::uint32_t s = f.inv(a(row, col));
    for (int r = row + 1; r < n; ++r) {
      if (a(r, col) == 0) continue;
      std::uint32_t mult = f.mul(a(r, col), s);
      for (int j = 0; j < n; ++j)
        a(r, j) = f.sub(a(r, j), f.mul(mult, a(row, j)));
    }
    keep.push_back(col);
    ++row;
  }
  if (kept) *kept = keep;
  FpMat g(p(), static_cast<int>(keep.size()));
  for (std::size_t i = 0; i < keep.size(); ++i)
    for (std::size_t j = 0; j < keep.size(); ++j)
      g(int(i), int(j)) = gram_(keep[i], keep[j]);
  return ModularSpace(p(), std::move(g));
}

bool ModularSpace::preserves_form(const FpMat& g) const {
  return g.transpose().mul(gram_).mul(g) == gram_;
}

FpMat embed_isometry(const ModularSpace& ambient,
                     const std::vector<std::vector<std::uint32_t>>& w_basis,
                     const FpMat& g) {
  const int n = ambient.dim();
  const int k = static_cast<int>(w_basis.size());
  if (g.dim() != k)
    throw std::invalid_argument("embed_isometry: dimension mismatch");
  // W must be nonsingular
  FpMat gw(ambient.p(), k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) gw(i, j) = ambient.dot(w_basis[i], w_basis[j]);
  if (!ModularSpace(ambient.p(), gw).radical().empty())
    throw std::invalid_argument("embed_isometry: W is singular");
  // W-perp = null space of (rows w_i . gram)
  PrimeField f(ambient.p());
  FpMat rows(ambient.p(), n);  // first k rows: w_i^T gram; rest identity-free
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < n; ++j) {
      std::uint64_t acc = 0;
      for (int l = 0; l < n; ++l)
        acc += std::uint64_t(w_basis[i][l]) * ambient.gram()(l, j) % ambient.p();
      rows(i, j) = static_cast<std::uint32_t>(acc % ambient.p());
    }
  // null space of the k x n system: pad to square with zero rows
  std::vector<std::vector<std::uint32_t>> perp;
  {
    FpMat sq(ambient.p(), n);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < n; ++j) sq(i, j) = rows(i, j);
    ModularSpace dummy(ambient.p(), FpMat(ambient.p(), 0));
    (void)dummy;
    // reuse elimination: kernel of sq (not symmetric; direct elimination)
    FpMat a = sq;
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < n; ++col) {
      int piv = -1;
      for (int r = row; r < n; ++r)
        if (a(r, col) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      if (piv != row)
        for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(row, j));
      std::uint32_t s = f.inv(a(row, col));
      for (int j = 0; j < n; ++j) a(row, j) = f.mul(a(row, j), s);
      for (int r = 0; r < n; ++r) {
        if (r == row || a(r, col) == 0) continue;
        std::uint32_t mult = a(r, col);
        for (int j = 0; j < n; ++j)
          a(r, j) = f.sub(a(r, j), f.mul(mult, a(row, j)));
      }
      pivot_col.push_back(col);
      ++row;
    }
    std::vector<bool> is_pivot(std::size_t(n), false);
    for (int c : pivot_col) is_pivot[c] = true;
    for (int free = 0; free < n; ++free) {
      if (is_pivot[free]) continue;
      std::vector<std::uint32_t> v(std::size_t(n), 0);
      v[free] = 1;
      for (std::size_t r = 0; r < pivot_col.size(); ++r)
        v[pivot_col[r]] = f.neg(a(int(r), free));
      perp.push_back(std::move(v));
    }
  }
  if (static_cast<int>(perp.size()) != n - k)
    throw std::logic_error("embed_isometry: unexpected perp dimension");
  // change of basis M = [w_basis | perp]; A = M diag(g, I) M^{-1}
  FpMat M(ambient.p(), n);
  for (int c = 0; c < k; ++c)
    for (int r = 0; r < n; ++r) M(r, c) = w_basis[c][r];
  for (int c = k; c < n; ++c)
    for (int r = 0; r < n; ++r) M(r, c) = perp[c - k][r];
  FpMat D = FpMat::identity(ambient.p(), n);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) D(i, j) = g(i, j);
  return M.mul(D).mul(M.inverse());
}

namespace {

// first nonzero isotropic vector in odometer order, or empty
std::vector<std::uint32_t> find_isotropic(const ModularSpace& sp) {
  const int n = sp.dim();
  const std::uint32_t p = sp.p();
  std::vector<std::uint32_t> v(std::size_t(n), 0);
  while (true) {
    int pos = n - 1;
    while (pos >= 0 && v[pos] == p - 1) v[pos--] = 0;
    if (pos < 0) return {};
    ++v[pos];
    if (sp.norm(v) == 0) return v;
  }
}

}  // namespace

int witt_index_bruteforce(const ModularSpace& space) {
  // Split off hyperbolic planes one at a time: find an isotropic v by
  // exhaustive search, pair it with any w not orthogonal to it, restrict
  // the form to the orthogonal complement of <v, w>, repeat.
  if (space.singular())
    throw std::domain_error("witt_index_bruteforce: nonsingular space required");
  ModularSpace sp = space;
  int idx = 0;
  while (sp.dim() > 0) {
    std::vector<std::uint32_t> v = find_isotropic(sp);
    if (v.empty()) break;
    const int n = sp.dim();
    PrimeField f(sp.p());
    std::vector<std::uint32_t> w;
    for (int i = 0; i < n; ++i) {
      std::vector<std::uint32_t> e(std::size_t(n), 0);
      e[i] = 1;
      if (sp.dot(v, e) != 0) {
        w = e;
        break;
      }
    }
    // complement of <v, w>: null space of the 2 x n pairing rows
    FpMat rows(sp.p(), n);
    for (int j = 0; j < n; ++j) {
      std::vector<std::uint32_t> e(std::size_t(n), 0);
      e[j] = 1;
      rows(0, j) = sp.dot(v, e);
      rows(1, j) = sp.dot(w, e);
    }
    FpMat a = rows;
    std::vector<int> pivot_col;
    int row = 0;
    for (int col = 0; col < n && row < 2; ++col) {
      int piv = -1;
      for (int r = row; r < 2; ++r)
        if (a(r, col) != 0) {
          piv = r;
          break;
        }
      if (piv < 0) continue;
      if (piv != row)
        for (int j = 0; j < n; ++j) std::swap(a(piv, j), a(row, j));
      std::uint32_t s = f.inv(a(row, col));
      for (int j = 0; j < n; ++j) a(row, j) = f.mul(a(row, j), s);
      for (int r = 0; r < 2; ++r) {
        if (r == row || a(r, col) == 0) continue;
        std::uint32_t mult = a(r, col);
        for (int j = 0; j < n; ++j)
          a(r, j) = f.sub(a(r, j), f.mul(mult, a(row, j)));
      }
      pivot_col.push_back(col);
      ++row;
    }
    std::vector<bool> is_pivot(std::size_t(n), false);
    for (int c : pivot_col) is_pivot[c] = true;
    std::vector<std::vector<std::uint32_t>> comp;
    for (int free = 0; free < n; ++free) {
      if (is_pivot[free]) continue;
      std::vector<std::uint32_t> x(std::size_t(n), 0);
      x[free] = 1;
      for (std::size_t r = 0; r < pivot_col.size(); ++r)
        x[pivot_col[r]] = f.neg(a(int(r), free));
      comp.push_back(std::move(x));
    }
    FpMat g(sp.p(), static_cast<int>(comp.size()));
    for (std::size_t i = 0; i < comp.size(); ++i)
      for (std::size_t j2 = 0; j2 < comp.size(); ++j2)
        g(int(i), int(j2)) = sp.dot(comp[i], comp[j2]);
    sp = ModularSpace(sp.p(), std::move(g));
    ++idx;
  }
  return idx;
}

}  // namespace polyfield
