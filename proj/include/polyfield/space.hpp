#ifndef POLYFIELD_SPACE_HPP
#define POLYFIELD_SPACE_HPP

#include <vector>

#include "polyfield/coxeter.hpp"
#include "polyfield/matrix.hpp"

namespace polyfield {

/// Symmetric bilinear space over GF(p) with cached radical, discriminant
/// square-class and Witt type. Immutable after construction.
class ModularSpace {
 public:
  ModularSpace(std::uint32_t p, FpMat gram);

  /// Space of a basic system mod p: gram = (2B mod p) * (1/2).
  static ModularSpace from_basic_system(const BasicSystem& s, std::uint32_t p);

  std::uint32_t p() const { return gram_.p(); }
  int dim() const { return gram_.dim(); }
  const FpMat& gram() const { return gram_; }

  const std::vector<std::vector<std::uint32_t>>& radical() const {
    return radical_;
  }
  int radical_dim() const { return static_cast<int>(radical_.size()); }
  bool singular() const { return !radical_.empty(); }

  SquareClass disc() const { return disc_; }

  /// Witt type: +1/-1 for nonsingular even dimension, 0 for odd.
  /// Throws std::domain_error on a singular space.
  int witt_epsilon() const;

  /// Value x . y of the form.
  std::uint32_t dot(const std::vector<std::uint32_t>& x,
                    const std::vector<std::uint32_t>& y) const;
  std::uint32_t norm(const std::vector<std::uint32_t>& x) const {
    return dot(x, x);
  }

  /// Space on the sub-basis {b_j : j not in J} (Gram rows/cols deleted).
  ModularSpace subspace(const std::vector<int>& J) const;

  /// Nonsingular space on V/rad: the induced form on a deterministic choice
  /// of basis vectors independent of the radical. Also reports which
  /// original basis indices were kept.
  ModularSpace quotient_form(std::vector<int>* kept = nullptr) const;

  bool preserves_form(const FpMat& g) const;

 private:
  FpMat gram_;
  std::vector<std::vector<std::uint32_t>> radical_;
  SquareClass disc_ = SquareClass::Zero;
};

/// Extend an isometry g of the nonsingular subspace W (spanned by the given
/// ambient basis vectors, g expressed in that basis) to g perp identity on
/// W-perp, as a matrix on the ambient space. Throws if W is singular.
FpMat embed_isometry(const ModularSpace& ambient,
                     const std::vector<std::vector<std::uint32_t>>& w_basis,
                     const FpMat& g);

/// Brute-force Witt index: dimension of a maximal totally isotropic
/// subspace (small spaces only; oracle for the epsilon rule).
int witt_index_bruteforce(const ModularSpace& space);

}  // namespace polyfield

#endif
