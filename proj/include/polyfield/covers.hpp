#ifndef POLYFIELD_COVERS_HPP
#define POLYFIELD_COVERS_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

#include "polyfield/cgroup.hpp"
#include "polyfield/group.hpp"
#include "polyfield/polytope.hpp"

namespace polyfield {

/// Determinant over GF(p) by Gaussian elimination.
std::uint32_t fp_det(const FpMat& m);

/// Shared context for the two extension groups over the rank-6 group at
/// p = 3: the base group with its form, the twisting isometry w over
/// GF(3^2), and code-keyed caches for the characters
///   chi(g)   = theta(g) det(g)      and
///   chi_w(g) = theta(w g w) det(g)
/// (values +-1, recorded as 1 or 2 in Z_3).
class CoverContext {
 public:
  CoverContext();

  const BasicSystem& system() const { return sys_; }
  const MatGroup& base() const { return *base_; }
  const std::vector<FpMat>& r() const { return r_; }  // rho images r_0..r_5
  const ModularSpace& space() const { return *space_; }
  const QuadExtField& ext() const { return ext_; }

  /// chi as a sign in Z_3: 1 for +1, 2 for -1.
  std::uint32_t chi(const FpMat& g) const;
  std::uint32_t chi_w(const FpMat& g) const;

  /// Conjugate w g w (lands back in GF(3)).
  FpMat twist(const FpMat& g) const;

 private:
  BasicSystem sys_;
  std::unique_ptr<ModularSpace> space_;
  std::unique_ptr<MatGroup> base_;
  std::vector<FpMat> r_;
  QuadExtField ext_;
  Fp2Mat w_;
  mutable std::unordered_map<FpMat::Code, std::uint32_t, FpMatCodeHash> chi_cache_;
  mutable std::unordered_map<FpMat::Code, std::uint32_t, FpMatCodeHash> chiw_cache_;
};

/// Element of Lambda = Z_3 x| G: (y, g)(z, h) = (y + chi(g) z, g h).
struct LambdaElt {
  std::uint32_t y = 0;
  FpMat g;
  bool operator==(const LambdaElt&) const = default;
};

class LambdaGroup {
 public:
  explicit LambdaGroup(std::shared_ptr<CoverContext> ctx);

  const CoverContext& ctx() const { return *ctx_; }
  std::uint64_t order() const { return 3 * ctx_->base().order(); }

  LambdaElt identity() const;
  LambdaElt mul(const LambdaElt& a, const LambdaElt& b) const;
  LambdaElt inv(const LambdaElt& a) const;
  LambdaElt pow(LambdaElt a, std::uint64_t e) const;
  std::uint64_t period(const LambdaElt& a) const;
  bool is_identity(const LambdaElt& a) const;

  /// The distinguished generators rho_i = (delta_{i0}, r_i).
  const std::vector<LambdaElt>& rho() const { return rho_; }

 private:
  std::shared_ptr<CoverContext> ctx_;
  std::vector<LambdaElt> rho_;
};

/// Element of Sigma = (Z_3 + Z_3) x| H:
///   (y1,y2,g)(z1,z2,h) = (y1 + chi_w(g) z1, y2 + chi(g) z2, g h).
struct SigmaElt {
  std::uint32_t y1 = 0;
  std::uint32_t y2 = 0;
  FpMat g;
  bool operator==(const SigmaElt&) const = default;
};

class SigmaGroup {
 public:
  explicit SigmaGroup(std::shared_ptr<CoverContext> ctx);

  const CoverContext& ctx() const { return *ctx_; }
  std::uint64_t order() const { return 9 * ctx_->base().order(); }

  SigmaElt identity() const;
  SigmaElt mul(const SigmaElt& a, const SigmaElt& b) const;
  SigmaElt inv(const SigmaElt& a) const;
  SigmaElt pow(SigmaElt a, std::uint64_t e) const;
  std::uint64_t period(const SigmaElt& a) const;
  bool is_identity(const SigmaElt& a) const;

  /// sigma_i = (delta_{i4}, delta_{i1}, s_i), s_i the H-generator words.
  const std::vector<SigmaElt>& sigma() const { return sigma_; }
  const std::vector<FpMat>& s() const { return s_; }

  /// The flip delta(y1, y2, g) = (y2, y1, w g w).
  SigmaElt flip(const SigmaElt& a) const;

 private:
  std::shared_ptr<CoverContext> ctx_;
  std::vector<FpMat> s_;
  std::vector<SigmaElt> sigma_;
};

struct CoverCheck {
  bool ok = false;
  std::vector<std::string> lines;  // per-claim "name: pass/FAIL (detail)"
  std::string detail;
};

/// The rho_i satisfy the defining relations of the universal rank-6 group
/// (Coxeter relations of [3,4,3,3,3] plus the toroidal facet relation),
/// pi = rho_0 ... rho_5 has pi^13 = (1, e) and period 39, and the rho_i
/// generate all of Lambda (order 3 |G|).
CoverCheck verify_lambda(LambdaGroup& lambda);

/// The tau system: tau = (rho_2, rho_1, rho_0, rho_3 rho_2 rho_1 rho_2 rho_3,
/// rho_4, rho_5) satisfies the Coxeter relations of [4,3,3,4,3];
/// pi_1 = tau_0 ... tau_5 = (-1, h_1); pi_1^13 = (-1, -e);
/// (tau_1 pi_1^13)^2 = (-1, e); and the tau_i generate Lambda.
CoverCheck verify_tau(LambdaGroup& lambda);

/// Sigma: pi_2 = sigma_0 ... sigma_5 = (-1,-1,h_2) with h_2^13 = -e;
/// gamma_0 = sigma_0 pi_2^13 = (-1,1,-s_0), gamma_5 = sigma_5 pi_2^{-13} =
/// (1,-1,-s_5); gamma_0^2 = (0,-1,e), gamma_5^2 = (-1,0,e); the flip delta
/// is an involutory automorphism with delta(sigma_i) = sigma_{5-i};
/// the sigma_i generate Sigma (order 9 |G|).
CoverCheck verify_sigma(SigmaGroup& sigma);

struct CoverEdge {
  std::string from;
  std::string to;
  std::uint64_t index = 0;  // kernel size
};

struct CoverDiagramReport {
  bool ok = false;
  std::vector<std::string> lines;
  std::vector<CoverEdge> edges;  // the machine-readable cover graph
};

/// The two central quotients phi(y1,y2,g) = (y2,g) and
/// phi*(y1,y2,g) = (y1, w g w) from Sigma onto Lambda, each with kernel of
/// order 3, distinguished by the orders of the images of gamma_0^2 and
/// gamma_5^2 (3 versus 1), which rules out self-duality of the middle cover.
CoverDiagramReport covering_diagram(SigmaGroup& sigma, LambdaGroup& lambda);

struct CollapseReport {
  bool ok = false;
  std::uint64_t base_order = 0;
  std::uint64_t h_order = 0;
  std::uint64_t k_order = 0;
  std::string detail;
};

/// At p = 3 the H-generator words and K-generator words each generate the
/// whole rank-6 group (no proper subgroup collapse), with s_2 and t_3 the
/// expected involutions.
CollapseReport subgroup_collapse_check(std::uint32_t p = 3);

}  // namespace polyfield

#endif
