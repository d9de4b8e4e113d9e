#ifndef POLYFIELD_GROUP_HPP
#define POLYFIELD_GROUP_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "polyfield/matrix.hpp"
#include "polyfield/space.hpp"

namespace polyfield {

/// Raised when a request exceeds the configured enumeration capacity;
/// never a wrong answer.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

constexpr std::uint64_t kDefaultEnumCap = 30'000'000;

/// Finite matrix group over GF(p) with a base and strong generating set.
/// Construction is single-threaded; afterwards the group is immutable and
/// queries are safe concurrently.
class MatGroup {
 public:
  MatGroup(std::uint32_t p, int dim, std::vector<FpMat> generators,
           std::optional<FpMat> form = std::nullopt);

  std::uint32_t p() const { return p_; }
  int dim() const { return dim_; }
  const std::vector<FpMat>& generators() const { return gens_; }
  const std::optional<FpMat>& form() const { return form_; }

  std::uint64_t order() const { return order_; }

  /// Membership by sifting through the stabilizer chain.
  bool contains(const FpMat& m) const;

  /// Visit every element exactly once via the stabilizer-chain transversals.
  /// The callback may return false to stop early; for_each_element returns
  /// false in that case.
  bool for_each_element(const std::function<bool(const FpMat&)>& fn) const;

  /// Breadth-first closure over the generators using the canonical packed
  /// encoding; the visit count equals order(). Throws CapacityError when the
  /// cap would be exceeded. Optional cache directory: results are identical
  /// with the cache disabled.
  std::vector<FpMat::Code> enumerate_bfs(std::uint64_t cap = kDefaultEnumCap,
                                         const std::string& cache_dir = "") const;

  /// {x in the smaller group : other contains x}. Throws CapacityError if
  /// both orders exceed cap.
  static MatGroup intersect(const MatGroup& a, const MatGroup& b,
                            std::uint64_t cap = kDefaultEnumCap);

  /// Spinor norm of a form-preserving element by constructive
  /// Cartan-Dieudonne factorization; theta(r_b) = square class of b.b.
  /// Requires an attached nonsingular form.
  SquareClass spinor_norm(const FpMat& g) const;

  /// A fingerprint of (p, dim, generators) for the enumeration cache.
  std::uint64_t generator_hash() const;

 private:
  struct Level {
    std::vector<std::uint32_t> base;              // base point (a vector)
    std::uint64_t base_code = 0;
    std::vector<FpMat> gens;                      // strong generators
    std::vector<FpMat> gen_invs;
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, int>> orbit;
    // Optional cache of transversal matrices (u, u^{-1}) per orbit point,
    // filled after construction for moderate orbit sizes; empty otherwise.
    std::unordered_map<std::uint64_t, std::pair<FpMat, FpMat>> trans;
    bool dirty = true;
  };

  std::uint64_t vec_code(const std::vector<std::uint32_t>& v) const;
  std::vector<std::uint32_t> vec_decode(std::uint64_t code) const;
  void recompute_orbit(Level& lv) const;
  // returns (residue, level index where stripping stopped)
  std::pair<FpMat, std::size_t> strip(FpMat g, std::size_t from) const;
  void add_residue(const FpMat& r, std::size_t from, std::size_t upto);
  void build();
  void finalize_transversals();
  bool enum_rec(std::size_t lv, const FpMat& prefix,
                const std::function<bool(const FpMat&)>& fn) const;

  std::uint32_t p_;
  int dim_;
  std::vector<FpMat> gens_;
  std::optional<FpMat> form_;
  std::vector<Level> levels_;
  std::uint64_t order_ = 1;
};

/// Least k >= 1 with m^k = identity (direct iteration; throws if the order
/// exceeds 10^6).
std::uint64_t element_order(const FpMat& m);

/// Reflection x -> x - (2 (x.u)/(u.u)) u in the given space (u anisotropic).
FpMat reflection_in(const ModularSpace& space, const std::vector<std::uint32_t>& u);

}  // namespace polyfield

#endif
