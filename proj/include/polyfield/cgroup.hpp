#ifndef POLYFIELD_CGROUP_HPP
#define POLYFIELD_CGROUP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "polyfield/coxeter.hpp"
#include "polyfield/group.hpp"
#include "polyfield/space.hpp"

namespace polyfield {

/// |O(n,p,eps)|: 2 p^{m^2} prod_{i=1}^m (p^{2i}-1) for n = 2m+1 (eps = 0);
/// 2 p^{m(m-1)} (p^m - eps) prod_{i=1}^{m-1} (p^{2i}-1) for n = 2m.
std::uint64_t orthogonal_order(int n, std::uint32_t p, int eps);

/// Orders attached to a space: the full orthogonal group of the quotient
/// weighted by p^{r(d-r)} when singular. For dim 1, |O| = 2 and |O1| is 2 or
/// 1 according as disc is a square or not.
std::uint64_t order_O(const ModularSpace& space);      // requires nonsingular
std::uint64_t order_O1(const ModularSpace& space);     // requires nonsingular
std::uint64_t order_hatO(const ModularSpace& space);   // any space
std::uint64_t order_hatO1(const ModularSpace& space);  // any space

/// Order of the finite (spherical) string Coxeter group with these marks,
/// in characteristic 0; nullopt if the group is infinite.
std::optional<std::uint64_t> spherical_order(const CoxeterDiagram& d);
std::optional<std::string> spherical_name(const CoxeterDiagram& d);

std::vector<FpMat> reduced_generators(const BasicSystem& s, std::uint32_t p);

/// G^p with the reduced Gram form attached.
MatGroup build_group(const BasicSystem& s, std::uint32_t p);

/// Subgroup generated by the reflections r_a,...,r_b (inclusive).
MatGroup standard_subgroup(const BasicSystem& s, std::uint32_t p, int a, int b);

struct GroupClassification {
  std::uint64_t order = 0;
  int dim = 0;
  std::uint32_t p = 0;
  int radical_dim = 0;
  int eps = 0;              // Witt type of the (quotient) form
  SquareClass disc = SquareClass::Zero;
  std::vector<std::string> tags;  // all matching names; multi-tag on overlap
  bool exceptional_overlap = false;  // order coincidences with spherical groups at p = 3
  std::string primary() const { return tags.empty() ? "Unidentified" : tags.front(); }
};

GroupClassification classify(const MatGroup& g, const ModularSpace& space,
                             const CoxeterDiagram& d);

struct CGroupVerdict {
  bool is_cgroup = false;
  // failure data: the node ranges of the two subgroups plus the orders
  std::uint64_t intersection_order = 0;
  std::uint64_t expected_order = 0;
  std::string witness;
};

/// Recursive intersection-property test: rank <= 2 is always a C-group;
/// otherwise both end subgroups must pass and G_0 meet G_{n-1} must equal
/// G_{0,n-1} (order comparison after an explicit intersection). Memoized.
CGroupVerdict is_string_cgroup(const BasicSystem& s, std::uint32_t p,
                               std::uint64_t cap = kDefaultEnumCap);

struct IntersectionProfile {
  std::uint64_t d_order = 0;       // |G_0 meet G_{n-1}|
  std::uint64_t middle_order = 0;  // |G_{0,n-1}|
  bool contains_middle = false;
  std::vector<std::string> matches;  // which reference orders D agrees with
  std::string singular_case;          // singularity pattern: "a", "b", "c", "other"
};

IntersectionProfile intersection_profile(const BasicSystem& s, std::uint32_t p,
                                         std::uint64_t cap = kDefaultEnumCap);

struct EuclideanSplitReport {
  bool ok = false;
  std::uint64_t group_order = 0;
  std::uint64_t point_order = 0;       // |H| = |G_0|
  std::uint64_t translation_count = 0; // elements trivial on V/rad
  int m = 0;                           // affine dimension
  std::string detail;
};

/// For a Table-1 Euclidean system: |E^p| = p^m |H^p|, radical vector fixed
/// by every generator, transvections in e_i directions lie in E^p, and the
/// count of elements acting trivially on V/rad is exactly p^m.
EuclideanSplitReport euclidean_split_check(const BasicSystem& s, std::uint32_t p,
                                           std::uint64_t cap = kDefaultEnumCap);

struct TransvectionReport {
  bool ok = false;
  std::uint64_t group_order = 0;
  std::uint64_t g0_order = 0;
  std::vector<std::uint32_t> c;  // radical vector, normalized x_0 = 1
  std::string detail;
};

/// Transvection-tower machinery for [3^k, inf^l] with V singular mod p: the ideal
/// transvections t_j(b_i) = b_i + delta_ij c all lie in G^p, t_1 arises as
/// (h^{-1} r_0)^q, the tower relation produces each t_{j+1}, and
/// |G^p| = p^{n-1} |G_0^p|.
TransvectionReport transvection_tower(const BasicSystem& s, std::uint32_t p,
                                      std::uint64_t cap = kDefaultEnumCap);

struct ReflectionBoundReport {
  bool singular = false;
  bool equality = false;
  std::uint64_t group_order = 0;
  std::uint64_t bound_order = 0;
  std::string bound_name;  // "O1(V)" or "HatO1(V)"
};

/// [3^k]^p versus O_1(V) (or HatO_1(V) when p | k+2).
ReflectionBoundReport reflection_bound_check(int k, std::uint32_t p,
                            std::uint64_t cap = kDefaultEnumCap);

/// The ideal transvection matrix t_a: x -> x - (x . a) c (c in the radical).
FpMat transvection_matrix(const ModularSpace& space,
                          const std::vector<std::uint32_t>& a,
                          const std::vector<std::uint32_t>& c);

}  // namespace polyfield

#endif
