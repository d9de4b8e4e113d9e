#ifndef POLYFIELD_POLYTOPE_HPP
#define POLYFIELD_POLYTOPE_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "polyfield/cgroup.hpp"

namespace polyfield {

struct PolytopeSummary {
  int rank = 0;
  std::vector<std::uint64_t> schlafli;   // periods of r_{i-1} r_i
  std::vector<std::uint64_t> f_vector;   // f_i = |G| / |G_i|
  std::uint64_t flag_count = 0;          // |G|
  std::uint64_t petrie_order = 0;
  std::string facet_id;
  std::string vertex_figure_id;
};

/// Full summary; requires the C-group verdict to pass (throws with the
/// witness otherwise).
PolytopeSummary summarize(const BasicSystem& s, std::uint32_t p,
                          std::uint64_t cap = kDefaultEnumCap);

struct ToroidType {
  std::string base;                    // e.g. "{4,3,4}"
  std::vector<std::uint32_t> vec;      // (p, 0, ..., 0)
  std::uint64_t translation_order = 0; // p^m
  std::uint64_t vertex_count = 0;      // |E^p| / |E_0^p|
  std::string name() const;            // "{4,3,4}_(3,0,0)"
};

/// Identify the modular toroid of a Euclidean system (radical dim 1 mod p).
ToroidType toroid_type(const BasicSystem& euclidean, std::uint32_t p);

struct PetrieData {
  std::uint64_t order = 0;                 // period of r_0 r_1 ... r_{n-1} mod p
  std::vector<long long> char_poly;        // of the characteristic-0 lift
  IntMat lift;                             // the characteristic-0 lift itself
};

PetrieData petrie(const BasicSystem& s, std::uint32_t p);
/// Petrie data of the product of an arbitrary word list of generators
/// (indices into the standard generators, applied left to right).
PetrieData petrie_of_words(const BasicSystem& s, std::uint32_t p,
                           const std::vector<std::vector<int>>& words);

struct DualityWitness {
  bool ok = false;
  bool needs_extension = false;  // w lives over GF(p^2)
  std::string detail;
};

/// Self-duality of the rank-6 H family: build the roots c_i from the
/// [3,4,3,3,3] basis, the isometry w: c_i -> alpha_i c_{5-i}, and verify
/// w^2 = e and w s_j w = s_{5-j}.
DualityWitness duality_check_H(std::uint32_t p);

struct QuotientCheck {
  bool ok = false;
  bool vacuous = false;  // -e not in G^p
  std::string note;
};

/// Rank-5 quotient criterion: {+-e} meet G_4^p G_0^p = {e}.
QuotientCheck quotient_cover_check_rank5(std::uint32_t p,
                                         std::uint64_t cap = kDefaultEnumCap);

/// The derived H-generator and K-generator word lists inside
/// [3,4,3,3,3], as index words into r_0..r_5.
std::vector<std::vector<int>> h_generator_words();
std::vector<std::vector<int>> k_generator_words();

}  // namespace polyfield

#endif
