#ifndef POLYFIELD_COXETER_HPP
#define POLYFIELD_COXETER_HPP

#include <optional>
#include <string>
#include <vector>

#include "polyfield/matrix.hpp"

namespace polyfield {

/// Branch mark: one of 2, 3, 4, 6 or infinity (stored as kInfinity).
constexpr int kInfinity = 0;

struct Branch {
  int i = 0;
  int j = 0;
  int mark = 3;  // in {2,3,4,6,kInfinity}
};

/// A Coxeter diagram with crystallographic node labels (the b_i^2 values).
struct CoxeterDiagram {
  std::vector<long long> node_labels;
  std::vector<Branch> branches;

  int rank() const { return static_cast<int>(node_labels.size()); }
  bool is_string() const;
  /// Branch mark between adjacent nodes i-1, i of a string diagram (2 if absent).
  int string_mark(int i) const;
  std::vector<int> string_marks() const;  // marks p_1..p_{n-1}
  std::string to_string() const;

  /// Sub-diagram on the nodes not in J (labels kept, branches re-indexed;
  /// branches touching J are dropped).
  CoxeterDiagram without(const std::vector<int>& J) const;

  std::optional<IntMat> gram2_override;  // explicit 2B, bypasses branch rules
};

/// Parse "[4,3,4,3]", "[3^2,inf^3]", "[inf,3,inf]" into an all-labels-1 /
/// shorthand-labeled string diagram. Labels follow the documented
/// left-to-right rule: start at 1, double across mark 4, triple across 6,
/// keep across 3 and infinity.
CoxeterDiagram parse_shorthand(const std::string& s);

CoxeterDiagram diagram_from_json(const std::string& text);
std::string diagram_to_json(const CoxeterDiagram& d);

/// Exact rational with power-of-two denominator (all Gram data is
/// half-integral), stored reduced with den > 0.
struct Rat {
  long long num = 0;
  long long den = 1;
  bool operator==(const Rat&) const = default;
};
Rat make_rat(long long num, long long den);
std::string to_string(const Rat& r);
SquareClass square_class_mod(const Rat& r, std::uint32_t p);

/// Basic system: exact doubled Gram matrix 2B plus the Cartan integer matrix.
struct BasicSystem {
  CoxeterDiagram diagram;
  IntMat gram2;   // 2B, symmetric, diagonal 2*labels
  IntMat cartan;  // a_ij = 2(b_i . b_j)/b_i^2
  std::vector<long long> radical_vector;  // Table 1 metadata (empty if none)
};

/// Build the Gram/Cartan data for a diagram. Throws std::invalid_argument
/// for a non-crystallographic branch (naming it).
BasicSystem build_basic_system(const CoxeterDiagram& d);

/// det(B) via the string recursion det(B) = b_0^2 det(B_0) - (b_0.b_1)^2 det(B_{0,1}).
Rat det_recursion(const BasicSystem& s);
/// det(B) directly, fraction-free (oracle for det_recursion).
Rat det_direct(const BasicSystem& s);

/// d_n of the [inf^{n-1}] discriminant: closed form by n mod 6.
int d_n(long long n);

/// Discriminant e_{k,l,m} of [3^k, inf^l, 3^m]; requires l >= 1, k+l+m >= 1.
Rat e_klm(int k, int l, int m);

struct InftyDiscs {
  Rat disc_v;        // (k-2)/2^{k+1}
  Rat disc_v0;       // -k/2^{k+1}  ( = disc(V_{n-1}) )
  Rat disc_v0n1;     // (k+2)/2^{k+1}
};
/// The three discriminants of [inf, 3^k, inf].
InftyDiscs disc_infty_3k_infty(int k);

/// Integer reflection matrices R_j : b_k -> b_k - a_{jk} b_j.
std::vector<IntMat> reflection_matrices(const BasicSystem& s);

/// p >= 5, or p = 3 with no branch marked 6.
bool is_generic(const CoxeterDiagram& d, std::uint32_t p);

/// Named diagram presets: "[inf]", "[3,6]", "[6,3]-133", "[6,3]-331",
/// "[3,3,4,3]", "[4,3,4,3]", "rank6-G", "rank6-H", "rank6-K",
/// "[4,3^{m-2},4]" via e.g. "[4,4]", "[4,3,4]", "[4,3,3,4]", ...,
/// and the 3-infinity builder via shorthand "[3^k,inf^l,3^m]".
BasicSystem preset(const std::string& name);

/// Diagram for [3^k, inf^l, 3^m] with all labels 1.
CoxeterDiagram three_infinity_diagram(int k, int l, int m);

}  // namespace polyfield

#endif
