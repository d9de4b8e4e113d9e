#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <string>
#include <vector>

#include "polyfield/coxeter.hpp"
#include "polyfield/matrix.hpp"

using namespace polyfield;

namespace {

std::string shorthand_of_marks(const std::vector<int>& marks) {
  std::string s = "[";
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (i) s += ",";
    s += marks[i] == kInfinity ? "inf" : std::to_string(marks[i]);
  }
  return s + "]";
}

}  // namespace

TEST_CASE("shorthand parsing: marks, powers, infinity") {
  CoxeterDiagram d = parse_shorthand("[4,3,4,3]");
  CHECK(d.rank() == 5);
  CHECK(d.is_string());
  CHECK(d.string_marks() == std::vector<int>{4, 3, 4, 3});

  CoxeterDiagram e = parse_shorthand("[3^2,inf^3]");
  CHECK(e.rank() == 6);
  CHECK(e.string_marks() == std::vector<int>{3, 3, kInfinity, kInfinity, kInfinity});

  CoxeterDiagram f = parse_shorthand("[inf,3,inf]");
  CHECK(f.string_marks() == std::vector<int>{kInfinity, 3, kInfinity});

  CHECK_THROWS(parse_shorthand("[4,x]"));
}

TEST_CASE("diagram JSON round-trip") {
  CoxeterDiagram d = parse_shorthand("[3,6]");
  CoxeterDiagram back = diagram_from_json(diagram_to_json(d));
  CHECK(back.node_labels == d.node_labels);
  CHECK(back.string_marks() == d.string_marks());
}

TEST_CASE("basic system of [4,3,4,3]: doubled Gram frozen values") {
  BasicSystem s = build_basic_system(parse_shorthand("[4,3,4,3]"));
  // node labels 1,2,2,4,4; frozen diagonal and superdiagonal of 2B.
  std::vector<long long> diag, super;
  for (int i = 0; i < 5; ++i) diag.push_back(s.gram2(i, i));
  for (int i = 0; i < 4; ++i) super.push_back(s.gram2(i, i + 1));
  CHECK(diag == std::vector<long long>{2, 4, 4, 8, 8});
  CHECK(super == std::vector<long long>{-2, -2, -4, -4});
  // Cartan integrality: a_ij = 2(b_i.b_j)/b_i^2 integral by construction,
  // and gram2(i,j) = cartan(i,j) * label_i.
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      CHECK(s.gram2(i, j) == s.cartan(i, j) * s.gram2(i, i) / 2);
}

TEST_CASE("non-crystallographic marks are rejected") {
  CHECK_THROWS_AS(build_basic_system(parse_shorthand("[5,3]")),
                  std::invalid_argument);
}

TEST_CASE("reflection matrices are involutions preserving the form") {
  for (const char* name : {"[4,3,4,3]", "[3,3,4,3]", "[3,6]", "[inf,3,inf]"}) {
    BasicSystem s = build_basic_system(parse_shorthand(name));
    int n = s.gram2.dim();
    for (const IntMat& r : reflection_matrices(s)) {
      CHECK(r.mul(r) == IntMat::identity(n));
      // r^T (2B) r = 2B
      IntMat rt(n);
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) rt(i, j) = r(j, i);
      CHECK(rt.mul(s.gram2).mul(r) == s.gram2);
    }
  }
}

TEST_CASE("determinant recursion agrees with the direct expansion") {
  // fixed presets
  for (const char* name :
       {"[4,3,4,3]", "[3,3,4,3]", "[3,6]", "[4,4]", "[4,3,4]", "[inf]",
        "rank6-G", "rank6-H", "rank6-K"}) {
    BasicSystem s = preset(name);
    CHECK(det_recursion(s) == det_direct(s));
  }
  // random string diagrams, crystallographic marks only
  std::mt19937 rng(2024);
  const int mark_pool[4] = {3, 4, 6, kInfinity};
  std::uniform_int_distribution<int> pick(0, 3);
  std::uniform_int_distribution<int> len(1, 7);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<int> marks;
    int m = len(rng);
    for (int i = 0; i < m; ++i) marks.push_back(mark_pool[pick(rng)]);
    BasicSystem s = build_basic_system(parse_shorthand(shorthand_of_marks(marks)));
    CHECK(det_recursion(s) == det_direct(s));
  }
}

TEST_CASE("closed forms for the infinite-branch discriminants") {
  // d_n vs the direct determinant of the rank-n all-infinity string
  for (int n = 1; n <= 60; ++n) {
    Rat want = make_rat(d_n(n), 1);
    if (n == 1) {
      CHECK(d_n(1) == 1);
      continue;  // rank-1 diagram: det B = 1 trivially
    }
    BasicSystem s = build_basic_system(three_infinity_diagram(0, n - 1, 0));
    CHECK(det_recursion(s) == want);
  }
  // e_{k,l,m} vs [3^k, inf^l, 3^m] for all k+l+m <= 7, l >= 1
  for (int k = 0; k <= 7; ++k)
    for (int l = 1; k + l <= 7; ++l)
      for (int m = 0; k + l + m <= 7; ++m) {
        BasicSystem s = build_basic_system(three_infinity_diagram(k, l, m));
        CHECK(det_recursion(s) == e_klm(k, l, m));
      }
  // [3^{n-1}] discriminant (n+1)/2^n for n <= 10
  for (int n = 1; n <= 10; ++n) {
    std::vector<int> marks(static_cast<std::size_t>(n - 1), 3);
    BasicSystem s = build_basic_system(parse_shorthand(shorthand_of_marks(marks)));
    long long den = 1;
    for (int i = 0; i < n; ++i) den *= 2;
    CHECK(det_recursion(s) == make_rat(n + 1, den));
  }
  // the three discriminants of [inf, 3^k, inf]
  for (int k = 1; k <= 5; ++k) {
    InftyDiscs ds = disc_infty_3k_infty(k);
    std::vector<int> marks;
    marks.push_back(kInfinity);
    for (int i = 0; i < k; ++i) marks.push_back(3);
    marks.push_back(kInfinity);
    CoxeterDiagram full = parse_shorthand(shorthand_of_marks(marks));
    CHECK(det_recursion(build_basic_system(full)) == ds.disc_v);
    CHECK(det_recursion(build_basic_system(full.without({full.rank() - 1}))) ==
          ds.disc_v0);
    CHECK(det_recursion(build_basic_system(
              full.without({0, full.rank() - 1}))) == ds.disc_v0n1);
  }
}

TEST_CASE("Euclidean presets have an exact radical vector") {
  for (const char* name : {"[3,6]", "[4,4]", "[4,3,4]", "[3,3,4,3]", "[inf]"}) {
    BasicSystem s = preset(name);
    REQUIRE(!s.radical_vector.empty());
    int n = s.gram2.dim();
    for (int i = 0; i < n; ++i) {
      long long acc = 0;
      for (int j = 0; j < n; ++j)
        acc += s.gram2(i, j) * s.radical_vector[std::size_t(j)];
      CHECK(acc == 0);
    }
    CHECK(det_direct(s) == make_rat(0, 1));
  }
}

TEST_CASE("genericity rule") {
  CHECK(is_generic(parse_shorthand("[3,6]"), 5));
  CHECK(!is_generic(parse_shorthand("[3,6]"), 3));
  CHECK(is_generic(parse_shorthand("[4,3,4,3]"), 3));
  CHECK(is_generic(parse_shorthand("[inf,3,inf]"), 3));
}

TEST_CASE("sub-diagram removal keeps labels aligned") {
  CoxeterDiagram d = parse_shorthand("[4,3,4,3]");
  CoxeterDiagram facet = d.without({4});
  CHECK(facet.string_marks() == std::vector<int>{4, 3, 4});
  CoxeterDiagram vf = d.without({0});
  CHECK(vf.string_marks() == std::vector<int>{3, 4, 3});
}
