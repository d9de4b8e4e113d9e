#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "polyfield/cgroup.hpp"
#include "polyfield/coxeter.hpp"
#include "polyfield/polytope.hpp"

using namespace polyfield;

namespace {

BasicSystem sys(const char* shorthand) {
  return build_basic_system(parse_shorthand(shorthand));
}

}  // namespace

TEST_CASE("tetrahedron summary mod 5") {
  PolytopeSummary s = summarize(sys("[3,3]"), 5);
  CHECK(s.rank == 3);
  CHECK(s.schlafli == std::vector<std::uint64_t>{3, 3});
  CHECK(s.f_vector == std::vector<std::uint64_t>{4, 6, 4});
  CHECK(s.flag_count == 24);
  CHECK(s.petrie_order == 4);
  // section ids prefer the orthogonal tag when the orders coincide
  CHECK(s.facet_id == "O1(2,5,-1)");
  CHECK(s.vertex_figure_id == "O1(2,5,-1)");
}

TEST_CASE("rank-5 locally toroidal summary at p = 3") {
  PolytopeSummary s = summarize(sys("[4,3,4,3]"), 3);
  CHECK(s.rank == 5);
  CHECK(s.schlafli == std::vector<std::uint64_t>{4, 3, 4, 3});
  CHECK(s.flag_count == 103680);
  // f-vector entries divide the flag count
  for (std::uint64_t f : s.f_vector) CHECK(s.flag_count % f == 0);
  CHECK(s.facet_id == "{4,3,4}_(3,0,0)");
  // coincidence at p = 3: the F4 group is all of O(4,3,+1)
  CHECK(s.vertex_figure_id == "O(4,3,+1)");
}

TEST_CASE("summarize rejects non-C-groups") {
  CHECK_THROWS(summarize(sys("[inf,3,inf]"), 11));
}

TEST_CASE("toroid identification of Euclidean quotients") {
  {
    ToroidType t = toroid_type(preset("[4,3,4]"), 3);
    CHECK(t.name() == "{4,3,4}_(3,0,0)");
    CHECK(t.translation_order == 27);
    CHECK(t.vertex_count == 27);
  }
  {
    ToroidType t = toroid_type(preset("[3,3,4,3]"), 3);
    CHECK(t.name() == "{3,3,4,3}_(3,0,0,0)");
    CHECK(t.translation_order == 81);
    CHECK(t.vertex_count == 81);
  }
  {
    ToroidType t = toroid_type(preset("[4,3,4]"), 5);
    CHECK(t.translation_order == 125);
    CHECK(t.vertex_count == 125);
  }
}

TEST_CASE("Petrie elements of the rank-6 presets at p = 3") {
  {
    PetrieData h = petrie(preset("rank6-G"), 3);
    CHECK(h.order == 13);
    CHECK(h.char_poly == std::vector<long long>{1, 0, -1, -1, -1, 0, 1});
    // Cayley-Hamilton over Z for the lift
    int n = h.lift.dim();
    IntMat acc(n);
    for (int k = 0; k <= n; ++k)
      acc = acc.add(h.lift.pow(std::uint64_t(k)).scaled(h.char_poly[std::size_t(k)]));
    CHECK(acc.is_zero());
  }
  {
    PetrieData h1 = petrie_of_words(preset("rank6-G"), 3, k_generator_words());
    CHECK(h1.order == 26);
    {
      // h_2 from the other derived generator system: h_2^13 = -e
      PetrieData h2 = petrie_of_words(preset("rank6-G"), 3, h_generator_words());
      CHECK(h2.order == 26);
      FpMat m = h2.lift.reduce(3).pow(13);
      CHECK(m == FpMat::identity(3, 6).negated());
    }
    CHECK(h1.char_poly == std::vector<long long>{1, -1, -1, 0, -1, -1, 1});
    // the integer identity h1^13 = 60h1^5+48h1^4+24h1^3+42h1^2+15h1-34e
    IntMat rhs = h1.lift.pow(5).scaled(60)
                     .add(h1.lift.pow(4).scaled(48))
                     .add(h1.lift.pow(3).scaled(24))
                     .add(h1.lift.pow(2).scaled(42))
                     .add(h1.lift.scaled(15))
                     .add(IntMat::identity(6).scaled(-34));
    CHECK(h1.lift.pow(13) == rhs);
  }
}

TEST_CASE("Petrie words: plain petrie agrees with the identity word list") {
  BasicSystem s = sys("[4,3,4,3]");
  std::vector<std::vector<int>> words = {{0}, {1}, {2}, {3}, {4}};
  PetrieData a = petrie(s, 3);
  PetrieData b = petrie_of_words(s, 3, words);
  CHECK(a.order == b.order);
  CHECK(a.char_poly == b.char_poly);
}

TEST_CASE("duality of the H family across primes") {
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    DualityWitness w = duality_check_H(p);
    CHECK(w.ok);
    // the twist lives over GF(p^2) exactly when 2 is a non-residue
    CHECK(w.needs_extension == (legendre(2, p) == SquareClass::NonSquare));
  }
}

TEST_CASE("rank-5 quotient criterion") {
  {
    QuotientCheck q = quotient_cover_check_rank5(3);
    CHECK(q.ok);
    CHECK(!q.vacuous);
  }
  {
    QuotientCheck q = quotient_cover_check_rank5(5);
    CHECK(q.ok);
  }
}

TEST_CASE("generator word lists have full rank-6 shape") {
  CHECK(h_generator_words().size() == 6);
  CHECK(k_generator_words().size() == 6);
  for (const auto& w : h_generator_words()) CHECK(!w.empty());
}
