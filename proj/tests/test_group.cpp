#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <unordered_set>
#include <vector>

#include "polyfield/cgroup.hpp"
#include "polyfield/coxeter.hpp"
#include "polyfield/group.hpp"

using namespace polyfield;

namespace {

MatGroup group_of(const char* shorthand, std::uint32_t p) {
  return build_group(build_basic_system(parse_shorthand(shorthand)), p);
}

FpMat random_element(const MatGroup& g, std::mt19937& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, g.generators().size() - 1);
  FpMat m = FpMat::identity(g.p(), g.dim());
  for (int i = 0; i < 24; ++i) m = m.mul(g.generators()[pick(rng)]);
  return m;
}

}  // namespace

TEST_CASE("orders of small reflection groups") {
  CHECK(group_of("[3,3]", 5).order() == 24);    // S_4
  CHECK(group_of("[3,3,3]", 7).order() == 120); // S_5
  CHECK(group_of("[4,3]", 5).order() == 48);    // B_3
  CHECK(group_of("[3,4,3]", 5).order() == 1152);
  CHECK(group_of("[inf]", 7).order() == 14);    // dihedral of order 2p
  CHECK(group_of("[inf]", 11).order() == 22);
}

TEST_CASE("BSGS order is invariant under generator reordering and conjugation") {
  std::mt19937 rng(31337);
  for (const char* name : {"[3,4,3]", "[4,3,4]", "[3,3,4]"}) {
    BasicSystem s = build_basic_system(parse_shorthand(name));
    for (std::uint32_t p : {3u, 5u}) {
      MatGroup base = build_group(s, p);
      std::vector<FpMat> gens = base.generators();
      for (int trial = 0; trial < 5; ++trial) {
        std::shuffle(gens.begin(), gens.end(), rng);
        MatGroup shuffled(p, base.dim(), gens, base.form());
        CHECK(shuffled.order() == base.order());
      }
      // conjugation by a random group element preserves the order
      FpMat c = random_element(base, rng);
      std::vector<FpMat> conj;
      for (const FpMat& g : base.generators())
        conj.push_back(c.mul(g).mul(c.inverse()));
      MatGroup conj_group(p, base.dim(), conj, base.form());
      CHECK(conj_group.order() == base.order());
    }
  }
}

TEST_CASE("membership: positives from words, negatives by scaling") {
  std::mt19937 rng(808);
  MatGroup g = group_of("[3,3,4]", 5);
  for (int trial = 0; trial < 20; ++trial)
    CHECK(g.contains(random_element(g, rng)));
  // 2*identity is not an isometry of the form, so not in the group
  FpMat twice = FpMat::identity(5, g.dim());
  for (int i = 0; i < g.dim(); ++i) twice(i, i) = 2;
  CHECK(!g.contains(twice));
  // -identity in B_4 reduced mod 5 is the central symmetry
  CHECK(g.contains(FpMat::identity(5, g.dim()).negated()));
  // but not in the A_3 subgroup
  MatGroup a3 = group_of("[3,3]", 5);
  CHECK(!a3.contains(FpMat::identity(5, a3.dim()).negated()));
}

TEST_CASE("BFS enumeration count equals the BSGS order") {
  for (const char* name : {"[3,3]", "[3,4,3]", "[4,3,4,3]"}) {
    for (std::uint32_t p : {3u, 5u}) {
      MatGroup g = group_of(name, p);
      if (g.order() > 1000000) continue;
      std::vector<FpMat::Code> all = g.enumerate_bfs();
      CHECK(all.size() == g.order());
      std::unordered_set<std::uint64_t> seen;
      for (const FpMat::Code& c : all) seen.insert(c[0] ^ (c[1] * 0x9e3779b9u));
      CHECK(seen.size() == all.size());  // all distinct
    }
  }
}

TEST_CASE("for_each_element visits order() elements once") {
  MatGroup g = group_of("[3,4,3]", 5);
  std::unordered_set<std::uint64_t> seen;
  std::uint64_t count = 0;
  g.for_each_element([&](const FpMat& m) {
    FpMat::Code c = m.encode();
    seen.insert(c[0] ^ (c[1] * 0x9e3779b9u));
    ++count;
    return true;
  });
  CHECK(count == g.order());
  CHECK(seen.size() == g.order());
  // early stop
  count = 0;
  g.for_each_element([&](const FpMat&) { return ++count < 10; });
  CHECK(count == 10);
}

TEST_CASE("intersection oracle on nested subgroups") {
  BasicSystem s = build_basic_system(parse_shorthand("[3,3,4]"));
  MatGroup g = build_group(s, 5);
  MatGroup left = standard_subgroup(s, 5, 0, 2);   // [3,3] part
  MatGroup right = standard_subgroup(s, 5, 1, 3);  // [3,4] part
  MatGroup middle = standard_subgroup(s, 5, 1, 2);
  MatGroup inter = MatGroup::intersect(left, right);
  CHECK(inter.order() == middle.order());
  // intersection with the whole group is the subgroup itself
  CHECK(MatGroup::intersect(left, g).order() == left.order());
}

TEST_CASE("element orders and reflections") {
  BasicSystem s = build_basic_system(parse_shorthand("[4,3,4,3]"));
  MatGroup g = build_group(s, 3);
  const std::vector<FpMat>& r = g.generators();
  // periods of r_{i-1} r_i reproduce the marks
  CHECK(element_order(r[0].mul(r[1])) == 4);
  CHECK(element_order(r[1].mul(r[2])) == 3);
  CHECK(element_order(r[2].mul(r[3])) == 4);
  CHECK(element_order(r[3].mul(r[4])) == 3);
  // non-adjacent generators commute
  CHECK(r[0].mul(r[2]) == r[2].mul(r[0]));
  CHECK(element_order(r[0].mul(r[3])) == 2);

  ModularSpace sp = ModularSpace::from_basic_system(s, 5);
  std::vector<std::uint32_t> u = {1, 2, 0, 0, 1};
  if (sp.norm(u) != 0) {
    FpMat refl = reflection_in(sp, u);
    CHECK(refl.mul(refl).is_identity());
    CHECK(sp.preserves_form(refl));
    // u is sent to -u
    std::vector<std::uint32_t> img = refl.apply(u);
    PrimeField f(5);
    for (int i = 0; i < 5; ++i) CHECK(img[std::size_t(i)] == f.neg(u[std::size_t(i)]));
  }
}

TEST_CASE("spinor norm: reflections and multiplicativity") {
  std::mt19937 rng(55);
  for (const char* name : {"[3,4,3]", "[4,3,4,3]"}) {
    BasicSystem s = build_basic_system(parse_shorthand(name));
    for (std::uint32_t p : {3u, 5u, 7u}) {
      ModularSpace sp = ModularSpace::from_basic_system(s, p);
      if (sp.singular()) continue;
      MatGroup g = build_group(s, p);
      PrimeField f(p);
      // theta(r_b) = square class of b.b for the standard generators
      for (int i = 0; i < sp.dim(); ++i) {
        std::vector<std::uint32_t> b(std::size_t(sp.dim()), 0);
        b[std::size_t(i)] = 1;
        CHECK(g.spinor_norm(g.generators()[std::size_t(i)]) ==
              f.square_class(sp.norm(b)));
      }
      // multiplicative on random products
      for (int trial = 0; trial < 12; ++trial) {
        FpMat a = random_element(g, rng);
        FpMat b = random_element(g, rng);
        CHECK(g.spinor_norm(a.mul(b)) ==
              g.spinor_norm(a) * g.spinor_norm(b));
      }
      CHECK(g.spinor_norm(FpMat::identity(p, sp.dim())) == SquareClass::Square);
    }
  }
}

TEST_CASE("capacity errors are raised, not wrong answers") {
  MatGroup g = group_of("[3,4,3]", 5);  // order 1152
  CHECK_THROWS_AS(g.enumerate_bfs(100), CapacityError);
  BasicSystem s5 = build_basic_system(parse_shorthand("[4,3,4,3]"));
  MatGroup left = standard_subgroup(s5, 5, 0, 3);
  MatGroup right = standard_subgroup(s5, 5, 1, 4);
  CHECK_THROWS_AS(MatGroup::intersect(left, right, 10), CapacityError);
}
