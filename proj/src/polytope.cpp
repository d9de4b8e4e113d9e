#include "polyfield/polytope.hpp"

#include <sstream>
#include <stdexcept>

#include "polyfield/field.hpp"

namespace polyfield {
namespace {

FpMat word_matrix(const std::vector<FpMat>& gens, const std::vector<int>& word) {
  if (gens.empty()) throw std::invalid_argument("word_matrix: no generators");
  FpMat m = FpMat::identity(gens[0].p(), gens[0].dim());
  for (int idx : word) m = m.mul(gens.at(static_cast<std::size_t>(idx)));
  return m;
}

IntMat int_word_matrix(const std::vector<IntMat>& gens,
                       const std::vector<int>& word) {
  if (gens.empty()) throw std::invalid_argument("int_word_matrix: no generators");
  IntMat m = IntMat::identity(gens[0].dim());
  for (int idx : word) m = m.mul(gens.at(static_cast<std::size_t>(idx)));
  return m;
}

std::string mark_string(int mark) {
  return mark == kInfinity ? std::string("inf") : std::to_string(mark);
}

/// Identification string for a facet / vertex-figure section: the modular
/// toroid name when the section's form is singular of radical dimension 1,
/// otherwise the primary classification of its own reduction mod p.
std::string section_id(const CoxeterDiagram& d, std::uint32_t p,
                       std::uint64_t /*cap*/) {
  if (d.rank() == 0) return "point";
  BasicSystem sub = build_basic_system(d);
  ModularSpace space = ModularSpace::from_basic_system(sub, p);
  if (space.radical_dim() == 1) return toroid_type(sub, p).name();
  if (space.singular())
    return "Singular(rad=" + std::to_string(space.radical_dim()) + ")";
  MatGroup g = build_group(sub, p);
  return classify(g, space, d).primary();
}

}  // namespace

PolytopeSummary summarize(const BasicSystem& s, std::uint32_t p,
                          std::uint64_t cap) {
  CGroupVerdict verdict = is_string_cgroup(s, p, cap);
  if (!verdict.is_cgroup)
    throw std::runtime_error("summarize: not a string C-group: " +
                             verdict.witness);

  const int n = s.diagram.rank();
  PolytopeSummary out;
  out.rank = n;

  std::vector<FpMat> gens = reduced_generators(s, p);
  MatGroup g = build_group(s, p);
  out.flag_count = g.order();

  for (int i = 1; i < n; ++i)
    out.schlafli.push_back(element_order(gens[i - 1].mul(gens[i])));

  for (int i = 0; i < n; ++i) {
    std::vector<FpMat> rest;
    for (int j = 0; j < n; ++j)
      if (j != i) rest.push_back(gens[j]);
    MatGroup gi(p, g.dim(), rest);
    out.f_vector.push_back(g.order() / gi.order());
  }

  out.petrie_order = petrie(s, p).order;
  if (n >= 2) {
    out.facet_id = section_id(s.diagram.without({n - 1}), p, cap);
    out.vertex_figure_id = section_id(s.diagram.without({0}), p, cap);
  }
  return out;
}

std::string ToroidType::name() const {
  std::ostringstream os;
  os << base << "_(";
  for (std::size_t i = 0; i < vec.size(); ++i)
    os << (i ? "," : "") << vec[i];
  os << ")";
  return os.str();
}

ToroidType toroid_type(const BasicSystem& s, std::uint32_t p) {
  ModularSpace space = ModularSpace::from_basic_system(s, p);
  if (space.radical_dim() != 1)
    throw std::invalid_argument("toroid_type: radical dimension is not 1");
  const int n = s.diagram.rank();
  const int m = n - 1;

  ToroidType out;
  std::ostringstream base;
  base << "{";
  std::vector<int> marks = s.diagram.string_marks();
  for (std::size_t i = 0; i < marks.size(); ++i)
    base << (i ? "," : "") << mark_string(marks[i]);
  base << "}";
  out.base = base.str();
  out.vec.assign(static_cast<std::size_t>(m), 0);
  if (m > 0) out.vec[0] = p;

  // The translation subgroup is exactly the set of ideal transvections
  // t_a : x -> x - (x.a) c; the maps t_{e_i} generate it.
  const std::vector<std::uint32_t>& c = space.radical()[0];
  std::vector<FpMat> tgens;
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
    e[static_cast<std::size_t>(i)] = 1;
    FpMat t = transvection_matrix(space, e, c);
    if (!t.is_identity()) tgens.push_back(t);
  }
  MatGroup tgroup(p, n, tgens);
  out.translation_order = tgroup.order();

  std::uint64_t expect = 1;
  for (int i = 0; i < m; ++i) expect *= p;
  if (out.translation_order != expect)
    throw std::runtime_error("toroid_type: translation subgroup has order " +
                             std::to_string(out.translation_order) +
                             ", expected p^" + std::to_string(m));

  MatGroup e_group = build_group(s, p);
  MatGroup e0 = standard_subgroup(s, p, 1, n - 1);
  out.vertex_count = e_group.order() / e0.order();
  return out;
}

PetrieData petrie(const BasicSystem& s, std::uint32_t p) {
  std::vector<std::vector<int>> words;
  for (int i = 0; i < s.diagram.rank(); ++i) words.push_back({i});
  return petrie_of_words(s, p, words);
}

PetrieData petrie_of_words(const BasicSystem& s, std::uint32_t p,
                           const std::vector<std::vector<int>>& words) {
  std::vector<FpMat> gens = reduced_generators(s, p);
  std::vector<IntMat> lifts = reflection_matrices(s);

  FpMat prod = FpMat::identity(p, s.diagram.rank());
  IntMat lift = IntMat::identity(s.diagram.rank());
  for (const auto& w : words) {
    prod = prod.mul(word_matrix(gens, w));
    lift = lift.mul(int_word_matrix(lifts, w));
  }

  PetrieData out;
  out.order = element_order(prod);
  out.char_poly = lift.char_poly();
  out.lift = lift;
  return out;
}

std::vector<std::vector<int>> h_generator_words() {
  return {{1}, {0}, {2, 1, 2}, {3}, {4}, {5}};
}

std::vector<std::vector<int>> k_generator_words() {
  return {{2}, {1}, {0}, {3, 2, 1, 2, 3}, {4}, {5}};
}

DualityWitness duality_check_H(std::uint32_t p) {
  DualityWitness out;
  BasicSystem g_sys = preset("rank6-G");
  std::vector<FpMat> r = reduced_generators(g_sys, p);
  std::vector<std::vector<int>> hw = h_generator_words();
  std::vector<FpMat> s;
  for (const auto& w : hw) s.push_back(word_matrix(r, w));

  // Roots of the H system inside the ambient basis b_0..b_5.
  const int n = 6;
  FpMat c(p, n);
  auto set_col = [&](int j, std::initializer_list<int> basis) {
    for (int i : basis) c(i, j) = 1;
  };
  set_col(0, {1});
  set_col(1, {0});
  set_col(2, {1, 2});
  set_col(3, {3});
  set_col(4, {4});
  set_col(5, {5});

  // w: c_i -> alpha_i c_{5-i}, alpha_i = 1/sqrt(2) for i <= 2, sqrt(2) for
  // i >= 3; over GF(p) when 2 is a residue, GF(p^2) otherwise.
  QuadExtField f(p);
  Fp2 s2 = sqrt_mod(2 % p, f);
  out.needs_extension = !f.is_base(s2);
  Fp2 inv_s2 = f.inv(s2);

  Fp2Mat a(&f, n);
  for (int i = 0; i < n; ++i) a(5 - i, i) = (i <= 2) ? inv_s2 : s2;

  Fp2Mat c2 = Fp2Mat::embed(&f, c);
  Fp2Mat w = c2.mul(a).mul(c2.inverse());

  std::ostringstream detail;
  bool ok = true;
  if (!w.mul(w).is_identity()) {
    ok = false;
    detail << "w^2 != e; ";
  }
  for (int j = 0; j < n; ++j) {
    Fp2Mat lhs = w.mul(Fp2Mat::embed(&f, s[static_cast<std::size_t>(j)])).mul(w);
    if (!(lhs == Fp2Mat::embed(&f, s[static_cast<std::size_t>(5 - j)]))) {
      ok = false;
      detail << "w s_" << j << " w != s_" << (5 - j) << "; ";
    }
  }
  out.ok = ok;
  out.detail = ok ? (out.needs_extension ? "w over GF(p^2)" : "w over GF(p)")
                  : detail.str();
  return out;
}

QuotientCheck quotient_cover_check_rank5(std::uint32_t p, std::uint64_t cap) {
  QuotientCheck out;
  BasicSystem s = preset("[4,3,4,3]");
  const int n = s.diagram.rank();
  MatGroup g = build_group(s, p);

  FpMat neg_e = FpMat::identity(p, n).negated();
  if (!g.contains(neg_e)) {
    out.ok = true;
    out.vacuous = true;
    out.note = "-e not in the group; the condition holds vacuously";
    return out;
  }

  // -e = t h with t in G_4, h in G_0  <=>  some h in G_0 has -h^{-1} in G_4.
  MatGroup g0 = standard_subgroup(s, p, 1, n - 1);
  MatGroup g4 = standard_subgroup(s, p, 0, n - 2);
  if (g0.order() > cap)
    throw CapacityError("quotient_cover_check_rank5: |G_0| exceeds cap");
  bool clean = g0.for_each_element([&](const FpMat& h) {
    return !g4.contains(h.inverse().negated());
  });
  out.ok = clean;
  out.note = clean ? "{+-e} meet G_4 G_0 = {e}"
                   : "-e factors as t h with t in G_4, h in G_0";
  return out;
}

}  // namespace polyfield
