#include "polyfield/cgroup.hpp"

#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace polyfield {

namespace {

std::uint64_t checked(unsigned __int128 v) {
  if (v > UINT64_MAX) throw std::overflow_error("order overflows 64 bits");
  return static_cast<std::uint64_t>(v);
}

std::uint64_t upow(std::uint64_t b, int e) {
  unsigned __int128 r = 1;
  for (int i = 0; i < e; ++i) r = r * b;
  return checked(r);
}

std::string eps_str(int eps) {
  return eps > 0 ? "+1" : (eps < 0 ? "-1" : "0");
}

}  // namespace

std::uint64_t orthogonal_order(int n, std::uint32_t p, int eps) {
  if (n < 0) throw std::invalid_argument("negative dimension");
  if (n == 0) return 1;
  unsigned __int128 r;
  if (n % 2 == 1) {
    if (eps != 0) throw std::invalid_argument("odd dimension needs eps = 0");
    int m = n / 2;
    r = 2;
    r *= upow(p, m * m);
    for (int i = 1; i <= m; ++i) r *= upow(p, 2 * i) - 1;
  } else {
    if (eps != 1 && eps != -1)
      throw std::invalid_argument("even dimension needs eps = +-1");
    int m = n / 2;
    r = 2;
    r *= upow(p, m * (m - 1));
    r *= eps == 1 ? upow(p, m) - 1 : upow(p, m) + 1;
    for (int i = 1; i < m; ++i) r *= upow(p, 2 * i) - 1;
  }
  return checked(r);
}

std::uint64_t order_O(const ModularSpace& space) {
  if (space.singular()) throw std::domain_error("order_O: singular space");
  if (space.dim() == 0) return 1;
  int eps = space.dim() % 2 == 0 ? space.witt_epsilon() : 0;
  return orthogonal_order(space.dim(), space.p(), eps);
}

std::uint64_t order_O1(const ModularSpace& space) {
  if (space.singular()) throw std::domain_error("order_O1: singular space");
  if (space.dim() == 0) return 1;
  if (space.dim() == 1) return space.disc() == SquareClass::Square ? 2 : 1;
  return order_O(space) / 2;
}

std::uint64_t order_hatO(const ModularSpace& space) {
  int r = space.radical_dim(), d = space.dim();
  ModularSpace q = r == 0 ? space : space.quotient_form();
  return checked(static_cast<unsigned __int128>(upow(space.p(), r * (d - r))) *
                 order_O(q));
}

std::uint64_t order_hatO1(const ModularSpace& space) {
  int r = space.radical_dim(), d = space.dim();
  ModularSpace q = r == 0 ? space : space.quotient_form();
  return checked(static_cast<unsigned __int128>(upow(space.p(), r * (d - r))) *
                 order_O1(q));
}

namespace {

std::uint64_t factorial(int n) {
  unsigned __int128 r = 1;
  for (int i = 2; i <= n; ++i) r *= i;
  return checked(r);
}

// connected string component: marks m_1..m_{n-1}, none equal to 2
std::optional<std::pair<std::string, std::uint64_t>> component_type(
    const std::vector<int>& marks) {
  int n = static_cast<int>(marks.size()) + 1;
  for (int m : marks)
    if (m == kInfinity) return std::nullopt;
  if (n == 1) return std::make_pair(std::string("A1"), std::uint64_t(2));
  if (n == 2) {
    int q = marks[0];
    std::string name = q == 3 ? "A2" : q == 4 ? "B2" : "G2";
    return std::make_pair(name, std::uint64_t(2 * q));
  }
  bool all3 = true;
  for (int m : marks) all3 = all3 && m == 3;
  if (all3)
    return std::make_pair("A" + std::to_string(n), factorial(n + 1));
  if (n == 4 && marks[0] == 3 && marks[1] == 4 && marks[2] == 3)
    return std::make_pair(std::string("F4"), std::uint64_t(1152));
  // B_n: a single 4 at one end, all else 3
  auto is_b = [&](bool rev) {
    for (int i = 0; i < n - 1; ++i) {
      int m = marks[rev ? n - 2 - i : i];
      if ((i == 0 && m != 4) || (i > 0 && m != 3)) return false;
    }
    return true;
  };
  if (is_b(false) || is_b(true))
    return std::make_pair("B" + std::to_string(n),
                          checked(static_cast<unsigned __int128>(upow(2, n)) *
                                  factorial(n)));
  return std::nullopt;
}

}  // namespace

std::optional<std::uint64_t> spherical_order(const CoxeterDiagram& d) {
  if (!d.is_string()) return std::nullopt;
  auto marks = d.string_marks();
  unsigned __int128 total = 1;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= marks.size(); ++i) {
    if (i == marks.size() || marks[i] == 2) {
      auto t = component_type(
          std::vector<int>(marks.begin() + start, marks.begin() + i));
      if (!t) return std::nullopt;
      total *= t->second;
      start = i + 1;
    }
  }
  return checked(total);
}

std::optional<std::string> spherical_name(const CoxeterDiagram& d) {
  if (!d.is_string()) return std::nullopt;
  auto marks = d.string_marks();
  std::string name;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= marks.size(); ++i) {
    if (i == marks.size() || marks[i] == 2) {
      auto t = component_type(
          std::vector<int>(marks.begin() + start, marks.begin() + i));
      if (!t) return std::nullopt;
      if (!name.empty()) name += "x";
      name += t->first;
      start = i + 1;
    }
  }
  return name;
}

std::vector<FpMat> reduced_generators(const BasicSystem& s, std::uint32_t p) {
  std::vector<FpMat> gens;
  for (const auto& r : reflection_matrices(s)) gens.push_back(r.reduce(p));
  return gens;
}

MatGroup build_group(const BasicSystem& s, std::uint32_t p) {
  ModularSpace space = ModularSpace::from_basic_system(s, p);
  return MatGroup(p, s.gram2.dim(), reduced_generators(s, p), space.gram());
}

MatGroup standard_subgroup(const BasicSystem& s, std::uint32_t p, int a, int b) {
  ModularSpace space = ModularSpace::from_basic_system(s, p);
  auto all = reduced_generators(s, p);
  std::vector<FpMat> gens;
  for (int i = a; i <= b; ++i) gens.push_back(all[std::size_t(i)]);
  return MatGroup(p, s.gram2.dim(), gens, space.gram());
}

GroupClassification classify(const MatGroup& g, const ModularSpace& space,
                             const CoxeterDiagram& d) {
  GroupClassification c;
  c.order = g.order();
  c.dim = space.dim();
  c.p = space.p();
  c.radical_dim = space.radical_dim();
  c.disc = space.disc();
  ModularSpace q = space.singular() ? space.quotient_form() : space;
  c.eps = q.dim() == 0 ? 0 : (q.dim() % 2 == 0 ? q.witt_epsilon() : 0);

  std::string dims = "(" + std::to_string(c.dim) + "," + std::to_string(c.p) +
                     "," + eps_str(c.eps) + ")";
  if (!space.singular()) {
    if (c.order == order_O(space)) c.tags.push_back("O" + dims);
    if (c.order == order_O1(space)) c.tags.push_back("O1" + dims);
  } else {
    std::string hdims = "(" + std::to_string(c.dim) + "," + std::to_string(c.p) + ")";
    if (c.order == order_hatO(space)) c.tags.push_back("HatO" + hdims);
    if (c.order == order_hatO1(space)) c.tags.push_back("HatO1" + hdims);
  }
  if (auto so = spherical_order(d); so && *so == c.order)
    c.tags.push_back("Spherical(" + *spherical_name(d) + ")");
  bool connected = true;
  for (int m : d.string_marks()) connected = connected && m != 2;
  if (!connected) c.tags.push_back("Reducible");
  bool has_orth = false, has_sph = false;
  for (const auto& t : c.tags) {
    if (t.rfind("O", 0) == 0 || t.rfind("HatO", 0) == 0) has_orth = true;
    if (t.rfind("Spherical", 0) == 0) has_sph = true;
  }
  c.exceptional_overlap = c.p == 3 && has_orth && has_sph;
  return c;
}

namespace {

struct CGroupMemo {
  std::mutex mu;
  std::unordered_map<std::string, CGroupVerdict> map;
};

CGroupMemo& cgroup_memo() {
  static CGroupMemo m;
  return m;
}

struct CGroupCtx {
  const BasicSystem& s;
  std::uint32_t p;
  std::uint64_t cap;
  std::string diagram_key;
  std::map<std::pair<int, int>, MatGroup> groups;

  const MatGroup& range_group(int a, int b) {
    auto key = std::make_pair(a, b);
    auto it = groups.find(key);
    if (it == groups.end())
      it = groups.emplace(key, standard_subgroup(s, p, a, b)).first;
    return it->second;
  }

  CGroupVerdict check(int a, int b) {
    if (b - a + 1 <= 2) return {true, 0, 0, ""};
    std::string key = diagram_key + "#" + std::to_string(a) + "-" + std::to_string(b);
    {
      std::lock_guard<std::mutex> lk(cgroup_memo().mu);
      auto it = cgroup_memo().map.find(key);
      if (it != cgroup_memo().map.end()) return it->second;
    }
    CGroupVerdict v = check(a + 1, b);
    if (v.is_cgroup) v = check(a, b - 1);
    if (v.is_cgroup) {
      const MatGroup& left = range_group(a + 1, b);
      const MatGroup& right = range_group(a, b - 1);
      MatGroup d = MatGroup::intersect(left, right, cap);
      std::uint64_t expected =
          a + 1 > b - 1 ? 1 : range_group(a + 1, b - 1).order();
      v.intersection_order = d.order();
      v.expected_order = expected;
      if (d.order() != expected) {
        v.is_cgroup = false;
        std::ostringstream os;
        os << "|<r_" << a + 1 << "..r_" << b << "> meet <r_" << a << "..r_"
           << b - 1 << ">| = " << d.order() << " > " << expected
           << " = |<r_" << a + 1 << "..r_" << b - 1 << ">|";
        v.witness = os.str();
      }
    }
    {
      std::lock_guard<std::mutex> lk(cgroup_memo().mu);
      cgroup_memo().map.emplace(key, v);
    }
    return v;
  }
};

}  // namespace

CGroupVerdict is_string_cgroup(const BasicSystem& s, std::uint32_t p,
                               std::uint64_t cap) {
  if (!s.diagram.is_string()) throw std::invalid_argument("not a string diagram");
  CGroupCtx ctx{s, p, cap,
                diagram_to_json(s.diagram) + "@p=" + std::to_string(p), {}};
  return ctx.check(0, s.diagram.rank() - 1);
}

IntersectionProfile intersection_profile(const BasicSystem& s, std::uint32_t p,
                                         std::uint64_t cap) {
  int n = s.diagram.rank();
  if (n < 3) throw std::invalid_argument("rank must be at least 3");
  MatGroup g0 = standard_subgroup(s, p, 1, n - 1);
  MatGroup gn1 = standard_subgroup(s, p, 0, n - 2);
  MatGroup mid = standard_subgroup(s, p, 1, n - 2);
  MatGroup d = MatGroup::intersect(g0, gn1, cap);

  IntersectionProfile prof;
  prof.d_order = d.order();
  prof.middle_order = mid.order();
  prof.contains_middle = true;
  for (const auto& m : mid.generators())
    prof.contains_middle = prof.contains_middle && d.contains(m);
  if (prof.d_order == prof.middle_order) prof.matches.push_back("G_{0,n-1}");

  ModularSpace space = ModularSpace::from_basic_system(s, p);
  ModularSpace sub = space.subspace({0, n - 1});
  if (!sub.singular()) {
    if (prof.d_order == order_O(sub)) prof.matches.push_back("O(V_{0,n-1})");
    if (prof.d_order == order_O1(sub)) prof.matches.push_back("O1(V_{0,n-1})");
  } else {
    if (prof.d_order == order_hatO(sub)) prof.matches.push_back("HatO(V_{0,n-1})");
    if (prof.d_order == order_hatO1(sub)) prof.matches.push_back("HatO1(V_{0,n-1})");
  }

  bool sv = space.singular();
  bool s0 = space.subspace({0}).singular();
  bool sn1 = space.subspace({n - 1}).singular();
  bool s0n1 = sub.singular();
  if (!s0 && !sn1 && !s0n1)
    prof.singular_case = "a";
  else if (!sv && !s0 && !sn1 && s0n1)
    prof.singular_case = "b";
  else if (!sv && !s0n1 && (s0 || sn1))
    prof.singular_case = "c";
  else
    prof.singular_case = "other";
  return prof;
}

FpMat transvection_matrix(const ModularSpace& space,
                          const std::vector<std::uint32_t>& a,
                          const std::vector<std::uint32_t>& c) {
  PrimeField f(space.p());
  int n = space.dim();
  // c must be radical: c . e_i = 0 for all i
  for (int i = 0; i < n; ++i) {
    std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
    e[std::size_t(i)] = 1;
    if (space.dot(c, e) != 0)
      throw std::invalid_argument("transvection direction not in the radical");
  }
  FpMat t = FpMat::identity(space.p(), n);
  for (int j = 0; j < n; ++j) {
    std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
    e[std::size_t(j)] = 1;
    std::uint32_t coef = space.dot(e, a);
    for (int i = 0; i < n; ++i)
      t(i, j) = f.sub(t(i, j), f.mul(coef, c[std::size_t(i)]));
  }
  return t;
}

EuclideanSplitReport euclidean_split_check(const BasicSystem& s, std::uint32_t p,
                                           std::uint64_t cap) {
  EuclideanSplitReport rep;
  int n = s.diagram.rank();
  rep.m = n - 1;
  ModularSpace space = ModularSpace::from_basic_system(s, p);
  PrimeField f(p);

  std::ostringstream detail;
  bool ok = true;
  if (space.radical_dim() != 1) {
    detail << "radical dimension " << space.radical_dim() << " != 1; ";
    ok = false;
  }
  std::vector<std::uint32_t> c;
  if (!s.radical_vector.empty()) {
    for (long long x : s.radical_vector) c.push_back(f.reduce(x));
  } else if (space.radical_dim() == 1) {
    c = space.radical()[0];
  }
  if (c.empty()) {
    rep.detail = detail.str() + "no radical vector";
    return rep;
  }

  auto gens = reduced_generators(s, p);
  for (std::size_t i = 0; i < gens.size(); ++i)
    if (gens[i].apply(c) != c) {
      detail << "generator r_" << i << " moves c; ";
      ok = false;
    }

  MatGroup e = build_group(s, p);
  MatGroup h = standard_subgroup(s, p, 1, n - 1);
  rep.group_order = e.order();
  rep.point_order = h.order();
  std::uint64_t pm = 1;
  for (int i = 0; i < rep.m; ++i) pm *= p;
  if (rep.group_order != pm * rep.point_order) {
    detail << "|E| = " << rep.group_order << " != p^m |H| = "
           << pm * rep.point_order << "; ";
    ok = false;
  }

  for (int i = 0; i < n; ++i) {
    std::vector<std::uint32_t> a(static_cast<std::size_t>(n), 0);
    a[std::size_t(i)] = 1;
    FpMat t = transvection_matrix(space, a, c);
    if (!e.contains(t)) {
      detail << "transvection along e_" << i << " not in E; ";
      ok = false;
    }
  }

  if (e.order() <= cap) {
    // elements acting trivially on V/rad: every column of g - I lies in <c>
    std::uint64_t count = 0;
    int pivot = 0;
    while (c[std::size_t(pivot)] == 0) ++pivot;
    std::uint32_t cpinv = f.inv(c[std::size_t(pivot)]);
    e.for_each_element([&](const FpMat& g) {
      for (int j = 0; j < n; ++j) {
        std::uint32_t lambda =
            f.mul(f.sub(g(pivot, j), j == pivot ? 1 : 0), cpinv);
        for (int i = 0; i < n; ++i) {
          std::uint32_t want = f.add(i == j ? 1 : 0, f.mul(lambda, c[std::size_t(i)]));
          if (g(i, j) != want) return true;  // next element
        }
      }
      ++count;
      return true;
    });
    rep.translation_count = count;
    if (count != pm) {
      detail << "translation count " << count << " != p^m = " << pm << "; ";
      ok = false;
    }
  } else {
    detail << "translation count skipped (order above cap); ";
  }

  rep.ok = ok;
  rep.detail = detail.str();
  return rep;
}

TransvectionReport transvection_tower(const BasicSystem& s, std::uint32_t p,
                                      std::uint64_t cap) {
  TransvectionReport rep;
  int n = s.diagram.rank();
  ModularSpace space = ModularSpace::from_basic_system(s, p);
  PrimeField f(p);
  std::ostringstream detail;

  if (!space.singular()) throw std::domain_error("transvection_tower: V nonsingular");
  if (space.radical_dim() != 1) {
    rep.detail = "radical dimension != 1";
    return rep;
  }
  std::vector<std::uint32_t> c = space.radical()[0];
  if (c[0] == 0) {
    rep.detail = "radical vector has x_0 = 0";
    return rep;
  }
  std::uint32_t inv0 = f.inv(c[0]);
  for (auto& x : c) x = f.mul(x, inv0);  // normalize x_0 = 1
  rep.c = c;

  MatGroup g = build_group(s, p);
  MatGroup g0 = standard_subgroup(s, p, 1, n - 1);
  rep.group_order = g.order();
  rep.g0_order = g0.order();

  bool ok = true;
  // ideal transvections: t_j(b_i) = b_i + delta_ij c (i >= 1), t_j(b_0) = b_0 - x_j c
  std::vector<FpMat> t(static_cast<std::size_t>(n));
  t[0] = FpMat::identity(p, n);  // t_0 := e in the tower relation
  for (int j = 1; j < n; ++j) {
    FpMat m = FpMat::identity(p, n);
    for (int i = 0; i < n; ++i) {
      m(i, j) = f.add(m(i, j), c[std::size_t(i)]);
      m(i, 0) = f.sub(m(i, 0), f.mul(c[std::size_t(j)], c[std::size_t(i)]));
    }
    t[std::size_t(j)] = m;
    if (!space.preserves_form(m)) {
      detail << "t_" << j << " is not an isometry; ";
      ok = false;
    }
    if (m.apply(c) != c) {
      detail << "t_" << j << " moves c; ";
      ok = false;
    }
    if (!g.contains(m)) {
      detail << "t_" << j << " not in G^p; ";
      ok = false;
    }
  }

  // h in G_0^p matching the action of r_0 on V/rad, via V = <c> perp V_0
  auto gens = reduced_generators(s, p);
  const IntMat& cart = s.cartan;
  FpMat h = FpMat(p, n);
  // h(b_i) = b_i - a_{0i} * bt, bt := -(x_1 b_1 + ... + x_{n-1} b_{n-1})
  std::vector<std::uint32_t> bt(static_cast<std::size_t>(n), 0);
  for (int j = 1; j < n; ++j) bt[std::size_t(j)] = f.neg(c[std::size_t(j)]);
  std::vector<std::vector<std::uint32_t>> img(static_cast<std::size_t>(n));
  for (int i = 1; i < n; ++i) {
    std::vector<std::uint32_t> v(static_cast<std::size_t>(n), 0);
    v[std::size_t(i)] = 1;
    std::uint32_t a0i = f.reduce(cart(0, i));
    for (int row = 0; row < n; ++row)
      v[std::size_t(row)] = f.sub(v[std::size_t(row)], f.mul(a0i, bt[std::size_t(row)]));
    img[std::size_t(i)] = v;
  }
  // h(b_0) = c - sum_{j>=1} x_j h(b_j)
  {
    std::vector<std::uint32_t> v = c;
    for (int j = 1; j < n; ++j)
      for (int row = 0; row < n; ++row)
        v[std::size_t(row)] = f.sub(
            v[std::size_t(row)],
            f.mul(c[std::size_t(j)], img[std::size_t(j)][std::size_t(row)]));
    img[0] = v;
  }
  for (int col = 0; col < n; ++col)
    for (int row = 0; row < n; ++row)
      h(row, col) = img[std::size_t(col)][std::size_t(row)];
  if (!space.preserves_form(h)) {
    detail << "h is not an isometry; ";
    ok = false;
  }
  if (!g0.contains(h)) {
    detail << "h not in G_0^p; ";
    ok = false;
  }

  int first_mark = s.diagram.string_mark(1);
  std::uint64_t q = first_mark == 3 ? 1 : (p + 1) / 2;
  FpMat t1 = h.inverse().mul(gens[0]).pow(q);
  if (!(t1 == t[1])) {
    detail << "(h^{-1} r_0)^q != t_1; ";
    ok = false;
  }

  // tower relation t_{j-1}^{-alpha} t_j r_j t_j r_j = t_{j+1}^beta
  for (int j = 1; j + 1 < n; ++j) {
    std::uint32_t alpha = f.reduce(-cart(j, j - 1));
    std::uint32_t beta = f.reduce(-cart(j, j + 1));
    FpMat lhs = t[std::size_t(j - 1)]
                    .pow(p - 1)  // inverse of t_{j-1}
                    .pow(alpha)
                    .mul(t[std::size_t(j)])
                    .mul(gens[std::size_t(j)])
                    .mul(t[std::size_t(j)])
                    .mul(gens[std::size_t(j)]);
    FpMat rhs = t[std::size_t(j + 1)].pow(beta);
    if (!(lhs == rhs)) {
      detail << "tower relation fails at j = " << j << "; ";
      ok = false;
    }
  }

  std::uint64_t pn1 = 1;
  for (int i = 1; i < n; ++i) pn1 *= p;
  if (rep.group_order != pn1 * rep.g0_order) {
    detail << "|G^p| = " << rep.group_order << " != p^{n-1} |G_0^p| = "
           << pn1 * rep.g0_order << "; ";
    ok = false;
  }
  (void)cap;
  rep.ok = ok;
  rep.detail = detail.str();
  return rep;
}

ReflectionBoundReport reflection_bound_check(int k, std::uint32_t p, std::uint64_t cap) {
  (void)cap;
  ReflectionBoundReport rep;
  BasicSystem s = build_basic_system(three_infinity_diagram(k, 0, 0));
  ModularSpace space = ModularSpace::from_basic_system(s, p);
  MatGroup g = build_group(s, p);
  rep.group_order = g.order();
  rep.singular = space.singular();
  if (!rep.singular) {
    rep.bound_order = order_O1(space);
    rep.bound_name = "O1(V)";
  } else {
    rep.bound_order = order_hatO1(space);
    rep.bound_name = "HatO1(V)";
  }
  rep.equality = rep.group_order == rep.bound_order;
  return rep;
}

}  // namespace polyfield
