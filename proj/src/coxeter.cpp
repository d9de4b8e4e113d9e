#include "polyfield/coxeter.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include <json.hpp>

namespace polyfield {

bool CoxeterDiagram::is_string() const {
  int n = rank();
  std::vector<int> seen(std::size_t(n), 0);
  for (const Branch& b : branches) {
    if (b.mark == 2) continue;
    if (b.j != b.i + 1) return false;
    if (seen[b.i]++) return false;
  }
  for (int i = 0; i + 1 < n; ++i)
    if (!seen[i]) return false;  // a string diagram names every (i,i+1) branch
  return true;
}

int CoxeterDiagram::string_mark(int i) const {
  for (const Branch& b : branches)
    if (b.i == i - 1 && b.j == i) return b.mark;
  return 2;
}

std::vector<int> CoxeterDiagram::string_marks() const {
  std::vector<int> m;
  for (int i = 1; i < rank(); ++i) m.push_back(string_mark(i));
  return m;
}

std::string CoxeterDiagram::to_string() const {
  std::ostringstream os;
  os << "[";
  auto marks = string_marks();
  for (std::size_t i = 0; i < marks.size(); ++i) {
    if (i) os << ",";
    if (marks[i] == kInfinity)
      os << "inf";
    else
      os << marks[i];
  }
  os << "]{";
  for (std::size_t i = 0; i < node_labels.size(); ++i) {
    if (i) os << ",";
    os << node_labels[i];
  }
  os << "}";
  return os.str();
}

CoxeterDiagram CoxeterDiagram::without(const std::vector<int>& J) const {
  std::vector<int> keep;
  for (int i = 0; i < rank(); ++i)
    if (std::find(J.begin(), J.end(), i) == J.end()) keep.push_back(i);
  std::vector<int> newidx(std::size_t(rank()), -1);
  for (std::size_t k = 0; k < keep.size(); ++k) newidx[keep[k]] = int(k);
  CoxeterDiagram d;
  for (int i : keep) d.node_labels.push_back(node_labels[i]);
  for (const Branch& b : branches)
    if (newidx[b.i] >= 0 && newidx[b.j] >= 0)
      d.branches.push_back({newidx[b.i], newidx[b.j], b.mark});
  if (gram2_override) {
    IntMat g(int(keep.size()));
    for (std::size_t a = 0; a < keep.size(); ++a)
      for (std::size_t b2 = 0; b2 < keep.size(); ++b2)
        g(int(a), int(b2)) = (*gram2_override)(keep[a], keep[b2]);
    d.gram2_override = g;
  }
  return d;
}

namespace {

int parse_mark_token(const std::string& t) {
  if (t == "inf" || t == "oo" || t == "infinity") return kInfinity;
  int m = std::stoi(t);
  if (m != 2 && m != 3 && m != 4 && m != 6)
    throw std::invalid_argument("mark must be in {2,3,4,6,inf}, got " + t);
  return m;
}

}  // namespace

CoxeterDiagram parse_shorthand(const std::string& s) {
  std::string body = s;
  if (!body.empty() && body.front() == '[') body = body.substr(1);
  if (!body.empty() && body.back() == ']') body.pop_back();
  std::vector<int> marks;
  std::stringstream ss(body);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove(tok.begin(), tok.end(), ' '), tok.end());
    if (tok.empty()) continue;
    auto caret = tok.find('^');
    int rep = 1;
    if (caret != std::string::npos) {
      rep = std::stoi(tok.substr(caret + 1));
      tok = tok.substr(0, caret);
    }
    int m = parse_mark_token(tok);
    for (int r = 0; r < rep; ++r) marks.push_back(m);
  }
  CoxeterDiagram d;
  int n = static_cast<int>(marks.size()) + 1;
  d.node_labels.assign(std::size_t(n), 1);
  long long label = 1;
  for (int i = 1; i < n; ++i) {
    if (marks[i - 1] == 4) label *= 2;
    if (marks[i - 1] == 6) label *= 3;
    d.node_labels[i] = label;
    d.branches.push_back({i - 1, i, marks[i - 1]});
  }
  return d;
}

CoxeterDiagram diagram_from_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  CoxeterDiagram d;
  for (const auto& v : j.at("nodes")) d.node_labels.push_back(v.get<long long>());
  for (const auto& b : j.at("branches")) {
    Branch br;
    br.i = b.at("i").get<int>();
    br.j = b.at("j").get<int>();
    const auto& m = b.at("mark");
    br.mark = m.is_string() ? parse_mark_token(m.get<std::string>())
                            : m.get<int>();
    if (br.i > br.j) std::swap(br.i, br.j);
    d.branches.push_back(br);
  }
  if (j.contains("gram2_override")) {
    int n = d.rank();
    IntMat g(n);
    const auto& rows = j.at("gram2_override");
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < n; ++k) g(i, k) = rows.at(i).at(k).get<long long>();
    d.gram2_override = g;
  }
  return d;
}

std::string diagram_to_json(const CoxeterDiagram& d) {
  nlohmann::json j;
  j["nodes"] = d.node_labels;
  j["branches"] = nlohmann::json::array();
  for (const Branch& b : d.branches) {
    nlohmann::json br;
    br["i"] = b.i;
    br["j"] = b.j;
    if (b.mark == kInfinity)
      br["mark"] = "inf";
    else
      br["mark"] = b.mark;
    j["branches"].push_back(br);
  }
  if (d.gram2_override) {
    auto& g = *d.gram2_override;
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < g.dim(); ++i) {
      nlohmann::json row = nlohmann::json::array();
      for (int k = 0; k < g.dim(); ++k) row.push_back(g(i, k));
      rows.push_back(row);
    }
    j["gram2_override"] = rows;
  }
  return j.dump();
}

Rat make_rat(long long num, long long den) {
  if (den == 0) throw std::invalid_argument("Rat: zero denominator");
  if (den < 0) num = -num, den = -den;
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) num /= g, den /= g;
  if (num == 0) den = 1;
  return {num, den};
}

std::string to_string(const Rat& r) {
  if (r.den == 1) return std::to_string(r.num);
  return std::to_string(r.num) + "/" + std::to_string(r.den);
}

SquareClass square_class_mod(const Rat& r, std::uint32_t p) {
  PrimeField f(p);
  std::uint32_t num = f.reduce(r.num);
  if (num == 0) return SquareClass::Zero;
  std::uint32_t den = f.reduce(r.den);
  return f.square_class(f.mul(num, f.inv(den)));
}

namespace {

long long isqrt_exact(long long v) {
  long long r = static_cast<long long>(std::llround(std::sqrt(double(v))));
  while (r * r > v) --r;
  while ((r + 1) * (r + 1) <= v) ++r;
  return r * r == v ? r : -1;
}

}  // namespace

BasicSystem build_basic_system(const CoxeterDiagram& d) {
  const int n = d.rank();
  BasicSystem s;
  s.diagram = d;
  if (d.gram2_override) {
    s.gram2 = *d.gram2_override;
  } else {
    s.gram2 = IntMat(n);
    for (int i = 0; i < n; ++i) {
      if (d.node_labels[i] <= 0)
        throw std::invalid_argument("node labels must be positive");
      s.gram2(i, i) = 2 * d.node_labels[i];
    }
    for (const Branch& b : d.branches) {
      if (b.mark == 2) continue;
      // (2 b_i.b_j)^2 = 4 b_i^2 b_j^2 cos^2(pi/q); mark inf is parabolic.
      long long mult;
      switch (b.mark) {
        case 3: mult = 1; break;
        case 4: mult = 2; break;
        case 6: mult = 3; break;
        case kInfinity: mult = 4; break;
        default:
          throw std::invalid_argument("non-crystallographic mark " +
                                      std::to_string(b.mark) + " on branch (" +
                                      std::to_string(b.i) + "," +
                                      std::to_string(b.j) + ")");
      }
      long long sq = d.node_labels[b.i] * d.node_labels[b.j] * mult;
      long long root = isqrt_exact(sq);
      if (root < 0)
        throw std::invalid_argument(
            "branch (" + std::to_string(b.i) + "," + std::to_string(b.j) +
            ") is not crystallographic for these labels");
      s.gram2(b.i, b.j) = -root;  // sign convention b_i.b_j <= 0
      s.gram2(b.j, b.i) = -root;
    }
  }
  // Cartan integers a_ij = 2(b_i.b_j)/b_i^2 = 2*gram2_ij / gram2_ii
  s.cartan = IntMat(n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      long long num = 2 * s.gram2(i, j);
      if (num % s.gram2(i, i) != 0)
        throw std::invalid_argument("non-integer Cartan entry at branch (" +
                                    std::to_string(i) + "," +
                                    std::to_string(j) + ")");
      s.cartan(i, j) = num / s.gram2(i, i);
    }
  }
  return s;
}

namespace {

// det of B_J as Rat, where B = gram2/2, via Bareiss on the integer submatrix.
Rat det_sub(const IntMat& gram2, const std::vector<int>& keep) {
  int m = static_cast<int>(keep.size());
  if (m == 0) return {1, 1};
  IntMat sub(m);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j) sub(i, j) = gram2(keep[i], keep[j]);
  __int128 det2 = sub.det();  // det(2B_J) = 2^m det(B_J)
  long long den = 1;
  for (int i = 0; i < m; ++i) den *= 2;
  return make_rat(static_cast<long long>(det2), den);
}

}  // namespace

Rat det_direct(const BasicSystem& s) {
  std::vector<int> all(std::size_t(s.gram2.dim()));
  std::iota(all.begin(), all.end(), 0);
  return det_sub(s.gram2, all);
}

Rat det_recursion(const BasicSystem& s) {
  if (!s.diagram.is_string() && !s.diagram.gram2_override)
    throw std::invalid_argument("det_recursion: string diagram required");
  const IntMat& g2 = s.gram2;
  int n = g2.dim();
  // D_k = det of the trailing k x k principal block of B; recursion from the
  // front: det(B on rows i..n-1) = b_i^2 det(i+1..) - (b_i.b_{i+1})^2 det(i+2..)
  std::vector<Rat> D(std::size_t(n) + 2);
  D[n] = {1, 1};
  D[n + 1] = {1, 1};
  for (int i = n - 1; i >= 0; --i) {
    // entries of B are gram2/2
    Rat bi2 = make_rat(g2(i, i), 2);
    Rat cross = i + 1 < n ? make_rat(g2(i, i + 1) * g2(i, i + 1), 4) : Rat{0, 1};
    Rat next = D[i + 1], next2 = D[i + 2];
    long long num = bi2.num * next.num * cross.den * next2.den -
                    cross.num * next2.num * bi2.den * next.den;
    long long den = bi2.den * next.den * cross.den * next2.den;
    D[i] = make_rat(num, den);
  }
  return D[0];
}

int d_n(long long n) {
  if (n < 0) throw std::invalid_argument("d_n: n must be nonnegative");
  switch (n % 6) {
    case 0:
    case 1: return 1;
    case 2:
    case 5: return 0;
    default: return -1;  // 3, 4 mod 6
  }
}

Rat e_klm(int k, int l, int m) {
  if (l < 1 || k < 0 || m < 0)
    throw std::invalid_argument("e_klm: need l >= 1, k,m >= 0");
  long long num = static_cast<long long>(d_n(l + 1)) * (4 + 2 * k + 2 * m) -
                  static_cast<long long>(d_n(l - 1)) * (2 * k + 2 * m + 3LL * k * m);
  long long den = 1;
  for (int i = 0; i < k + m + 2; ++i) den *= 2;
  return make_rat(num, den);
}

InftyDiscs disc_infty_3k_infty(int k) {
  if (k < 1) throw std::invalid_argument("disc_infty_3k_infty: k >= 1");
  long long den = 1;
  for (int i = 0; i < k + 1; ++i) den *= 2;
  return {make_rat(k - 2, den), make_rat(-k, den), make_rat(k + 2, den)};
}

std::vector<IntMat> reflection_matrices(const BasicSystem& s) {
  int n = s.gram2.dim();
  std::vector<IntMat> rs;
  rs.reserve(std::size_t(n));
  for (int j = 0; j < n; ++j) {
    IntMat r = IntMat::identity(n);
    for (int k = 0; k < n; ++k) r(j, k) -= s.cartan(j, k);
    rs.push_back(r);
  }
  return rs;
}

bool is_generic(const CoxeterDiagram& d, std::uint32_t p) {
  if (p >= 5) return true;
  for (const Branch& b : d.branches)
    if (b.mark == 6) return false;
  return true;
}

CoxeterDiagram three_infinity_diagram(int k, int l, int m) {
  CoxeterDiagram d;
  int n = k + l + m + 1;
  d.node_labels.assign(std::size_t(n), 1);
  for (int i = 1; i < n; ++i) {
    int mark = (i <= k || i > k + l) ? 3 : kInfinity;
    d.branches.push_back({i - 1, i, mark});
  }
  return d;
}

namespace {

CoxeterDiagram make_string_diagram(std::vector<long long> labels,
                                   std::vector<int> marks) {
  CoxeterDiagram d;
  d.node_labels = std::move(labels);
  for (std::size_t i = 0; i + 1 < d.node_labels.size(); ++i)
    d.branches.push_back({int(i), int(i) + 1, marks[i]});
  return d;
}

}  // namespace

BasicSystem preset(const std::string& name) {
  auto finish = [](CoxeterDiagram d, std::vector<long long> rad) {
    BasicSystem s = build_basic_system(d);
    s.radical_vector = std::move(rad);
    return s;
  };
  if (name == "[inf]" || name == "[∞]")
    return finish(make_string_diagram({1, 1}, {kInfinity}), {1, 1});
  if (name == "[3,6]")
    return finish(make_string_diagram({1, 1, 3}, {3, 6}), {1, 2, 1});
  if (name == "[6,3]-133")
    return finish(make_string_diagram({1, 3, 3}, {6, 3}), {});
  if (name == "[6,3]-331")
    return finish(make_string_diagram({3, 3, 1}, {3, 6}), {});
  if (name == "[3,3,4,3]")
    return finish(make_string_diagram({1, 1, 1, 2, 2}, {3, 3, 4, 3}),
                  {1, 2, 3, 2, 1});
  if (name == "[4,3,4,3]")
    return finish(make_string_diagram({2, 1, 1, 2, 2}, {4, 3, 4, 3}), {});
  if (name == "rank6-G")
    return finish(make_string_diagram({1, 1, 2, 2, 2, 2}, {3, 4, 3, 3, 3}), {});
  if (name == "rank6-H")
    return finish(make_string_diagram({1, 1, 1, 2, 2, 2}, {3, 3, 4, 3, 3}), {});
  if (name == "rank6-K")
    return finish(make_string_diagram({2, 1, 1, 1, 2, 2}, {4, 3, 3, 4, 3}), {});
  // cubic tessellation family [4,3^{m-2},4] written out, e.g. "[4,4]", "[4,3,4]"
  {
    CoxeterDiagram d = parse_shorthand(name);
    auto marks = d.string_marks();
    int n = d.rank();
    bool cubic = n >= 3 && marks.front() == 4 && marks.back() == 4;
    for (std::size_t i = 1; i + 1 < marks.size() && cubic; ++i)
      if (marks[i] != 3) cubic = false;
    if (cubic) {
      std::vector<long long> labels(std::size_t(n), 1);
      labels.front() = labels.back() = 2;
      std::vector<long long> rad(std::size_t(n), 2);
      rad.front() = rad.back() = 1;
      return finish(make_string_diagram(labels, marks), rad);
    }
    bool threeInf = true;
    for (int mk : marks)
      if (mk != 3 && mk != kInfinity) threeInf = false;
    if (threeInf && !marks.empty()) {
      // 3-infinity family builder: all labels 1
      std::vector<long long> labels(std::size_t(n), 1);
      BasicSystem s = build_basic_system(make_string_diagram(labels, marks));
      if (n == 2 && marks[0] == kInfinity) s.radical_vector = {1, 1};
      return s;
    }
  }
  throw std::invalid_argument("unknown preset: " + name);
}

}  // namespace polyfield
