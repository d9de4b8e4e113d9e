#include "polyfield/group.hpp"

#include <algorithm>
#include <cstdio>
#include <deque>
#include <filesystem>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

namespace polyfield {

namespace {

// Overflow-checked product (orders fit in 64 bits for everything we build,
// but fail loudly rather than wrap).
std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
  unsigned __int128 r = static_cast<unsigned __int128>(a) * b;
  if (r > UINT64_MAX) throw std::overflow_error("group order overflows 64 bits");
  return static_cast<std::uint64_t>(r);
}

}  // namespace

MatGroup::MatGroup(std::uint32_t p, int dim, std::vector<FpMat> generators,
                   std::optional<FpMat> form)
    : p_(p), dim_(dim), form_(std::move(form)) {
  PrimeField f(p);  // validates p
  for (const auto& g : generators) {
    if (g.p() != p || g.dim() != dim)
      throw std::invalid_argument("generator field/dimension mismatch");
    if (g.is_identity()) continue;
    if (std::find(gens_.begin(), gens_.end(), g) == gens_.end())
      gens_.push_back(g);
  }
  build();
}

std::uint64_t MatGroup::vec_code(const std::vector<std::uint32_t>& v) const {
  std::uint64_t c = 0;
  for (int i = dim_ - 1; i >= 0; --i) c = c * p_ + v[std::size_t(i)];
  return c;
}

std::vector<std::uint32_t> MatGroup::vec_decode(std::uint64_t code) const {
  std::vector<std::uint32_t> v(static_cast<std::size_t>(dim_));
  for (int i = 0; i < dim_; ++i) {
    v[std::size_t(i)] = static_cast<std::uint32_t>(code % p_);
    code /= p_;
  }
  return v;
}

void MatGroup::recompute_orbit(Level& lv) const {
  lv.orbit.clear();
  lv.orbit.emplace(lv.base_code, std::make_pair(lv.base_code, -1));
  std::deque<std::uint64_t> queue{lv.base_code};
  while (!queue.empty()) {
    std::uint64_t c = queue.front();
    queue.pop_front();
    auto v = vec_decode(c);
    for (std::size_t gi = 0; gi < lv.gens.size(); ++gi) {
      std::uint64_t img = vec_code(lv.gens[gi].apply(v));
      if (lv.orbit.emplace(img, std::make_pair(c, int(gi))).second)
        queue.push_back(img);
    }
  }
  lv.dirty = false;
}

std::pair<FpMat, std::size_t> MatGroup::strip(FpMat g, std::size_t from) const {
  for (std::size_t i = from; i < levels_.size(); ++i) {
    const Level& lv = levels_[i];
    std::uint64_t img = vec_code(g.apply(lv.base));
    auto it = lv.orbit.find(img);
    if (it == lv.orbit.end()) return {std::move(g), i};
    auto tr = lv.trans.find(img);
    if (tr != lv.trans.end()) {
      g = tr->second.second.mul(g);
      continue;
    }
    // Left-multiply by u_img^{-1} following the Schreier-vector path.
    std::uint64_t cur = img;
    while (cur != lv.base_code) {
      const auto& [parent, gi] = lv.orbit.at(cur);
      g = lv.gen_invs[std::size_t(gi)].mul(g);
      cur = parent;
    }
  }
  return {std::move(g), levels_.size()};
}

void MatGroup::add_residue(const FpMat& r, std::size_t from, std::size_t upto) {
  if (upto == levels_.size()) {
    // r fixes every existing base point: open a new level on the first
    // standard basis vector it moves.
    Level lv;
    for (int k = 0; k < dim_; ++k) {
      std::vector<std::uint32_t> e(static_cast<std::size_t>(dim_), 0);
      e[std::size_t(k)] = 1;
      if (r.apply(e) != e) {
        lv.base = e;
        break;
      }
    }
    if (lv.base.empty())
      throw std::logic_error("non-identity residue fixing all basis vectors");
    lv.base_code = vec_code(lv.base);
    levels_.push_back(std::move(lv));
  }
  FpMat rinv = r.inverse();
  for (std::size_t k = from; k <= upto; ++k) {
    levels_[k].gens.push_back(r);
    levels_[k].gen_invs.push_back(rinv);
    levels_[k].dirty = true;
  }
}

void MatGroup::build() {
  levels_.clear();
  order_ = 1;
  if (gens_.empty()) return;

  Level top;
  top.gens = gens_;
  for (const auto& g : gens_) top.gen_invs.push_back(g.inverse());
  for (int k = 0; k < dim_ && top.base.empty(); ++k) {
    std::vector<std::uint32_t> e(static_cast<std::size_t>(dim_), 0);
    e[std::size_t(k)] = 1;
    for (const auto& g : gens_)
      if (g.apply(e) != e) {
        top.base = e;
        break;
      }
  }
  if (top.base.empty()) throw std::logic_error("non-identity generators fix all basis vectors");
  top.base_code = vec_code(top.base);
  levels_.push_back(std::move(top));

  // One top-down pass: additions from level i always land strictly deeper,
  // so each level's generating set is final once we reach it.
  for (std::size_t i = 0; i < levels_.size(); ++i) {
    if (levels_[i].dirty) recompute_orbit(levels_[i]);
    // Orbit is fixed for this level; iterate a snapshot of its points.
    std::vector<std::uint64_t> pts;
    pts.reserve(levels_[i].orbit.size());
    for (const auto& [c, pg] : levels_[i].orbit) pts.push_back(c);
    std::sort(pts.begin(), pts.end());
    for (std::uint64_t c : pts) {
      // u_beta via path walk
      FpMat u = FpMat::identity(p_, dim_);
      {
        std::uint64_t cur = c;
        while (cur != levels_[i].base_code) {
          const auto& [parent, gi] = levels_[i].orbit.at(cur);
          u = levels_[i].gens[std::size_t(gi)].mul(u);
          cur = parent;
        }
      }
      for (std::size_t gi = 0; gi < levels_[i].gens.size(); ++gi) {
        FpMat h = levels_[i].gens[gi].mul(u);
        // h maps base to s(beta); strip fully, re-stripping after each fix.
        while (true) {
          // Bring h back into the stabilizer of base_i first.
          std::uint64_t img = vec_code(h.apply(levels_[i].base));
          std::uint64_t cur = img;
          FpMat red = h;
          while (cur != levels_[i].base_code) {
            const auto& [parent, g2] = levels_[i].orbit.at(cur);
            red = levels_[i].gen_invs[std::size_t(g2)].mul(red);
            cur = parent;
          }
          auto [res, j] = strip(std::move(red), i + 1);
          if (res.is_identity()) break;
          add_residue(res, i + 1, j);
          for (std::size_t k = i + 1; k <= j && k < levels_.size(); ++k)
            if (levels_[k].dirty) recompute_orbit(levels_[k]);
        }
      }
    }
  }

  for (const auto& lv : levels_) order_ = checked_mul(order_, lv.orbit.size());
  finalize_transversals();
}

void MatGroup::finalize_transversals() {
  constexpr std::size_t kCacheLimit = 200000;
  std::size_t total = 0;
  for (const auto& lv : levels_) total += lv.orbit.size();
  if (total > kCacheLimit) return;
  for (Level& lv : levels_) {
    lv.trans.reserve(lv.orbit.size());
    lv.trans.emplace(lv.base_code,
                     std::make_pair(FpMat::identity(p_, dim_),
                                    FpMat::identity(p_, dim_)));
    // Resolve each point's transversal matrix along its Schreier path,
    // memoizing intermediate points.
    for (const auto& [c, pg] : lv.orbit) {
      std::vector<std::uint64_t> chain;
      std::uint64_t cur = c;
      while (lv.trans.find(cur) == lv.trans.end()) {
        chain.push_back(cur);
        cur = lv.orbit.at(cur).first;
      }
      for (auto it = chain.rbegin(); it != chain.rend(); ++it) {
        const auto& [parent, gi] = lv.orbit.at(*it);
        FpMat u = lv.gens[std::size_t(gi)].mul(lv.trans.at(parent).first);
        FpMat uinv = u.inverse();
        lv.trans.emplace(*it, std::make_pair(std::move(u), std::move(uinv)));
      }
    }
  }
}

bool MatGroup::contains(const FpMat& m) const {
  if (m.p() != p_ || m.dim() != dim_) return false;
  if (m.is_identity()) return true;
  if (gens_.empty()) return false;
  auto [res, j] = strip(m, 0);
  return j == levels_.size() && res.is_identity();
}

bool MatGroup::enum_rec(std::size_t lv, const FpMat& prefix,
                        const std::function<bool(const FpMat&)>& fn) const {
  if (lv == levels_.size()) return fn(prefix);
  const Level& L = levels_[lv];
  for (const auto& [c, pg] : L.orbit) {
    auto tr = L.trans.find(c);
    if (tr != L.trans.end()) {
      if (!enum_rec(lv + 1, prefix.mul(tr->second.first), fn)) return false;
      continue;
    }
    FpMat u = FpMat::identity(p_, dim_);
    std::uint64_t cur = c;
    while (cur != L.base_code) {
      const auto& [parent, gi] = L.orbit.at(cur);
      u = L.gens[std::size_t(gi)].mul(u);
      cur = parent;
    }
    if (!enum_rec(lv + 1, prefix.mul(u), fn)) return false;
  }
  return true;
}

bool MatGroup::for_each_element(const std::function<bool(const FpMat&)>& fn) const {
  if (gens_.empty()) return fn(FpMat::identity(p_, dim_));
  return enum_rec(0, FpMat::identity(p_, dim_), fn);
}

std::uint64_t MatGroup::generator_hash() const {
  std::uint64_t h = 0xcbf29ce484222325ull;
  auto mix = [&h](std::uint64_t x) {
    h ^= x;
    h *= 0x100000001b3ull;
  };
  mix(p_);
  mix(static_cast<std::uint64_t>(dim_));
  for (const auto& g : gens_) {
    auto c = g.encode();
    mix(c[0]);
    mix(c[1]);
  }
  return h;
}

std::vector<FpMat::Code> MatGroup::enumerate_bfs(std::uint64_t cap,
                                                 const std::string& cache_dir) const {
  namespace fs = std::filesystem;
  std::string cache_file;
  if (!cache_dir.empty()) {
    char name[64];
    std::snprintf(name, sizeof(name), "pf-%016llx.bin",
                  static_cast<unsigned long long>(generator_hash()));
    cache_file = (fs::path(cache_dir) / name).string();
    std::ifstream in(cache_file, std::ios::binary);
    if (in) {
      char magic[4];
      std::uint64_t hp = 0, hd = 0, hh = 0, cnt = 0;
      in.read(magic, 4);
      in.read(reinterpret_cast<char*>(&hp), 8);
      in.read(reinterpret_cast<char*>(&hd), 8);
      in.read(reinterpret_cast<char*>(&hh), 8);
      in.read(reinterpret_cast<char*>(&cnt), 8);
      if (in && std::string(magic, 4) == "PFC1" && hp == p_ &&
          hd == std::uint64_t(dim_) && hh == generator_hash() && cnt <= cap) {
        std::vector<FpMat::Code> out(cnt);
        in.read(reinterpret_cast<char*>(out.data()),
                static_cast<std::streamsize>(cnt * sizeof(FpMat::Code)));
        if (in) return out;
      }
    }
  }

  std::unordered_set<FpMat::Code, FpMatCodeHash> seen;
  std::vector<FpMat::Code> out;
  std::deque<FpMat> queue;
  FpMat id = FpMat::identity(p_, dim_);
  seen.insert(id.encode());
  out.push_back(id.encode());
  queue.push_back(id);
  while (!queue.empty()) {
    FpMat m = std::move(queue.front());
    queue.pop_front();
    for (const auto& g : gens_) {
      FpMat next = m.mul(g);
      auto code = next.encode();
      if (seen.insert(code).second) {
        if (out.size() >= cap)
          throw CapacityError("enumeration exceeds cap of " + std::to_string(cap));
        out.push_back(code);
        queue.push_back(std::move(next));
      }
    }
  }

  if (!cache_file.empty()) {
    std::error_code ec;
    fs::create_directories(cache_dir, ec);
    std::ofstream os(cache_file, std::ios::binary | std::ios::trunc);
    if (os) {
      std::uint64_t hp = p_, hd = std::uint64_t(dim_), hh = generator_hash(),
                    cnt = out.size();
      os.write("PFC1", 4);
      os.write(reinterpret_cast<const char*>(&hp), 8);
      os.write(reinterpret_cast<const char*>(&hd), 8);
      os.write(reinterpret_cast<const char*>(&hh), 8);
      os.write(reinterpret_cast<const char*>(&cnt), 8);
      os.write(reinterpret_cast<const char*>(out.data()),
               static_cast<std::streamsize>(out.size() * sizeof(FpMat::Code)));
    }
  }
  return out;
}

MatGroup MatGroup::intersect(const MatGroup& a, const MatGroup& b,
                             std::uint64_t cap) {
  const MatGroup& small = a.order() <= b.order() ? a : b;
  const MatGroup& large = a.order() <= b.order() ? b : a;
  if (small.p() != large.p() || small.dim() != large.dim())
    throw std::invalid_argument("intersect: incompatible groups");
  if (small.order() > cap)
    throw CapacityError("intersection: both groups exceed cap of " +
                        std::to_string(cap));
  // Grow a subgroup from elements of the smaller group that sift through
  // the larger one; skip elements already generated.
  std::vector<FpMat> sofar;
  MatGroup result(small.p(), small.dim(), {}, small.form_);
  small.for_each_element([&](const FpMat& g) {
    if (!g.is_identity() && large.contains(g) && !result.contains(g)) {
      sofar.push_back(g);
      result = MatGroup(small.p(), small.dim(), sofar, small.form_);
    }
    return true;
  });
  return result;
}

SquareClass MatGroup::spinor_norm(const FpMat& g) const {
  if (!form_) throw std::domain_error("spinor norm requires an attached form");
  ModularSpace space(p_, *form_);
  if (space.singular())
    throw std::domain_error("spinor norm requires a nonsingular form");
  if (!space.preserves_form(g))
    throw std::domain_error("spinor norm of a non-isometry");

  PrimeField f(p_);
  FpMat cur = g;
  SquareClass theta = SquareClass::Square;

  // Candidate pool for anisotropic directions: basis vectors, e_i +- e_j,
  // and a fixed pseudo-random batch (deterministic seed).
  std::vector<std::vector<std::uint32_t>> candidates;
  for (int i = 0; i < dim_; ++i) {
    std::vector<std::uint32_t> e(static_cast<std::size_t>(dim_), 0);
    e[std::size_t(i)] = 1;
    candidates.push_back(e);
  }
  for (int i = 0; i < dim_; ++i)
    for (int j = i + 1; j < dim_; ++j)
      for (std::uint32_t c : {1u, p_ - 1}) {
        std::vector<std::uint32_t> v(static_cast<std::size_t>(dim_), 0);
        v[std::size_t(i)] = 1;
        v[std::size_t(j)] = c;
        candidates.push_back(v);
      }
  std::uint64_t rng = 0x2545f4914f6cdd1dull;  // fixed seed: deterministic
  for (int t = 0; t < 512; ++t) {
    std::vector<std::uint32_t> v(static_cast<std::size_t>(dim_));
    for (auto& x : v) {
      rng ^= rng << 13;
      rng ^= rng >> 7;
      rng ^= rng << 17;
      x = static_cast<std::uint32_t>(rng % p_);
    }
    candidates.push_back(std::move(v));
  }

  // Pin an orthogonal anisotropic basis vector by vector. Each pin costs at
  // most two reflections, and reflections used for later pins fix the
  // earlier ones (their mirrors lie in the pinned vectors' complement), so
  // the procedure terminates after at most dim pins.
  std::vector<std::vector<std::uint32_t>> pinned;
  for (int step = 0; step < dim_ && !cur.is_identity(); ++step) {
    // Anisotropic x orthogonal to everything pinned: project candidates.
    std::vector<std::uint32_t> x;
    for (const auto& v : candidates) {
      std::vector<std::uint32_t> w = v;
      for (const auto& q : pinned) {
        std::uint32_t coeff = f.mul(space.dot(w, q), f.inv(space.norm(q)));
        for (int i = 0; i < dim_; ++i)
          w[std::size_t(i)] =
              f.sub(w[std::size_t(i)], f.mul(coeff, q[std::size_t(i)]));
      }
      if (space.norm(w) != 0) {
        x = std::move(w);
        break;
      }
    }
    if (x.empty())
      throw std::logic_error("no anisotropic vector in the pinned complement");

    auto gx = cur.apply(x);
    if (gx != x) {
      std::vector<std::uint32_t> u(static_cast<std::size_t>(dim_));
      for (int i = 0; i < dim_; ++i)
        u[std::size_t(i)] = f.sub(gx[std::size_t(i)], x[std::size_t(i)]);
      if (std::uint32_t q = space.norm(u); q != 0) {
        cur = reflection_in(space, u).mul(cur);
        theta = theta * f.square_class(q);
      } else {
        // N(gx - x) = 0 with x anisotropic forces N(gx + x) = 4 N(x) != 0:
        // reflect gx to -x, then -x to x.
        std::vector<std::uint32_t> u1(static_cast<std::size_t>(dim_));
        for (int i = 0; i < dim_; ++i)
          u1[std::size_t(i)] = f.add(gx[std::size_t(i)], x[std::size_t(i)]);
        cur = reflection_in(space, x).mul(reflection_in(space, u1)).mul(cur);
        theta = theta * f.square_class(space.norm(u1)) *
                f.square_class(space.norm(x));
      }
    }
    pinned.push_back(std::move(x));
  }
  if (!cur.is_identity())
    throw std::logic_error("spinor norm factorization did not terminate");
  return theta;
}

std::uint64_t element_order(const FpMat& m) {
  FpMat cur = m;
  for (std::uint64_t k = 1; k <= 1'000'000; ++k) {
    if (cur.is_identity()) return k;
    cur = cur.mul(m);
  }
  throw std::runtime_error("element order exceeds 10^6");
}

FpMat reflection_in(const ModularSpace& space, const std::vector<std::uint32_t>& u) {
  PrimeField f(space.p());
  std::uint32_t q = space.norm(u);
  if (q == 0) throw std::domain_error("reflection in an isotropic vector");
  int n = space.dim();
  FpMat r = FpMat::identity(space.p(), n);
  std::uint32_t qi = f.inv(q);
  for (int k = 0; k < n; ++k) {
    std::vector<std::uint32_t> e(static_cast<std::size_t>(n), 0);
    e[std::size_t(k)] = 1;
    std::uint32_t c = f.mul(2 % space.p(), f.mul(space.dot(e, u), qi));
    for (int i = 0; i < n; ++i)
      r(i, k) = f.sub(r(i, k), f.mul(c, u[std::size_t(i)]));
  }
  return r;
}

}  // namespace polyfield
