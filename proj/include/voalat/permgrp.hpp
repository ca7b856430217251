#pragma once
#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "voalat/lattice.hpp"
#include "voalat/shortvec.hpp"

namespace voalat {

struct NotClosed : std::runtime_error {
  NotClosed() : std::runtime_error("NotClosed") {}
};
struct NotFaithful : std::runtime_error {
  NotFaithful() : std::runtime_error("NotFaithful") {}
};

using Point = uint32_t;

// Deterministic Schreier-Sims over an element policy P providing
//   T, id(), mul(a,b) (a then b), inverse(a), image(a,pt), is_id(a), first_moved(a).
// Elements are carried together with their inverses; transversals are explicit.
template <class P>
class Bsgs {
 public:
  using T = typename P::T;
  struct E {
    T f, b;
  };

  Bsgs() = default;
  // trusted: gens already form a strong generating set for the given base
  Bsgs(std::shared_ptr<const P> p, const std::vector<T>& gens, std::vector<Point> base = {},
       bool trusted = false)
      : p_(std::move(p)) {
    for (auto& g : gens)
      if (!p_->is_id(g)) gens_.push_back({g, p_->inverse(g)});
    for (Point b : base) add_level(b);
    for (auto& g : gens_) extend_base(g);
    for (size_t l = 0; l < lv_.size(); l++) rebuild_level(l);
    if (!trusted) complete(lv_.size() ? (int)lv_.size() - 1 : -1);
  }

  const P& policy() const { return *p_; }
  const std::vector<E>& generators() const { return gens_; }
  std::vector<Point> base() const {
    std::vector<Point> b;
    for (auto& l : lv_) b.push_back(l.beta);
    return b;
  }
  std::vector<size_t> orbit_sizes() const {
    std::vector<size_t> s;
    for (auto& l : lv_) s.push_back(l.pts.size());
    return s;
  }
  // basic orbit of level l (points in discovery order)
  const std::vector<Point>& level_orbit(size_t l) const { return lv_.at(l).pts; }
  bool in_level_orbit(size_t l, Point p) const { return l < lv_.size() && lv_[l].pos.count(p); }
  Int order() const {
    Int o = 1;
    for (auto& l : lv_) o *= (unsigned long)l.pts.size();
    return o;
  }
  bool contains(const T& g) const {
    E h{g, p_->inverse(g)};
    size_t j = strip(h, 0);
    return j == lv_.size() && p_->is_id(h.f);
  }
  // adds g and restores the BSGS property
  void add_generator(const T& g) {
    if (contains(g)) return;
    E e{g, p_->inverse(g)};
    gens_.push_back(e);
    extend_base(e);
    for (size_t l = 0; l < lv_.size(); l++)
      if (fixes_prefix(e.f, l)) {
        lv_[l].s.push_back(gens_.size() - 1);
        rebuild_level(l);
      }
    complete((int)lv_.size() - 1);
  }
  // orbit of pt under the generators, in discovery order
  std::vector<Point> orbit(Point pt) const {
    std::vector<Point> o{pt};
    std::unordered_map<Point, char> seen{{pt, 1}};
    for (size_t i = 0; i < o.size(); i++)
      for (auto& g : gens_) {
        Point q = p_->image(g.f, o[i]);
        if (seen.emplace(q, 1).second) o.push_back(q);
      }
    return o;
  }

 private:
  struct Level {
    Point beta;
    std::vector<int> s;
    std::unordered_map<Point, int> pos;
    std::vector<Point> pts;
    std::vector<E> u;
  };
  std::shared_ptr<const P> p_;
  std::vector<E> gens_;
  std::vector<Level> lv_;

  E mul(const E& a, const E& c) const { return {p_->mul(a.f, c.f), p_->mul(c.b, a.b)}; }

  bool fixes_prefix(const T& g, size_t l) const {
    for (size_t i = 0; i < l; i++)
      if (p_->image(g, lv_[i].beta) != lv_[i].beta) return false;
    return true;
  }
  void add_level(Point b) {
    Level l;
    l.beta = b;
    lv_.push_back(std::move(l));
  }
  void extend_base(const E& g) {
    if (p_->is_id(g.f)) return;
    if (fixes_prefix(g.f, lv_.size())) {
      add_level(p_->first_moved(g.f));
      size_t l = lv_.size() - 1;
      for (size_t i = 0; i < gens_.size(); i++)
        if (fixes_prefix(gens_[i].f, l)) lv_[l].s.push_back(i);
      rebuild_level(l);
    }
  }
  void rebuild_level(size_t l) {
    Level& L = lv_[l];
    L.s.clear();
    for (size_t i = 0; i < gens_.size(); i++)
      if (fixes_prefix(gens_[i].f, l)) L.s.push_back(i);
    L.pos.clear(), L.pts.clear(), L.u.clear();
    T id = p_->id();
    L.pos[L.beta] = 0;
    L.pts.push_back(L.beta);
    L.u.push_back({id, id});
    for (size_t i = 0; i < L.pts.size(); i++)
      for (int gi : L.s) {
        Point q = p_->image(gens_[gi].f, L.pts[i]);
        if (L.pos.count(q)) continue;
        L.pos[q] = L.pts.size();
        L.pts.push_back(q);
        L.u.push_back(mul(L.u[i], gens_[gi]));
      }
  }
  size_t strip(E& h, size_t from) const {
    for (size_t j = from; j < lv_.size(); j++) {
      Point g = p_->image(h.f, lv_[j].beta);
      auto it = lv_[j].pos.find(g);
      if (it == lv_[j].pos.end()) return j;
      const E& u = lv_[j].u[it->second];
      h = {p_->mul(h.f, u.b), p_->mul(u.f, h.b)};
    }
    return lv_.size();
  }
  void complete(int i) {
    while (i >= 0) {
      bool restart = false;
      Level& L = lv_[i];
      for (size_t t = 0; !restart && t < L.pts.size(); t++)
        for (size_t si = 0; !restart && si < L.s.size(); si++) {
          const E& s = gens_[L.s[si]];
          Point d = p_->image(s.f, L.pts[t]);
          const E& ud = L.u[L.pos.at(d)];
          E g = mul(mul(L.u[t], s), E{ud.b, ud.f});
          if (p_->is_id(g.f)) continue;
          size_t j = strip(g, i + 1);
          if (j < lv_.size() || !p_->is_id(g.f)) {
            gens_.push_back(g);
            if (j == lv_.size()) add_level(p_->first_moved(g.f));
            for (size_t l = i + 1; l <= j; l++) rebuild_level(l);
            i = (int)j;
            restart = true;
          }
        }
      if (!restart) i--;
    }
  }
};

// plain permutations, points 0..n-1
struct PermPolicy {
  using T = std::vector<Point>;
  size_t n;
  explicit PermPolicy(size_t deg) : n(deg) {}
  T id() const {
    T p(n);
    for (size_t i = 0; i < n; i++) p[i] = i;
    return p;
  }
  T mul(const T& a, const T& b) const {
    T r(n);
    for (size_t i = 0; i < n; i++) r[i] = b[a[i]];
    return r;
  }
  T inverse(const T& a) const {
    T r(n);
    for (size_t i = 0; i < n; i++) r[a[i]] = i;
    return r;
  }
  Point image(const T& a, Point x) const { return a[x]; }
  bool is_id(const T& a) const {
    for (size_t i = 0; i < n; i++)
      if (a[i] != i) return false;
    return true;
  }
  Point first_moved(const T& a) const {
    for (size_t i = 0; i < n; i++)
      if (a[i] != i) return i;
    return 0;
  }
};

using Perm = std::vector<Point>;
using PermGroup = Bsgs<PermPolicy>;
PermGroup make_perm_group(size_t degree, const std::vector<Perm>& gens);
// from 1-based cycle notation, e.g. "(1,2,3)(4,5)"
Perm parse_cycles(const std::string& s, size_t degree);

struct IVecHash {
  size_t operator()(const IVec& v) const {
    size_t h = 1469598103934665603ull;
    for (long x : v) h = (h ^ (size_t)x) * 1099511628211ull;
    return h;
  }
};

// signed point set: point 2i is vectors[i], point 2i+1 its negative
struct SignedPoints {
  int n = 0;
  std::vector<IVec> pts;
  std::unordered_map<IVec, Point, IVecHash> index;
  explicit SignedPoints(const std::vector<IVec>& vs);
  SignedPoints() = default;
  long find(const IVec& v) const {
    auto it = index.find(v);
    return it == index.end() ? -1 : (long)it->second;
  }
};

using IMat = std::vector<long>;  // n x n row-major, acts on row vectors x -> x*M

// isometries of a lattice acting on a signed vector set
struct MatPolicy {
  using T = IMat;
  int n;
  std::shared_ptr<const SignedPoints> sp;
  RatMat gram, ginv;
  MatPolicy(std::shared_ptr<const SignedPoints> s, RatMat g);
  T id() const;
  T mul(const T& a, const T& b) const;
  T inverse(const T& a) const;
  Point image(const T& a, Point x) const;
  bool is_id(const T& a) const;
  Point first_moved(const T& a) const;
};
using MatGroup = Bsgs<MatPolicy>;

IMat to_imat(const IntMat& m);
IntMat from_imat(const IMat& m, int n);
bool preserves_gram(const IMat& g, const RatMat& gram);

// Permutation-style group of lattice isometries acting on the signed points
MatGroup from_matrix_action(const std::vector<IMat>& gens, const Lattice& l,
                            const std::vector<IVec>& points, std::vector<Point> base = {},
                            bool trusted = false);

// automorphisms of a finite abelian group given by images of its generators
struct DiscPolicy {
  using T = std::vector<Point>;  // image index of each generator
  std::vector<long> div;
  size_t size = 1;
  std::vector<Point> genidx;
  explicit DiscPolicy(std::vector<long> divisors);
  std::vector<long> coords(Point x) const;
  Point index(const std::vector<long>& c) const;
  T id() const { return genidx; }
  T mul(const T& a, const T& b) const;
  T inverse(const T& a) const;
  Point image(const T& a, Point x) const;
  bool is_id(const T& a) const { return a == genidx; }
  Point first_moved(const T& a) const;
};
using DiscGroup = Bsgs<DiscPolicy>;

struct DiscAction {
  DiscModule module;
  std::vector<DiscPolicy::T> images;
  DiscGroup image_group;
  Int image_order() const { return image_group.order(); }
};

// induced action of lattice isometries on D(L); each image is checked to
// preserve q on every element
DiscAction disc_action(const Lattice& l, const std::vector<IMat>& gens);
DiscPolicy::T disc_image(const DiscModule& d, const IMat& g);

template <class G>
std::pair<size_t, Int> orbit_and_stabilizer_order(const G& g, Point pt) {
  size_t o = g.orbit(pt).size();
  Int ord = g.order();
  return {o, Int(ord / (unsigned long)o)};
}

}  // namespace voalat
