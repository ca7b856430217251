#include "voalat/isometry.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <thread>
#include <map>
#include <sstream>

namespace voalat {

namespace {

bool gains_rank(std::vector<std::vector<Rat>>& ech, const IVec& v) {
  std::vector<Rat> r(v.begin(), v.end());
  for (auto& e : ech) {
    int p = 0;
    while (e[p] == 0) p++;
    if (r[p] != 0) {
      Rat f = r[p] / e[p];
      for (size_t k = p; k < r.size(); k++) r[k] -= f * e[k];
    }
  }
  for (auto& x : r)
    if (x != 0) {
      ech.push_back(r);
      return true;
    }
  return false;
}

struct Side {
  int n = 0;
  std::shared_ptr<SignedPoints> sp;
  std::vector<std::vector<long>> gx;  // D*G*x per point
  std::vector<int> type;
  std::vector<long> norm;
  long ip(Point x, Point y) const {
    const IVec& v = sp->pts[x];
    const auto& w = gx[y];
    long s = 0;
    for (int k = 0; k < n; k++) s += v[k] * w[k];
    return s;
  }
};

Side make_side(const VectorList& vl, const Int& den, const Rat& ref_norm,
               std::map<std::vector<long>, int>& types) {
  Side s;
  const Lattice& l = vl.lattice;
  s.n = l.rank();
  s.sp = std::make_shared<SignedPoints>(vl.vectors);
  std::vector<long> gi(s.n * s.n);
  for (int i = 0; i < s.n; i++)
    for (int j = 0; j < s.n; j++) gi[i * s.n + j] = Rat(l.gram(i, j) * den).get_num().get_si();
  size_t np = s.sp->pts.size();
  s.gx.resize(np);
  s.norm.resize(np);
  for (size_t p = 0; p < np; p++) {
    std::vector<long> w(s.n, 0);
    const IVec& v = s.sp->pts[p];
    for (int i = 0; i < s.n; i++)
      for (int j = 0; j < s.n; j++) w[i] += gi[i * s.n + j] * v[j];
    s.gx[p] = w;
  }
  for (size_t p = 0; p < np; p++) s.norm[p] = s.ip(p, p);
  long refn = Rat(ref_norm * den).get_num().get_si();
  std::vector<Point> ref;
  for (size_t p = 0; p < np; p++)
    if (s.norm[p] == refn) ref.push_back(p);
  s.type.resize(np);
  for (size_t p = 0; p < np; p++) {
    std::map<long, long> h;
    for (Point r : ref) h[s.ip(p, r)]++;
    std::vector<long> key{s.norm[p]};
    for (auto& [a, c] : h) key.push_back(a), key.push_back(c);
    auto it = types.emplace(key, (int)types.size()).first;
    s.type[p] = it->second;
  }
  return s;
}

// search state shared by automorphism and isometry searches
struct Engine {
  const Side& src;
  const Side& tgt;
  int n;
  std::vector<Point> b;                    // source basis points
  std::vector<std::vector<long>> ipb;      // ipb[k][j] = <b_k, b_j>
  std::vector<std::vector<size_t>> fsz;    // fsz[j+1][k]: count after fixing b_0..b_j
  std::vector<std::vector<Point>> c0;      // target candidates by type
  std::vector<std::vector<__int128>> adj;  // B^{-1} = adj / bden
  __int128 bden = 1;

  Engine(const Side& s, const Side& t) : src(s), tgt(t), n(s.n) {}

  void choose_basis() {
    std::vector<std::vector<Rat>> ech;
    size_t np = src.sp->pts.size();
    std::vector<std::vector<long>> key(np);
    for (size_t p = 0; p < np; p++) key[p] = {src.type[p]};
    for (int i = 0; i < n; i++) {
      std::map<std::vector<long>, size_t> cnt;
      for (size_t p = 0; p < np; p++) cnt[key[p]]++;
      std::vector<std::pair<size_t, Point>> order;
      for (size_t p = 0; p < np; p++) order.push_back({cnt[key[p]], (Point)p});
      std::sort(order.begin(), order.end());
      Point pick = 0;
      bool ok = false;
      for (auto& [c, p] : order) {
        std::vector<std::vector<Rat>> e2 = ech;
        if (gains_rank(e2, src.sp->pts[p])) {
          ech = e2;
          pick = p;
          ok = true;
          break;
        }
      }
      if (!ok) throw std::logic_error("vector set does not span");
      b.push_back(pick);
      for (size_t p = 0; p < np; p++) key[p].push_back(src.ip(p, pick));
    }
    ipb.assign(n, std::vector<long>(n));
    for (int k = 0; k < n; k++)
      for (int j = 0; j < n; j++) ipb[k][j] = src.ip(b[k], b[j]);
    // fingerprint sizes on the source
    std::vector<std::vector<Point>> f(n);
    for (int k = 0; k < n; k++)
      for (size_t p = 0; p < np; p++)
        if (src.type[p] == src.type[b[k]]) f[k].push_back(p);
    fsz.assign(n + 1, std::vector<size_t>(n, 0));
    for (int k = 0; k < n; k++) fsz[0][k] = f[k].size();
    for (int j = 0; j < n; j++)
      for (int k = j + 1; k < n; k++) {
        std::vector<Point> g;
        for (Point x : f[k])
          if (src.ip(x, b[j]) == ipb[k][j]) g.push_back(x);
        f[k] = g;
        fsz[j + 1][k] = g.size();
      }
    // B^{-1} as adjugate over determinant
    IntMat bm(n, n);
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) bm(i, j) = src.sp->pts[b[i]][j];
    RatMat inv = rational_inverse(to_rat(bm));
    Int d = common_denominator(inv);
    bden = (__int128)d.get_si();
    adj.assign(n, std::vector<__int128>(n));
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) adj[i][j] = (__int128)Rat(inv(i, j) * d).get_num().get_si();
  }

  void init_candidates() {
    c0.assign(n, {});
    for (int k = 0; k < n; k++)
      for (size_t p = 0; p < tgt.sp->pts.size(); p++)
        if (tgt.type[p] == src.type[b[k]]) c0[k].push_back(p);
  }

  // restrict candidates for positions > j after y_j = y; false if counts mismatch
  bool filter(const std::vector<std::vector<Point>>& c, int j, Point y,
              std::vector<std::vector<Point>>& out) const {
    out.assign(n, {});
    for (int k = j + 1; k < n; k++) {
      auto& o = out[k];
      o.reserve(fsz[j + 1][k]);
      for (Point x : c[k])
        if (tgt.ip(x, y) == ipb[k][j]) {
          o.push_back(x);
          if (o.size() > fsz[j + 1][k]) return false;
        }
      if (o.size() != fsz[j + 1][k]) return false;
    }
    return true;
  }

  bool leaf(const std::vector<Point>& y, IMat& g) const {
    g.assign(n * n, 0);
    for (int i = 0; i < n; i++)
      for (int j = 0; j < n; j++) {
        __int128 s = 0;
        for (int k = 0; k < n; k++) s += adj[i][k] * tgt.sp->pts[y[k]][j];
        if (s % bden != 0) return false;
        g[i * n + j] = (long)(s / bden);
      }
    return true;
  }

  bool extend(int j, const std::vector<std::vector<Point>>& c, std::vector<Point>& y, IMat& g) const {
    if (j == n) return leaf(y, g);
    std::vector<std::vector<Point>> nc;
    for (Point x : c[j]) {
      if (!filter(c, j, x, nc)) continue;
      y[j] = x;
      if (extend(j + 1, nc, y, g)) return true;
    }
    return false;
  }
};

// integer row echelon form, grown one vector at a time
struct ZSpan {
  int n;
  std::vector<std::vector<Int>> row;  // row[c]: pivot in column c, or empty
  explicit ZSpan(int dim) : n(dim), row(dim) {}
  void add(const IVec& v0) {
    std::vector<Int> v(v0.begin(), v0.end());
    for (int c = 0; c < n; c++) {
      if (v[c] == 0) continue;
      if (row[c].empty()) {
        if (v[c] < 0)
          for (auto& x : v) x = -x;
        row[c] = v;
        return;
      }
      auto& r = row[c];
      // (r, v) -> (g-row, 0 at column c)
      Int g, s, t;
      mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), r[c].get_mpz_t(), v[c].get_mpz_t());
      Int a = r[c] / g, b = v[c] / g;
      std::vector<Int> nr(n), nv(n);
      for (int k = c; k < n; k++) {
        nr[k] = s * r[k] + t * v[k];
        nv[k] = a * v[k] - b * r[k];
      }
      r = std::move(nr);
      v = std::move(nv);
    }
  }
  bool unimodular() const {
    for (int c = 0; c < n; c++)
      if (row[c].empty() || abs(row[c][c]) != 1) return false;
    return true;
  }
};

VectorList truncate(const VectorList& v, const Rat& bound) {
  VectorList r;
  r.lattice = v.lattice;
  r.bound = bound;
  for (size_t i = 0; i < v.size(); i++)
    if (v.norms[i] <= bound) r.vectors.push_back(v.vectors[i]), r.norms.push_back(v.norms[i]);
  return r;
}

Rat smallest_shell(const VectorList& v) {
  auto h = norm_histogram(v);
  Rat best = h.begin()->first;
  for (auto& [k, c] : h)
    if (c < h[best]) best = k;
  return best;
}

std::vector<Point> orbit_of(const MatPolicy& pol, const std::vector<IMat>& gens, Point p) {
  std::vector<Point> o{p};
  std::unordered_map<Point, char> seen{{p, 1}};
  for (size_t i = 0; i < o.size(); i++)
    for (auto& g : gens) {
      Point q = pol.image(g, o[i]);
      if (seen.emplace(q, 1).second) o.push_back(q);
    }
  return o;
}

uint64_t fnv(const std::string& s) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) h = (h ^ c) * 1099511628211ull;
  return h;
}

bool load_cache(const std::string& path, const Lattice& l, IsometryGenSet& out) {
  std::ifstream in(path);
  if (!in) return false;
  std::string head;
  std::getline(in, head);
  if (head != "voalat-aut v1") return false;
  std::string key, bnd;
  int n;
  size_t k;
  in >> key >> n;
  if (key != "rank" || n != l.rank()) return false;
  in >> key >> bnd;
  if (key != "bound") return false;
  out.lattice = l;
  out.vector_set_bound = Rat(bnd);
  out.vector_set_bound.canonicalize();
  in >> key;
  if (key != "base") return false;
  out.base.assign(n, IVec(n));
  for (auto& v : out.base)
    for (auto& x : v) in >> x;
  in >> key >> k;
  if (key != "gens") return false;
  out.generators.assign(k, IMat(n * n));
  for (auto& g : out.generators)
    for (auto& x : g) in >> x;
  if (!in) return false;
  for (auto& g : out.generators)
    if (!preserves_gram(g, l.gram)) return false;
  out.points = truncate(vectors_up_to(l, out.vector_set_bound, 10000000), out.vector_set_bound).vectors;
  MatGroup grp = out.group();
  out.orbit_sizes = grp.orbit_sizes();
  return true;
}

void save_cache(const std::string& path, const IsometryGenSet& s) {
  std::string tmp =
      path + ".tmp" + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream o(tmp);
    int n = s.lattice.rank();
    o << "voalat-aut v1\nrank " << n << "\nbound " << s.vector_set_bound.get_str() << "\nbase\n";
    for (auto& v : s.base) {
      for (auto x : v) o << x << ' ';
      o << "\n";
    }
    o << "gens " << s.generators.size() << "\n";
    for (auto& g : s.generators) {
      for (auto x : g) o << x << ' ';
      o << "\n";
    }
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

std::string cache_key(const Lattice& l) {
  Lattice c = l;
  c.label.clear();
  char buf[32];
  snprintf(buf, sizeof buf, "%016llx", (unsigned long long)fnv(serialize(c)));
  return buf;
}

VectorList characteristic_set(const Lattice& l, size_t cap) {
  int n = l.rank();
  LllResult red = lll_reduce(l);
  Rat bound = red.reduced.gram(0, 0);
  for (int i = 0; i < n; i++) bound = std::min(bound, Rat(red.reduced.gram(i, i)));
  for (int attempt = 0; attempt < 64; attempt++) {
    VectorList v;
    try {
      v = vectors_up_to(l, bound, cap);
    } catch (const BoundTooLarge&) {
      throw VectorSetTooLarge();
    }
    // shells up to nb must generate l, not only span it: otherwise the
    // search would run over maps of a sublattice
    std::vector<size_t> ord(v.size());
    for (size_t i = 0; i < ord.size(); i++) ord[i] = i;
    std::stable_sort(ord.begin(), ord.end(), [&](size_t a, size_t b) { return v.norms[a] < v.norms[b]; });
    ZSpan span(n);
    for (size_t k = 0; k < ord.size(); k++) {
      span.add(v.vectors[ord[k]]);
      bool shell_end = k + 1 == ord.size() || v.norms[ord[k + 1]] != v.norms[ord[k]];
      if (shell_end && span.unimodular()) return truncate(v, v.norms[ord[k]]);
    }
    bound *= 2;
  }
  throw VectorSetTooLarge();
}

Int IsometryGenSet::order() const {
  Int o = 1;
  for (auto s : orbit_sizes) o *= (unsigned long)s;
  return o;
}

MatGroup IsometryGenSet::group() const {
  auto sp = std::make_shared<SignedPoints>(points);
  std::vector<Point> bp;
  for (auto& v : base) {
    long p = sp->find(v);
    if (p < 0) throw std::logic_error("base vector not in point set");
    bp.push_back(p);
  }
  return MatGroup(std::make_shared<MatPolicy>(sp, lattice.gram), generators, bp, true);
}

IsometryGenSet aut_gens(const Lattice& l, const IsometryOptions& opt) {
  IsometryGenSet out;
  std::string path;
  if (!opt.cache_dir.empty()) {
    path = opt.cache_dir + "/" + cache_key(l) + ".aut";
    if (load_cache(path, l, out)) return out;
    out = {};
  }
  VectorList s = characteristic_set(l, opt.cap);
  Int den = common_denominator(l.gram);
  std::map<std::vector<long>, int> types;
  Side side = make_side(s, den, smallest_shell(s), types);
  Engine e(side, side);
  e.choose_basis();
  e.init_candidates();
  int n = l.rank();
  MatPolicy pol(side.sp, l.gram);

  // identity-prefix candidate sets per level
  std::vector<std::vector<std::vector<Point>>> pre(n + 1);
  pre[0] = e.c0;
  for (int i = 0; i < n; i++)
    if (!e.filter(pre[i], i, e.b[i], pre[i + 1])) throw std::logic_error("basis fails its own fingerprint");

  std::vector<IMat> gens;
  std::vector<size_t> orb(n);
  std::vector<Point> y(n);
  for (int i = n - 1; i >= 0; i--) {
    std::vector<Point> o = orbit_of(pol, gens, e.b[i]);
    std::unordered_map<Point, char> in_orbit, excluded;
    for (Point p : o) in_orbit[p] = 1;
    for (int k = 0; k < i; k++) y[k] = e.b[k];
    for (Point c : pre[i][i]) {
      if (in_orbit.count(c) || excluded.count(c)) continue;
      std::vector<std::vector<Point>> nc;
      IMat g;
      bool found = false;
      if (e.filter(pre[i], i, c, nc)) {
        y[i] = c;
        found = e.extend(i + 1, nc, y, g);
      }
      if (found) {
        gens.push_back(g);
        for (Point p : orbit_of(pol, gens, e.b[i])) in_orbit[p] = 1;
      } else {
        for (Point p : orbit_of(pol, gens, c)) excluded[p] = 1;
      }
    }
    orb[i] = in_orbit.size();
  }
  out.lattice = l;
  out.generators = gens;
  out.vector_set_bound = s.bound;
  out.points = s.vectors;
  for (Point p : e.b) out.base.push_back(side.sp->pts[p]);
  out.orbit_sizes = orb;
  if (!path.empty()) {
    std::filesystem::create_directories(opt.cache_dir);
    save_cache(path, out);
  }
  return out;
}

std::optional<IMat> isometric(const Lattice& a, const Lattice& b, const IsometryOptions& opt) {
  if (a.rank() != b.rank() || a.det() != b.det()) return std::nullopt;
  VectorList sa = characteristic_set(a, opt.cap);
  VectorList sb;
  try {
    sb = truncate(vectors_up_to(b, sa.bound, opt.cap), sa.bound);
  } catch (const BoundTooLarge&) {
    throw VectorSetTooLarge();
  }
  if (norm_histogram(sa) != norm_histogram(sb)) return std::nullopt;
  Int den = common_denominator(a.gram);
  Int db = common_denominator(b.gram);
  mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), db.get_mpz_t());
  std::map<std::vector<long>, int> types;
  Rat ref = smallest_shell(sa);
  Side A = make_side(sa, den, ref, types);
  Side B = make_side(sb, den, ref, types);
  Engine e(A, B);
  e.choose_basis();
  e.init_candidates();
  std::vector<Point> y(a.rank());
  IMat g;
  for (int k = 0; k < a.rank(); k++)
    if (e.c0[k].size() != e.fsz[0][k]) return std::nullopt;
  // equal determinants make an integral Gram-preserving g unimodular
  if (!e.extend(0, e.c0, y, g)) return std::nullopt;
  return g;
}

}  // namespace voalat
