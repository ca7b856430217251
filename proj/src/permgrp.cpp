#include "voalat/permgrp.hpp"

#include <regex>
#include <sstream>

namespace voalat {

PermGroup make_perm_group(size_t degree, const std::vector<Perm>& gens) {
  return PermGroup(std::make_shared<PermPolicy>(degree), gens);
}

Perm parse_cycles(const std::string& s, size_t degree) {
  Perm p(degree);
  for (size_t i = 0; i < degree; i++) p[i] = i;
  static const std::regex cyc(R"(\(([^()]*)\))");
  for (auto it = std::sregex_iterator(s.begin(), s.end(), cyc); it != std::sregex_iterator(); ++it) {
    std::vector<Point> c;
    std::stringstream ss((*it)[1].str());
    std::string t;
    while (std::getline(ss, t, ',')) {
      long v = std::stol(t);
      if (v < 1 || (size_t)v > degree) throw std::invalid_argument("cycle point out of range");
      c.push_back(v - 1);
    }
    for (size_t i = 0; i < c.size(); i++) p[c[i]] = c[(i + 1) % c.size()];
  }
  return p;
}

SignedPoints::SignedPoints(const std::vector<IVec>& vs) {
  n = vs.empty() ? 0 : vs[0].size();
  for (auto& v : vs) {
    IVec m = v;
    for (auto& x : m) x = -x;
    index[v] = pts.size();
    pts.push_back(v);
    index[m] = pts.size();
    pts.push_back(m);
  }
}

MatPolicy::MatPolicy(std::shared_ptr<const SignedPoints> s, RatMat g)
    : n(s->n), sp(std::move(s)), gram(std::move(g)) {
  ginv = rational_inverse(gram);
}

IMat MatPolicy::id() const {
  IMat m(n * n, 0);
  for (int i = 0; i < n; i++) m[i * n + i] = 1;
  return m;
}

IMat MatPolicy::mul(const IMat& a, const IMat& b) const {
  IMat r(n * n, 0);
  for (int i = 0; i < n; i++)
    for (int k = 0; k < n; k++) {
      long x = a[i * n + k];
      if (!x) continue;
      for (int j = 0; j < n; j++) r[i * n + j] += x * b[k * n + j];
    }
  return r;
}

IMat MatPolicy::inverse(const IMat& a) const {
  // g^{-1} = G g^T G^{-1}
  RatMat g = to_rat(from_imat(a, n));
  return to_imat(to_int(gram * transpose(g) * ginv));
}

Point MatPolicy::image(const IMat& a, Point x) const {
  const IVec& v = sp->pts[x];
  IVec y(n, 0);
  for (int k = 0; k < n; k++) {
    long c = v[k];
    if (!c) continue;
    for (int j = 0; j < n; j++) y[j] += c * a[k * n + j];
  }
  long r = sp->find(y);
  if (r < 0) throw NotClosed();
  return r;
}

bool MatPolicy::is_id(const IMat& a) const {
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++)
      if (a[i * n + j] != (i == j)) return false;
  return true;
}

Point MatPolicy::first_moved(const IMat& a) const {
  for (Point x = 0; x < sp->pts.size(); x++)
    if (image(a, x) != x) return x;
  return 0;
}

IMat to_imat(const IntMat& m) {
  IMat r(m.a.size());
  for (size_t i = 0; i < m.a.size(); i++) {
    if (!m.a[i].fits_slong_p()) throw std::overflow_error("matrix entry too large");
    r[i] = m.a[i].get_si();
  }
  return r;
}

IntMat from_imat(const IMat& m, int n) {
  IntMat r(n, n);
  for (int i = 0; i < n * n; i++) r.a[i] = m[i];
  return r;
}

bool preserves_gram(const IMat& g, const RatMat& gram) {
  RatMat r = to_rat(from_imat(g, gram.rows));
  return r * gram * transpose(r) == gram;
}

MatGroup from_matrix_action(const std::vector<IMat>& gens, const Lattice& l,
                            const std::vector<IVec>& points, std::vector<Point> base, bool trusted) {
  RatMat pm(points.size(), l.rank());
  for (size_t i = 0; i < points.size(); i++)
    for (int j = 0; j < l.rank(); j++) pm(i, j) = points[i][j];
  if (rank(pm) != l.rank()) throw NotFaithful();
  auto sp = std::make_shared<SignedPoints>(points);
  auto pol = std::make_shared<MatPolicy>(sp, l.gram);
  for (auto& g : gens) {
    if (!preserves_gram(g, l.gram)) throw std::invalid_argument("generator is not an isometry");
    for (Point x = 0; x < sp->pts.size(); x++) pol->image(g, x);  // throws NotClosed
  }
  return MatGroup(pol, gens, base, trusted);
}

DiscPolicy::DiscPolicy(std::vector<long> divisors) : div(std::move(divisors)) {
  for (long d : div) size *= d;
  long m = 1;
  for (long d : div) {
    genidx.push_back(m);
    m *= d;
  }
}

std::vector<long> DiscPolicy::coords(Point x) const {
  std::vector<long> c(div.size());
  for (size_t i = 0; i < div.size(); i++) c[i] = x % div[i], x /= div[i];
  return c;
}

Point DiscPolicy::index(const std::vector<long>& c) const {
  long idx = 0;
  for (size_t i = div.size(); i-- > 0;) idx = idx * div[i] + ((c[i] % div[i]) + div[i]) % div[i];
  return idx;
}

Point DiscPolicy::image(const T& a, Point x) const {
  std::vector<long> c = coords(x), r(div.size(), 0);
  for (size_t j = 0; j < div.size(); j++) {
    if (!c[j]) continue;
    std::vector<long> aj = coords(a[j]);
    for (size_t i = 0; i < div.size(); i++) r[i] = (r[i] + c[j] * aj[i]) % div[i];
  }
  return index(r);
}

DiscPolicy::T DiscPolicy::mul(const T& a, const T& b) const {
  T r(a.size());
  for (size_t j = 0; j < a.size(); j++) r[j] = image(b, a[j]);
  return r;
}

DiscPolicy::T DiscPolicy::inverse(const T& a) const {
  std::vector<Point> inv(size, 0);
  std::vector<char> hit(size, 0);
  for (Point x = 0; x < size; x++) {
    Point y = image(a, x);
    if (hit[y]) throw std::invalid_argument("not an automorphism");
    hit[y] = 1;
    inv[y] = x;
  }
  T r(genidx.size());
  for (size_t j = 0; j < genidx.size(); j++) r[j] = inv[genidx[j]];
  return r;
}

Point DiscPolicy::first_moved(const T& a) const {
  for (size_t j = 0; j < a.size(); j++)
    if (a[j] != genidx[j]) return genidx[j];
  return 0;
}

DiscPolicy::T disc_image(const DiscModule& d, const IMat& g) {
  int n = d.lat.rank();
  DiscPolicy::T img;
  DiscPolicy pol(d.m.divisors);
  for (int a = 0; a < d.gens.rows; a++) {
    std::vector<Rat> y(n);
    for (int j = 0; j < n; j++) {
      Rat s = 0;
      for (int k = 0; k < n; k++)
        if (d.gens(a, k) != 0 && g[k * n + j]) s += d.gens(a, k) * g[k * n + j];
      y[j] = s;
    }
    img.push_back(pol.index(d.coords_of(y)));
  }
  return img;
}

DiscAction disc_action(const Lattice& l, const std::vector<IMat>& gens) {
  DiscAction act;
  act.module = disc_data(l);
  const auto& m = act.module.m;
  auto pol = std::make_shared<DiscPolicy>(m.divisors);
  long den;
  std::vector<long> qn = m.q_numerators(den);
  for (auto& g : gens) {
    auto img = disc_image(act.module, g);
    for (Point x = 0; x < pol->size; x++)
      if (qn[pol->image(img, x)] != qn[x]) throw std::logic_error("induced map does not preserve q");
    act.images.push_back(img);
  }
  act.image_group = DiscGroup(pol, act.images, pol->genidx);
  return act;
}

}  // namespace voalat
