#include "voalat/shortvec.hpp"

#include <algorithm>
#include <cmath>

namespace voalat {

namespace {

Int round_rat(const Rat& x) {
  Rat h = x + Rat(1, 2);
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
  return f;
}

struct Gso {
  std::vector<std::vector<Rat>> mu;
  std::vector<Rat> b;
};

Gso gso(const RatMat& g) {
  int n = g.rows;
  Gso r{std::vector<std::vector<Rat>>(n, std::vector<Rat>(n)), std::vector<Rat>(n)};
  for (int i = 0; i < n; i++) {
    for (int j = 0; j < i; j++) {
      Rat s = g(i, j);
      for (int k = 0; k < j; k++) s -= r.mu[j][k] * r.mu[i][k] * r.b[k];
      r.mu[i][j] = s / r.b[j];
    }
    Rat s = g(i, i);
    for (int k = 0; k < i; k++) s -= r.mu[i][k] * r.mu[i][k] * r.b[k];
    r.b[i] = s;
  }
  return r;
}

}  // namespace

LllResult lll_reduce(const Lattice& l, const Rat& delta) {
  int n = l.rank();
  IntMat t = IntMat::identity(n);
  RatMat g = l.gram;
  Gso s = gso(g);
  auto reduce = [&](int k, int j) {
    Int r = round_rat(s.mu[k][j]);
    if (r == 0) return;
    for (int c = 0; c < n; c++) t(k, c) -= r * t(j, c);
    Rat rr = r;
    Rat gkk = g(k, k) - 2 * rr * g(k, j) + rr * rr * g(j, j);
    for (int i = 0; i < n; i++) {
      if (i == k) continue;
      g(k, i) -= rr * g(j, i);
      g(i, k) = g(k, i);
    }
    g(k, k) = gkk;
    s.mu[k][j] -= rr;
    for (int i = 0; i < j; i++) s.mu[k][i] -= rr * s.mu[j][i];
  };
  int k = 1;
  while (k < n) {
    reduce(k, k - 1);
    if (s.b[k] < (delta - s.mu[k][k - 1] * s.mu[k][k - 1]) * s.b[k - 1]) {
      for (int c = 0; c < n; c++) std::swap(t(k, c), t(k - 1, c));
      for (int c = 0; c < n; c++) std::swap(g(k, c), g(k - 1, c));
      for (int c = 0; c < n; c++) std::swap(g(c, k), g(c, k - 1));
      s = gso(g);
      k = std::max(1, k - 1);
    } else {
      for (int j = k - 2; j >= 0; j--) reduce(k, j);
      k++;
    }
  }
  return {t, Lattice(g, l.label)};
}

VectorList vectors_up_to(const Lattice& l, const Rat& bound, size_t cap) {
  if (bound <= 0) throw std::invalid_argument("bound must be positive");
  int n = l.rank();
  LllResult red = lll_reduce(l);
  const RatMat& g = red.reduced.gram;
  Gso s = gso(g);

  // volume estimate of the count (pairs), used as an early guard
  {
    long double logv = n / 2.0L * std::log(M_PIl) - std::lgamma(n / 2.0L + 1) +
                       n / 2.0L * std::log(bound.get_d()) - 0.5L * std::log(l.det().get_d());
    if (logv > std::log((long double)cap) + std::log(8.0L)) throw BoundTooLarge();
  }

  Int den = common_denominator(g);
  std::vector<long> gi(n * n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) {
      Rat x = g(i, j) * den;
      gi[i * n + j] = x.get_num().get_si();
    }
  Rat bs = bound * den;
  Int bnum;
  mpz_fdiv_q(bnum.get_mpz_t(), bs.get_num_mpz_t(), bs.get_den_mpz_t());
  __int128 bint = (__int128)bnum.get_si();

  std::vector<long double> q(n);
  std::vector<std::vector<long double>> mu(n, std::vector<long double>(n));
  for (int i = 0; i < n; i++) {
    q[i] = s.b[i].get_d();
    for (int j = 0; j < i; j++) mu[i][j] = s.mu[i][j].get_d();
  }
  long double fb = bound.get_d() * (1 + 1e-9L) + 1e-9L;

  std::vector<long> x(n, 0);
  std::vector<std::pair<long, IVec>> found;
  std::vector<long> tt(n * n);
  for (int i = 0; i < n; i++)
    for (int j = 0; j < n; j++) tt[i * n + j] = red.t(i, j).get_si();

  auto emit = [&] {
    __int128 nn = 0;
    for (int i = 0; i < n; i++) {
      if (!x[i]) continue;
      __int128 r = 0;
      for (int j = 0; j < n; j++) r += (__int128)gi[i * n + j] * x[j];
      nn += r * x[i];
    }
    if (nn <= 0 || nn > bint) return;
    IVec v(n, 0);
    for (int i = 0; i < n; i++)
      if (x[i])
        for (int j = 0; j < n; j++) v[j] += x[i] * tt[i * n + j];
    for (int j = 0; j < n; j++)
      if (v[j]) {
        if (v[j] < 0)
          for (auto& c : v) c = -c;
        break;
      }
    found.emplace_back((long)nn, std::move(v));
    if (found.size() > cap) throw BoundTooLarge();
  };

  // x_i + sum_{j>i} mu[j][i] x_j; positive-first convention on leading zeros
  auto rec = [&](auto&& self, int i, long double rem, bool all_zero) -> void {
    long double c = 0;
    for (int j = i + 1; j < n; j++) c -= mu[j][i] * x[j];
    long double r = std::sqrt(std::max(0.0L, rem / q[i]));
    long lo = (long)std::ceil(c - r - 1e-9L), hi = (long)std::floor(c + r + 1e-9L);
    if (all_zero) lo = std::max(lo, 0L);
    for (long v = lo; v <= hi; v++) {
      long double d = v - c;
      long double nr = rem - q[i] * d * d;
      if (nr < -1e-9L * (1 + fb)) continue;
      x[i] = v;
      if (i == 0) {
        if (!(all_zero && v == 0)) emit();
      } else {
        self(self, i - 1, nr, all_zero && v == 0);
      }
    }
    x[i] = 0;
  };
  rec(rec, n - 1, fb, true);

  VectorList out;
  out.lattice = l;
  out.bound = bound;
  std::sort(found.begin(), found.end());
  for (auto& [nm, v] : found) {
    Rat r(Int(nm), den);
    r.canonicalize();
    out.norms.push_back(r);
    out.vectors.push_back(std::move(v));
  }
  return out;
}

std::map<Rat, size_t> norm_histogram(const VectorList& v) {
  std::map<Rat, size_t> h;
  for (auto& n : v.norms) h[n]++;
  return h;
}

}  // namespace voalat
