#include "voalat/qform.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <regex>
#include <sstream>

namespace voalat {

Rat mod1(const Rat& x) {
  Int f;
  mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
  Rat r = x - Rat(f);
  r.canonicalize();
  return r;
}

long FiniteQuadraticModule::size() const {
  long s = 1;
  for (long d : divisors) s *= d;
  return s;
}

std::vector<long> FiniteQuadraticModule::coords(long idx) const {
  std::vector<long> c(divisors.size());
  for (size_t i = 0; i < divisors.size(); i++) c[i] = idx % divisors[i], idx /= divisors[i];
  return c;
}

long FiniteQuadraticModule::index(const std::vector<long>& c) const {
  long idx = 0;
  for (size_t i = divisors.size(); i-- > 0;) {
    long v = ((c[i] % divisors[i]) + divisors[i]) % divisors[i];
    idx = idx * divisors[i] + v;
  }
  return idx;
}

Rat FiniteQuadraticModule::q(const std::vector<long>& c) const {
  Rat s = 0;
  for (size_t i = 0; i < c.size(); i++) {
    if (!c[i]) continue;
    s += Rat(c[i] * c[i]) * qgen[i];
    for (size_t j = i + 1; j < c.size(); j++)
      if (c[j]) s += Rat(c[i] * c[j]) * bgen[i][j];
  }
  return mod1(s);
}

Rat FiniteQuadraticModule::b(const std::vector<long>& x, const std::vector<long>& y) const {
  Rat s = 0;
  for (size_t i = 0; i < x.size(); i++)
    for (size_t j = 0; j < y.size(); j++)
      if (x[i] && y[j]) s += Rat(x[i] * y[j]) * bgen[i][j];
  return mod1(s);
}

std::vector<long> FiniteQuadraticModule::q_numerators(long& den) const {
  Int d = 1;
  size_t k = divisors.size();
  for (size_t i = 0; i < k; i++) {
    mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), qgen[i].get_den_mpz_t());
    for (size_t j = 0; j < k; j++) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), bgen[i][j].get_den_mpz_t());
  }
  den = d.get_si();
  std::vector<long> qn(k), bn(k * k);
  for (size_t i = 0; i < k; i++) {
    qn[i] = Rat(qgen[i] * den).get_num().get_si();
    for (size_t j = 0; j < k; j++) bn[i * k + j] = Rat(bgen[i][j] * den).get_num().get_si();
  }
  long n = size();
  std::vector<long> out(n);
  std::vector<long> c(k, 0);
  for (long idx = 0; idx < n; idx++) {
    long s = 0;
    for (size_t i = 0; i < k; i++) {
      if (!c[i]) continue;
      s = (s + (c[i] * c[i] % den) * qn[i]) % den;
      for (size_t j = i + 1; j < k; j++)
        if (c[j]) s = (s + (c[i] * c[j] % den) * bn[i * k + j]) % den;
    }
    out[idx] = ((s % den) + den) % den;
    for (size_t i = 0; i < k; i++) {
      if (++c[i] < divisors[i]) break;
      c[i] = 0;
    }
  }
  return out;
}

long FiniteQuadraticModule::order_of(long idx) const {
  auto c = coords(idx);
  long o = 1;
  for (size_t i = 0; i < c.size(); i++) {
    long g = std::gcd(c[i], divisors[i]);
    o = std::lcm(o, divisors[i] / g);
  }
  return o;
}

FiniteQuadraticModule make_module(std::vector<long> divisors, std::vector<Rat> qgen,
                                  std::vector<std::vector<Rat>> bgen) {
  FiniteQuadraticModule m;
  std::vector<size_t> keep;
  for (size_t i = 0; i < divisors.size(); i++)
    if (divisors[i] > 1) keep.push_back(i);
  for (size_t i : keep) {
    m.divisors.push_back(divisors[i]);
    m.qgen.push_back(mod1(qgen[i]));
    std::vector<Rat> row;
    for (size_t j : keep) row.push_back(mod1(bgen[i][j]));
    m.bgen.push_back(row);
  }
  for (size_t i = 0; i < m.divisors.size(); i++) {
    Rat d = m.divisors[i];
    if (mod1(d * d * m.qgen[i]) != 0 || mod1(2 * d * m.qgen[i]) != 0)
      throw std::invalid_argument("q not defined on cyclic factor");
    if (mod1(2 * m.qgen[i] - m.bgen[i][i]) != 0) throw std::invalid_argument("b(x,x) != 2q(x)");
    for (size_t j = 0; j < m.divisors.size(); j++) {
      if (m.bgen[i][j] != m.bgen[j][i]) throw std::invalid_argument("b not symmetric");
      if (mod1(d * m.bgen[i][j]) != 0) throw std::invalid_argument("b not defined");
    }
  }
  return m;
}

FiniteQuadraticModule direct_sum(const FiniteQuadraticModule& a, const FiniteQuadraticModule& b) {
  FiniteQuadraticModule m;
  size_t ka = a.divisors.size(), kb = b.divisors.size();
  m.divisors = a.divisors;
  m.divisors.insert(m.divisors.end(), b.divisors.begin(), b.divisors.end());
  m.qgen = a.qgen;
  m.qgen.insert(m.qgen.end(), b.qgen.begin(), b.qgen.end());
  m.bgen.assign(ka + kb, std::vector<Rat>(ka + kb, Rat(0)));
  for (size_t i = 0; i < ka; i++)
    for (size_t j = 0; j < ka; j++) m.bgen[i][j] = a.bgen[i][j];
  for (size_t i = 0; i < kb; i++)
    for (size_t j = 0; j < kb; j++) m.bgen[ka + i][ka + j] = b.bgen[i][j];
  return m;
}

FiniteQuadraticModule negate(const FiniteQuadraticModule& m) {
  FiniteQuadraticModule r = m;
  for (auto& x : r.qgen) x = mod1(-x);
  for (auto& row : r.bgen)
    for (auto& x : row) x = mod1(-x);
  return r;
}

bool is_nondegenerate(const FiniteQuadraticModule& m) {
  size_t k = m.divisors.size();
  long n = m.size();
  for (long idx = 1; idx < n; idx++) {
    auto c = m.coords(idx);
    bool rad = true;
    for (size_t j = 0; j < k && rad; j++) {
      Rat s = 0;
      for (size_t i = 0; i < k; i++)
        if (c[i]) s += Rat(c[i]) * m.bgen[i][j];
      if (mod1(s) != 0) rad = false;
    }
    if (rad) return false;
  }
  return true;
}

namespace {

using Poly = std::vector<long long>;

Poly poly_divexact(Poly a, const Poly& b) {
  // a, b monic-compatible, low degree first; b monic
  int db = int(b.size()) - 1;
  while (!a.empty() && a.back() == 0) a.pop_back();
  int da = int(a.size()) - 1;
  if (da < db) return {0};
  Poly q(da - db + 1, 0);
  for (int i = da; i >= db; i--) {
    long long c = a[i];
    q[i - db] = c;
    if (c)
      for (int j = 0; j <= db; j++) a[i - db + j] -= c * b[j];
  }
  return q;
}

Poly cyclotomic(long n) {
  thread_local std::map<long, Poly> memo;
  auto it = memo.find(n);
  if (it != memo.end()) return it->second;
  Poly p(n + 1, 0);
  p[0] = -1, p[n] = 1;
  for (long d = 1; d < n; d++)
    if (n % d == 0) p = poly_divexact(p, cyclotomic(d));
  memo[n] = p;
  return p;
}

Poly reduce(Poly a, const Poly& phi) {
  int dp = int(phi.size()) - 1;
  for (int i = int(a.size()) - 1; i >= dp; i--) {
    long long c = a[i];
    if (!c) continue;
    for (int j = 0; j <= dp; j++) a[i - dp + j] -= c * phi[j];
  }
  a.resize(std::max(dp, 1));
  return a;
}

}  // namespace

int gauss_sum_arg(const FiniteQuadraticModule& m) {
  if (m.size() == 1) return 0;
  if (!is_nondegenerate(m)) throw DegenerateForm();
  long den;
  auto qn = m.q_numerators(den);
  long M = std::lcm(den, 8L);
  long step = M / den;
  Poly s(M, 0);
  for (long v : qn) s[(v * step) % M] += 1;
  Poly sq(M, 0);
  for (long i = 0; i < M; i++) {
    if (!s[i]) continue;
    for (long j = 0; j < M; j++)
      if (s[j]) sq[(i + j) % M] += s[i] * s[j];
  }
  Poly phi = cyclotomic(M);
  Poly lhs = reduce(sq, phi);
  long n = m.size();
  int s2 = -1;
  for (int t = 0; t < 4; t++) {
    Poly rhs(M, 0);
    rhs[(M / 4) * t] = n;
    if (reduce(rhs, phi) == lhs) s2 = t;
  }
  if (s2 < 0) throw DegenerateForm();
  long double re = 0;
  const long double tau = 2 * std::acos(-1.0L);
  for (long k = 0; k < M; k++)
    if (s[k]) re += s[k] * std::cos(tau * ((long double)k / M - (long double)s2 / 8));
  return re > 0 ? s2 : s2 + 4;
}

FiniteQuadraticModule primary_part(const FiniteQuadraticModule& m, long p) {
  std::vector<long> div;
  std::vector<Rat> qg;
  std::vector<long> mult;
  for (long d : m.divisors) {
    long pp = 1;
    while (d % p == 0) d /= p, pp *= p;
    div.push_back(pp);
    mult.push_back(d);
  }
  size_t k = m.divisors.size();
  std::vector<std::vector<Rat>> bg(k, std::vector<Rat>(k));
  for (size_t i = 0; i < k; i++) {
    qg.push_back(Rat(mult[i] * mult[i]) * m.qgen[i]);
    for (size_t j = 0; j < k; j++) bg[i][j] = Rat(mult[i] * mult[j]) * m.bgen[i][j];
  }
  return make_module(div, qg, bg);
}

std::vector<long> prime_factors(long n) {
  std::vector<long> ps;
  for (long p = 2; p * p <= n; p++)
    if (n % p == 0) {
      ps.push_back(p);
      while (n % p == 0) n /= p;
    }
  if (n > 1) ps.push_back(n);
  return ps;
}

std::vector<long> elementary_divisors(const std::vector<long>& divisors) {
  std::vector<long> e;
  for (long d : divisors)
    for (long p : prime_factors(d)) {
      long pp = 1;
      while (d % p == 0) d /= p, pp *= p;
      e.push_back(pp);
    }
  std::sort(e.begin(), e.end());
  return e;
}

Fingerprint fingerprint(const FiniteQuadraticModule& m) {
  Fingerprint f;
  f.elementary = elementary_divisors(m.divisors);
  long den;
  auto qn = m.q_numerators(den);
  std::map<long, long> h;
  for (long v : qn) h[v]++;
  for (auto& [v, c] : h) {
    Rat r(v, den);
    r.canonicalize();
    f.qvalues[r] = c;
  }
  if (m.size() > 1) {
    for (long p : prime_factors(m.size())) f.gauss[p] = gauss_sum_arg(primary_part(m, p));
    f.total = gauss_sum_arg(m);
  }
  return f;
}

std::string Fingerprint::str() const {
  std::ostringstream os;
  os << "group";
  std::map<long, int> cnt;
  for (long e : elementary) cnt[e]++;
  for (auto& [e, c] : cnt) os << " " << e << "x" << c;
  os << " | q";
  for (auto& [v, c] : qvalues) os << " " << v.get_str() << ":" << c;
  os << " | gauss";
  for (auto& [p, s] : gauss) os << " " << p << ":" << s;
  os << " | total " << total;
  return os.str();
}

namespace {

long legendre(long a, long p) {
  a %= p;
  if (a < 0) a += p;
  long r = 1, e = (p - 1) / 2, b = a;
  while (e) {
    if (e & 1) r = r * b % p;
    b = b * b % p;
    e >>= 1;
  }
  return r == 1 ? 1 : -1;
}

int kron2(long a) {
  long r = ((a % 8) + 8) % 8;
  return (r == 1 || r == 7) ? 1 : -1;
}

}  // namespace

FiniteQuadraticModule module_from_symbol(const std::string& symbol) {
  std::istringstream is(symbol);
  std::string tok;
  static const std::regex re(R"(^(\d+)\^\{?([+-])(\d+)\}?(?:_\{?(II|\d+)\}?)?$)");
  std::vector<long> div;
  std::vector<Rat> qg;
  std::vector<std::pair<size_t, size_t>> pairs;  // off-diagonal b for U/V planes
  std::vector<Rat> pairb;
  while (is >> tok) {
    std::smatch mt;
    if (!std::regex_match(tok, mt, re)) throw std::invalid_argument("bad symbol token " + tok);
    long q = std::stol(mt[1]);
    int eps = mt[2] == "+" ? 1 : -1;
    long n = std::stol(mt[3]);
    std::string t = mt[4];
    auto ps = prime_factors(q);
    if (ps.size() != 1) throw std::invalid_argument("not a prime power " + tok);
    long p = ps[0];
    if (p != 2) {
      if (!t.empty()) throw std::invalid_argument("subscript on odd prime " + tok);
      long nonres = 2;
      while (legendre(nonres, p) == 1) nonres++;
      for (long i = 0; i < n; i++) {
        long a = (i == n - 1 && eps < 0) ? nonres : 1;
        // q(x) = c x^2 / q with 2c = a mod q
        long c = (a * ((q + 1) / 2)) % q;
        div.push_back(q);
        qg.push_back(Rat(c, q));
      }
    } else if (t == "II") {
      if (n % 2) throw std::invalid_argument("odd rank type II " + tok);
      for (long i = 0; i < n / 2; i++) {
        bool v = (i == n / 2 - 1 && eps < 0);
        size_t at = div.size();
        div.push_back(q), div.push_back(q);
        qg.push_back(v ? Rat(1, q) : Rat(0)), qg.push_back(v ? Rat(1, q) : Rat(0));
        pairs.push_back({at, at + 1});
        pairb.push_back(Rat(1, q));
      }
    } else {
      if (t.empty()) throw std::invalid_argument("missing oddity " + tok);
      long odd = std::stol(t) % 8;
      // search a_1..a_n odd units with sum = odd mod 8 and sign eps
      std::vector<long> a(n, 1);
      bool found = false;
      std::vector<long> units = {1, 3, 5, 7};
      std::function<bool(long)> rec = [&](long i) -> bool {
        if (i == n) {
          long s = 0;
          int e = 1;
          for (long x : a) s += x, e *= kron2(x);
          return (s % 8) == odd && e == eps;
        }
        for (long u : units) {
          a[i] = u;
          if (rec(i + 1)) return true;
        }
        return false;
      };
      found = n > 0 && rec(0);
      if (!found) throw std::invalid_argument("no realization for " + tok);
      for (long x : a) {
        div.push_back(q);
        qg.push_back(Rat(x, 2 * q));
      }
    }
  }
  size_t k = div.size();
  std::vector<std::vector<Rat>> bg(k, std::vector<Rat>(k, Rat(0)));
  for (size_t i = 0; i < k; i++) bg[i][i] = 2 * qg[i];
  for (size_t i = 0; i < pairs.size(); i++) {
    bg[pairs[i].first][pairs[i].second] = pairb[i];
    bg[pairs[i].second][pairs[i].first] = pairb[i];
  }
  return make_module(div, qg, bg);
}

}  // namespace voalat
