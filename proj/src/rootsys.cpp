#include "voalat/rootsys.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <regex>
#include <set>
#include <sstream>

namespace voalat {

bool is_prime(long p) {
  if (p < 2) return false;
  for (long d = 2; d * d <= p; d++)
    if (p % d == 0) return false;
  return true;
}

int RootSystemType::rank() const {
  int r = 0;
  for (auto& c : comps) r += c.rank;
  return r;
}

namespace {

long ratio(char f) { return f == 'G' ? 3 : (f == 'B' || f == 'C' || f == 'F') ? 2 : 1; }

std::string rat_str(const Rat& q) { return q.get_den() == 1 ? q.get_num().get_str() : q.get_str(); }

// prefix sqrt(s) where s = short-root norm / 2
Rat prefix_of(const RootComponent& c) { return c.scale / ratio(c.family); }

std::vector<Rat> gram_times(const Lattice& l, const IVec& v) {
  int n = l.rank();
  std::vector<Rat> r(n);
  for (int i = 0; i < n; i++) {
    Rat s = 0;
    for (int j = 0; j < n; j++)
      if (v[j]) s += l.gram(i, j) * v[j];
    r[i] = s;
  }
  return r;
}

bool primitive(const IVec& v) {
  long g = 0;
  for (long x : v) g = std::gcd(g, std::labs(x));
  return g == 1;
}

bool reflective(const Lattice& l, const IVec& v, const Rat& nv) {
  for (auto& x : gram_times(l, v)) {
    Rat c = 2 * x / nv;
    if (c.get_den() != 1) return false;
  }
  return true;
}

}  // namespace

VectorList roots(const Lattice& l, std::optional<Rat> bound) {
  Rat b;
  if (bound) {
    b = *bound;
  } else {
    if (!l.even()) throw std::invalid_argument("roots of a non-even lattice need an explicit bound");
    b = 2 * level(l);
  }
  VectorList all = vectors_up_to(l, b);
  VectorList out;
  out.lattice = l;
  out.bound = b;
  for (size_t i = 0; i < all.size(); i++)
    if (primitive(all.vectors[i]) && reflective(l, all.vectors[i], all.norms[i])) {
      out.vectors.push_back(all.vectors[i]);
      out.norms.push_back(all.norms[i]);
    }
  return out;
}

VectorList roots_prime_level(const Lattice& l, long ell) {
  if (!is_prime(ell)) throw NotPrimeLevel();
  if (!l.even() || level(l) != ell) throw NotPrimeLevel();
  VectorList all = vectors_up_to(l, 2 * ell);
  VectorList out;
  out.lattice = l;
  out.bound = 2 * ell;
  for (size_t i = 0; i < all.size(); i++) {
    bool take = all.norms[i] == 2;
    if (!take && all.norms[i] == 2 * ell) {
      take = true;
      for (auto& x : gram_times(l, all.vectors[i]))
        if (x.get_den() != 1 || !mpz_divisible_ui_p(x.get_num_mpz_t(), ell)) take = false;
    }
    if (take) {
      out.vectors.push_back(all.vectors[i]);
      out.norms.push_back(all.norms[i]);
    }
  }
  return out;
}

IMat reflection(const Lattice& l, const IVec& a) {
  int n = l.rank();
  Rat na = l.norm(std::vector<Int>(a.begin(), a.end()));
  std::vector<Rat> ga = gram_times(l, a);
  IMat m(n * n, 0);
  for (int i = 0; i < n; i++) {
    Rat c = 2 * ga[i] / na;
    if (c.get_den() != 1) throw std::invalid_argument("not a root");
    long ci = c.get_num().get_si();
    for (int j = 0; j < n; j++) m[i * n + j] = (i == j) - ci * a[j];
  }
  return m;
}

RootData analyze(const VectorList& rs) {
  const Lattice& l = rs.lattice;
  int n = l.rank();
  RootData out;
  if (rs.size() == 0) return out;
  // full signed set
  std::vector<IVec> all;
  std::vector<Rat> nrm;
  for (size_t i = 0; i < rs.size(); i++) {
    IVec m = rs.vectors[i];
    for (auto& x : m) x = -x;
    all.push_back(rs.vectors[i]), nrm.push_back(rs.norms[i]);
    all.push_back(m), nrm.push_back(rs.norms[i]);
  }
  std::set<IVec> present(all.begin(), all.end());
  // closure under reflections and integrality
  for (size_t i = 0; i < all.size(); i += 2) {
    std::vector<Rat> gi = gram_times(l, all[i]);
    for (size_t j = 0; j < all.size(); j += 2) {
      Rat ip = 0;
      for (int k = 0; k < n; k++) ip += gi[k] * all[j][k];
      Rat c = 2 * ip / nrm[i];
      if (c.get_den() != 1) throw NotARootSystem("non-integral Cartan number");
      long ci = c.get_num().get_si();
      IVec r = all[j];
      for (int k = 0; k < n; k++) r[k] -= ci * all[i][k];
      if (!present.count(r)) throw NotARootSystem("not closed under reflections");
    }
  }
  // positivity from a fixed-seed integer functional
  std::vector<IVec> pos;
  for (uint64_t seed = 1;; seed++) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> d(1, 1000003);
    std::vector<long> w(n);
    for (auto& x : w) x = d(rng);
    pos.clear();
    bool ok = true;
    for (auto& v : all) {
      __int128 f = 0;
      for (int k = 0; k < n; k++) f += (__int128)w[k] * v[k];
      if (f == 0) ok = false;
      if (f > 0) pos.push_back(v);
    }
    if (ok) break;
  }
  std::sort(pos.begin(), pos.end());
  std::set<IVec> pset(pos.begin(), pos.end());
  std::vector<IVec> simple;
  for (auto& a : pos) {
    bool dec = false;
    for (auto& b : pos) {
      if (b == a) continue;
      IVec c = a;
      for (int k = 0; k < n; k++) c[k] -= b[k];
      if (pset.count(c)) {
        dec = true;
        break;
      }
    }
    if (!dec) simple.push_back(a);
  }
  int s = simple.size();
  std::vector<Rat> sn(s);
  std::vector<std::vector<Rat>> ip(s, std::vector<Rat>(s));
  for (int i = 0; i < s; i++) {
    std::vector<Rat> gi = gram_times(l, simple[i]);
    for (int j = 0; j < s; j++) {
      Rat t = 0;
      for (int k = 0; k < n; k++) t += gi[k] * simple[j][k];
      ip[i][j] = t;
    }
    sn[i] = ip[i][i];
  }
  // multiplicity of the edge i-j: a_ij * a_ji
  auto mult = [&](int i, int j) {
    Rat m = 4 * ip[i][j] * ip[i][j] / (sn[i] * sn[j]);
    if (m.get_den() != 1) throw NotARootSystem("bad Cartan matrix");
    return m.get_num().get_si();
  };
  std::vector<int> comp(s, -1);
  int nc = 0;
  for (int i = 0; i < s; i++) {
    if (comp[i] >= 0) continue;
    std::vector<int> st{i};
    comp[i] = nc;
    while (!st.empty()) {
      int x = st.back();
      st.pop_back();
      for (int y = 0; y < s; y++)
        if (comp[y] < 0 && ip[x][y] != 0) comp[y] = nc, st.push_back(y);
    }
    nc++;
  }
  std::vector<std::pair<RootComponent, std::vector<int>>> found;
  for (int c = 0; c < nc; c++) {
    std::vector<int> v;
    for (int i = 0; i < s; i++)
      if (comp[i] == c) v.push_back(i);
    int r = v.size();
    Rat mx = 0;
    for (int i : v) mx = std::max(mx, sn[i]);
    long maxm = 0;
    std::vector<int> deg(r, 0);
    for (int a = 0; a < r; a++)
      for (int b = 0; b < r; b++)
        if (a != b && ip[v[a]][v[b]] != 0) {
          long m = mult(v[a], v[b]);
          if (m > 3) throw NotARootSystem("edge multiplicity");
          maxm = std::max(maxm, m);
          deg[a]++;
        }
    if (std::accumulate(deg.begin(), deg.end(), 0) != 2 * (r - 1)) throw NotARootSystem("Dynkin diagram is not a tree");
    RootComponent rc{'A', r, mx / 2};
    if (maxm == 3) {
      if (r != 2) throw NotARootSystem("triple edge");
      rc.family = 'G';
    } else if (maxm == 2) {
      int nshort = 0;
      for (int i : v) nshort += sn[i] < mx;
      if (r == 2) {
        rc.family = 'C';
      } else if (r == 4 && nshort == 2) {
        // double edge between the two middle nodes
        int a = -1, b = -1;
        for (int x = 0; x < r; x++)
          for (int y = x + 1; y < r; y++)
            if (ip[v[x]][v[y]] != 0 && mult(v[x], v[y]) == 2) a = x, b = y;
        if (deg[a] == 2 && deg[b] == 2)
          rc.family = 'F';
        else
          throw NotARootSystem("unknown doubly laced diagram");
      } else if (nshort == 1) {
        rc.family = 'B';
      } else if (nshort == r - 1) {
        rc.family = 'C';
      } else {
        throw NotARootSystem("unknown doubly laced diagram");
      }
    } else {
      int branch = -1;
      for (int a = 0; a < r; a++)
        if (deg[a] > 2) branch = a;
      if (branch < 0) {
        rc.family = 'A';
      } else {
        if (deg[branch] != 3) throw NotARootSystem("vertex of degree > 3");
        std::vector<int> arms;
        for (int y = 0; y < r; y++) {
          if (y == branch || ip[v[branch]][v[y]] == 0) continue;
          int len = 1, prev = branch, cur = y;
          for (;;) {
            int nxt = -1;
            for (int z = 0; z < r; z++)
              if (z != prev && z != cur && ip[v[cur]][v[z]] != 0) nxt = z;
            if (nxt < 0) break;
            if (deg[nxt] > 2) throw NotARootSystem("two branch points");
            prev = cur, cur = nxt, len++;
          }
          arms.push_back(len);
        }
        std::sort(arms.begin(), arms.end());
        if (arms[0] == 1 && arms[1] == 1)
          rc.family = 'D';
        else if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4)
          rc.family = 'E';
        else
          throw NotARootSystem("unknown simply laced diagram");
      }
    }
    found.push_back({rc, v});
  }
  std::stable_sort(found.begin(), found.end(), [](auto& a, auto& b) { return a.first < b.first; });
  for (auto& [rc, v] : found) {
    out.type.comps.push_back(rc);
    for (int i : v) out.simple.push_back(simple[i]), out.comp_of.push_back(rc);
  }
  return out;
}

RootSystemType classify(const VectorList& rs) { return analyze(rs).type; }

Int weyl_order(char f, int n) {
  Int fact = 1;
  for (int i = 2; i <= n; i++) fact *= i;
  Int two = 1;
  for (int i = 0; i < n; i++) two *= 2;
  switch (f) {
    case 'A':
      return fact * (n + 1);
    case 'B':
    case 'C':
      return two * fact;
    case 'D':
      return two / 2 * fact;
    case 'E':
      return n == 6 ? Int(51840) : n == 7 ? Int(2903040) : Int("696729600");
    case 'F':
      return 1152;
    case 'G':
      return 12;
  }
  throw std::invalid_argument("unknown family");
}

Int weyl_order(const RootSystemType& t) {
  Int o = 1;
  for (auto& c : t.comps) o *= weyl_order(c.family, c.rank);
  return o;
}

bool weyl_contains_minus_one(const RootSystemType& t) {
  for (auto& c : t.comps) {
    if (c.family == 'A' && c.rank >= 2) return false;
    if (c.family == 'D' && c.rank % 2 == 1) return false;
    if (c.family == 'E' && c.rank == 6) return false;
  }
  return true;
}

std::string RootSystemType::str() const {
  // unprefixed components first, by rank descending; then prefixed
  std::map<std::tuple<Rat, int, char>, int> cnt;
  for (auto& c : comps) cnt[{prefix_of(c), -c.rank, c.family}]++;
  std::ostringstream os;
  for (auto& [k, m] : cnt) {
    auto& [p, nr, f] = k;
    std::string body = std::string(1, f) + "_" + std::to_string(-nr);
    if (p == 1) {
      os << body;
      if (m > 1) os << "^" << m;
    } else {
      std::string pre = "√" + rat_str(p);
      if (m > 1)
        os << "(" << pre << body << ")^" << m;
      else
        os << pre << body;
    }
  }
  return os.str();
}

RootSystemType parse_root_type(const std::string& in) {
  std::string s;
  for (size_t i = 0; i < in.size();) {
    if (in.compare(i, 3, "√") == 0) {
      s += 'r';
      i += 3;
    } else if (in.compare(i, 4, "sqrt") == 0) {
      s += 'r';
      i += 4;
    } else if (in[i] == '{' || in[i] == '}' || in[i] == ' ' || in[i] == '\\') {
      i++;
    } else {
      s += in[i++];
    }
  }
  static const std::regex item(R"(\(?(r(\d+(?:/\d+)?))?([A-G])_(\d+)(?:\^(\d+))?\)?(?:\^(\d+))?)");
  RootSystemType t;
  size_t pos = 0;
  while (pos < s.size()) {
    std::smatch m;
    std::string rest = s.substr(pos);
    if (!std::regex_search(rest, m, item, std::regex_constants::match_continuous) || m.length(0) == 0)
      throw std::invalid_argument("cannot parse root type: " + in);
    bool open = rest[0] == '(';
    bool close = m.str(0).find(')') != std::string::npos;
    if (open != close) throw std::invalid_argument("unbalanced parentheses: " + in);
    Rat pre = m[2].matched ? Rat(m[2].str()) : Rat(1);
    pre.canonicalize();
    char f = m[3].str()[0];
    int r = std::stoi(m[4]);
    int k = (m[5].matched ? std::stoi(m[5]) : 1) * (m[6].matched ? std::stoi(m[6]) : 1);
    if (f == 'B' && r == 2) f = 'C';
    RootComponent c{f, r, pre * ratio(f)};
    for (int i = 0; i < k; i++) t.comps.push_back(c);
    pos += m.length(0);
  }
  std::sort(t.comps.begin(), t.comps.end());
  return t;
}

}  // namespace voalat
