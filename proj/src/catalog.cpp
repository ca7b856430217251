#include "voalat/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <regex>
#include <sstream>

#include "voalat/isometry.hpp"

namespace voalat {

std::vector<LieSummand> parse_lie(const std::string& s) {
  static const std::regex tok(R"(([A-G])_?\{?(\d+),(\d+)\}?(?:\^\{?(\d+)\}?)?)");
  std::vector<LieSummand> out;
  auto b = std::sregex_iterator(s.begin(), s.end(), tok);
  size_t used = 0;
  for (auto it = b; it != std::sregex_iterator(); ++it) {
    auto& m = *it;
    LieSummand x{m[1].str()[0], std::stoi(m[2]), std::stoi(m[3]), m[4].matched ? std::stoi(m[4]) : 1};
    out.push_back(x);
    used += m.length();
  }
  size_t nonspace = std::count_if(s.begin(), s.end(), [](char c) { return !std::isspace((unsigned char)c); });
  if (out.empty() || used != nonspace) throw InvalidCatalog("Lie algebra " + s);
  return out;
}

std::string lie_str(const std::vector<LieSummand>& s) {
  std::string r;
  for (auto& x : s) {
    if (!r.empty()) r += ' ';
    r += x.family + std::to_string(x.rank) + "," + std::to_string(x.level);
    if (x.mult > 1) r += "^" + std::to_string(x.mult);
  }
  return r;
}

std::vector<LieSummand> SchellekensEntry::expanded() const {
  std::vector<LieSummand> r;
  for (auto& s : summands)
    for (int i = 0; i < s.mult; i++) r.push_back({s.family, s.rank, s.level, 1});
  return r;
}

int SchellekensEntry::rank() const {
  int n = 0;
  for (auto& s : summands) n += s.rank * s.mult;
  return n;
}

long class_ell(const std::string& cls) {
  long g = std::stol(cls);
  if (cls == "2C" || cls == "6G" || cls == "10F") return 2 * g;
  return g;
}

LieData lie_dimension_and_dual_coxeter(char f, int n) {
  switch (f) {
    case 'A': return {n * (n + 2), n + 1, 1};
    case 'B': return {n * (2 * n + 1), 2 * n - 1, 2};
    case 'C': return {n * (2 * n + 1), n + 1, 2};
    case 'D': return {n * (2 * n - 1), 2 * n - 2, 1};
    case 'E':
      if (n == 6) return {78, 12, 1};
      if (n == 7) return {133, 18, 1};
      if (n == 8) return {248, 30, 1};
      break;
    case 'F':
      if (n == 4) return {52, 9, 2};
      break;
    case 'G':
      if (n == 2) return {14, 4, 3};
      break;
  }
  throw InvalidFamily(std::string(1, f) + std::to_string(n));
}

long SimpleCurrentGroup::size() const {
  long s = 1;
  for (long o : orders) s *= o;
  return s;
}

SimpleCurrentGroup simple_current_group(char f, int n, int k) {
  switch (f) {
    case 'A': return {{n + 1}, {"1"}};
    case 'B':
    case 'C': return {{2}, {"1"}};
    case 'D':
      if (n % 2 == 0) return {{2, 2}, {"s", "c"}};
      return {{4}, {"s"}};
    case 'E':
      if (n == 6) return {{3}, {"1"}};
      if (n == 7) return {{2}, {"1"}};
      if (n == 8) return k == 2 ? SimpleCurrentGroup{{2}, {"1"}} : SimpleCurrentGroup{};
      break;
    case 'F':
    case 'G': return {};
  }
  throw InvalidFamily(std::string(1, f) + std::to_string(n));
}

// ---------------------------------------------------------------- frames

namespace {

RatMat d_roots_in_e(int n) {
  RatMat m(n, n);
  for (int i = 0; i + 1 < n; i++) m(i, i) = 1, m(i, i + 1) = -1;
  m(n - 1, n - 2) = 1, m(n - 1, n - 1) = 1;
  return m;
}

// Q_long basis (gram) and Q basis in Q_long coordinates, long roots of norm 2
struct Frame {
  RatMat glong, qbasis;
  std::vector<std::pair<char, int>> comps;  // ADE pieces of Q_long, consecutive
};

Frame frame_of(char f, int n) {
  Frame fr;
  switch (f) {
    case 'A':
    case 'D':
    case 'E':
      fr.glong = to_rat(cartan_gram(f, n));
      fr.qbasis = RatMat::identity(n);
      fr.comps = {{f, n}};
      break;
    case 'B': {
      RatMat m = d_roots_in_e(n);
      fr.glong = m * transpose(m);
      fr.qbasis = rational_inverse(m);
      if (n == 2)
        fr.comps = {{'A', 1}, {'A', 1}};
      else
        fr.comps = {{'D', n}};
      break;
    }
    case 'C': {
      fr.glong = scale(RatMat::identity(n), 2);
      fr.qbasis = scale(d_roots_in_e(n), Rat(1, 2));
      fr.comps.assign(n, {'A', 1});
      break;
    }
    case 'F':
      fr.glong = to_rat(cartan_gram('D', 4));
      fr.qbasis = rational_inverse(fr.glong);
      fr.comps = {{'D', 4}};
      break;
    case 'G':
      fr.glong = to_rat(cartan_gram('A', 2));
      fr.qbasis = rational_inverse(fr.glong);
      fr.comps = {{'A', 2}};
      break;
    default: throw InvalidFamily(std::string(1, f));
  }
  return fr;
}

void put_block(RatMat& m, int off, const RatMat& b) {
  for (int i = 0; i < b.rows; i++)
    for (int j = 0; j < b.cols; j++) m(off + i, off + j) = b(i, j);
}

struct Ambient {
  RatMat a, t;
  std::vector<Component> comps;
  std::vector<int> comp_off;
  std::vector<int> sum_off;
  int n = 0;
};

Ambient ambient_of(const SchellekensEntry& e) {
  Ambient am;
  auto ex = e.expanded();
  am.n = e.rank();
  am.a = RatMat(am.n, am.n);
  am.t = RatMat(am.n, am.n);
  int off = 0;
  for (auto& s : ex) {
    Frame fr = frame_of(s.family, s.rank);
    put_block(am.a, off, scale(fr.glong, s.level));
    put_block(am.t, off, scale(fr.qbasis, frac(1, s.level)));
    am.sum_off.push_back(off);
    int o = off;
    for (auto& [cf, cn] : fr.comps) {
      am.comps.push_back({cf, cn, Rat(s.level)});
      am.comp_off.push_back(o);
      o += cn;
    }
    off += s.rank;
  }
  return am;
}

bool integral_rows(const RatMat& m) { return is_integral(m); }

RatMat gram_of(const RatMat& rows, const RatMat& a) { return rows * a * transpose(rows); }

// rows of L* over the frame -> full bundle
Bundle finish(const SchellekensEntry& e, const Ambient& am, const RatMat& rl) {
  Bundle b;
  b.ambient = am.a;
  b.qtilde_rows = am.t;
  b.qg_components = am.comps;
  RatMat gl = gram_of(rl, am.a);
  if (!is_integral(gl)) throw BuildFailed("L not integral");
  for (int i = 0; i < gl.rows; i++)
    if (!mpz_even_p(gl(i, i).get_num_mpz_t())) throw BuildFailed("L not even");
  b.l_rows = rl;
  b.l = Lattice(gl, "L");
  b.ldual_rows = rational_inverse(gl) * rl;
  RatMat gd = gram_of(b.ldual_rows, am.a);
  b.ldual = Lattice(gd, "L*");
  b.u = Lattice(scale(gd, e.ell), "U");
  b.qg = Lattice(am.a, "Q_g");
  RatMat gt = gram_of(am.t, am.a);
  b.qtilde = Lattice(gt, "Q~");
  b.pg = Lattice(scale(gt, e.ell), "P_g");
  RatMat qin = rational_inverse(rl);
  if (!integral_rows(qin)) throw BuildFailed("Q_g not contained in L");
  RatMat tin = am.t * rational_inverse(b.ldual_rows);
  if (!integral_rows(tin)) throw BuildFailed("Q~ not contained in L*");
  b.qg_in_l = {b.qg, b.l, qin};
  b.qtilde_in_ldual = {b.qtilde, b.ldual, tin};
  b.pg_in_u = {b.pg, b.u, tin};
  for (int i = 0; i < rl.rows; i++) {
    std::vector<Rat> r(rl.cols);
    for (int j = 0; j < rl.cols; j++) r[j] = rl(i, j);
    b.l_glue.push_back(r);
  }
  // Lie roots: long roots from Q_long, short roots from Q, both in Q~
  RatMat ldinv = rational_inverse(b.ldual_rows);
  auto ex = e.expanded();
  for (size_t si = 0; si < ex.size(); si++) {
    auto& s = ex[si];
    Frame fr = frame_of(s.family, s.rank);
    int r = lie_dimension_and_dual_coxeter(s.family, s.rank).lacing;
    std::vector<std::vector<Rat>> frame_vecs;
    auto lv = vectors_up_to(Lattice(fr.glong), Rat(2));
    for (size_t i = 0; i < lv.size(); i++)
      if (lv.norms[i] == 2) {
        std::vector<Rat> c(s.rank);
        for (int j = 0; j < s.rank; j++) c[j] = lv.vectors[i][j];
        frame_vecs.push_back(c);
      }
    if (r > 1) {
      Lattice q(gram_of(fr.qbasis, fr.glong));
      auto sv = vectors_up_to(q, frac(2, r));
      for (size_t i = 0; i < sv.size(); i++)
        if (sv.norms[i] == frac(2, r)) {
          std::vector<Rat> c(s.rank);
          for (int j = 0; j < s.rank; j++)
            for (int k = 0; k < s.rank; k++) c[j] += sv.vectors[i][k] * fr.qbasis(k, j);
          frame_vecs.push_back(c);
        }
    }
    for (auto& c : frame_vecs) {
      std::vector<Rat> y(am.n);
      for (int j = 0; j < s.rank; j++) y[am.sum_off[si] + j] = c[j] / s.level;
      IVec u(am.n);
      for (int j = 0; j < am.n; j++) {
        Rat x = 0;
        for (int k = 0; k < am.n; k++)
          if (y[k] != 0) x += y[k] * ldinv(k, j);
        if (x.get_den() != 1) throw BuildFailed("Lie root outside U");
        u[j] = x.get_num().get_si();
      }
      auto nz = std::find_if(u.begin(), u.end(), [](long x) { return x != 0; });
      if (nz != u.end() && *nz < 0)
        for (auto& x : u) x = -x;
      b.lie_roots_u.push_back(u);
    }
  }
  return b;
}

RatMat l_rows_from_u_glue(const SchellekensEntry& e, const Ambient& am, const Lattice& pg,
                          const std::vector<std::vector<Rat>>& glue) {
  RatMat coords;
  try {
    glue_extend(pg, glue, &coords);
  } catch (const NotIntegral&) {
    throw BuildFailed("U not integral");
  } catch (const NotEven&) {
    throw BuildFailed("U not even");
  }
  (void)e;
  RatMat ld = coords * am.t;
  return rational_inverse(gram_of(ld, am.a)) * ld;
}

}  // namespace

Bundle build_bundle(const SchellekensEntry& e) {
  Ambient am = ambient_of(e);
  if (e.glue_side == 'L') {
    std::vector<std::vector<Rat>> rows;
    for (auto& g : e.glue) {
      if (g.size() != am.comps.size())
        throw BuildFailed("entry " + std::to_string(e.number) + ": glue vector needs " +
                          std::to_string(am.comps.size()) + " tokens");
      std::vector<Rat> r(am.n);
      for (size_t c = 0; c < g.size(); c++) {
        auto v = glue_class_coords(am.comps[c].family, am.comps[c].rank, g[c]);
        for (size_t j = 0; j < v.size(); j++) r[am.comp_off[c] + j] = v[j];
      }
      rows.push_back(r);
    }
    RatMat rl;
    try {
      glue_extend(Lattice(am.a), rows, &rl);
    } catch (const NotIntegral&) {
      throw BuildFailed("entry " + std::to_string(e.number) + ": L not integral");
    } catch (const NotEven&) {
      throw BuildFailed("entry " + std::to_string(e.number) + ": L not even");
    }
    return finish(e, am, rl);
  }
  std::vector<std::vector<Rat>> rows;
  for (auto& g : e.glue) {
    if ((int)g.size() != am.n) throw BuildFailed("glue row length");
    std::vector<Rat> r;
    for (auto& x : g) r.emplace_back(x);
    for (auto& x : r) x.canonicalize();
    rows.push_back(r);
  }
  Lattice pg(scale(gram_of(am.t, am.a), e.ell));
  return finish(e, am, l_rows_from_u_glue(e, am, pg, rows));
}

Lattice named_lattice(const std::string& name) {
  static const std::regex part(R"((?:sqrt(\d+))?([ADEZ])_?(\d+))");
  std::vector<Lattice> parts;
  size_t used = 0;
  for (auto it = std::sregex_iterator(name.begin(), name.end(), part); it != std::sregex_iterator(); ++it) {
    auto& m = *it;
    Lattice l = standard_lattice(m[2].str()[0], std::stoi(m[3]));
    if (m[1].matched) l = rescale(l, Rat(std::stol(m[1])));
    parts.push_back(l);
    used += m.length();
  }
  if (parts.empty() || used != name.size()) throw std::invalid_argument("lattice name " + name);
  Lattice l = parts.size() == 1 ? parts[0] : direct_sum(parts);
  l.label = name;
  return l;
}

RootSystemType lie_root_type(const SchellekensEntry& e) {
  RootSystemType t;
  for (auto& s : e.expanded()) {
    int r = lie_dimension_and_dual_coxeter(s.family, s.rank).lacing;
    char f = s.family;
    if (f == 'B' && s.rank == 2) f = 'C';
    // long roots of sqrt(ell/k) Q have norm 2 ell/k
    Rat sc = frac(e.ell, s.level);
    (void)r;
    t.comps.push_back({f, s.rank, sc});
  }
  std::sort(t.comps.begin(), t.comps.end());
  return t;
}

Int lie_weyl_order(const SchellekensEntry& e) {
  Int w = 1;
  for (auto& s : e.expanded()) w *= weyl_order(s.family, s.rank);
  return w;
}

// ---------------------------------------------------------------- search

std::optional<std::vector<std::vector<Rat>>> search_u_glue(
    const SchellekensEntry& e, const AutWData& cd, const std::function<bool(const Bundle&)>& accept,
    long* tried) {
  Ambient am = ambient_of(e);
  Lattice pg(scale(gram_of(am.t, am.a), e.ell));
  DiscModule d = disc_data(pg);
  const auto& m = d.m;
  long size = m.size();
  Int irr = 1;
  for (long x : abelian_invariants(cd.group)) irr *= x;
  // det U = ell^n / |D(L)|
  Int ln;
  mpz_pow_ui(ln.get_mpz_t(), Int(e.ell).get_mpz_t(), am.n);
  Rat n2 = Rat(pg.det()) * irr / ln;
  n2.canonicalize();
  if (n2.get_den() != 1 || !mpz_perfect_square_p(n2.get_num_mpz_t())) return std::nullopt;
  Int nt = sqrt(n2.get_num());
  long target = nt.get_si();

  long den;
  auto qn = m.q_numerators(den);
  std::vector<char> ok(size, 0);
  for (long i = 1; i < size; i++) ok[i] = (qn[i] % den == 0);
  bool prime = is_prime(e.ell);
  if (prime) {
    // cosets holding a vector of norm 2 would add roots outside P_g
    Lattice pd = dual(pg);
    RatMat gi = rational_inverse(pg.gram);
    auto sv = vectors_up_to(pd, Rat(2));
    for (size_t i = 0; i < sv.size(); i++) {
      std::vector<Rat> y(am.n);
      for (int j = 0; j < am.n; j++)
        for (int k = 0; k < am.n; k++) y[j] += sv.vectors[i][k] * gi(k, j);
      auto c = d.coords_of(y);
      long idx = m.index(c);
      ok[idx] = 0;
      std::vector<long> neg(c.size());
      for (size_t j = 0; j < c.size(); j++) neg[j] = (m.divisors[j] - c[j]) % m.divisors[j];
      ok[m.index(neg)] = 0;
    }
  }
  std::vector<long> cand;
  for (long i = 1; i < size; i++)
    if (ok[i]) cand.push_back(i);

  std::vector<std::vector<long>> co(size);
  for (long i = 0; i < size; i++) co[i] = m.coords(i);
  auto add = [&](long x, long y) {
    std::vector<long> c(co[x].size());
    for (size_t j = 0; j < c.size(); j++) c[j] = (co[x][j] + co[y][j]) % m.divisors[j];
    return m.index(c);
  };
  auto lift = [&](long idx) {
    std::vector<Rat> r(am.n);
    for (size_t j = 0; j < co[idx].size(); j++)
      for (int k = 0; k < am.n; k++) r[k] += Rat(co[idx][j]) * d.gens(j, k);
    return r;
  };

  std::vector<char> mem(size, 0);
  std::vector<long> elems{0};
  mem[0] = 1;
  std::vector<long> gens;
  long count = 0;
  std::optional<std::vector<std::vector<Rat>>> found;

  auto finalize = [&]() -> bool {
    count++;
    std::vector<std::vector<Rat>> glue;
    for (long g : gens) {
      auto r = lift(g);
      for (auto& x : r) {
        Int f;
        mpz_fdiv_q(f.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
        x -= f;
      }
      glue.push_back(r);
    }
    try {
      RatMat rl = l_rows_from_u_glue(e, am, pg, glue);
      Bundle b = finish(e, am, rl);
      if (level(b.l) != e.ell) return false;
      if (Rat(b.l.det()) != Rat(irr)) return false;
      if (prime) {
        RatMat back = rational_inverse(b.pg_in_u.transition);
        auto rs = roots_prime_level(b.u, e.ell);
        for (auto& v : rs.vectors)
          for (int j = 0; j < am.n; j++) {
            Rat x = 0;
            for (int k = 0; k < am.n; k++) x += Rat(v[k]) * back(k, j);
            if (x.get_den() != 1) return false;
          }
      }
      if (accept && !accept(b)) return false;
      found = glue;
      return true;
    } catch (const BuildFailed&) {
      return false;
    }
  };

  std::function<bool(size_t)> dfs = [&](size_t start) -> bool {
    if ((long)elems.size() == target) return finalize();
    for (size_t ci = start; ci < cand.size(); ci++) {
      long g = cand[ci];
      if (mem[g]) continue;
      // order of g modulo H
      long ord = 1;
      long x = g;
      while (!mem[x]) x = add(x, g), ord++;
      long newsize = (long)elems.size() * ord;
      if (newsize > target || target % newsize) continue;
      size_t old = elems.size();
      bool good = true;
      std::vector<long> added;
      long mg = g;
      for (long k = 1; k < ord && good; k++) {
        for (size_t i = 0; i < old; i++) {
          long y = add(elems[i], mg);
          if (!ok[y]) {
            good = false;
            break;
          }
          added.push_back(y);
        }
        mg = add(mg, g);
      }
      if (!good) continue;
      for (long y : added) mem[y] = 1, elems.push_back(y);
      gens.push_back(g);
      if (dfs(ci + 1)) return true;
      gens.pop_back();
      for (long y : added) mem[y] = 0;
      elems.resize(old);
    }
    return false;
  };
  dfs(0);
  if (tried) *tried = count;
  return found;
}

// ---------------------------------------------------------------- shapes

namespace {

Int factorial(long n) {
  Int r = 1;
  for (long i = 2; i <= n; i++) r *= i;
  return r;
}

Int ortho_order(char f, int n) {
  if (f == 'Z') return Int(factorial(n)) << n;
  Int w = weyl_order(f, n);
  if (f == 'A') return n == 1 ? w : 2 * w;
  if (f == 'D') return n == 4 ? Int(1152) : 2 * w;
  if (f == 'E') return n == 6 ? 2 * w : w;
  return w;
}

struct ShapeParser {
  std::string s;
  size_t i = 0;
  void ws() {
    while (i < s.size() && std::isspace((unsigned char)s[i])) i++;
  }
  bool eat(const std::string& t) {
    ws();
    if (s.compare(i, t.size(), t) == 0) {
      i += t.size();
      return true;
    }
    return false;
  }
  long number() {
    ws();
    size_t j = i;
    while (j < s.size() && std::isdigit((unsigned char)s[j])) j++;
    if (j == i) throw std::invalid_argument("shape: number expected at " + s.substr(i));
    long v = std::stol(s.substr(i, j - i));
    i = j;
    return v;
  }
  // X_n inside W(...) / O(...), optional ^m for O
  Int rootgroup(bool ortho) {
    ws();
    if (i >= s.size()) throw std::invalid_argument("shape: root type");
    char f = s[i++];
    if (i < s.size() && s[i] == '_') i++;
    long n = number();
    long m = 1;
    if (eat("^")) m = number();
    eat(")");
    if (!ortho) {
      Int w = weyl_order(f, n), r = 1;
      for (long k = 0; k < m; k++) r *= w;
      return r;
    }
    Int o = ortho_order(f, n), r = 1;
    for (long k = 0; k < m; k++) r *= o;
    return r * factorial(m);
  }
  Int factor() {
    ws();
    if (eat("(")) {
      Int v = expr();
      if (!eat(")")) throw std::invalid_argument("shape: ) expected");
      return v;
    }
    if (eat("W(")) return rootgroup(false);
    if (eat("O(")) return rootgroup(true);
    if (eat("AGL")) {
      long n = number();
      eat("(");
      long q = number();
      eat(")");
      Int o = 1, qn = 1;
      for (long k = 0; k < n; k++) qn *= q;
      o = qn;
      Int qi = 1;
      for (long k = 0; k < n; k++) {
        o *= qn - qi;
        qi *= q;
      }
      return o;
    }
    if (eat("Dih")) return number();
    if (eat("M")) {
      long n = number();
      switch (n) {
        case 11: return 7920;
        case 12: return 95040;
        case 22: return 443520;
        case 23: return 10200960;
        case 24: return Int("244823040");
      }
      throw std::invalid_argument("shape: M" + std::to_string(n));
    }
    if (eat("Z")) return number();
    if (eat("S")) return factorial(number());
    if (eat("A")) return factorial(number()) / 2;
    return number();
  }
  Int term() {
    Int v = factor();
    while (eat("^")) {
      long e = number();
      Int r = 1;
      for (long k = 0; k < e; k++) r *= v;
      v = r;
    }
    return v;
  }
  Int expr() {
    Int v = term();
    for (;;) {
      ws();
      if (i < s.size() && (s[i] == '*' || s[i] == 'x' || s[i] == '.' || s[i] == ':')) {
        i++;
        v *= term();
      } else {
        return v;
      }
    }
  }
};

}  // namespace

Int shape_order(const std::string& expr) {
  ShapeParser p{expr};
  Int v = p.expr();
  p.ws();
  if (p.i != expr.size()) throw std::invalid_argument("shape: trailing " + expr.substr(p.i));
  return v;
}

std::vector<long> abelian_invariants(const std::string& s) {
  std::vector<long> cyc;
  std::string t;
  for (char c : s)
    if (!std::isspace((unsigned char)c)) t += c;
  if (t == "1" || t.empty()) return {};
  static const std::regex part(R"(Z(\d+)(?:\^(\d+))?)");
  size_t pos = 0;
  while (pos < t.size()) {
    std::smatch mm;
    std::string rest = t.substr(pos);
    if (!std::regex_search(rest, mm, part, std::regex_constants::match_continuous))
      throw std::invalid_argument("abelian group " + s);
    long o = std::stol(mm[1]);
    long e = mm[2].matched ? std::stol(mm[2]) : 1;
    for (long k = 0; k < e; k++) cyc.push_back(o);
    pos += mm.length();
    if (pos < t.size()) {
      if (t[pos] != 'x') throw std::invalid_argument("abelian group " + s);
      pos++;
    }
  }
  return invariant_factors(cyc);
}

std::vector<long> invariant_factors(std::vector<long> cyc) {
  // prime power parts, then combine largest with largest
  std::map<long, std::vector<long>> pp;
  for (long c : cyc)
    for (long p : prime_factors(c)) {
      long q = 1;
      while (c % p == 0) c /= p, q *= p;
      pp[p].push_back(q);
    }
  size_t len = 0;
  for (auto& [p, v] : pp) {
    std::sort(v.rbegin(), v.rend());
    len = std::max(len, v.size());
  }
  std::vector<long> r(len, 1);
  for (auto& [p, v] : pp)
    for (size_t i = 0; i < v.size(); i++) r[len - 1 - i] *= v[i];
  return r;
}

// ---------------------------------------------------------------- data file

namespace {

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> r;
  std::stringstream ss(s);
  std::string x;
  while (std::getline(ss, x, sep)) r.push_back(trim(x));
  return r;
}

std::vector<std::string> words(const std::string& s) {
  std::istringstream is(s);
  std::vector<std::string> r;
  std::string w;
  while (is >> w) r.push_back(w);
  return r;
}

}  // namespace

const SchellekensEntry& Catalog::entry(int number) const {
  for (auto& e : entries)
    if (e.number == number) return e;
  throw std::out_of_range("no entry " + std::to_string(number));
}

const AutWData& Catalog::class_data(const std::string& cls) const {
  auto it = classes.find(cls);
  if (it == classes.end()) throw std::out_of_range("no class " + cls);
  return it->second;
}

const AppendixRow* Catalog::appendix_row(int number) const {
  for (auto& r : appendix)
    if (r.number == number) return &r;
  return nullptr;
}

Catalog load_catalog(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidCatalog("cannot open " + path);
  Catalog c;
  std::string line;
  int ln = 0;
  SchellekensEntry* cur = nullptr;
  bool header = false;
  auto bad = [&](const std::string& w) { return InvalidCatalog(path + ":" + std::to_string(ln) + ": " + w); };
  while (std::getline(in, line)) {
    ln++;
    auto h = line.find('#');
    if (h != std::string::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    auto w = words(line);
    const std::string& key = w[0];
    std::string rest = trim(line.substr(key.size()));
    if (key == "format") {
      if (rest != "1") throw bad("unsupported format " + rest);
      header = true;
      continue;
    }
    if (!header) throw bad("missing format line");
    if (key == "class") {
      auto f = split(rest, '|');
      if (f.size() != 5) throw bad("class record needs 5 fields");
      auto a = words(f[0]);
      if (a.size() != 4) throw bad("class head");
      AutWData d;
      d.genus = a[0][0];
      d.cls = a[1];
      d.rank_lambda = std::stoi(a[2]);
      d.index = Int(a[3]);
      d.symbol = f[1];
      d.group = f[2];
      d.aut_w = f[3];
      d.full_orth = f[4];
      c.classes[d.cls] = d;
    } else if (key == "app") {
      auto f = split(rest, '|');
      if (f.size() != 5) throw bad("app record needs 5 fields");
      auto a = words(f[0]);
      AppendixRow r;
      r.number = std::stoi(a.at(0));
      r.genus = a.at(1)[0];
      if (a.size() < 3) throw bad("app head");
      for (size_t i = 2; i < a.size(); i++) r.lie += (i > 2 ? " " : "") + a[i];
      r.aut1 = f[1], r.out1 = f[2], r.aut2 = f[3], r.out2 = f[4];
      c.appendix.push_back(r);
    } else if (key == "lat") {
      auto f = split(rest, '|');
      if (f.size() != 3) throw bad("lat record needs 3 fields");
      auto a = words(f[0]);
      if (a.size() < 3) throw bad("lat head");
      LatticeCaseRow r;
      r.number = std::stoi(a[0]);
      r.genus = a[1][0];
      for (size_t i = 2; i < a.size(); i++) r.lie += (i > 2 ? " " : "") + a[i];
      r.out = f[1], r.k = f[2];
      c.lattice_cases.push_back(r);
    } else if (key == "entry") {
      if (cur) throw bad("nested entry");
      if (w.size() < 5) throw bad("entry head: number genus class lie");
      c.entries.emplace_back();
      cur = &c.entries.back();
      cur->number = std::stoi(w[1]);
      cur->genus = w[2][0];
      cur->cls = w[3];
      cur->ell = class_ell(cur->cls);
      std::string lie;
      for (size_t i = 4; i < w.size(); i++) lie += (i > 4 ? " " : "") + w[i];
      cur->summands = parse_lie(lie);
    } else if (key == "end") {
      if (!cur) throw bad("end without entry");
      if (cur->glue_side != 'L' && cur->glue_side != 'U') throw bad("glue side");
      cur = nullptr;
    } else {
      if (!cur) throw bad("field outside entry: " + key);
      if (key == "k") cur->expected.k = rest;
      else if (key == "out") cur->expected.out = rest;
      else if (key == "ru") cur->expected.ru = rest;
      else if (key == "ol") cur->expected.ol = rest;
      else if (key == "olshape") cur->expected.ol_shape = rest;
      else if (key == "lattice") cur->expected.lattice = rest;
      else if (key == "glue") cur->glue_side = rest.empty() ? 0 : rest[0];
      else if (key == "g") cur->glue.push_back(std::vector<std::string>(w.begin() + 1, w.end()));
      else throw bad("unknown field " + key);
    }
  }
  if (cur) throw bad("unterminated entry");
  if (c.entries.empty()) throw bad("no entries");
  for (auto& e : c.entries)
    if (!c.classes.count(e.cls)) throw InvalidCatalog("entry " + std::to_string(e.number) + " has unknown class");
  return c;
}

std::string default_data_dir() {
  if (const char* d = std::getenv("VOALAT_DATA")) return d;
#ifdef VOALAT_DATA_DIR
  return VOALAT_DATA_DIR;
#else
  return "data";
#endif
}

const Catalog& catalog() {
  static const Catalog c = load_catalog(default_data_dir() + "/catalog.txt");
  return c;
}

const std::vector<SchellekensEntry>& entries() { return catalog().entries; }

}  // namespace voalat
