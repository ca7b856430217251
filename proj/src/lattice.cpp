#include "voalat/lattice.hpp"

#include <regex>
#include <sstream>

namespace voalat {

Lattice::Lattice(RatMat g, std::string lab) : label(std::move(lab)), gram(std::move(g)) {
  if (!gram.square()) throw std::invalid_argument("gram not square");
  int n = gram.rows;
  for (int i = 0; i < n; i++)
    for (int j = 0; j < i; j++)
      if (gram(i, j) != gram(j, i)) throw std::invalid_argument("gram not symmetric");
  // leading principal minors via fraction-free elimination
  RatMat a = gram;
  for (int c = 0; c < n; c++) {
    if (a(c, c) <= 0) throw NotPositiveDefinite();
    for (int i = c + 1; i < n; i++) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) / a(c, c);
      for (int k = c; k < n; k++) a(i, k) -= f * a(c, k);
    }
  }
}

Rat Lattice::det() const { return voalat::det(gram); }

bool Lattice::integral() const { return is_integral(gram); }

bool Lattice::even() const {
  if (!integral()) return false;
  for (int i = 0; i < rank(); i++)
    if (!mpz_even_p(gram(i, i).get_num_mpz_t())) return false;
  return true;
}

Rat Lattice::norm(const std::vector<Int>& x) const {
  Rat s = 0;
  int n = rank();
  for (int i = 0; i < n; i++) {
    if (x[i] == 0) continue;
    Rat t = 0;
    for (int j = 0; j < n; j++)
      if (x[j] != 0) t += gram(i, j) * x[j];
    s += t * x[i];
  }
  return s;
}

Rat Lattice::inner(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
  Rat s = 0;
  int n = rank();
  for (int i = 0; i < n; i++) {
    if (x[i] == 0) continue;
    for (int j = 0; j < n; j++)
      if (y[j] != 0) s += x[i] * gram(i, j) * y[j];
  }
  return s;
}

IntMat cartan_gram(char family, int n) {
  auto bad = [&] { return InvalidFamily(std::string(1, family) + "_" + std::to_string(n)); };
  if (n < 1) throw bad();
  IntMat g(n, n);
  auto edge = [&](int i, int j) { g(i, j) = g(j, i) = -1; };
  switch (family) {
    case 'Z':
      return IntMat::identity(n);
    case 'A':
      for (int i = 0; i + 1 < n; i++) edge(i, i + 1);
      break;
    case 'D':
      if (n < 4) throw bad();
      for (int i = 0; i + 2 < n; i++) edge(i, i + 1);
      edge(n - 3, n - 1);
      break;
    case 'E':
      if (n < 6 || n > 8) throw bad();
      for (int i = 0; i + 2 < n; i++) edge(i, i + 1);
      edge(n == 8 ? 4 : 2, n - 1);
      break;
    default:
      throw bad();
  }
  for (int i = 0; i < n; i++) g(i, i) = 2;
  return g;
}

Lattice standard_lattice(char family, int n) {
  return Lattice(to_rat(cartan_gram(family, n)), std::string(1, family) + "_" + std::to_string(n));
}

Lattice standard_lattice(const std::string& name) {
  static const std::regex re(R"(([A-Z])_?(\d+))");
  std::smatch m;
  if (!std::regex_match(name, m, re)) throw InvalidFamily(name);
  return standard_lattice(m[1].str()[0], std::stoi(m[2]));
}

Lattice rescale(const Lattice& l, const Rat& c) {
  if (c <= 0) throw std::invalid_argument("rescale needs c > 0");
  return Lattice(scale(l.gram, c), l.label);
}

Lattice dual(const Lattice& l) { return Lattice(rational_inverse(l.gram), l.label + "*"); }

Lattice direct_sum(const std::vector<Lattice>& parts) {
  if (parts.empty()) throw std::invalid_argument("empty direct sum");
  int n = 0;
  std::string lab;
  for (auto& p : parts) n += p.rank(), lab += p.label;
  RatMat g(n, n);
  int o = 0;
  for (auto& p : parts) {
    for (int i = 0; i < p.rank(); i++)
      for (int j = 0; j < p.rank(); j++) g(o + i, o + j) = p.gram(i, j);
    o += p.rank();
  }
  return Lattice(g, lab);
}

Lattice with_basis(const Lattice& l, const IntMat& b) {
  RatMat rb = to_rat(b);
  return Lattice(rb * l.gram * transpose(rb), l.label);
}

Lattice glue_extend(const Lattice& base, const std::vector<std::vector<Rat>>& glue,
                    RatMat* coords) {
  int n = base.rank();
  RatMat rows(n + glue.size(), n);
  for (int i = 0; i < n; i++) rows(i, i) = 1;
  for (size_t k = 0; k < glue.size(); k++) {
    if ((int)glue[k].size() != n) throw std::invalid_argument("glue vector length");
    for (int j = 0; j < n; j++) rows(n + k, j) = glue[k][j];
  }
  RatMat b = row_basis(rows);
  RatMat g = b * base.gram * transpose(b);
  if (!is_integral(g)) throw NotIntegral();
  for (int i = 0; i < n; i++)
    if (!mpz_even_p(g(i, i).get_num_mpz_t())) throw NotEven();
  if (coords) *coords = b;
  return Lattice(g, base.label);
}

namespace {

std::vector<Rat> weight(char family, int n, int node) {
  RatMat ci = rational_inverse(to_rat(cartan_gram(family, n)));
  std::vector<Rat> w(n);
  for (int j = 0; j < n; j++) w[j] = ci(node, j);
  return w;
}

std::vector<Rat> times(std::vector<Rat> w, int k) {
  for (auto& x : w) x *= k;
  return w;
}

}  // namespace

std::vector<Rat> glue_class_coords(char family, int n, const std::string& tok) {
  auto bad = [&] { return InvalidFamily("glue token " + tok + " for " + family + std::to_string(n)); };
  if (tok == "0") return std::vector<Rat>(n);
  switch (family) {
    case 'A': {
      int j;
      try {
        j = std::stoi(tok);
      } catch (...) {
        throw bad();
      }
      if (j < 0 || j > n) throw bad();
      return times(weight('A', n, 0), j);
    }
    case 'D': {
      std::string t = tok;
      if (n % 2 == 1) {
        if (t == "1") t = "s";
        if (t == "2") t = "v";
        if (t == "3") t = "c";
      }
      if (t == "b" || t == "s") return weight('D', n, n - 1);
      if (t == "c") return weight('D', n, n - 2);
      if (t == "v") return weight('D', n, 0);
      throw bad();
    }
    case 'E':
      if (n == 6 && (tok == "1" || tok == "2")) return times(weight('E', 6, 0), std::stoi(tok));
      if (n == 7 && tok == "1") return weight('E', 7, 5);
      throw bad();
    default:
      throw bad();
  }
}

int glue_class_order(char family, int n, const std::string& tok) {
  std::vector<Rat> w = glue_class_coords(family, n, tok);
  for (int k = 1;; k++) {
    bool ok = true;
    for (auto& x : w)
      if (Rat(x * k).get_den() != 1) ok = false;
    if (ok) return k;
  }
}

long level(const Lattice& l) {
  if (!l.even()) throw NotEven();
  RatMat gi = rational_inverse(l.gram);
  Int d = 1;
  for (int i = 0; i < l.rank(); i++)
    for (int j = 0; j < l.rank(); j++) {
      Rat x = gi(i, j);
      if (i == j) x /= 2;
      mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
    }
  return d.get_si();
}

std::vector<long> DiscModule::coords_of(const std::vector<Rat>& y) const {
  int n = lat.rank();
  std::vector<Int> x(n);
  for (int j = 0; j < n; j++) {
    Rat s = 0;
    for (int i = 0; i < n; i++)
      if (y[i] != 0) s += y[i] * lat.gram(i, j);
    if (s.get_den() != 1) throw std::invalid_argument("not a dual vector");
    x[j] = s.get_num();
  }
  std::vector<long> c(pos.size());
  for (size_t k = 0; k < pos.size(); k++) {
    Int s = 0;
    for (int i = 0; i < n; i++) s += x[i] * v(i, pos[k]);
    Int r;
    mpz_fdiv_r_ui(r.get_mpz_t(), s.get_mpz_t(), m.divisors[k]);
    c[k] = r.get_si();
  }
  return c;
}

DiscModule disc_data(const Lattice& l) {
  if (!l.even()) throw NotEven();
  int n = l.rank();
  IntMat g = to_int(l.gram);
  Snf s = snf(g);
  RatMat gi = rational_inverse(l.gram);
  RatMat vinv = rational_inverse(to_rat(s.v));
  DiscModule d;
  d.lat = l;
  d.v = s.v;
  for (int i = 0; i < n; i++)
    if (s.s(i, i) > 1) d.pos.push_back(i);
  int k = d.pos.size();
  d.gens = RatMat(k, n);
  for (int a = 0; a < k; a++) {
    // x = e_pos V^{-1} in dual coordinates; lift = x G^{-1}
    for (int j = 0; j < n; j++) {
      Rat t = 0;
      for (int i = 0; i < n; i++)
        if (vinv(d.pos[a], i) != 0) t += vinv(d.pos[a], i) * gi(i, j);
      d.gens(a, j) = t;
    }
    d.m.divisors.push_back(s.s(d.pos[a], d.pos[a]).get_si());
  }
  d.m.qgen.resize(k);
  d.m.bgen.assign(k, std::vector<Rat>(k));
  std::vector<std::vector<Rat>> rows(k, std::vector<Rat>(n));
  for (int a = 0; a < k; a++)
    for (int j = 0; j < n; j++) rows[a][j] = d.gens(a, j);
  for (int a = 0; a < k; a++) {
    d.m.qgen[a] = mod1(l.inner(rows[a], rows[a]) / 2);
    for (int b = 0; b < k; b++) d.m.bgen[a][b] = mod1(l.inner(rows[a], rows[b]));
  }
  return d;
}

FiniteQuadraticModule disc_module(const Lattice& l) { return disc_data(l).m; }

std::vector<Int> quotient_invariants(const SublatticeEmbedding& e) {
  const RatMat& t = e.transition;
  if (e.sub.rank() != e.sup.rank() || t.rows != t.cols || t.rows != e.sub.rank())
    throw RankMismatch();
  if (!is_integral(t)) throw NotSublattice();
  if (!(t * e.sup.gram * transpose(t) == e.sub.gram))
    throw std::invalid_argument("transition does not match grams");
  std::vector<Int> out;
  for (auto& d : snf_diagonal(to_int(t)))
    if (d != 1) out.push_back(d);
  return out;
}

std::string serialize(const Lattice& l) {
  std::ostringstream os;
  os << "lattice v1\nlabel " << l.label << "\nrank " << l.rank() << "\ngram";
  for (auto& x : l.gram.a) os << ' ' << x.get_num().get_str() << '/' << x.get_den().get_str();
  os << "\n";
  return os.str();
}

Lattice deserialize(const std::string& s) {
  std::istringstream is(s);
  std::string line, label;
  std::getline(is, line);
  if (line != "lattice v1") throw std::invalid_argument("bad lattice header");
  std::getline(is, line);
  if (line.rfind("label", 0) != 0) throw std::invalid_argument("bad label line");
  label = line.size() > 6 ? line.substr(6) : "";
  std::string key;
  int n;
  is >> key >> n;
  if (key != "rank" || n < 1) throw std::invalid_argument("bad rank line");
  is >> key;
  if (key != "gram") throw std::invalid_argument("bad gram line");
  RatMat g(n, n);
  for (auto& x : g.a) {
    std::string t;
    if (!(is >> t)) throw std::invalid_argument("short gram");
    x = Rat(t);
    x.canonicalize();
  }
  return Lattice(g, label);
}

}  // namespace voalat
