#include "voalat/exactmat.hpp"

#include <sstream>
#include <utility>

namespace voalat {

RatMat to_rat(const IntMat& m) {
  RatMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); i++) r.a[i] = m.a[i];
  return r;
}

bool is_integral(const RatMat& m) {
  for (auto& x : m.a)
    if (x.get_den() != 1) return false;
  return true;
}

IntMat to_int(const RatMat& m) {
  IntMat r(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); i++) {
    if (m.a[i].get_den() != 1) throw std::domain_error("matrix not integral");
    r.a[i] = m.a[i].get_num();
  }
  return r;
}

RatMat scale(const RatMat& m, const Rat& c) {
  RatMat r = m;
  for (auto& x : r.a) x *= c;
  return r;
}

Int common_denominator(const RatMat& m) {
  Int d = 1;
  for (auto& x : m.a) mpz_lcm(d.get_mpz_t(), d.get_mpz_t(), x.get_den_mpz_t());
  return d;
}

namespace {

template <class T>
void swap_rows(Mat<T>& m, int i, int j) {
  if (i == j) return;
  for (int k = 0; k < m.cols; k++) std::swap(m(i, k), m(j, k));
}
template <class T>
void swap_cols(Mat<T>& m, int i, int j) {
  if (i == j) return;
  for (int k = 0; k < m.rows; k++) std::swap(m(k, i), m(k, j));
}
// row i += c * row j
void add_row(IntMat& m, int i, int j, const Int& c) {
  for (int k = 0; k < m.cols; k++)
    if (m(j, k) != 0) m(i, k) += c * m(j, k);
}
void add_col(IntMat& m, int i, int j, const Int& c) {
  for (int k = 0; k < m.rows; k++)
    if (m(k, j) != 0) m(k, i) += c * m(k, j);
}
void neg_row(IntMat& m, int i) {
  for (int k = 0; k < m.cols; k++) m(i, k) = -m(i, k);
}

}  // namespace

Snf snf(const IntMat& m) {
  Snf r{m, IntMat::identity(m.rows), IntMat::identity(m.cols)};
  IntMat& s = r.s;
  int n = std::min(m.rows, m.cols);
  for (int t = 0; t < n; t++) {
    for (;;) {
      int pi = -1, pj = -1;
      Int best;
      for (int i = t; i < s.rows; i++)
        for (int j = t; j < s.cols; j++) {
          if (s(i, j) == 0) continue;
          Int av = abs(s(i, j));
          if (pi < 0 || av < best) best = av, pi = i, pj = j;
        }
      if (pi < 0) goto finish;
      swap_rows(s, t, pi), swap_rows(r.u, t, pi);
      swap_cols(s, t, pj), swap_cols(r.v, t, pj);
      bool clean = true;
      Int q;
      for (int i = t + 1; i < s.rows; i++) {
        if (s(i, t) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s(i, t).get_mpz_t(), s(t, t).get_mpz_t());
        if (q != 0) add_row(s, i, t, -q), add_row(r.u, i, t, -q);
        if (s(i, t) != 0) clean = false;
      }
      for (int j = t + 1; j < s.cols; j++) {
        if (s(t, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), s(t, j).get_mpz_t(), s(t, t).get_mpz_t());
        if (q != 0) add_col(s, j, t, -q), add_col(r.v, j, t, -q);
        if (s(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      int bad = -1;
      for (int i = t + 1; i < s.rows && bad < 0; i++)
        for (int j = t + 1; j < s.cols; j++)
          if (!mpz_divisible_p(s(i, j).get_mpz_t(), s(t, t).get_mpz_t())) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      add_row(s, t, bad, 1), add_row(r.u, t, bad, 1);
    }
    if (s(t, t) < 0) neg_row(s, t), neg_row(r.u, t);
  }
finish:
  return r;
}

std::vector<Int> snf_diagonal(const IntMat& m) {
  Snf r = snf(m);
  std::vector<Int> d;
  for (int i = 0; i < std::min(m.rows, m.cols); i++) d.push_back(r.s(i, i));
  return d;
}

Hnf hnf(const IntMat& m) {
  Hnf r{m, IntMat::identity(m.rows)};
  IntMat& h = r.h;
  int p = 0;
  Int q;
  for (int j = 0; j < h.cols && p < h.rows; j++) {
    for (;;) {
      int pi = -1;
      for (int i = p; i < h.rows; i++)
        if (h(i, j) != 0 && (pi < 0 || abs(h(i, j)) < abs(h(pi, j)))) pi = i;
      if (pi < 0) break;
      swap_rows(h, p, pi), swap_rows(r.u, p, pi);
      bool clean = true;
      for (int i = p + 1; i < h.rows; i++) {
        if (h(i, j) == 0) continue;
        mpz_tdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(p, j).get_mpz_t());
        add_row(h, i, p, -q), add_row(r.u, i, p, -q);
        if (h(i, j) != 0) clean = false;
      }
      if (clean) break;
    }
    if (h(p, j) == 0) continue;
    if (h(p, j) < 0) neg_row(h, p), neg_row(r.u, p);
    for (int i = 0; i < p; i++) {
      mpz_fdiv_q(q.get_mpz_t(), h(i, j).get_mpz_t(), h(p, j).get_mpz_t());
      if (q != 0) add_row(h, i, p, -q), add_row(r.u, i, p, -q);
    }
    p++;
  }
  return r;
}

int hnf_rank(const Hnf& r) {
  int k = 0;
  for (int i = 0; i < r.h.rows; i++) {
    bool z = true;
    for (int j = 0; j < r.h.cols; j++)
      if (r.h(i, j) != 0) z = false;
    if (!z) k = i + 1;
  }
  return k;
}

RatMat rational_inverse(const RatMat& m) {
  if (!m.square()) throw std::invalid_argument("not square");
  int n = m.rows;
  RatMat a = m, r = RatMat::identity(n);
  for (int c = 0; c < n; c++) {
    int p = -1;
    for (int i = c; i < n; i++)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) throw SingularMatrix();
    swap_rows(a, c, p), swap_rows(r, c, p);
    Rat inv = 1 / a(c, c);
    for (int k = 0; k < n; k++) a(c, k) *= inv, r(c, k) *= inv;
    for (int i = 0; i < n; i++) {
      if (i == c || a(i, c) == 0) continue;
      Rat f = a(i, c);
      for (int k = 0; k < n; k++) {
        if (a(c, k) != 0) a(i, k) -= f * a(c, k);
        if (r(c, k) != 0) r(i, k) -= f * r(c, k);
      }
    }
  }
  return r;
}

Rat det(const RatMat& m) {
  if (!m.square()) throw std::invalid_argument("not square");
  int n = m.rows;
  RatMat a = m;
  Rat d = 1;
  for (int c = 0; c < n; c++) {
    int p = -1;
    for (int i = c; i < n; i++)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) return 0;
    if (p != c) swap_rows(a, c, p), d = -d;
    d *= a(c, c);
    for (int i = c + 1; i < n; i++) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) / a(c, c);
      for (int k = c; k < n; k++) a(i, k) -= f * a(c, k);
    }
  }
  return d;
}

Int det(const IntMat& m) { return det(to_rat(m)).get_num(); }

int rank(const RatMat& m) {
  RatMat a = m;
  int r = 0;
  for (int c = 0; c < a.cols && r < a.rows; c++) {
    int p = -1;
    for (int i = r; i < a.rows; i++)
      if (a(i, c) != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    swap_rows(a, r, p);
    for (int i = r + 1; i < a.rows; i++) {
      if (a(i, c) == 0) continue;
      Rat f = a(i, c) / a(r, c);
      for (int k = c; k < a.cols; k++) a(i, k) -= f * a(r, k);
    }
    r++;
  }
  return r;
}

IntMat integer_kernel(const IntMat& m) {
  Hnf h = hnf(transpose(m));
  int rk = hnf_rank(h);
  IntMat k(h.u.rows - rk, h.u.cols);
  for (int i = rk; i < h.u.rows; i++)
    for (int j = 0; j < h.u.cols; j++) k(i - rk, j) = h.u(i, j);
  if (k.rows == 0) return k;
  return hnf(k).h;
}

RatMat row_basis(const RatMat& m) {
  Int d = common_denominator(m);
  IntMat im(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); i++) {
    Rat x = m.a[i] * d;
    im.a[i] = x.get_num();
  }
  Hnf h = hnf(im);
  int rk = hnf_rank(h);
  RatMat r(rk, m.cols);
  for (int i = 0; i < rk; i++)
    for (int j = 0; j < m.cols; j++) {
      r(i, j) = Rat(h.h(i, j), d);
      r(i, j).canonicalize();
    }
  return r;
}

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const IntMat& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows; i++) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < m.cols; j++) os << (j ? "," : "") << m(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

std::string to_string(const RatMat& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < m.rows; i++) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < m.cols; j++) os << (j ? "," : "") << m(i, j).get_str();
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace voalat
