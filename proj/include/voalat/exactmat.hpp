#pragma once
#include <gmpxx.h>

#include <stdexcept>
#include <string>
#include <vector>

namespace voalat {

using Int = mpz_class;
using Rat = mpq_class;
// a/b in lowest terms (the two-argument mpq constructor does not reduce)
inline Rat frac(const Int& a, const Int& b) {
  Rat r(a, b);
  r.canonicalize();
  return r;
}

struct SingularMatrix : std::runtime_error {
  SingularMatrix() : std::runtime_error("SingularMatrix") {}
};

template <class T>
struct Mat {
  int rows = 0, cols = 0;
  std::vector<T> a;

  Mat() = default;
  Mat(int r, int c) : rows(r), cols(c), a(size_t(r) * c) {}

  T& operator()(int i, int j) { return a[size_t(i) * cols + j]; }
  const T& operator()(int i, int j) const { return a[size_t(i) * cols + j]; }

  static Mat identity(int n) {
    Mat m(n, n);
    for (int i = 0; i < n; i++) m(i, i) = 1;
    return m;
  }
  bool operator==(const Mat& o) const {
    return rows == o.rows && cols == o.cols && a == o.a;
  }
  bool square() const { return rows == cols; }
};

using IntMat = Mat<Int>;
using RatMat = Mat<Rat>;

template <class T>
Mat<T> operator*(const Mat<T>& x, const Mat<T>& y) {
  if (x.cols != y.rows) throw std::invalid_argument("dimension mismatch");
  Mat<T> r(x.rows, y.cols);
  for (int i = 0; i < x.rows; i++)
    for (int k = 0; k < x.cols; k++) {
      if (x(i, k) == 0) continue;
      for (int j = 0; j < y.cols; j++) r(i, j) += x(i, k) * y(k, j);
    }
  return r;
}

template <class T>
Mat<T> transpose(const Mat<T>& m) {
  Mat<T> r(m.cols, m.rows);
  for (int i = 0; i < m.rows; i++)
    for (int j = 0; j < m.cols; j++) r(j, i) = m(i, j);
  return r;
}

RatMat to_rat(const IntMat& m);
bool is_integral(const RatMat& m);
IntMat to_int(const RatMat& m);  // throws if not integral
RatMat scale(const RatMat& m, const Rat& c);
Int common_denominator(const RatMat& m);

struct Snf {
  IntMat s, u, v;
};
// s = u*m*v, d1 | d2 | ..., all >= 0
Snf snf(const IntMat& m);
std::vector<Int> snf_diagonal(const IntMat& m);

struct Hnf {
  IntMat h, u;
};
// h = u*m, row echelon, positive pivots, entries above a pivot in [0, pivot)
Hnf hnf(const IntMat& m);
int hnf_rank(const Hnf& r);

RatMat rational_inverse(const RatMat& m);
Rat det(const RatMat& m);
Int det(const IntMat& m);
int rank(const RatMat& m);

// saturated basis of {x : m*x = 0}, one vector per row
IntMat integer_kernel(const IntMat& m);

// rows of m (rational) -> Z-basis of the module they span (rows), via HNF
RatMat row_basis(const RatMat& m);

std::string to_string(const Rat& q);
std::string to_string(const IntMat& m);
std::string to_string(const RatMat& m);

}  // namespace voalat
