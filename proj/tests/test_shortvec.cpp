#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "voalat/shortvec.hpp"

using namespace voalat;

static IntMat random_unimodular(int n, std::mt19937_64& rng) {
  IntMat u = IntMat::identity(n);
  std::uniform_int_distribution<int> pick(0, n - 1), coef(-1, 1);
  for (int s = 0; s < 4 * n; s++) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Int c = coef(rng);
    for (int k = 0; k < n; k++) u(i, k) += c * u(j, k);
  }
  return u;
}

TEST_CASE("basic counts") {
  CHECK(vectors_up_to(standard_lattice("A_2"), 2).size() == 3);
  CHECK(vectors_up_to(standard_lattice("E_8"), 2).size() == 120);
  CHECK(vectors_up_to(rescale(standard_lattice("D_12"), 2), 2).size() == 0);
  CHECK_THROWS_AS(vectors_up_to(standard_lattice("E_8"), 0), std::invalid_argument);
}

TEST_CASE("root counts of ADE lattices") {
  for (int n = 1; n <= 9; n++) CHECK(2 * vectors_up_to(standard_lattice('A', n), 2).size() == size_t(n * (n + 1)));
  for (int n = 4; n <= 12; n++)
    CHECK(2 * vectors_up_to(standard_lattice('D', n), 2).size() == size_t(2 * n * (n - 1)));
  CHECK(2 * vectors_up_to(standard_lattice("E_6"), 2).size() == 72);
  CHECK(2 * vectors_up_to(standard_lattice("E_7"), 2).size() == 126);
}

TEST_CASE("E8 shells") {
  auto h = norm_histogram(vectors_up_to(standard_lattice("E_8"), 6));
  CHECK(h[Rat(2)] == 120);
  CHECK(h[Rat(4)] == 1080);
  CHECK(h[Rat(6)] == 3360);
}

// brute force over a coordinate box as the oracle
TEST_CASE("agrees with box enumeration") {
  std::mt19937_64 rng(11);
  for (auto name : {"A_3", "D_4", "A_2"}) {
    Lattice l = with_basis(standard_lattice(name), random_unimodular(standard_lattice(name).rank(), rng));
    int n = l.rank();
    Rat bound = 6;
    std::set<IVec> box;
    // |x_i| <= sqrt(bound * (G^-1)_ii)
    RatMat gi = rational_inverse(l.gram);
    int r = 0;
    for (int i = 0; i < n; i++) r = std::max(r, (int)std::ceil(std::sqrt(Rat(bound * gi(i, i)).get_d())));
    IVec x(n, -r);
    for (;;) {
      std::vector<Int> xi(x.begin(), x.end());
      Rat nm = l.norm(xi);
      if (nm > 0 && nm <= bound) {
        IVec y = x;
        for (int j = 0; j < n; j++)
          if (y[j]) {
            if (y[j] < 0)
              for (auto& c : y) c = -c;
            break;
          }
        box.insert(y);
      }
      int k = 0;
      while (k < n && x[k] == r) x[k++] = -r;
      if (k == n) break;
      x[k]++;
    }
    auto v = vectors_up_to(l, bound);
    std::set<IVec> got(v.vectors.begin(), v.vectors.end());
    CHECK(got.size() == v.size());
    CHECK(got == box);
  }
}

TEST_CASE("basis independence and rescaling") {
  std::mt19937_64 rng(3);
  for (auto name : {"E_6", "D_7", "A_5"}) {
    auto l = standard_lattice(name);
    auto h = norm_histogram(vectors_up_to(l, 6));
    auto l2 = with_basis(l, random_unimodular(l.rank(), rng));
    CHECK(norm_histogram(vectors_up_to(l2, 6)) == h);
    auto h3 = norm_histogram(vectors_up_to(rescale(l, 3), 18));
    CHECK(h3.size() == h.size());
    for (auto& [k, c] : h) CHECK(h3[k * 3] == c);
  }
}

TEST_CASE("sorted, deterministic, positive first") {
  auto a = vectors_up_to(standard_lattice("D_5"), 4);
  auto b = vectors_up_to(standard_lattice("D_5"), 4);
  CHECK(a.vectors == b.vectors);
  for (size_t i = 0; i + 1 < a.size(); i++)
    CHECK((a.norms[i] < a.norms[i + 1] || (a.norms[i] == a.norms[i + 1] && a.vectors[i] < a.vectors[i + 1])));
  for (auto& v : a.vectors) {
    int j = 0;
    while (v[j] == 0) j++;
    CHECK(v[j] > 0);
  }
}

TEST_CASE("lll keeps the lattice") {
  std::mt19937_64 rng(9);
  auto l = with_basis(standard_lattice("E_8"), random_unimodular(8, rng));
  auto r = lll_reduce(l);
  CHECK(abs(det(r.t)) == 1);
  CHECK(with_basis(l, r.t).gram == r.reduced.gram);
}

TEST_CASE("cap") { CHECK_THROWS_AS(vectors_up_to(standard_lattice("E_8"), 20, 1000), BoundTooLarge); }
