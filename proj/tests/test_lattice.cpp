#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "voalat/lattice.hpp"

using namespace voalat;

static Lattice times_n(const Lattice& l, int k) {
  std::vector<Lattice> v(k, l);
  return direct_sum(v);
}

TEST_CASE("standard lattices") {
  auto a2 = standard_lattice("A_2");
  CHECK(a2.gram(0, 1) == -1);
  CHECK(a2.det() == 3);
  CHECK(standard_lattice("E_8").det() == 1);
  CHECK(standard_lattice("E_8").even());
  CHECK(standard_lattice("D_12").det() == 4);
  CHECK(standard_lattice("E_6").det() == 3);
  CHECK(standard_lattice("E_7").det() == 2);
  CHECK(standard_lattice("A_7").det() == 8);
  CHECK(standard_lattice("Z_3").det() == 1);
  CHECK_THROWS_AS(standard_lattice("E_9"), InvalidFamily);
  CHECK_THROWS_AS(standard_lattice("D_2"), InvalidFamily);
  CHECK_THROWS_AS(standard_lattice("Q_2"), InvalidFamily);
}

TEST_CASE("positive definite check") {
  RatMat g(2, 2);
  g(0, 0) = 1, g(1, 1) = 1, g(0, 1) = g(1, 0) = 2;
  CHECK_THROWS_AS(Lattice{g}, NotPositiveDefinite);
}

TEST_CASE("rescale and dual") {
  auto d12 = standard_lattice("D_12");
  auto l = rescale(d12, 2);
  CHECK(l.det() == Rat(4096 * 4));
  CHECK(rescale(d12, 1) == d12);
  CHECK(rescale(standard_lattice("A_1"), Rat(1, 2)).gram(0, 0) == 1);
  CHECK(dual(standard_lattice("E_8")).even());
  CHECK(dual(standard_lattice("E_8")).det() == 1);
  CHECK(dual(standard_lattice("A_1")).gram(0, 0) == Rat(1, 2));
  CHECK(dual(dual(l)) == l);
  // U -> sqrt(4) U* round trip
  CHECK(rescale(dual(rescale(dual(l), 4)), 4) == l);
}

TEST_CASE("direct sums") {
  auto a1 = standard_lattice("A_1");
  CHECK(direct_sum({a1, a1}).det() == 4);
  auto q = direct_sum({times_n(rescale(standard_lattice("A_3"), 2), 3), rescale(a1, 2)});
  CHECK(q.rank() == 10);
  auto q10 = times_n(rescale(a1, 10), 4);
  CHECK(q10.rank() == 4);
  CHECK(q10.det() == 160000);
}

TEST_CASE("glue extension") {
  auto a1 = standard_lattice("A_1");
  auto base = times_n(rescale(a1, 10), 4);
  std::vector<Rat> g(4, Rat(1, 2));
  RatMat c;
  auto l = glue_extend(base, {g}, &c);
  CHECK(l.det() == 40000);
  CHECK(l.det() * 4 == base.det());
  // same det and level as sqrt10 D4
  auto d4 = rescale(standard_lattice("D_4"), 10);
  CHECK(d4.det() == l.det());
  CHECK(level(l) == level(d4));
  CHECK(glue_extend(base, {}) == Lattice(base.gram));
  // half of a sqrt2 A1 vector has norm 1
  auto b2 = times_n(rescale(a1, 2), 2);
  CHECK_THROWS_AS(glue_extend(b2, {{Rat(1, 2), 0}}), NotEven);
  CHECK_THROWS_AS(glue_extend(times_n(a1, 2), {{Rat(1, 2), 0}}), NotIntegral);
  // glue (1;1;00) on 2E6 + A2 + A1^2, where 2E6 has norms scaled by 4
  auto e6 = rescale(standard_lattice("E_6"), 4);
  auto bb = direct_sum({e6, standard_lattice("A_2"), a1, a1});
  std::vector<Rat> v;
  for (auto& x : glue_class_coords('E', 6, "1")) v.push_back(x);
  for (auto& x : glue_class_coords('A', 2, "1")) v.push_back(x);
  v.push_back(0), v.push_back(0);
  auto l2 = glue_extend(bb, {v});
  CHECK(l2.det() * 9 == bb.det());
}

TEST_CASE("glue class conventions") {
  CHECK(glue_class_order('D', 5, "1") == 4);
  CHECK(glue_class_order('D', 5, "2") == 2);
  CHECK(glue_class_order('D', 6, "b") == 2);
  CHECK(glue_class_order('A', 7, "1") == 8);
  CHECK(glue_class_order('A', 7, "2") == 4);
  CHECK(glue_class_order('E', 6, "1") == 3);
  CHECK(glue_class_order('E', 7, "1") == 2);
  auto d5 = standard_lattice("D_5");
  // norms of minimal class representatives: s 5/4, v 1
  auto s = glue_class_coords('D', 5, "s");
  auto v = glue_class_coords('D', 5, "v");
  CHECK(d5.inner(s, s) == Rat(5, 4));
  CHECK(d5.inner(v, v) == 1);
  auto e7 = standard_lattice("E_7");
  auto w = glue_class_coords('E', 7, "1");
  CHECK(e7.inner(w, w) == Rat(3, 2));
  auto e6 = standard_lattice("E_6");
  auto u = glue_class_coords('E', 6, "1");
  CHECK(e6.inner(u, u) == Rat(4, 3));
  CHECK_THROWS(glue_class_coords('E', 8, "1"));
}

TEST_CASE("level") {
  CHECK(level(standard_lattice("E_8")) == 1);
  CHECK(level(rescale(standard_lattice("D_12"), 2)) == 4);
  CHECK(level(standard_lattice("A_1")) == 4);
  CHECK(level(standard_lattice("A_2")) == 3);
  CHECK_THROWS_AS(level(standard_lattice("Z_2")), NotEven);
}

// brute force oracle: q-values of A2* / A2 from explicit coset representatives
TEST_CASE("disc modules") {
  auto m = disc_module(standard_lattice("A_2"));
  CHECK(m.divisors == std::vector<long>{3});
  std::map<Rat, int> h;
  for (long i = 0; i < m.size(); i++) h[m.q(m.coords(i))]++;
  CHECK(h[Rat(0)] == 1);
  CHECK(h[Rat(1, 3)] == 2);
  auto m1 = disc_module(standard_lattice("A_1"));
  CHECK(m1.size() == 2);
  CHECK(m1.qgen[0] == Rat(1, 4));
  auto md = disc_module(rescale(standard_lattice("D_12"), 2));
  CHECK(md.size() == 16384);
  CHECK(elementary_divisors(md.divisors) ==
        std::vector<long>{2, 2, 2, 2, 2, 2, 2, 2, 2, 2, 4, 4});
  CHECK(gauss_sum_arg(md) == 4);
}

TEST_CASE("disc coords of generator lifts") {
  auto l = rescale(standard_lattice("D_5"), 2);
  auto d = disc_data(l);
  for (int a = 0; a < d.gens.rows; a++) {
    std::vector<Rat> y(l.rank());
    for (int j = 0; j < l.rank(); j++) y[j] = d.gens(a, j);
    auto c = d.coords_of(y);
    for (int b = 0; b < (int)c.size(); b++) CHECK(c[b] == (a == b ? 1 : 0));
  }
}

TEST_CASE("quotient invariants") {
  auto a1 = standard_lattice("A_1");
  SublatticeEmbedding e{a1, dual(a1), RatMat(1, 1)};
  e.transition(0, 0) = 2;
  CHECK(quotient_invariants(e) == std::vector<Int>{2});
  for (auto name : {"D_6", "A_4", "E_6", "D_5"}) {
    auto l = rescale(standard_lattice(name), 3);
    SublatticeEmbedding f{l, dual(l), l.gram};
    auto inv = quotient_invariants(f);
    auto m = disc_module(l);
    std::vector<Int> dv(m.divisors.begin(), m.divisors.end());
    CHECK(inv == dv);
  }
  SublatticeEmbedding bad{a1, dual(a1), RatMat(1, 1)};
  bad.transition(0, 0) = Rat(1, 2);
  CHECK_THROWS(quotient_invariants(bad));
}

TEST_CASE("gauss arg equals rank mod 8 on scaled root lattices") {
  for (auto name : {"A_1", "A_2", "A_6", "D_4", "D_5", "E_6", "E_7"})
    for (int c : {1, 2, 3}) {
      auto l = rescale(standard_lattice(name), c);
      CHECK(gauss_sum_arg(disc_module(l)) == l.rank() % 8);
    }
}

TEST_CASE("serialization round trip") {
  auto l = dual(rescale(standard_lattice("E_6"), 3));
  l.label = "sqrt3 E6 dual";
  auto s = serialize(l);
  auto r = deserialize(s);
  CHECK(r == l);
  CHECK(r.label == l.label);
  CHECK(serialize(r) == s);
}
