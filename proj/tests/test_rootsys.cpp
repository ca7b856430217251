#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "voalat/rootsys.hpp"

using namespace voalat;

static IntMat random_unimodular(int n, std::mt19937_64& rng) {
  IntMat u = IntMat::identity(n);
  std::uniform_int_distribution<int> pick(0, n - 1), coef(-1, 1);
  for (int s = 0; s < 3 * n; s++) {
    int i = pick(rng), j = pick(rng);
    if (i == j) continue;
    Int c = coef(rng);
    for (int k = 0; k < n; k++) u(i, k) += c * u(j, k);
  }
  return u;
}

static std::set<IVec> as_set(const VectorList& v) { return {v.vectors.begin(), v.vectors.end()}; }

TEST_CASE("root counts of ADE lattices") {
  auto a2 = roots(standard_lattice("A_2"), Rat(2));
  CHECK(a2.size() == 3);
  CHECK(classify(a2).str() == "A_2");
  CHECK(classify(roots(standard_lattice("E_8"), Rat(2))).str() == "E_8");
  CHECK(classify(roots(standard_lattice("D_5"), Rat(2))).str() == "D_5");
  CHECK(classify(roots(standard_lattice("E_6"), Rat(2))).str() == "E_6");
  CHECK(classify(roots(standard_lattice("E_7"), Rat(2))).str() == "E_7");
  auto s = direct_sum({standard_lattice("A_3"), standard_lattice("A_3"), standard_lattice("D_4")});
  CHECK(classify(roots(s, Rat(2))).str() == "D_4A_3^2");
}

TEST_CASE("non simply laced types from level") {
  // D4 at level 2: short roots of norm 2, long roots from 2 D4*
  auto t = classify(roots(standard_lattice("D_4")));
  REQUIRE(t.comps.size() == 1);
  CHECK(t.comps[0].family == 'F');
  CHECK(t.comps[0].scale == 2);
  // sqrt2 Z^3: short roots e_i, long roots e_i +- e_j
  auto c = classify(roots(rescale(standard_lattice("Z_3"), 2)));
  REQUIRE(c.comps.size() == 1);
  CHECK(c.comps[0].family == 'B');
  CHECK(c.comps[0].rank == 3);
  // sqrt3 E6*: level 3, roots of norm 4 and 6
  auto a = classify(roots_prime_level(rescale(dual(standard_lattice("E_6")), 3), 3));
  CHECK(a.rank() == 6);
  CHECK(classify(roots_prime_level(rescale(standard_lattice("E_8"), 2), 2)).str() == "√2E_8");
}

TEST_CASE("prime level description agrees with reflective vectors") {
  std::mt19937_64 rng(11);
  std::vector<std::pair<Lattice, long>> cases = {
      {standard_lattice("D_4"), 2},
      {standard_lattice("A_2"), 3},
      {standard_lattice("A_4"), 5},
      {standard_lattice("A_6"), 7},
      {direct_sum({standard_lattice("D_4"), rescale(standard_lattice("E_8"), 2), standard_lattice("E_8")}), 2},
      {direct_sum({standard_lattice("A_2"), rescale(dual(standard_lattice("E_6")), 3)}), 3},
      {glue_extend(direct_sum({standard_lattice("E_6"), standard_lattice("A_2")}),
                   {[] {
                      auto a = glue_class_coords('E', 6, "1");
                      auto b = glue_class_coords('A', 2, "1");
                      a.insert(a.end(), b.begin(), b.end());
                      return a;
                    }()}),
       2},
  };
  for (auto& [l, p] : cases) {
    if (level(l) != p) {
      CHECK_THROWS_AS(roots_prime_level(l, 2), NotPrimeLevel);
      continue;
    }
    auto x = with_basis(l, random_unimodular(l.rank(), rng));
    auto r1 = roots(x);
    auto r2 = roots_prime_level(x, p);
    CHECK(as_set(r1) == as_set(r2));
    CHECK(classify(r1) == classify(roots_prime_level(l, p)));
    // every root lies in (<a,a>/2) L*
    for (size_t i = 0; i < r1.size(); i++) {
      auto& v = r1.vectors[i];
      for (int j = 0; j < x.rank(); j++) {
        Rat s = 0;
        for (int k = 0; k < x.rank(); k++) s += x.gram(j, k) * v[k];
        Rat c = s * 2 / r1.norms[i];
        CHECK(c.get_den() == 1);
      }
    }
  }
}

TEST_CASE("prime level guards") {
  CHECK_THROWS_AS(roots_prime_level(standard_lattice("E_8"), 2), NotPrimeLevel);
  CHECK_THROWS_AS(roots_prime_level(standard_lattice("A_1"), 2), NotPrimeLevel);
  CHECK_THROWS_AS(roots_prime_level(standard_lattice("A_3"), 4), NotPrimeLevel);
  CHECK(is_prime(7));
  CHECK(!is_prime(1));
  CHECK(!is_prime(9));
}

TEST_CASE("weyl orders") {
  CHECK(weyl_order('A', 6) == 5040);
  CHECK(weyl_order('D', 4) == 192);
  CHECK(weyl_order('E', 8) == Int("696729600"));
  CHECK(weyl_order('F', 4) == 1152);
  CHECK(weyl_order('G', 2) == 12);
  CHECK(weyl_order('C', 3) == 48);
  CHECK(weyl_order(parse_root_type("A_1^16")) == 65536);
  CHECK(weyl_contains_minus_one(parse_root_type("A_1^16")));
  CHECK(!weyl_contains_minus_one(parse_root_type("A_2^6")));
  CHECK(weyl_contains_minus_one(parse_root_type("E_7B_5F_4")));
  CHECK(!weyl_contains_minus_one(parse_root_type("E_6(√3A_1)")));
}

TEST_CASE("reflections are isometries") {
  auto l = standard_lattice("D_4");
  auto r = roots(l);
  for (auto& v : r.vectors) {
    IMat s = reflection(l, v);
    CHECK(preserves_gram(s, l.gram));
  }
}

TEST_CASE("print and parse") {
  for (std::string s : {"A_1^16", "A_3^4(√2A_1)^4", "D_4^2C_2^4", "A_5^2(√2A_2)^2C_2", "C_8F_4^2", "E_7B_5F_4",
                        "D_6(√5A_1)^2", "A_5D_4(√3A_1)^3", "E_6G_2^3", "A_6", "E_8B_8", "D_9√2A_7"}) {
    auto t = parse_root_type(s);
    CHECK(parse_root_type(t.str()) == t);
  }
  CHECK(parse_root_type("D_6(sqrt5A_1^2)") == parse_root_type("D_6(√5A_1)^2"));
  CHECK(parse_root_type("D_4^2B_2^4") == parse_root_type("D_4^2C_2^4"));
  CHECK(parse_root_type("A_3^4(√2A_1)^4").rank() == 16);
  auto c = parse_root_type("C_4");
  CHECK(c.comps[0].scale == 2);
  auto g = parse_root_type("G_2");
  CHECK(g.comps[0].scale == 3);
  CHECK_THROWS(parse_root_type("X_3"));
}
