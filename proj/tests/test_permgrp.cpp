#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "voalat/permgrp.hpp"

using namespace voalat;

// oracle: closure of the generators by breadth-first multiplication
static size_t closure_size(size_t n, const std::vector<Perm>& gens) {
  PermPolicy p(n);
  std::set<Perm> seen{p.id()};
  std::vector<Perm> q{p.id()};
  for (size_t i = 0; i < q.size(); i++)
    for (auto& g : gens) {
      Perm h = p.mul(q[i], g);
      if (seen.insert(h).second) q.push_back(h);
    }
  return seen.size();
}

static Perm cycle_n(size_t n) {
  Perm p(n);
  for (size_t i = 0; i < n; i++) p[i] = (i + 1) % n;
  return p;
}

TEST_CASE("trivial and symmetric groups") {
  auto t = make_perm_group(5, {});
  CHECK(t.order() == 1);
  auto [o, s] = orbit_and_stabilizer_order(t, 3);
  CHECK(o == 1);
  CHECK(s == 1);
  auto s12 = make_perm_group(12, {cycle_n(12), parse_cycles("(1,2)", 12)});
  CHECK(s12.order() == Int("479001600"));
  auto [o2, st] = orbit_and_stabilizer_order(s12, 0);
  CHECK(o2 == 12);
  CHECK(st == Int("39916800"));
}

TEST_CASE("M12 from standard generators") {
  std::vector<Perm> g{parse_cycles("(1,2,3,4,5,6,7,8,9,10,11)", 12),
                      parse_cycles("(3,7,11,8)(4,10,5,6)", 12),
                      parse_cycles("(1,12)(2,11)(3,6)(4,8)(5,9)(7,10)", 12)};
  auto m = make_perm_group(12, g);
  CHECK(m.order() == 95040);
  CHECK(!m.contains(parse_cycles("(1,2)", 12)));
  CHECK(m.contains(PermPolicy(12).mul(g[0], g[2])));
}

TEST_CASE("orders agree with closure on random small groups") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 25; trial++) {
    size_t n = 4 + trial % 5;
    std::vector<Perm> gens;
    int k = 1 + trial % 3;
    for (int i = 0; i < k; i++) {
      Perm p(n);
      for (size_t j = 0; j < n; j++) p[j] = j;
      std::shuffle(p.begin(), p.end(), rng);
      if (trial % 4 == 0) {  // small groups: transpositions on the first three points
        for (size_t j = 0; j < n; j++) p[j] = j;
        std::swap(p[i % 3], p[(i + 1) % 3]);
      }
      gens.push_back(p);
    }
    auto g = make_perm_group(n, gens);
    CHECK(g.order() == (unsigned long)closure_size(n, gens));
    // product of basic orbit sizes equals the order by construction; each
    // generator and random products must be members
    PermPolicy pp(n);
    Perm w = pp.id();
    for (int s = 0; s < 10; s++) {
      w = pp.mul(w, gens[s % gens.size()]);
      CHECK(g.contains(w));
    }
  }
}

TEST_CASE("incremental add_generator") {
  auto g = make_perm_group(6, {parse_cycles("(1,2,3)", 6)});
  CHECK(g.order() == 3);
  g.add_generator(parse_cycles("(1,2)", 6));
  CHECK(g.order() == 6);
  g.add_generator(parse_cycles("(4,5,6)", 6));
  CHECK(g.order() == 18);
  g.add_generator(parse_cycles("(1,2)", 6));
  CHECK(g.order() == 18);
}

static IMat m2(long a, long b, long c, long d) { return {a, b, c, d}; }

TEST_CASE("O(A2) on roots and its discriminant action") {
  auto a2 = standard_lattice("A_2");
  auto roots = vectors_up_to(a2, 2).vectors;
  std::vector<IMat> gens{m2(-1, 0, 1, 1), m2(1, 1, 0, -1), m2(-1, 0, 0, -1)};
  auto g = from_matrix_action(gens, a2, roots);
  CHECK(g.order() == 12);
  auto w = from_matrix_action({gens[0], gens[1]}, a2, roots);
  CHECK(w.order() == 6);
  CHECK(!w.contains(gens[2]));
  CHECK(g.contains(m2(0, 1, 1, 0)));
  auto act = disc_action(a2, gens);
  CHECK(act.image_order() == 2);
  CHECK(g.order() / act.image_order() == 6);
  // reflections act trivially on the discriminant group
  CHECK(disc_action(a2, {gens[0], gens[1]}).image_order() == 1);
  CHECK_THROWS_AS(from_matrix_action({m2(1, 1, 0, 1)}, a2, roots), std::invalid_argument);
  CHECK_THROWS_AS(from_matrix_action(gens, a2, {roots[0]}), NotFaithful);
}

TEST_CASE("disc action of the hyperoctahedral group on 2Z^3") {
  // 2Z^3 with Gram 4I
  auto l = rescale(standard_lattice("Z_3"), 4);
  std::vector<IMat> gens{{0, 1, 0, 1, 0, 0, 0, 0, 1}, {0, 1, 0, 0, 0, 1, 1, 0, 0}, {-1, 0, 0, 0, 1, 0, 0, 0, 1}};
  std::vector<IVec> pts{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  auto g = from_matrix_action(gens, l, pts);
  CHECK(g.order() == 48);
  auto act = disc_action(l, gens);
  // D = Z4^3 here (Gram 4I), signs act as -1 on a coordinate
  CHECK(act.module.m.size() == 64);
  CHECK(act.image_order() == 48);
}
