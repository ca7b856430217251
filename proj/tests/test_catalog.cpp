#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <set>

#include "voalat/catalog.hpp"

using namespace voalat;

TEST_CASE("entry counts per class") {
  std::map<std::string, int> n;
  for (auto& e : entries()) n[e.cls]++;
  std::map<std::string, int> want = {{"2A", 17}, {"3B", 6}, {"2C", 9}, {"4C", 5}, {"5B", 2},
                                     {"6E", 2},  {"7B", 1}, {"8E", 1}, {"6G", 2}, {"10F", 1}};
  CHECK(n == want);
  CHECK(entries().size() == 46);
  std::set<int> nums;
  for (auto& e : entries()) nums.insert(e.number);
  CHECK(nums.size() == 46);
}

TEST_CASE("every class has a genus row") {
  for (auto& e : entries()) {
    auto& cd = catalog().class_data(e.cls);
    CHECK(cd.genus == e.genus);
    CHECK(class_ell(e.cls) == e.ell);
  }
  CHECK(class_ell("2C") == 4);
  CHECK(class_ell("6G") == 12);
  CHECK(class_ell("10F") == 20);
  CHECK(class_ell("3B") == 3);
}

TEST_CASE("parse_lie") {
  auto s = parse_lie("A1,2^16 A3,1^4");
  REQUIRE(s.size() == 2);
  CHECK(s[0].family == 'A');
  CHECK(s[0].rank == 1);
  CHECK(s[0].level == 2);
  CHECK(s[0].mult == 16);
  CHECK(s[1].mult == 4);
  CHECK(lie_str(s) == "A1,2^16 A3,1^4");
  auto t = parse_lie("D_{5,4}C_{3,2}A_{1,1}^2");
  REQUIRE(t.size() == 3);
  CHECK(t[2].mult == 2);
  CHECK(t[1].family == 'C');
}

TEST_CASE("rank of V1 plus rank of the fixed lattice is 24 for the orbifold entries") {
  // rank L = sum of Lie ranks; rank L + rank Lambda^g = 24
  for (auto& e : entries()) {
    int r = 0;
    for (auto& s : e.summands) r += s.rank * s.mult;
    CHECK(e.rank() == r);
    CHECK(r + catalog().class_data(e.cls).rank_lambda == 24);
  }
}

TEST_CASE("Lie dimensions and dual Coxeter numbers") {
  // closed forms
  for (int n = 1; n <= 12; n++) {
    CHECK(lie_dimension_and_dual_coxeter('A', n).dim == n * (n + 2));
    CHECK(lie_dimension_and_dual_coxeter('A', n).dual_coxeter == n + 1);
    CHECK(lie_dimension_and_dual_coxeter('C', n).dim == n * (2 * n + 1));
    CHECK(lie_dimension_and_dual_coxeter('C', n).dual_coxeter == n + 1);
  }
  for (int n = 2; n <= 12; n++) {
    CHECK(lie_dimension_and_dual_coxeter('B', n).dim == n * (2 * n + 1));
    CHECK(lie_dimension_and_dual_coxeter('B', n).dual_coxeter == 2 * n - 1);
  }
  for (int n = 4; n <= 12; n++) {
    CHECK(lie_dimension_and_dual_coxeter('D', n).dim == n * (2 * n - 1));
    CHECK(lie_dimension_and_dual_coxeter('D', n).dual_coxeter == 2 * n - 2);
  }
  CHECK(lie_dimension_and_dual_coxeter('E', 6).dim == 78);
  CHECK(lie_dimension_and_dual_coxeter('E', 7).dual_coxeter == 18);
  CHECK(lie_dimension_and_dual_coxeter('E', 8).dim == 248);
  CHECK(lie_dimension_and_dual_coxeter('F', 4).dual_coxeter == 9);
  CHECK(lie_dimension_and_dual_coxeter('G', 2).dim == 14);
}

TEST_CASE("h/k is constant over ideals and equals (dim V1 - 24)/24") {
  for (auto& e : entries()) {
    CAPTURE(e.number);
    long dim = 0;
    std::set<Rat> r;
    for (auto& s : e.expanded()) {
      auto d = lie_dimension_and_dual_coxeter(s.family, s.rank);
      dim += d.dim;
      r.insert(frac(d.dual_coxeter, s.level));
    }
    CHECK(r.size() == 1);
    CHECK(*r.begin() == frac(dim - 24, 24));
  }
}

TEST_CASE("simple current groups at level one") {
  CHECK(simple_current_group('A', 4, 1).size() == 5);
  CHECK(simple_current_group('D', 6, 1).orders.size() == 2);
  CHECK(simple_current_group('D', 5, 1).orders == std::vector<long>{4});
  CHECK(simple_current_group('E', 6, 1).size() == 3);
  CHECK(simple_current_group('E', 7, 1).size() == 2);
  CHECK(simple_current_group('E', 8, 1).size() == 1);
  CHECK(simple_current_group('B', 4, 1).size() == 2);
  CHECK(simple_current_group('C', 3, 1).size() == 2);
  CHECK(simple_current_group('F', 4, 1).size() == 1);
}

TEST_CASE("shape orders") {
  CHECK(shape_order("M12") == 95040);
  CHECK(shape_order("M24") == 244823040);
  CHECK(shape_order("W(A1)^16*AGL4(2)") == Int(65536) * 322560);
  CHECK(shape_order("2*W(A6)") == 10080);
  CHECK(shape_order("S3") == 6);
  CHECK(shape_order("Z2^2") == 4);
  CHECK(shape_order("1") == 1);
  CHECK(shape_order("(2*W(A4))^2*2") == Int(240 * 240) * 2);
}

TEST_CASE("abelian invariants") {
  CHECK(abelian_invariants("Z2^3xZ4") == std::vector<long>{2, 2, 2, 4});
  CHECK(invariant_factors({2, 3}) == std::vector<long>{6});
  CHECK(invariant_factors({4, 2, 3}) == std::vector<long>{2, 12});
  CHECK(abelian_invariants("1").empty());
}

TEST_CASE("lattice-case rows") {
  auto& lc = catalog().lattice_cases;
  CHECK(lc.size() == 24);
  std::set<int> n;
  for (auto& r : lc) n.insert(r.number);
  CHECK(n.count(1));
  CHECK(n.count(15));
  CHECK(n.count(70));
  for (auto& e : entries()) CHECK(!n.count(e.number));
}

TEST_CASE("bundle of the 7B entry") {
  auto& e = catalog().entry(11);
  Bundle b = build_bundle(e);
  CHECK(b.l.rank() == 6);
  CHECK(b.l.even());
  CHECK(level(b.l) == 7);
  CHECK(b.l.det() == 16807);
  // U = sqrt7 L*, level 7 again
  CHECK(b.u.even());
  CHECK(b.u.det() == 7);
}

TEST_CASE("unknown entry and malformed file") {
  CHECK_THROWS(catalog().entry(999));
  auto p = std::filesystem::temp_directory_path() / "voalat_bad_catalog.txt";
  std::ofstream(p) << "format 1\nentry 5 B 2A A1,2^16\n  bogus line\nend\n";
  CHECK_THROWS_AS(load_catalog(p.string()), InvalidCatalog);
  std::filesystem::remove(p);
}

static void same_frozen(int number) {
  const auto& e = catalog().entry(number);
  REQUIRE(e.glue_side == 'U');
  auto g = search_u_glue(e, catalog().class_data(e.cls));
  REQUIRE(g.has_value());
  SchellekensEntry f = e;
  f.glue.clear();
  for (auto& r : *g) {
    std::vector<std::string> row;
    for (auto& x : r) row.push_back(to_string(x));
    f.glue.push_back(row);
  }
  Bundle a = build_bundle(e), b = build_bundle(f);
  CHECK(fingerprint(disc_module(a.l)) == fingerprint(disc_module(b.l)));
  CHECK(classify(roots(a.u)) == classify(roots(b.u)));
}

TEST_CASE("search re-finds the frozen U glue on small entries") {
  same_frozen(20);
  same_frozen(9);
  same_frozen(11);
}
