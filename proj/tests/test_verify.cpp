#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "voalat/verify.hpp"

using namespace voalat;

static std::string glue_file() { return default_data_dir() + "/gluecodes.txt"; }

TEST_CASE("7B entry: every check passes") {
  auto r = verify_entry(catalog().entry(11));
  CHECK(r.all_ok());
  CHECK(r.order_l == 10080);
  CHECK(r.order_w == 5040);
  CHECK(r.order_out == 1);
  for (const char* id : {"even_level", "rank", "dm04a", "genus", "form", "milgram", "root_type", "k", "o_l", "out"})
    CHECK(r.find(id) != nullptr);
}

TEST_CASE("3B entry A2,3^6") {
  auto r = verify_entry(catalog().entry(6));
  CHECK(r.independent_ok());
  // O(U) = (2 x W(A2)) wr S6 is the root-system bound here; -1 lies outside W(A2^6)
  CHECK(r.order_w == Int(6 * 6 * 6) * 6 * 6 * 6);
  CHECK(r.order_out * r.order_w_pm == r.order_l);
  CHECK(r.order_out == 720);
  CHECK(r.find("k")->computed == "Z3");
}

TEST_CASE("2A entry without automorphisms") {
  VerifyOptions o;
  o.with_aut = false;
  auto r = verify_entry(catalog().entry(53), o);
  CHECK(r.independent_ok());
  CHECK(r.find("o_l") == nullptr);
  CHECK(r.find("genus")->pass);
}

TEST_CASE("2C plane orbits under S12") {
  auto t = two_c_orbit_count();
  CHECK(t.nonsingular == 528);
  CHECK(t.nonsingular == 512 + 16);
  REQUIRE(t.count() == 3);
  std::multiset<size_t> sizes(t.orbit_sizes.begin(), t.orbit_sizes.end());
  CHECK(sizes == std::multiset<size_t>{220, 8316, 15400});
  // orbit-stabilizer against 12!
  Int total = 0;
  for (size_t i = 0; i < 3; i++) {
    CHECK(t.stabilizer_orders[i] * Int(t.orbit_sizes[i]) == 479001600);
    total += Int(t.orbit_sizes[i]);
  }
  CHECK(total == Int(t.planes));
  std::multiset<Int> st(t.stabilizer_orders.begin(), t.stabilizer_orders.end());
  CHECK(st == std::multiset<Int>{Int(6) * 362880, Int(1296) * 24, Int(2) * 120 * 120 * 2});
}

TEST_CASE("2C lattice dichotomy") {
  auto r = two_c_lattice_dichotomy_check();
  CHECK(r.ok());
  CHECK(r.checks.size() >= 3);
}

static const GlueCodeData& code(const std::vector<GlueCodeData>& all, int n) {
  for (auto& d : all)
    if (d.number == n) return d;
  throw std::runtime_error("missing code");
}

TEST_CASE("glue codes: ternary Golay and a single ideal") {
  auto all = load_glue_codes(glue_file());
  auto g = glue_code_auts(code(all, 24));
  CHECK(g.code_size == 729);
  CHECK(g.aut1 == 2);
  CHECK(g.aut2 == 95040);
  auto h = glue_code_auts(code(all, 4));
  CHECK(h.aut1 == 1);
  CHECK(h.aut2 == 1);
  auto d4 = glue_code_auts(code(all, 42));
  CHECK(d4.code_size == 64);
  CHECK(d4.aut1 == 3);
  CHECK(d4.aut2 == 720);
}

TEST_CASE("glue codes: every code is self-dual of the right size") {
  // |C|^2 = prod |simple current group|
  for (auto& d : load_glue_codes(glue_file())) {
    // 15: M24 search, tens of seconds. 4: one ideal at level 10, not a Niemeier code
    if (d.number == 15 || d.number == 4) continue;
    CAPTURE(d.number);
    Int prod = 1;
    for (auto& s : d.summands) prod *= Int(simple_current_group(s.family, s.rank, s.level).size());
    auto a = glue_code_auts(d);
    CHECK(a.code_size * a.code_size == prod);
  }
}

TEST_CASE("malformed glue code file") {
  auto p = std::filesystem::temp_directory_path() / "voalat_bad_glue.txt";
  std::ofstream(p) << "format 1\ncode 30 A3,1^8\n  g 1 2 3\nend\n";
  CHECK_THROWS_AS(load_glue_codes(p.string()), InvalidCode);
  std::ofstream(p) << "format 1\ncode 30 A3,1^2\n  g 1 7\nend\n";
  CHECK_THROWS_AS(load_glue_codes(p.string()), InvalidCode);
  std::filesystem::remove(p);
}

TEST_CASE("uniqueness bookkeeping") {
  auto r = uniqueness_arithmetic_checks();
  CHECK(r.ok());
  bool saw6g = false, saw10f = false;
  for (auto& c : r.checks) {
    if (c.id == "count_6G") {
      saw6g = true;
      CHECK(c.pass);
      CHECK(c.computed.rfind("2 ", 0) == 0);
    }
    if (c.id == "count_10F") {
      saw10f = true;
      CHECK(c.pass);
      CHECK(c.computed.substr(c.computed.size() - 2) == " 1");
    }
  }
  CHECK(saw6g);
  CHECK(saw10f);
}
