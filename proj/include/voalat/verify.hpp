#pragma once
#include <array>
#include <string>
#include <vector>

#include "voalat/catalog.hpp"
#include "voalat/isometry.hpp"

namespace voalat {

struct CheckRecord {
  std::string id;
  std::string computed;
  std::string expected;
  bool independent = true;  // false: consistency-only
  bool pass = false;
  double seconds = 0;
};

struct EntryReport {
  int number = 0;
  std::string cls, lie;
  std::vector<CheckRecord> checks;
  // filled when automorphisms are computed
  Int order_l = 0, order_w = 0, order_w_pm = 0, order_out = 0, orbit_size = 0;
  bool minus_one_nontrivial = false;  // -1 acts nontrivially on D(L)
  bool independent_ok() const;
  bool all_ok() const;
  const CheckRecord* find(const std::string& id) const;
};

struct VerifyOptions {
  IsometryOptions iso;
  bool with_aut = true;  // O(L), Out, mass term
};

// ids: even_level, rank, dm04a, genus, form, milgram, root_type, root_lie,
// k, lattice (2C), o_l, weyl, out, mass
EntryReport verify_entry(const SchellekensEntry& e, const VerifyOptions& opt = {});

// even subsets of 12 points modulo complement, q(A) = |A|/2 mod 2
struct TwoCResult {
  size_t nonsingular = 0;
  size_t planes = 0;
  std::vector<size_t> orbit_sizes;  // sorted by first appearance of a canonical rep
  std::vector<Int> stabilizer_orders;
  // sizes of the four atoms cut out by a representative plane, sorted;
  // they determine the stabilizer, e.g. {1,1,1,9} -> S3 x S9
  std::vector<std::array<int, 4>> atoms;
  size_t count() const { return orbit_sizes.size(); }
};
TwoCResult two_c_orbit_count();

struct SimpleReport {
  std::vector<CheckRecord> checks;
  bool ok() const;
};
SimpleReport two_c_lattice_dichotomy_check(const IsometryOptions& opt = {});

// Glue codes over prod S_i, one token per simple ideal
struct InvalidCode : std::runtime_error {
  explicit InvalidCode(const std::string& w) : std::runtime_error("InvalidCode: " + w) {}
};
struct GlueCodeData {
  int number = 0;
  std::vector<LieSummand> summands;           // expanded, mult 1
  std::vector<std::vector<std::string>> gens; // one token per summand
};
std::vector<GlueCodeData> load_glue_codes(const std::string& path);

struct GlueAuts {
  Int aut1, aut2;
  Int code_size;
  PermGroup aut2_group;  // on summands
};
GlueAuts glue_code_auts(const GlueCodeData& d);

// coset-count bookkeeping per class; needs O(L) for the small classes
SimpleReport uniqueness_arithmetic_checks(const IsometryOptions& opt = {});

}  // namespace voalat
