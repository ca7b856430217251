#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "voalat/lattice.hpp"
#include "voalat/rootsys.hpp"

namespace voalat {

struct InvalidCatalog : std::runtime_error {
  explicit InvalidCatalog(const std::string& w) : std::runtime_error("InvalidCatalog: " + w) {}
};
struct BuildFailed : std::runtime_error {
  explicit BuildFailed(const std::string& w) : std::runtime_error("BuildFailed: " + w) {}
};

// simple ideal X_{n,k}, repeated mult times
struct LieSummand {
  char family;
  int rank;
  int level;
  int mult = 1;
};
// "A1,2^16 A3,1^4"
std::vector<LieSummand> parse_lie(const std::string& s);
std::string lie_str(const std::vector<LieSummand>& s);

// Table values are stored as read; orders are evaluated from order expressions
struct ExpectedData {
  std::string k;          // K(V), e.g. "Z2^3xZ4" or "1"
  std::string out;        // Out(V) shape
  std::string ru;         // R(U) in table notation; empty when the class has no such column
  std::string ol;         // |O(L)| order expression; empty when not tabulated
  std::string ol_shape;   // O(L) shape as printed
  std::string lattice;    // 2C: the isometry class of L, "sqrt2D12" or "sqrt2E8sqrt2D4"
};

struct SchellekensEntry {
  int number = 0;
  char genus = 0;
  std::string cls;
  long ell = 0;
  std::vector<LieSummand> summands;
  // 'L': one glue-class token per component of Q_g (lattice.hpp conventions).
  // 'U': rational rows in the basis of P_g (see build_bundle).
  char glue_side = 'L';
  std::vector<std::vector<std::string>> glue;
  ExpectedData expected;

  int rank() const;
  std::string lie() const { return lie_str(summands); }
  std::vector<LieSummand> expanded() const;  // mult 1 each
};

// one row of the genus/class table
struct AutWData {
  char genus = 0;
  std::string cls;
  int rank_lambda = 0;
  std::string symbol;       // (Irr(W), -q_W), which is the form of D(L)
  std::string group;        // e.g. "Z2^10xZ4^2"
  std::string aut_w, full_orth;
  Int index;
};

// Appendix row: Aut_i(G_V) and Out_i(V) shapes
struct AppendixRow {
  int number = 0;
  char genus = 0;
  std::string lie;
  std::string aut1, out1, aut2, out2;
};

// K/Out rows of the lattice cases, stored as printed and not re-derived
struct LatticeCaseRow {
  int number = 0;
  char genus = 0;
  std::string lie, out, k;
};

struct Catalog {
  std::vector<SchellekensEntry> entries;
  std::vector<LatticeCaseRow> lattice_cases;
  std::map<std::string, AutWData> classes;
  std::vector<AppendixRow> appendix;
  const SchellekensEntry& entry(int number) const;
  const AutWData& class_data(const std::string& cls) const;
  const AppendixRow* appendix_row(int number) const;
};

Catalog load_catalog(const std::string& path);
// the shipped data file
const Catalog& catalog();
std::string default_data_dir();
const std::vector<SchellekensEntry>& entries();

// ell from the class label: 2|g| for 2C, 6G, 10F, else |g|
long class_ell(const std::string& cls);

struct LieData {
  int dim;
  int dual_coxeter;
  int lacing;
};
LieData lie_dimension_and_dual_coxeter(char family, int rank);

struct SimpleCurrentGroup {
  std::vector<long> orders;            // cyclic factors
  std::vector<std::string> generators; // labels
  long size() const;
};
SimpleCurrentGroup simple_current_group(char family, int rank, int level);

// sqrt(scale) * root lattice of the given ADE type
struct Component {
  char family;
  int rank;
  Rat scale;
};

struct Bundle {
  RatMat ambient;       // metric on the frame: blocks k_i * (long root gram)
  Lattice qg, qtilde, pg, l, ldual, u;
  RatMat qtilde_rows;   // basis of Q~ (and of P_g) in frame coordinates
  RatMat l_rows;        // basis of L in frame coordinates (= Q_g coordinates)
  RatMat ldual_rows;    // basis of L* (and of U)
  std::vector<std::vector<Rat>> l_glue;  // rows of L over Q_g, Q_g coordinates
  SublatticeEmbedding qg_in_l, qtilde_in_ldual, pg_in_u;
  std::vector<Component> qg_components;
  // roots of the Lie algebra inside U (U coordinates); Weyl group generators
  std::vector<IVec> lie_roots_u;
};

Bundle build_bundle(const SchellekensEntry& e);

// Search for an even overlattice U of P_g with |U/P_g| = n_target whose dual
// sqrt(ell) U* is even of level ell and contains Q_g. Returns glue rows in
// the P_g basis. accept: extra test on the resulting bundle.
std::optional<std::vector<std::vector<Rat>>> search_u_glue(
    const SchellekensEntry& e, const AutWData& cd,
    const std::function<bool(const Bundle&)>& accept = nullptr, long* tried = nullptr);

// "sqrt2E8sqrt2D4", "sqrt6D4sqrt2A2", "D12": orthogonal sums of scaled root lattices
Lattice named_lattice(const std::string& name);

// Root system type predicted from the Lie data for U (lattice notation)
RootSystemType lie_root_type(const SchellekensEntry& e);
Int lie_weyl_order(const SchellekensEntry& e);

// orders of group shapes written as products: "Z2^4:S3", "W(A1)^16*AGL4(2)",
// "2.S4", "(2*W(A4))^2*2", "M12", "Dih8"
Int shape_order(const std::string& expr);
// invariant factors of a product of cyclic groups, "Z2^3xZ4" -> {2,2,4}
std::vector<long> abelian_invariants(const std::string& s);
std::vector<long> invariant_factors(std::vector<long> cyclic_orders);

}  // namespace voalat
