#pragma once
#include <string>
#include <vector>

#include "voalat/exactmat.hpp"
#include "voalat/qform.hpp"

namespace voalat {

struct InvalidFamily : std::invalid_argument {
  explicit InvalidFamily(const std::string& s) : std::invalid_argument("InvalidFamily: " + s) {}
};
struct NotIntegral : std::runtime_error {
  NotIntegral() : std::runtime_error("NotIntegral") {}
};
struct NotEven : std::runtime_error {
  NotEven() : std::runtime_error("NotEven") {}
};
struct NotSublattice : std::runtime_error {
  NotSublattice() : std::runtime_error("NotSublattice") {}
};
struct RankMismatch : std::runtime_error {
  RankMismatch() : std::runtime_error("RankMismatch") {}
};
struct NotPositiveDefinite : std::runtime_error {
  NotPositiveDefinite() : std::runtime_error("NotPositiveDefinite") {}
};

struct Lattice {
  std::string label;
  RatMat gram;

  Lattice() = default;
  // checks symmetry and positive definiteness
  Lattice(RatMat g, std::string label = "");

  int rank() const { return gram.rows; }
  Rat det() const;
  bool integral() const;
  bool even() const;  // integral with even diagonal
  Rat norm(const std::vector<Int>& x) const;
  Rat inner(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
  bool operator==(const Lattice& o) const { return gram == o.gram; }
};

struct SublatticeEmbedding {
  Lattice sub, sup;
  RatMat transition;  // sub basis rows in sup coordinates
};

// "A_2", "D_12", "E_8", "Z_3"; also family letter + rank
Lattice standard_lattice(const std::string& name);
Lattice standard_lattice(char family, int n);
IntMat cartan_gram(char family, int n);

Lattice rescale(const Lattice& l, const Rat& c);
Lattice dual(const Lattice& l);
Lattice direct_sum(const std::vector<Lattice>& parts);
Lattice with_basis(const Lattice& l, const IntMat& b);  // gram b G b^T

// Overlattice spanned by the base and the given rational rows (base coords).
// Result basis rows are stored in `coords` when non-null.
Lattice glue_extend(const Lattice& base, const std::vector<std::vector<Rat>>& glue,
                    RatMat* coords = nullptr);

// Coset representative of a discriminant class of an ADE root lattice, as
// coordinates in the standard root basis. Token conventions:
//   A_n, A_1: integer j  (j times the first fundamental weight)
//   D_n: 0, v, s, c (also b = s); D_odd also accepts 1, 2, 3 = s, v, c
//   E_6: 0, 1, 2    E_7: 0, 1    E_8: 0
std::vector<Rat> glue_class_coords(char family, int n, const std::string& token);
// order of the class in the discriminant group
int glue_class_order(char family, int n, const std::string& token);

long level(const Lattice& l);

struct DiscModule {
  FiniteQuadraticModule m;
  RatMat gens;  // generator lifts, rows in lattice coordinates
  IntMat v;     // snf column transform of the gram
  std::vector<int> pos;  // snf positions with divisor > 1
  Lattice lat;
  // module coordinates of a dual vector y (lattice coordinates)
  std::vector<long> coords_of(const std::vector<Rat>& y) const;
};
DiscModule disc_data(const Lattice& l);
FiniteQuadraticModule disc_module(const Lattice& l);

std::vector<Int> quotient_invariants(const SublatticeEmbedding& e);

std::string serialize(const Lattice& l);
Lattice deserialize(const std::string& s);

}  // namespace voalat
