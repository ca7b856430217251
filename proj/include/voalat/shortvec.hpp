#pragma once
#include <vector>

#include "voalat/lattice.hpp"

namespace voalat {

struct BoundTooLarge : std::runtime_error {
  BoundTooLarge() : std::runtime_error("BoundTooLarge") {}
};

using IVec = std::vector<long>;

// One vector per +-pair (first nonzero coordinate positive), coordinates in
// the lattice's own basis, sorted by (norm, coordinates).
struct VectorList {
  Lattice lattice;
  Rat bound;
  std::vector<IVec> vectors;
  std::vector<Rat> norms;
  size_t size() const { return vectors.size(); }
};

struct LllResult {
  IntMat t;         // reduced basis rows = t * old basis
  Lattice reduced;  // gram t G t^T
};
LllResult lll_reduce(const Lattice& l, const Rat& delta = Rat(3, 4));

VectorList vectors_up_to(const Lattice& l, const Rat& bound, size_t cap = 1000000);

// norm -> count of +-pairs
std::map<Rat, size_t> norm_histogram(const VectorList& v);

}  // namespace voalat
