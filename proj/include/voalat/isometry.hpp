#pragma once
#include <optional>
#include <string>

#include "voalat/permgrp.hpp"

namespace voalat {

struct VectorSetTooLarge : std::runtime_error {
  VectorSetTooLarge() : std::runtime_error("VectorSetTooLarge") {}
};

struct IsometryGenSet {
  Lattice lattice;
  std::vector<IMat> generators;  // rows of g are images of basis vectors; g G g^T = G
  Rat vector_set_bound;
  std::vector<IVec> points;      // the characteristic vector set, one per +- pair
  std::vector<IVec> base;        // base vectors used by the search
  std::vector<size_t> orbit_sizes;
  Int order() const;
  // permutation-style group on the signed points with the search's base
  MatGroup group() const;
};

struct IsometryOptions {
  size_t cap = 200000;     // max +- pairs in the vector set
  std::string cache_dir;   // empty: no disk cache
};

IsometryGenSet aut_gens(const Lattice& l, const IsometryOptions& opt = {});
// t with t gram(b) t^T = gram(a), or nothing
std::optional<IMat> isometric(const Lattice& a, const Lattice& b, const IsometryOptions& opt = {});

// smallest union of norm shells spanning the space
VectorList characteristic_set(const Lattice& l, size_t cap);

std::string cache_key(const Lattice& l);

}  // namespace voalat
