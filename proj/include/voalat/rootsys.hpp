#pragma once
#include <optional>
#include <string>

#include "voalat/permgrp.hpp"
#include "voalat/shortvec.hpp"

namespace voalat {

struct NotPrimeLevel : std::runtime_error {
  NotPrimeLevel() : std::runtime_error("NotPrimeLevel") {}
};
struct NotARootSystem : std::runtime_error {
  explicit NotARootSystem(const std::string& w) : std::runtime_error("NotARootSystem: " + w) {}
};

// scale: long roots have norm 2*scale. B_2 is stored as C_2.
struct RootComponent {
  char family;
  int rank;
  Rat scale;
  bool operator<(const RootComponent& o) const {
    if (family != o.family) return family < o.family;
    if (rank != o.rank) return rank < o.rank;
    return scale < o.scale;
  }
  bool operator==(const RootComponent& o) const {
    return family == o.family && rank == o.rank && scale == o.scale;
  }
};

struct RootSystemType {
  std::vector<RootComponent> comps;  // sorted
  bool operator==(const RootSystemType& o) const { return comps == o.comps; }
  int rank() const;
  // e.g. "A_3^4(√2A_1)^4"
  std::string str() const;
};

bool is_prime(long p);

// all reflective primitive vectors, one per +- pair; default bound 2*level
VectorList roots(const Lattice& l, std::optional<Rat> bound = std::nullopt);
VectorList roots_prime_level(const Lattice& l, long ell);

struct RootData {
  RootSystemType type;
  std::vector<IVec> simple;              // simple roots, grouped by component
  std::vector<RootComponent> comp_of;    // component of each simple root
};
RootData analyze(const VectorList& rs);
RootSystemType classify(const VectorList& rs);

Int weyl_order(char family, int rank);
Int weyl_order(const RootSystemType& t);
// whether -1 lies in the Weyl group of the type
bool weyl_contains_minus_one(const RootSystemType& t);

// "A_3^4(sqrt2A_1)^4", also accepts the √ sign
RootSystemType parse_root_type(const std::string& s);

// x -> x - 2<x,a>/<a,a> a on lattice coordinates
IMat reflection(const Lattice& l, const IVec& a);

}  // namespace voalat
