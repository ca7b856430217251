#pragma once
#include <map>
#include <string>
#include <vector>

#include "voalat/exactmat.hpp"

namespace voalat {

struct DegenerateForm : std::runtime_error {
  DegenerateForm() : std::runtime_error("DegenerateForm") {}
};

// Finite abelian group Z_{d1} x ... x Z_{dk} with q on the generators and b
// between them; both taken mod 1. Elements are mixed-radix indices, first
// coordinate fastest.
struct FiniteQuadraticModule {
  std::vector<long> divisors;
  std::vector<Rat> qgen;
  std::vector<std::vector<Rat>> bgen;

  long size() const;
  std::vector<long> coords(long idx) const;
  long index(const std::vector<long>& c) const;
  Rat q(const std::vector<long>& c) const;
  Rat b(const std::vector<long>& x, const std::vector<long>& y) const;
  // numerators of q over a common denominator, indexed like elements
  std::vector<long> q_numerators(long& den) const;
  long order_of(long idx) const;
};

Rat mod1(const Rat& x);

// builds the module, reducing values mod 1 and dropping trivial generators
FiniteQuadraticModule make_module(std::vector<long> divisors, std::vector<Rat> qgen,
                                  std::vector<std::vector<Rat>> bgen);
FiniteQuadraticModule direct_sum(const FiniteQuadraticModule& a, const FiniteQuadraticModule& b);
FiniteQuadraticModule negate(const FiniteQuadraticModule& m);

bool is_nondegenerate(const FiniteQuadraticModule& m);
int gauss_sum_arg(const FiniteQuadraticModule& m);
// p-primary part as its own module (generators rescaled)
FiniteQuadraticModule primary_part(const FiniteQuadraticModule& m, long p);

struct Fingerprint {
  std::vector<long> elementary;      // prime powers, sorted
  std::map<Rat, long> qvalues;       // value in [0,1) -> multiplicity
  std::map<long, int> gauss;         // prime -> argument mod 8
  int total = 0;
  bool operator==(const Fingerprint& o) const {
    return elementary == o.elementary && qvalues == o.qvalues && gauss == o.gauss &&
           total == o.total;
  }
  std::string str() const;
};

Fingerprint fingerprint(const FiniteQuadraticModule& m);

std::vector<long> elementary_divisors(const std::vector<long>& divisors);
std::vector<long> prime_factors(long n);

// Conway-Sloane style symbol such as "2^{+10}_II 4^{-2}_II 3^{+5}".
// Throws std::invalid_argument when a component has no realization.
FiniteQuadraticModule module_from_symbol(const std::string& symbol);

}  // namespace voalat
