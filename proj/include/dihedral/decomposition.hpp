#pragma once

#include <map>
#include <optional>

#include "dihedral/equivalence.hpp"
#include "dihedral/rep.hpp"

namespace dihedral {

struct IsotypicalFactor {
  RationalIrrepId rep;
  int dim = 0;           // complex dimension of B_i
  int multiplicity = 1;  // exponent n_i in B_i^{n_i}
};

struct DecompositionReport {
  GeneratingVector vector;
  ActionLabel label;
  std::vector<IsotypicalFactor> factors;  // one per rational irrep
  int genus = 0;                          // = sum dim * multiplicity (gamma = 0)
};

// dim B_i = k_i (dim V_i (gamma-1) + 1/2 sum_k (dim V_i - dim Fix_{<c_k>} V_i)),
// k_i = [K_i:Q], gamma = 0. Throws ConsistencyError on a fractional or
// negative intermediate value.
DecompositionReport factor_dimensions(const GeneratingVector& v);

struct QuotientDecomposition {
  int genus = 0;                            // genus of X/H
  std::map<RationalIrrepId, int> exponents; // J_H ~ prod B_i^{e_i}
};

QuotientDecomposition quotient_decomposition(const DecompositionReport& report,
                                             const Subgroup& h);

// Genus of X/H via Riemann-Hurwitz on X/H -> P^1: the cyclic group <c_i>
// acts on the right cosets Hg; an orbit of length l ramifies with index l.
int quotient_genus_coset(const GeneratingVector& v, const Subgroup& h);

struct Identification {
  // Target product prod B_i^{e_i} over nonzero-dimension factors.
  std::map<RationalIrrepId, int> target;
  // Exponent of the whole J_H (or Prym) inside JX when uniform, else 0.
  int power = 0;
  int dim = 0;  // complex dimension of the target product
  std::vector<Subgroup> jacobian_witnesses;                  // J(X/H) ~ target
  std::vector<std::pair<Subgroup, Subgroup>> prym_witnesses; // P(X_H/X_K) ~ target
};

// All subgroup-class witnesses per target: a subgroup H witnesses a product
// when the quotient decomposition of J(X/H) is exactly that product; a pair
// (H, K) witnesses it as the Prym of the intermediate covering X/H -> X/K.
std::vector<Identification> identify_factors(const DecompositionReport& report);

// Human-readable notes derived from the identifications (e.g. which
// reflection class fails to be a witness for the elliptic-complement product).
std::vector<std::string> identification_notes(const DecompositionReport& report,
                                              const std::vector<Identification>& ids);

struct ConsistencyDiagnostic {
  std::vector<std::string> checks;  // identities verified
};

// Verifies sum dim*mult = 2n-1 and, for every subgroup conjugacy class, that
// the coset Riemann-Hurwitz genus matches the group-algebra genus.
// Throws ConsistencyError naming the violated identity.
ConsistencyDiagnostic consistency_check(const DecompositionReport& report);

}  // namespace dihedral
