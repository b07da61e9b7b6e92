#pragma once

#include <map>
#include <string>
#include <vector>

#include "dihedral/group.hpp"

namespace dihedral {

// Complex irreducibles: chi0..chi3 of degree one, psi_j (1 <= j <= n-1) of
// degree two. All Schur indices are 1.
struct IrrepId {
  enum class Kind { Linear, TwoDim } kind = Kind::Linear;
  int index = 0;  // 0..3 for Linear, 1..n-1 for TwoDim
  friend auto operator<=>(const IrrepId&, const IrrepId&) = default;
};

// Rational irreducibles: chi0..chi3 and W(d) for d in
// Omega(2n) = {d : d | 2n, d < n}.
struct RationalIrrepId {
  enum class Kind { Linear, W } kind = Kind::Linear;
  int index = 0;
  friend auto operator<=>(const RationalIrrepId&, const RationalIrrepId&) = default;
};

// Exact character value: an integer, or w^t + w^{-t} with w = exp(pi*i/n).
// TwoCos(0) and TwoCos(n) normalize to Int(2) and Int(-2).
struct CharValue {
  bool two_cos = false;
  long long value = 0;  // when !two_cos
  int t = 0;            // when two_cos, 1 <= t < 2n, t != n, t <= 2n-t
  friend auto operator<=>(const CharValue&, const CharValue&) = default;
};

CharValue make_two_cos(const Context& ctx, int t);
double numeric(const Context& ctx, const CharValue& v);  // oracle use only

int dim_irrep(const IrrepId& id);
std::vector<IrrepId> complex_irreps(const Context& ctx);
CharValue char_value(const Context& ctx, const IrrepId& id, Elem e);
int linear_char(int i, Elem e);  // +-1

// dim Fix_H V by eigenvalue counting; no floating point.
int dim_fix(const Context& ctx, const IrrepId& id, const Subgroup& h);

struct RationalIrrepInfo {
  RationalIrrepId id;
  int degree;        // 1 or phi(2n/d)
  int field_degree;  // [K:Q], 1 or phi(2n/d)/2
  int multiplicity;  // n_i in B_i^{n_i}: 1 or 2
  IrrepId complex_rep;
};

std::vector<RationalIrrepInfo> rational_irreps(const Context& ctx);
std::vector<int> omega_divisors(const Context& ctx);  // Omega(2n), ascending
std::vector<int> galois_orbit(const Context& ctx, int d);  // j with gcd(j,2n)=d

int mobius(int m);
int totient(int m);
// c_m(r): sum of e^{2 pi i k r / m} over k coprime to m.
long long ramanujan_sum(int m, long long r);

// Character of the rational irrep (sum over the Galois orbit); always an integer.
long long rational_char_value(const Context& ctx, const RationalIrrepId& id, Elem e);

// Multiplicity of each rational irrep in Ind_H^G 1 via Frobenius reciprocity.
// Throws ConsistencyError if dim_fix is not constant on a Galois orbit or the
// degree sum does not match [G:H].
std::map<RationalIrrepId, int> induced_trivial_multiplicities(const Context& ctx,
                                                              const Subgroup& h);

std::string to_string(const IrrepId& id);
std::string to_string(const RationalIrrepId& id);
RationalIrrepId parse_rational_irrep(std::string_view text);

}  // namespace dihedral
