#pragma once

#include <array>
#include <string>
#include <vector>

#include "dihedral/group.hpp"

namespace dihedral {

struct Signature {
  int gamma = 0;
  std::vector<int> periods;
};

// Signature (0; 2,2,2,2,n) of the actions studied here.
Signature action_signature(const Context& ctx);

// Riemann-Hurwitz: g = |G|(gamma-1) + 1 + (|G|/2) sum (1 - 1/m_i).
// Throws ValidationError("non-integer-genus") when the formula does not
// produce a non-negative integer.
long long rh_genus(long long group_order, const Signature& sig);

// Teichmueller dimension 3(gamma - 1) + r.
int strata_dimension(const Signature& sig);

enum class VectorErrorKind { WrongOrder, ProductNotOne, NotGenerating };

class VectorError : public ValidationError {
public:
  VectorError(VectorErrorKind kind, int index, const std::string& msg)
      : ValidationError("vector", msg), kind(kind), index(index) {}
  VectorErrorKind kind;
  int index;  // offending entry for WrongOrder, -1 otherwise
};

struct GeneratingVector {
  Context ctx;
  std::array<Elem, 5> c;
  friend bool operator==(const GeneratingVector& a, const GeneratingVector& b) {
    return a.ctx.n == b.ctx.n && a.c == b.c;
  }
};

// Conditions: order multiset {2,2,2,2,n}, product one, entries generate G.
GeneratingVector validate_vector(const Context& ctx, const std::array<Elem, 5>& entries);
bool check_vector(const Context& ctx, const std::array<Elem, 5>& entries);

struct GeometricSignature {
  int gamma = 0;
  // (period m_i, conjugacy class representative of <c_i>)
  std::vector<std::pair<int, Subgroup>> marked;
};

GeometricSignature geometric_signature(const GeneratingVector& v);

std::string to_string(const GeneratingVector& v);
GeneratingVector parse_vector(const Context& ctx, std::string_view text);

}  // namespace dihedral
