#pragma once

#include <string>

#include "dihedral/equivalence.hpp"

namespace dihedral {

// Exact rational with overflow-checked arithmetic; parameters of the affine
// models live here when given as fractions or integers.
struct Rational {
  long long num = 0;
  long long den = 1;

  Rational() = default;
  Rational(long long n, long long d = 1);
  friend bool operator==(const Rational&, const Rational&) = default;
};

Rational operator*(const Rational& a, const Rational& b);
Rational rational_pow(const Rational& q, int e);  // e may be negative (q != 0)
std::string to_string(const Rational& q);

// A model parameter: exact rational ("2", "-3/4") or decimal string ("1.5",
// "2e-1") handled numerically with a 1e-9 collision tolerance.
struct ModelParam {
  bool exact = true;
  Rational q;
  double x = 0.0;
  std::string text;
};

ModelParam parse_param(std::string_view text);

enum class ModelErrorKind { InvalidParams, InvalidLabel, DegenerateBranching };

class ModelError : public ValidationError {
public:
  ModelError(ModelErrorKind kind, const std::string& msg)
      : ValidationError("model", msg), kind(kind) {}
  ModelErrorKind kind;
};

struct PlaneModel {
  enum class Kind { Hyperelliptic, EllipticNGonal } kind = Kind::Hyperelliptic;
  int n = 2;
  int genus = 3;
  std::string equation;
  std::string param1, param2;  // as given
};

// Type1 -> y^2 = (x^n - l^n)(x^n - 1/l^n)(x^n - m^n)(x^n - 1/m^n), odd n only;
// Type2/Unique -> x^{2n} + y^{2n} + a x^n y^n + b x^n + b y^n + 1 = 0.
PlaneModel affine_model(ActionLabel label, int n, const ModelParam& p1, const ModelParam& p2);

struct BranchCheck {
  int branch_points = 0;  // always 4n on success
  int genus = 0;          // (4n - 2)/2 = 2n - 1
};

// Verifies the 4n roots {w^k l^{+-1}, w^k m^{+-1}} are pairwise distinct:
// exactly over rationals (l^{2n} != 1, m^{2n} != 1, l^n not in {m^n, m^-n}),
// numerically with 1e-9 tolerance otherwise.
BranchCheck hyperelliptic_branch_check(int n, const ModelParam& lambda, const ModelParam& mu);

}  // namespace dihedral
