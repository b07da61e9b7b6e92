#include "dihedral/shimura.hpp"

namespace dihedral {

AnalyticCharacter analytic_character(const DecompositionReport& report) {
  const Context& ctx = report.vector.ctx;
  AnalyticCharacter chr{ctx.n, {}};
  for (const IsotypicalFactor& f : report.factors) {
    int coeff;
    if (f.rep.kind == RationalIrrepId::Kind::Linear) {
      coeff = f.dim;
    } else {
      // multiplicity of each complex psi in the Galois orbit: dim B_d / [K:Q]
      int deg = totient(ctx.two_n() / f.rep.index);
      if ((2 * f.dim) % deg != 0)
        throw ConsistencyError("non-integer-multiplicity",
                               "analytic multiplicity of " + to_string(f.rep) +
                                   " is not an integer");
      coeff = 2 * f.dim / deg;
    }
    if (coeff != 0) chr.coefficients[f.rep] = coeff;
  }
  Elem one = identity();
  long long at_one = analytic_char_value(chr, one);
  if (at_one != report.genus)
    throw ConsistencyError("analytic-degree", "chi_rho(1) = " + std::to_string(at_one) +
                                                  " != genus " + std::to_string(report.genus));
  return chr;
}

long long analytic_char_value(const AnalyticCharacter& chr, Elem e) {
  Context ctx(chr.n);
  long long value = 0;
  for (const auto& [rep, coeff] : chr.coefficients)
    value += coeff * rational_char_value(ctx, rep, e);
  return value;
}

long long shimura_dimension(const AnalyticCharacter& chr) {
  Context ctx(chr.n);
  long long sum = 0;
  for (const ConjClass& cls : conjugacy_classes(ctx)) {
    Elem g = class_representative(ctx, cls);
    long long cg = analytic_char_value(chr, g);
    long long cg2 = analytic_char_value(chr, mul(ctx, g, g));
    sum += static_cast<long long>(class_size(ctx, cls)) * (cg * cg + cg2);
  }
  long long denom = 2LL * ctx.order();
  if (sum % denom != 0)
    throw ConsistencyError("divisibility", "Serre sum " + std::to_string(sum) +
                                               " not divisible by 2|G| = " + std::to_string(denom));
  return sum / denom;
}

long long closed_form_N(int n, ActionLabel label) {
  if (label == ActionLabel::Type1) {
    if (n % 2 == 0)
      throw ValidationError("invalid-label", "type1 actions exist only for odd n");
    return (3LL * n - 1) / 2;
  }
  return n;
}

ShimuraReport shimura_report(const DecompositionReport& report) {
  ShimuraReport out;
  out.n = report.vector.ctx.n;
  out.label = report.label;
  out.dimension = shimura_dimension(analytic_character(report));
  out.closed_form = closed_form_N(out.n, out.label);
  out.match = out.dimension == out.closed_form;
  return out;
}

}  // namespace dihedral
