#include "dihedral/actions.hpp"

#include <algorithm>
#include <numeric>

namespace dihedral {

Signature action_signature(const Context& ctx) { return {0, {2, 2, 2, 2, ctx.n}}; }

long long rh_genus(long long group_order, const Signature& sig) {
  // sum (1 - 1/m_i) as an exact fraction num/den
  long long num = 0, den = 1;
  for (int m : sig.periods) {
    if (m < 2) throw ValidationError("signature", "periods must be >= 2");
    num = num * m + den * (m - 1);
    den *= m;
    long long g = std::gcd(num, den);
    num /= g;
    den /= g;
  }
  long long branch_num = group_order * num;
  long long branch_den = 2 * den;
  if (branch_num % branch_den != 0)
    throw ValidationError("non-integer-genus", "Riemann-Hurwitz genus is not an integer");
  long long g = group_order * (sig.gamma - 1) + 1 + branch_num / branch_den;
  if (g < 0) throw ValidationError("non-integer-genus", "Riemann-Hurwitz genus is negative");
  return g;
}

int strata_dimension(const Signature& sig) {
  return 3 * (sig.gamma - 1) + static_cast<int>(sig.periods.size());
}

namespace {

// Returns false and fills err when the tuple is not a generating vector of
// type (0;2,2,2,2,n).
bool check_impl(const Context& ctx, const std::array<Elem, 5>& c, VectorError* err) {
  auto fail = [&](VectorErrorKind kind, int index, const std::string& msg) {
    if (err) *err = VectorError(kind, index, msg);
    return false;
  };
  int order_n_count = 0;
  for (int i = 0; i < 5; ++i) {
    int o = elem_order(ctx, c[i]);
    if (o != 2 && o != ctx.n)
      return fail(VectorErrorKind::WrongOrder, i,
                  "entry " + std::to_string(i + 1) + " = " + to_string(ctx, c[i]) +
                      " has order " + std::to_string(o) + ", expected 2 or " +
                      std::to_string(ctx.n));
    if (o == ctx.n) ++order_n_count;
  }
  int expected = ctx.n == 2 ? 5 : 1;
  if (order_n_count != expected) {
    for (int i = 0; i < 5; ++i)
      if (elem_order(ctx, c[i]) == ctx.n && --expected < 0)
        return fail(VectorErrorKind::WrongOrder, i,
                    "period multiset must be {2,2,2,2," + std::to_string(ctx.n) + "}");
    return fail(VectorErrorKind::WrongOrder, 0,
                "period multiset must be {2,2,2,2," + std::to_string(ctx.n) + "}");
  }
  Elem prod = identity();
  for (const Elem& e : c) prod = mul(ctx, prod, e);
  if (prod != identity())
    return fail(VectorErrorKind::ProductNotOne, -1,
                "product of entries is " + to_string(ctx, prod) + ", not 1");
  // The entries generate D_{2n} iff a reflection occurs and the rotation part
  // they span is all of <a>: gcd of rotation exponents and reflection-exponent
  // differences must be 1.
  int d = ctx.two_n();
  int first_refl = -1;
  for (const Elem& e : c) {
    if (e.refl) {
      if (first_refl < 0) first_refl = e.k;
      else d = std::gcd(d, std::abs(e.k - first_refl));
    } else {
      d = std::gcd(d, e.k);
    }
  }
  if (first_refl < 0 || d != 1)
    return fail(VectorErrorKind::NotGenerating, -1, "entries do not generate D_{2n}");
  return true;
}

}  // namespace

bool check_vector(const Context& ctx, const std::array<Elem, 5>& entries) {
  return check_impl(ctx, entries, nullptr);
}

GeneratingVector validate_vector(const Context& ctx, const std::array<Elem, 5>& entries) {
  VectorError err(VectorErrorKind::WrongOrder, 0, "");
  if (!check_impl(ctx, entries, &err)) throw err;
  return {ctx, entries};
}

GeometricSignature geometric_signature(const GeneratingVector& v) {
  GeometricSignature out;
  out.gamma = 0;
  for (const Elem& e : v.c) {
    Subgroup h = subgroup_from_generators(v.ctx, std::array{e});
    out.marked.emplace_back(elem_order(v.ctx, e), class_representative(v.ctx, h));
  }
  return out;
}

std::string to_string(const GeneratingVector& v) {
  std::string out;
  for (int i = 0; i < 5; ++i) {
    if (i) out += ",";
    out += to_string(v.ctx, v.c[i]);
  }
  return out;
}

GeneratingVector parse_vector(const Context& ctx, std::string_view text) {
  std::array<Elem, 5> c;
  size_t start = 0;
  int i = 0;
  while (true) {
    size_t comma = text.find(',', start);
    std::string_view part =
        text.substr(start, comma == std::string_view::npos ? comma : comma - start);
    if (i >= 5) throw ValidationError("parse", "vector must have exactly 5 entries");
    c[i++] = parse_elem(ctx, part);
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  if (i != 5) throw ValidationError("parse", "vector must have exactly 5 entries");
  return validate_vector(ctx, c);
}

}  // namespace dihedral
