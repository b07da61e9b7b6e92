#include "dihedral/rep.hpp"

#include <cmath>
#include <numeric>

namespace dihedral {

CharValue make_two_cos(const Context& ctx, int t) {
  t %= ctx.two_n();
  if (t < 0) t += ctx.two_n();
  if (t == 0) return {false, 2, 0};
  if (t == ctx.n) return {false, -2, 0};
  if (t > ctx.two_n() - t) t = ctx.two_n() - t;
  return {true, 0, t};
}

double numeric(const Context& ctx, const CharValue& v) {
  if (!v.two_cos) return static_cast<double>(v.value);
  return 2.0 * std::cos(M_PI * v.t / ctx.n);
}

int dim_irrep(const IrrepId& id) { return id.kind == IrrepId::Kind::Linear ? 1 : 2; }

std::vector<IrrepId> complex_irreps(const Context& ctx) {
  std::vector<IrrepId> out;
  for (int i = 0; i < 4; ++i) out.push_back({IrrepId::Kind::Linear, i});
  for (int j = 1; j < ctx.n; ++j) out.push_back({IrrepId::Kind::TwoDim, j});
  return out;
}

int linear_char(int i, Elem e) {
  switch (i) {
    case 0: return 1;
    case 1: return e.refl ? -1 : 1;
    case 2: return e.k % 2 ? -1 : 1;
    case 3: return (e.k + e.refl) % 2 ? -1 : 1;
  }
  throw ValidationError("irrep", "linear character index out of range");
}

CharValue char_value(const Context& ctx, const IrrepId& id, Elem e) {
  if (id.kind == IrrepId::Kind::Linear) return {false, linear_char(id.index, e), 0};
  if (e.refl) return {false, 0, 0};
  return make_two_cos(ctx, id.index * e.k);
}

int dim_fix(const Context& ctx, const IrrepId& id, const Subgroup& h) {
  if (id.kind == IrrepId::Kind::Linear) {
    int i = id.index;
    if (linear_char(i, Elem{h.d % ctx.two_n(), 0}) != 1) return 0;
    if (h.dihedral && linear_char(i, Elem{h.j, 1}) != 1) return 0;
    return 1;
  }
  // psi_j: <a^d> acts trivially iff 2n | j*d; a reflection fixes a line.
  bool rot_trivial = (id.index * h.d) % ctx.two_n() == 0;
  if (!h.dihedral) return rot_trivial ? 2 : 0;
  return rot_trivial ? 1 : 0;
}

std::vector<int> omega_divisors(const Context& ctx) {
  std::vector<int> out;
  for (int d = 1; d < ctx.n; ++d)
    if (ctx.two_n() % d == 0) out.push_back(d);
  return out;
}

std::vector<int> galois_orbit(const Context& ctx, int d) {
  std::vector<int> out;
  for (int j = 1; j < ctx.n; ++j)
    if (std::gcd(j, ctx.two_n()) == d) out.push_back(j);
  return out;
}

std::vector<RationalIrrepInfo> rational_irreps(const Context& ctx) {
  std::vector<RationalIrrepInfo> out;
  for (int i = 0; i < 4; ++i)
    out.push_back({{RationalIrrepId::Kind::Linear, i}, 1, 1, 1, {IrrepId::Kind::Linear, i}});
  for (int d : omega_divisors(ctx)) {
    int deg = totient(ctx.two_n() / d);
    out.push_back({{RationalIrrepId::Kind::W, d}, deg, deg / 2, 2, {IrrepId::Kind::TwoDim, d}});
  }
  return out;
}

int mobius(int m) {
  int result = 1;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    m /= p;
    if (m % p == 0) return 0;
    result = -result;
  }
  if (m > 1) result = -result;
  return result;
}

int totient(int m) {
  int result = m;
  for (int p = 2; p * p <= m; ++p) {
    if (m % p) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

long long ramanujan_sum(int m, long long r) {
  if (m < 1) throw ValidationError("ramanujan", "modulus must be positive");
  long long rr = r % m;
  if (rr < 0) rr += m;
  int g = static_cast<int>(std::gcd(static_cast<long long>(m), rr));
  int q = m / g;
  return static_cast<long long>(mobius(q)) * totient(m) / totient(q);
}

long long rational_char_value(const Context& ctx, const RationalIrrepId& id, Elem e) {
  if (id.kind == RationalIrrepId::Kind::Linear) return linear_char(id.index, e);
  if (e.refl) return 0;
  return ramanujan_sum(ctx.two_n() / id.index, e.k);
}

std::map<RationalIrrepId, int> induced_trivial_multiplicities(const Context& ctx,
                                                              const Subgroup& h) {
  std::map<RationalIrrepId, int> out;
  long long degree_sum = 0;
  for (const RationalIrrepInfo& info : rational_irreps(ctx)) {
    int mult = dim_fix(ctx, info.complex_rep, h);
    if (info.id.kind == RationalIrrepId::Kind::W) {
      for (int j : galois_orbit(ctx, info.id.index)) {
        if (dim_fix(ctx, {IrrepId::Kind::TwoDim, j}, h) != mult)
          throw ConsistencyError("galois-orbit",
                                 "dim_fix differs across the Galois orbit of " + to_string(info.id));
      }
    }
    out[info.id] = mult;
    degree_sum += static_cast<long long>(mult) * info.degree;
  }
  long long index = ctx.order() / subgroup_order(ctx, h);
  if (degree_sum != index)
    throw ConsistencyError("frobenius",
                           "induced degree sum " + std::to_string(degree_sum) +
                               " != [G:H] = " + std::to_string(index));
  return out;
}

std::string to_string(const IrrepId& id) {
  if (id.kind == IrrepId::Kind::Linear) return "chi" + std::to_string(id.index);
  return "psi_" + std::to_string(id.index);
}

std::string to_string(const RationalIrrepId& id) {
  if (id.kind == RationalIrrepId::Kind::Linear) return "chi" + std::to_string(id.index);
  return "W_" + std::to_string(id.index);
}

RationalIrrepId parse_rational_irrep(std::string_view text) {
  if (text.starts_with("chi") && text.size() == 4 && text[3] >= '0' && text[3] <= '3')
    return {RationalIrrepId::Kind::Linear, text[3] - '0'};
  if (text.starts_with("W_")) {
    int d = 0;
    for (char c : text.substr(2)) {
      if (c < '0' || c > '9') throw ValidationError("parse", "bad irrep id");
      d = d * 10 + (c - '0');
    }
    return {RationalIrrepId::Kind::W, d};
  }
  throw ValidationError("parse", "bad irrep id '" + std::string(text) + "'");
}

}  // namespace dihedral
