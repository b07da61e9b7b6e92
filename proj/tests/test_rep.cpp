#include <doctest.h>

#include <cmath>
#include <complex>
#include <numeric>

#include "dihedral/rep.hpp"

using namespace dihedral;

namespace {

constexpr double kEps = 1e-9;

std::vector<Elem> all_elements(const Context& ctx) {
  std::vector<Elem> out;
  for (int k = 0; k < ctx.two_n(); ++k)
    for (int r = 0; r < 2; ++r) out.push_back({k, r});
  return out;
}

double chi(const Context& ctx, const IrrepId& id, Elem e) {
  return numeric(ctx, char_value(ctx, id, e));
}

}  // namespace

TEST_CASE("character table spot values") {
  Context ctx(5);
  Elem a = rotation(ctx, 1), an = rotation(ctx, ctx.n), s = reflection(ctx, 0),
       as = reflection(ctx, 1);
  CHECK(char_value(ctx, {IrrepId::Kind::Linear, 0}, as).value == 1);
  CHECK(char_value(ctx, {IrrepId::Kind::Linear, 1}, s).value == -1);
  CHECK(char_value(ctx, {IrrepId::Kind::Linear, 2}, a).value == -1);
  CHECK(char_value(ctx, {IrrepId::Kind::Linear, 2}, s).value == 1);
  CHECK(char_value(ctx, {IrrepId::Kind::Linear, 3}, as).value == 1);
  for (int j = 1; j < ctx.n; ++j) {
    IrrepId psi{IrrepId::Kind::TwoDim, j};
    CHECK(char_value(ctx, psi, identity()).value == 2);
    CHECK(char_value(ctx, psi, an).value == (j % 2 ? -2 : 2));
    CHECK(char_value(ctx, psi, s).value == 0);
    CHECK(char_value(ctx, psi, as).value == 0);
    // psi_j(a^r) = 2 cos(pi j r / n)
    for (int r = 1; r < ctx.two_n(); ++r)
      CHECK(chi(ctx, psi, rotation(ctx, r)) ==
            doctest::Approx(2.0 * std::cos(M_PI * j * r / ctx.n)).epsilon(kEps));
  }
}

TEST_CASE("linear characters are multiplicative") {
  Context ctx(4);
  for (int i = 0; i < 4; ++i)
    for (const Elem& x : all_elements(ctx))
      for (const Elem& y : all_elements(ctx))
        CHECK(linear_char(i, mul(ctx, x, y)) == linear_char(i, x) * linear_char(i, y));
}

TEST_CASE("sum of squared degrees is the group order") {
  for (int n = 2; n <= 12; ++n) {
    Context ctx(n);
    int sum = 0;
    for (const IrrepId& id : complex_irreps(ctx)) sum += dim_irrep(id) * dim_irrep(id);
    CHECK(sum == ctx.order());
  }
}

TEST_CASE("first orthogonality relation") {
  for (int n : {2, 3, 5, 8}) {
    Context ctx(n);
    std::vector<IrrepId> irreps = complex_irreps(ctx);
    for (size_t i = 0; i < irreps.size(); ++i)
      for (size_t j = i; j < irreps.size(); ++j) {
        double inner = 0;
        for (const Elem& g : all_elements(ctx))
          inner += chi(ctx, irreps[i], g) * chi(ctx, irreps[j], g);  // real characters
        inner /= ctx.order();
        CHECK(inner == doctest::Approx(i == j ? 1.0 : 0.0).epsilon(kEps));
      }
  }
}

TEST_CASE("column orthogonality gives centralizer orders") {
  Context ctx(6);
  for (const ConjClass& c : conjugacy_classes(ctx)) {
    Elem g = class_representative(ctx, c);
    double sum = 0;
    for (const IrrepId& id : complex_irreps(ctx)) sum += chi(ctx, id, g) * chi(ctx, id, g);
    CHECK(sum == doctest::Approx(ctx.order() / static_cast<double>(class_size(ctx, c)))
                     .epsilon(kEps));
  }
}

TEST_CASE("make_two_cos normalizes") {
  Context ctx(5);
  CHECK(make_two_cos(ctx, 0) == CharValue{false, 2, 0});
  CHECK(make_two_cos(ctx, 10) == CharValue{false, 2, 0});
  CHECK(make_two_cos(ctx, 5) == CharValue{false, -2, 0});
  CHECK(make_two_cos(ctx, 7) == CharValue{true, 0, 3});
  CHECK(make_two_cos(ctx, -3) == CharValue{true, 0, 3});
}

TEST_CASE("dim_fix matches the averaging oracle") {
  for (int n = 2; n <= 12; ++n) {
    Context ctx(n);
    for (const Subgroup& h : all_subgroups(ctx)) {
      std::vector<Elem> hs = elements(ctx, h);
      for (const IrrepId& id : complex_irreps(ctx)) {
        double avg = 0;
        for (const Elem& e : hs) avg += chi(ctx, id, e);
        avg /= hs.size();
        CHECK(std::abs(avg - std::llround(avg)) < kEps);
        CHECK(dim_fix(ctx, id, h) == std::llround(avg));
      }
    }
  }
}

TEST_CASE("mobius and totient on known values") {
  CHECK(mobius(1) == 1);
  CHECK(mobius(2) == -1);
  CHECK(mobius(4) == 0);
  CHECK(mobius(6) == 1);
  CHECK(mobius(30) == -1);
  CHECK(mobius(12) == 0);
  CHECK(totient(1) == 1);
  CHECK(totient(2) == 1);
  CHECK(totient(9) == 6);
  CHECK(totient(10) == 4);
  CHECK(totient(97) == 96);
  CHECK(totient(100) == 40);
}

TEST_CASE("ramanujan_sum matches the primitive-root brute force") {
  for (int m = 1; m <= 60; ++m) {
    for (long long r = 0; r < m; ++r) {
      std::complex<double> sum = 0;
      for (int k = 1; k <= m; ++k)
        if (std::gcd(k, m) == 1)
          sum += std::exp(std::complex<double>(0, 2 * M_PI * k * r / m));
      CHECK(std::abs(sum.imag()) < kEps);
      CHECK(std::llround(sum.real()) == ramanujan_sum(m, r));
      CHECK(std::abs(sum.real() - ramanujan_sum(m, r)) < kEps);
    }
  }
}

TEST_CASE("omega divisors and Galois orbits") {
  Context ctx(9);  // 2n = 18
  CHECK(omega_divisors(ctx) == std::vector<int>{1, 2, 3, 6});
  CHECK(galois_orbit(ctx, 1) == std::vector<int>{1, 5, 7});
  CHECK(galois_orbit(ctx, 2) == std::vector<int>{2, 4, 8});
  CHECK(galois_orbit(ctx, 3) == std::vector<int>{3});
  CHECK(galois_orbit(ctx, 6) == std::vector<int>{6});
  // the orbits partition {1..n-1}
  for (int n = 2; n <= 20; ++n) {
    Context c(n);
    size_t total = 0;
    for (int d : omega_divisors(c)) {
      std::vector<int> orbit = galois_orbit(c, d);
      CHECK(orbit.size() == static_cast<size_t>(totient(c.two_n() / d) / 2));
      total += orbit.size();
    }
    CHECK(total == static_cast<size_t>(n - 1));
  }
}

TEST_CASE("rational irrep structure") {
  Context ctx(9);
  std::vector<RationalIrrepInfo> infos = rational_irreps(ctx);
  CHECK(infos.size() == 4 + omega_divisors(ctx).size());
  int degree_sum = 0;
  for (const RationalIrrepInfo& info : infos) {
    if (info.id.kind == RationalIrrepId::Kind::Linear) {
      CHECK(info.degree == 1);
      CHECK(info.field_degree == 1);
      CHECK(info.multiplicity == 1);
    } else {
      CHECK(info.degree == totient(ctx.two_n() / info.id.index));
      CHECK(info.field_degree * 2 == info.degree);
      CHECK(info.multiplicity == 2);
      CHECK(info.complex_rep == IrrepId{IrrepId::Kind::TwoDim, info.id.index});
    }
    degree_sum += info.degree * (info.id.kind == RationalIrrepId::Kind::W ? 2 : 1);
  }
  CHECK(degree_sum == ctx.order());  // regular representation over Q
}

TEST_CASE("rational character is the Galois-orbit sum") {
  for (int n : {3, 4, 6, 9, 10}) {
    Context ctx(n);
    for (int d : omega_divisors(ctx)) {
      RationalIrrepId w{RationalIrrepId::Kind::W, d};
      for (const Elem& e : all_elements(ctx)) {
        double sum = 0;
        for (int j : galois_orbit(ctx, d)) sum += chi(ctx, {IrrepId::Kind::TwoDim, j}, e);
        CHECK(std::abs(sum - rational_char_value(ctx, w, e)) < kEps);
      }
    }
  }
}

TEST_CASE("induced trivial character multiplicities") {
  Context ctx(5);
  // H = G: only the trivial character
  auto whole = induced_trivial_multiplicities(ctx, whole_group());
  for (const auto& [id, m] : whole)
    CHECK(m == (id == RationalIrrepId{RationalIrrepId::Kind::Linear, 0} ? 1 : 0));
  // H = <a>: index 2, trivial + chi1
  auto rot = induced_trivial_multiplicities(ctx, cyclic(1));
  CHECK(rot.at({RationalIrrepId::Kind::Linear, 0}) == 1);
  CHECK(rot.at({RationalIrrepId::Kind::Linear, 1}) == 1);
  CHECK(rot.at({RationalIrrepId::Kind::Linear, 2}) == 0);
  CHECK(rot.at({RationalIrrepId::Kind::W, 1}) == 0);
  // H = <a^n, s>: trivial + every even-type W once
  auto dn = induced_trivial_multiplicities(ctx, dihedral_subgroup(ctx.n, 0));
  CHECK(dn.at({RationalIrrepId::Kind::Linear, 0}) == 1);
  CHECK(dn.at({RationalIrrepId::Kind::Linear, 1}) == 0);
  CHECK(dn.at({RationalIrrepId::Kind::W, 1}) == 0);
  CHECK(dn.at({RationalIrrepId::Kind::W, 2}) == 1);
  // degree bookkeeping for every subgroup and several n (throws on failure)
  for (int n = 2; n <= 10; ++n) {
    Context c(n);
    for (const Subgroup& h : all_subgroups(c)) CHECK_NOTHROW(induced_trivial_multiplicities(c, h));
  }
}

TEST_CASE("irrep id text round trip") {
  CHECK(to_string(IrrepId{IrrepId::Kind::TwoDim, 3}) == "psi_3");
  CHECK(to_string(RationalIrrepId{RationalIrrepId::Kind::Linear, 2}) == "chi2");
  CHECK(to_string(RationalIrrepId{RationalIrrepId::Kind::W, 4}) == "W_4");
  CHECK(parse_rational_irrep("chi3") == RationalIrrepId{RationalIrrepId::Kind::Linear, 3});
  CHECK(parse_rational_irrep("W_12") == RationalIrrepId{RationalIrrepId::Kind::W, 12});
  CHECK_THROWS_AS(parse_rational_irrep("chi7"), ValidationError);
  CHECK_THROWS_AS(parse_rational_irrep("V_1"), ValidationError);
}
