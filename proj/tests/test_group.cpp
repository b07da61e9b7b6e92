#include <doctest.h>

#include <numeric>
#include <set>

#include "dihedral/group.hpp"

using namespace dihedral;

namespace {

std::vector<Elem> all_elements(const Context& ctx) {
  std::vector<Elem> out;
  for (int k = 0; k < ctx.two_n(); ++k)
    for (int r = 0; r < 2; ++r) out.push_back({k, r});
  return out;
}

}  // namespace

TEST_CASE("group axioms hold exhaustively") {
  for (int n : {2, 3, 4}) {
    Context ctx(n);
    std::vector<Elem> all = all_elements(ctx);
    CHECK(all.size() == static_cast<size_t>(ctx.order()));
    for (const Elem& x : all) {
      CHECK(mul(ctx, x, identity()) == x);
      CHECK(mul(ctx, identity(), x) == x);
      CHECK(mul(ctx, x, inverse(ctx, x)) == identity());
      for (const Elem& y : all)
        for (const Elem& z : all)
          CHECK(mul(ctx, mul(ctx, x, y), z) == mul(ctx, x, mul(ctx, y, z)));
    }
  }
}

TEST_CASE("defining relations") {
  for (int n : {2, 3, 5, 8}) {
    Context ctx(n);
    Elem a = rotation(ctx, 1), s = reflection(ctx, 0);
    CHECK(power(ctx, a, ctx.two_n()) == identity());
    CHECK(mul(ctx, s, s) == identity());
    Elem as = mul(ctx, a, s);
    CHECK(mul(ctx, as, as) == identity());
    // s a s^{-1} = a^{-1}
    CHECK(conjugate(ctx, s, a) == inverse(ctx, a));
  }
}

TEST_CASE("element order matches the brute-force definition") {
  Context ctx(6);
  for (const Elem& e : all_elements(ctx)) {
    int o = 1;
    Elem acc = e;
    while (acc != identity()) {
      acc = mul(ctx, acc, e);
      ++o;
    }
    CHECK(elem_order(ctx, e) == o);
  }
}

TEST_CASE("element text round trip") {
  Context ctx(4);
  for (const Elem& e : all_elements(ctx)) CHECK(parse_elem(ctx, to_string(ctx, e)) == e);
  CHECK(parse_elem(ctx, "1") == identity());
  CHECK(parse_elem(ctx, "a") == Elem{1, 0});
  CHECK(parse_elem(ctx, "a^3") == Elem{3, 0});
  CHECK(parse_elem(ctx, "s") == Elem{0, 1});
  CHECK(parse_elem(ctx, "a^2*s") == Elem{2, 1});
  CHECK(parse_elem(ctx, " a^-1 ") == Elem{7, 0});
  CHECK_THROWS_AS(parse_elem(ctx, "b"), ValidationError);
  CHECK_THROWS_AS(parse_elem(ctx, "a^x"), ValidationError);
}

TEST_CASE("subgroup element sets are closed and have the right size") {
  Context ctx(6);
  for (const Subgroup& h : all_subgroups(ctx)) {
    std::vector<Elem> els = elements(ctx, h);
    CHECK(static_cast<int>(els.size()) == subgroup_order(ctx, h));
    std::set<Elem> set(els.begin(), els.end());
    CHECK(set.size() == els.size());
    for (const Elem& x : els) {
      CHECK(contains(ctx, h, x));
      CHECK(set.count(inverse(ctx, x)));
      for (const Elem& y : els) CHECK(set.count(mul(ctx, x, y)));
    }
  }
}

TEST_CASE("subgroup_from_generators recovers the canonical form") {
  Context ctx(5);
  CHECK(subgroup_from_generators(ctx, std::array{Elem{2, 0}}) == cyclic(2));
  CHECK(subgroup_from_generators(ctx, std::array{Elem{4, 0}, Elem{6, 0}}) == cyclic(2));
  CHECK(subgroup_from_generators(ctx, std::array{Elem{0, 1}}) == dihedral_subgroup(10, 0));
  CHECK(subgroup_from_generators(ctx, std::array{Elem{2, 0}, Elem{3, 1}}) ==
        dihedral_subgroup(2, 1));
  CHECK(subgroup_from_generators(ctx, std::array{Elem{1, 0}, Elem{0, 1}}) == whole_group());
  CHECK(subgroup_from_generators(ctx, std::array{identity()}) == trivial_subgroup(ctx));
  // two reflections generate the rotation of the exponent difference
  CHECK(subgroup_from_generators(ctx, std::array{Elem{1, 1}, Elem{3, 1}}) ==
        dihedral_subgroup(2, 1));
}

TEST_CASE("all_subgroups agrees with closure of generator pairs") {
  // every subgroup of a dihedral group is generated by at most two elements
  for (int n : {2, 3, 4}) {
    Context ctx(n);
    std::set<Subgroup> brute;
    std::vector<Elem> all = all_elements(ctx);
    for (const Elem& x : all)
      for (const Elem& y : all) brute.insert(subgroup_from_generators(ctx, std::array{x, y}));
    std::vector<Subgroup> listed = all_subgroups(ctx);
    CHECK(brute.size() == listed.size());
    for (const Subgroup& h : listed) CHECK(brute.count(h));
  }
}

TEST_CASE("conjugate subgroup is the set-wise conjugate") {
  Context ctx(6);
  for (const Subgroup& h : all_subgroups(ctx)) {
    for (const Elem& g : all_elements(ctx)) {
      Subgroup c = conjugate(ctx, h, g);
      CHECK(subgroup_order(ctx, c) == subgroup_order(ctx, h));
      for (const Elem& x : elements(ctx, h)) CHECK(contains(ctx, c, conjugate(ctx, g, x)));
    }
  }
}

TEST_CASE("subgroup classes partition the subgroup lattice") {
  for (int n : {2, 3, 5, 6}) {
    Context ctx(n);
    std::vector<SubgroupClass> classes = subgroup_classes(ctx);
    size_t total = 0;
    std::set<Subgroup> seen;
    for (const SubgroupClass& cls : classes) {
      total += cls.members.size();
      CHECK(cls.rep == *std::min_element(cls.members.begin(), cls.members.end()));
      for (const Subgroup& m : cls.members) {
        CHECK(seen.insert(m).second);
        CHECK(class_representative(ctx, m) == cls.rep);
      }
    }
    CHECK(total == all_subgroups(ctx).size());
  }
}

TEST_CASE("subgroup text round trip") {
  Context ctx(5);
  for (const Subgroup& h : all_subgroups(ctx)) CHECK(parse_subgroup(ctx, to_string(ctx, h)) == h);
  CHECK(to_string(ctx, trivial_subgroup(ctx)) == "<1>");
  CHECK(to_string(ctx, dihedral_subgroup(10, 0)) == "<s>");
  CHECK(to_string(ctx, dihedral_subgroup(10, 3)) == "<a^3*s>");
  CHECK(to_string(ctx, dihedral_subgroup(2, 1)) == "<a^2, a*s>");
  CHECK(parse_subgroup(ctx, "<a^2, s>") == dihedral_subgroup(2, 0));
  CHECK_THROWS_AS(parse_subgroup(ctx, "a^2"), ValidationError);
}

TEST_CASE("automorphism count is 2n * phi(2n)") {
  auto phi = [](int m) {
    int count = 0;
    for (int k = 1; k <= m; ++k)
      if (std::gcd(k, m) == 1) ++count;
    return count;
  };
  for (int n = 2; n <= 8; ++n) {
    Context ctx(n);
    CHECK(automorphisms(ctx).size() == static_cast<size_t>(ctx.two_n() * phi(ctx.two_n())));
  }
}

TEST_CASE("automorphisms are bijective homomorphisms") {
  Context ctx(4);
  std::vector<Elem> all = all_elements(ctx);
  for (const Automorphism& aut : automorphisms(ctx)) {
    std::set<Elem> image;
    for (const Elem& x : all) {
      image.insert(apply(ctx, aut, x));
      for (const Elem& y : all)
        CHECK(apply(ctx, aut, mul(ctx, x, y)) ==
              mul(ctx, apply(ctx, aut, x), apply(ctx, aut, y)));
    }
    CHECK(image.size() == all.size());
  }
}

TEST_CASE("compose matches pointwise composition") {
  Context ctx(5);
  std::vector<Automorphism> auts = automorphisms(ctx);
  for (size_t i = 0; i < auts.size(); i += 7)
    for (size_t j = 0; j < auts.size(); j += 5) {
      Automorphism c = compose(ctx, auts[i], auts[j]);
      for (const Elem& e : all_elements(ctx))
        CHECK(apply(ctx, c, e) == apply(ctx, auts[i], apply(ctx, auts[j], e)));
    }
}

TEST_CASE("automorphism generators generate the full automorphism group") {
  for (int n : {2, 3, 4, 5}) {
    Context ctx(n);
    std::set<Automorphism> closure;
    std::vector<Automorphism> work = automorphism_generators(ctx);
    while (!work.empty()) {
      Automorphism g = work.back();
      work.pop_back();
      if (!closure.insert(g).second) continue;
      for (const Automorphism& h : closure) {
        work.push_back(compose(ctx, g, h));
        work.push_back(compose(ctx, h, g));
      }
    }
    closure.insert({1, 0});
    CHECK(closure.size() == automorphisms(ctx).size());
  }
}

TEST_CASE("characteristic subgroups") {
  Context ctx(5);
  CHECK(is_characteristic(ctx, cyclic(1)));           // <a>
  CHECK(is_characteristic(ctx, cyclic(2)));           // <a^2>
  CHECK(is_characteristic(ctx, cyclic(ctx.n)));       // <a^n>
  CHECK(is_characteristic(ctx, whole_group()));
  CHECK(is_characteristic(ctx, trivial_subgroup(ctx)));
  CHECK(!is_characteristic(ctx, dihedral_subgroup(10, 0)));  // <s>
  CHECK(!is_characteristic(ctx, dihedral_subgroup(2, 0)));   // <a^2, s>
}

TEST_CASE("conjugacy classes partition the group") {
  for (int n : {2, 3, 4, 7, 10}) {
    Context ctx(n);
    int total = 0;
    for (const ConjClass& c : conjugacy_classes(ctx)) {
      total += class_size(ctx, c);
      // the declared representative really lies in the class
      CHECK(class_of(ctx, class_representative(ctx, c)) == c);
    }
    CHECK(total == ctx.order());
    CHECK(conjugacy_classes(ctx).size() == static_cast<size_t>(ctx.n + 3));
  }
}

TEST_CASE("class_of matches the brute-force conjugation orbit") {
  Context ctx(5);
  std::vector<Elem> all = all_elements(ctx);
  for (const Elem& x : all) {
    std::set<Elem> orbit;
    for (const Elem& g : all) orbit.insert(conjugate(ctx, g, x));
    CHECK(static_cast<int>(orbit.size()) == class_size(ctx, class_of(ctx, x)));
    for (const Elem& y : orbit) CHECK(class_of(ctx, y) == class_of(ctx, x));
  }
}
