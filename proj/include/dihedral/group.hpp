#pragma once

#include <compare>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "dihedral/errors.hpp"

namespace dihedral {

// D_{2n} = <a, s | a^{2n} = s^2 = (as)^2 = 1>, order 4n.
struct Context {
  int n;

  explicit Context(int n_) : n(n_) {
    if (n < 2) throw ValidationError("bad-n", "n must be at least 2");
  }
  int two_n() const { return 2 * n; }
  int order() const { return 4 * n; }
};

// Normal form a^k s^refl with 0 <= k < 2n, refl in {0,1}.
struct Elem {
  int k = 0;
  int refl = 0;
  friend auto operator<=>(const Elem&, const Elem&) = default;
};

inline Elem identity() { return {0, 0}; }
Elem rotation(const Context& ctx, int k);
Elem reflection(const Context& ctx, int k);

Elem mul(const Context& ctx, Elem e1, Elem e2);
Elem inverse(const Context& ctx, Elem e);
Elem power(const Context& ctx, Elem e, int m);
Elem conjugate(const Context& ctx, Elem g, Elem x);  // g x g^{-1}
int elem_order(const Context& ctx, Elem e);

std::string to_string(const Context& ctx, Elem e);
Elem parse_elem(const Context& ctx, std::string_view text);

// Canonical form of a subgroup: Cyclic(d) = <a^d> with d | 2n (d = 2n is the
// trivial subgroup), or Dihedral(d, j) = <a^d, a^j s> with d | 2n, 0 <= j < d.
struct Subgroup {
  int d = 1;
  bool dihedral = false;
  int j = 0;
  friend auto operator<=>(const Subgroup&, const Subgroup&) = default;
};

inline Subgroup cyclic(int d) { return {d, false, 0}; }
inline Subgroup dihedral_subgroup(int d, int j) { return {d, true, j}; }
inline Subgroup trivial_subgroup(const Context& ctx) { return cyclic(ctx.two_n()); }
inline Subgroup whole_group() { return dihedral_subgroup(1, 0); }

int subgroup_order(const Context& ctx, const Subgroup& h);
std::vector<Elem> elements(const Context& ctx, const Subgroup& h);
bool contains(const Context& ctx, const Subgroup& h, Elem e);

Subgroup subgroup_from_generators(const Context& ctx, std::span<const Elem> gens);
Subgroup conjugate(const Context& ctx, const Subgroup& h, Elem g);
bool is_subgroup_of(const Context& ctx, const Subgroup& h, const Subgroup& k);

std::vector<Subgroup> all_subgroups(const Context& ctx);

struct SubgroupClass {
  Subgroup rep;                   // minimal member in canonical-form order
  std::vector<Subgroup> members;  // the full conjugacy class
};
std::vector<SubgroupClass> subgroup_classes(const Context& ctx);
Subgroup class_representative(const Context& ctx, const Subgroup& h);

std::string to_string(const Context& ctx, const Subgroup& h);
Subgroup parse_subgroup(const Context& ctx, std::string_view text);

// a -> a^k (gcd(k,2n) = 1), s -> a^l s.
struct Automorphism {
  int k = 1;
  int l = 0;
  friend auto operator<=>(const Automorphism&, const Automorphism&) = default;
};

Elem apply(const Context& ctx, const Automorphism& aut, Elem e);
Subgroup apply(const Context& ctx, const Automorphism& aut, const Subgroup& h);
Automorphism compose(const Context& ctx, const Automorphism& outer, const Automorphism& inner);
std::vector<Automorphism> automorphisms(const Context& ctx);
// Small generating set of Aut(D_{2n}): (a->a, s->a s) and (a->a^k, s->s).
std::vector<Automorphism> automorphism_generators(const Context& ctx);
bool is_characteristic(const Context& ctx, const Subgroup& h);

enum class ClassKind { Identity, Central, Rotation, EvenReflection, OddReflection };

struct ConjClass {
  ClassKind kind = ClassKind::Identity;
  int r = 0;  // 1..n-1 for Rotation, unused otherwise
  friend auto operator<=>(const ConjClass&, const ConjClass&) = default;
};

ConjClass class_of(const Context& ctx, Elem e);
Elem class_representative(const Context& ctx, const ConjClass& c);
int class_size(const Context& ctx, const ConjClass& c);
// Identity, central a^n, rotation pairs r = 1..n-1, even reflections, odd reflections.
std::vector<ConjClass> conjugacy_classes(const Context& ctx);
std::string to_string(const ConjClass& c);

}  // namespace dihedral
