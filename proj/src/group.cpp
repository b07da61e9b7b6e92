#include "dihedral/group.hpp"

#include <algorithm>
#include <charconv>
#include <numeric>
#include <set>

namespace dihedral {

namespace {

int mod(int a, int m) {
  int r = a % m;
  return r < 0 ? r + m : r;
}

int parse_int(std::string_view s) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
  if (ec != std::errc{} || ptr != s.data() + s.size())
    throw ValidationError("parse", "expected an integer, got '" + std::string(s) + "'");
  return value;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

}  // namespace

Elem rotation(const Context& ctx, int k) { return {mod(k, ctx.two_n()), 0}; }
Elem reflection(const Context& ctx, int k) { return {mod(k, ctx.two_n()), 1}; }

Elem mul(const Context& ctx, Elem e1, Elem e2) {
  // s a^k = a^{-k} s
  int k = mod(e1.k + (e1.refl ? -e2.k : e2.k), ctx.two_n());
  return {k, e1.refl ^ e2.refl};
}

Elem inverse(const Context& ctx, Elem e) {
  if (e.refl) return e;
  return {mod(-e.k, ctx.two_n()), 0};
}

Elem power(const Context& ctx, Elem e, int m) {
  if (m < 0) return power(ctx, inverse(ctx, e), -m);
  Elem acc = identity();
  for (int i = 0; i < m; ++i) acc = mul(ctx, acc, e);
  return acc;
}

Elem conjugate(const Context& ctx, Elem g, Elem x) {
  return mul(ctx, mul(ctx, g, x), inverse(ctx, g));
}

int elem_order(const Context& ctx, Elem e) {
  if (e.refl) return 2;
  if (e.k == 0) return 1;
  return ctx.two_n() / std::gcd(e.k, ctx.two_n());
}

std::string to_string(const Context& ctx, Elem e) {
  (void)ctx;
  std::string out;
  if (e.k == 0 && e.refl == 0) return "1";
  if (e.k == 1) out = "a";
  else if (e.k > 1) out = "a^" + std::to_string(e.k);
  if (e.refl) {
    if (!out.empty()) out += "*";
    out += "s";
  }
  return out;
}

Elem parse_elem(const Context& ctx, std::string_view text) {
  std::string_view s = trim(text);
  if (s.empty()) throw ValidationError("parse", "empty element");
  if (s == "1") return identity();
  int k = 0, refl = 0;
  if (s.front() == 'a') {
    s.remove_prefix(1);
    if (!s.empty() && s.front() == '^') {
      s.remove_prefix(1);
      size_t end = 0;
      while (end < s.size() && (std::isdigit(static_cast<unsigned char>(s[end])) || s[end] == '-'))
        ++end;
      k = parse_int(s.substr(0, end));
      s.remove_prefix(end);
    } else {
      k = 1;
    }
    if (!s.empty()) {
      if (s.front() == '*') s.remove_prefix(1);
      s = trim(s);
      if (s != "s") throw ValidationError("parse", "bad element '" + std::string(text) + "'");
      refl = 1;
      s = {};
    }
  } else if (s == "s") {
    refl = 1;
  } else {
    throw ValidationError("parse", "bad element '" + std::string(text) + "'");
  }
  return {mod(k, ctx.two_n()), refl};
}

int subgroup_order(const Context& ctx, const Subgroup& h) {
  int rot = ctx.two_n() / h.d;
  return h.dihedral ? 2 * rot : rot;
}

std::vector<Elem> elements(const Context& ctx, const Subgroup& h) {
  std::vector<Elem> out;
  for (int t = 0; t * h.d < ctx.two_n(); ++t) out.push_back({t * h.d, 0});
  if (h.dihedral)
    for (int t = 0; t * h.d < ctx.two_n(); ++t) out.push_back({mod(h.j + t * h.d, ctx.two_n()), 1});
  std::sort(out.begin(), out.end());
  return out;
}

bool contains(const Context& ctx, const Subgroup& h, Elem e) {
  if (e.refl) return h.dihedral && mod(e.k - h.j, ctx.two_n()) % h.d == 0;
  return e.k % h.d == 0;
}

Subgroup subgroup_from_generators(const Context& ctx, std::span<const Elem> gens) {
  if (gens.empty()) throw ValidationError("subgroup", "no generators");
  std::set<Elem> closure{identity()};
  std::vector<Elem> work(gens.begin(), gens.end());
  while (!work.empty()) {
    Elem g = work.back();
    work.pop_back();
    if (!closure.insert(g).second) continue;
    for (const Elem& h : closure) {
      Elem p = mul(ctx, g, h);
      if (!closure.count(p)) work.push_back(p);
      p = mul(ctx, h, g);
      if (!closure.count(p)) work.push_back(p);
    }
  }
  int d = ctx.two_n();
  int j = -1;
  for (const Elem& e : closure) {
    if (e.refl) {
      if (j < 0 || e.k < j) j = e.k;
    } else {
      d = std::gcd(d, e.k);
    }
  }
  if (j < 0) return cyclic(d);
  return dihedral_subgroup(d, j % d);
}

Subgroup conjugate(const Context& ctx, const Subgroup& h, Elem g) {
  if (!h.dihedral) return h;  // rotation subgroups are normal
  std::vector<Elem> gens = {Elem{h.d % ctx.two_n(), 0}, Elem{h.j, 1}};
  for (Elem& e : gens) e = conjugate(ctx, g, e);
  return subgroup_from_generators(ctx, gens);
}

bool is_subgroup_of(const Context& ctx, const Subgroup& h, const Subgroup& k) {
  for (const Elem& e : elements(ctx, h))
    if (!contains(ctx, k, e)) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const Context& ctx) {
  std::vector<Subgroup> out;
  for (int d = 1; d <= ctx.two_n(); ++d) {
    if (ctx.two_n() % d != 0) continue;
    out.push_back(cyclic(d));
    for (int j = 0; j < d; ++j) out.push_back(dihedral_subgroup(d, j));
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<SubgroupClass> subgroup_classes(const Context& ctx) {
  std::vector<SubgroupClass> classes;
  std::set<Subgroup> seen;
  for (const Subgroup& h : all_subgroups(ctx)) {
    if (seen.count(h)) continue;
    std::set<Subgroup> orbit;
    for (int k = 0; k < ctx.two_n(); ++k)
      for (int r = 0; r < 2; ++r) orbit.insert(conjugate(ctx, h, Elem{k, r}));
    SubgroupClass cls;
    cls.rep = *orbit.begin();
    cls.members.assign(orbit.begin(), orbit.end());
    for (const Subgroup& m : orbit) seen.insert(m);
    classes.push_back(std::move(cls));
  }
  return classes;
}

Subgroup class_representative(const Context& ctx, const Subgroup& h) {
  Subgroup best = h;
  for (int k = 0; k < ctx.two_n(); ++k)
    for (int r = 0; r < 2; ++r) best = std::min(best, conjugate(ctx, h, Elem{k, r}));
  return best;
}

std::string to_string(const Context& ctx, const Subgroup& h) {
  const int tn = ctx.two_n();
  auto gen = [&](int k, int refl) { return to_string(ctx, Elem{k % tn, refl}); };
  if (!h.dihedral) return "<" + gen(h.d, 0) + ">";
  if (h.d == tn) return "<" + gen(h.j, 1) + ">";
  return "<" + gen(h.d, 0) + ", " + gen(h.j, 1) + ">";
}

Subgroup parse_subgroup(const Context& ctx, std::string_view text) {
  std::string_view s = trim(text);
  if (s.size() < 3 || s.front() != '<' || s.back() != '>')
    throw ValidationError("parse", "subgroup must look like <a^d> or <a^d, a^j*s>");
  s = s.substr(1, s.size() - 2);
  std::vector<Elem> gens;
  size_t start = 0;
  while (start <= s.size()) {
    size_t comma = s.find(',', start);
    std::string_view part = s.substr(start, comma == std::string_view::npos ? comma : comma - start);
    gens.push_back(parse_elem(ctx, part));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return subgroup_from_generators(ctx, gens);
}

Elem apply(const Context& ctx, const Automorphism& aut, Elem e) {
  return {mod(aut.k * e.k + e.refl * aut.l, ctx.two_n()), e.refl};
}

Subgroup apply(const Context& ctx, const Automorphism& aut, const Subgroup& h) {
  std::vector<Elem> gens = {apply(ctx, aut, Elem{h.d % ctx.two_n(), 0})};
  if (h.dihedral) gens.push_back(apply(ctx, aut, Elem{h.j, 1}));
  return subgroup_from_generators(ctx, gens);
}

Automorphism compose(const Context& ctx, const Automorphism& outer, const Automorphism& inner) {
  return {mod(outer.k * inner.k, ctx.two_n()), mod(outer.k * inner.l + outer.l, ctx.two_n())};
}

std::vector<Automorphism> automorphisms(const Context& ctx) {
  std::vector<Automorphism> out;
  for (int k = 1; k < ctx.two_n(); ++k) {
    if (std::gcd(k, ctx.two_n()) != 1) continue;
    for (int l = 0; l < ctx.two_n(); ++l) out.push_back({k, l});
  }
  return out;
}

std::vector<Automorphism> automorphism_generators(const Context& ctx) {
  std::vector<Automorphism> out = {{1, 1}};
  for (int k = 2; k < ctx.two_n(); ++k)
    if (std::gcd(k, ctx.two_n()) == 1) out.push_back({k, 0});
  return out;
}

bool is_characteristic(const Context& ctx, const Subgroup& h) {
  for (const Automorphism& aut : automorphisms(ctx))
    if (apply(ctx, aut, h) != h) return false;
  return true;
}

ConjClass class_of(const Context& ctx, Elem e) {
  if (e.refl) return {e.k % 2 == 0 ? ClassKind::EvenReflection : ClassKind::OddReflection, 0};
  if (e.k == 0) return {ClassKind::Identity, 0};
  if (e.k == ctx.n) return {ClassKind::Central, 0};
  return {ClassKind::Rotation, std::min(e.k, ctx.two_n() - e.k)};
}

Elem class_representative(const Context& ctx, const ConjClass& c) {
  switch (c.kind) {
    case ClassKind::Identity: return identity();
    case ClassKind::Central: return {ctx.n, 0};
    case ClassKind::Rotation: return {c.r, 0};
    case ClassKind::EvenReflection: return {0, 1};
    case ClassKind::OddReflection: return {1, 1};
  }
  return identity();
}

int class_size(const Context& ctx, const ConjClass& c) {
  switch (c.kind) {
    case ClassKind::Identity:
    case ClassKind::Central: return 1;
    case ClassKind::Rotation: return 2;
    case ClassKind::EvenReflection:
    case ClassKind::OddReflection: return ctx.n;
  }
  return 0;
}

std::vector<ConjClass> conjugacy_classes(const Context& ctx) {
  std::vector<ConjClass> out = {{ClassKind::Identity, 0}, {ClassKind::Central, 0}};
  for (int r = 1; r < ctx.n; ++r) out.push_back({ClassKind::Rotation, r});
  out.push_back({ClassKind::EvenReflection, 0});
  out.push_back({ClassKind::OddReflection, 0});
  return out;
}

std::string to_string(const ConjClass& c) {
  switch (c.kind) {
    case ClassKind::Identity: return "identity";
    case ClassKind::Central: return "central";
    case ClassKind::Rotation: return "rotation-" + std::to_string(c.r);
    case ClassKind::EvenReflection: return "even-reflection";
    case ClassKind::OddReflection: return "odd-reflection";
  }
  return "?";
}

}  // namespace dihedral
