#include "dihedral/equivalence.hpp"

#include <algorithm>
#include <deque>

namespace dihedral {

GeneratingVector apply_braid_move(const GeneratingVector& v, BraidMove move) {
  if (move.index < 0 || move.index > 3)
    throw ValidationError("braid", "braid index must be in 1..4");
  GeneratingVector out = v;
  const Context& ctx = v.ctx;
  Elem x = v.c[move.index];
  Elem y = v.c[move.index + 1];
  if (move.forward) {
    out.c[move.index] = mul(ctx, mul(ctx, x, y), inverse(ctx, x));
    out.c[move.index + 1] = x;
  } else {
    out.c[move.index] = y;
    out.c[move.index + 1] = mul(ctx, mul(ctx, inverse(ctx, y), x), y);
  }
  return out;
}

GeneratingVector apply_aut(const Automorphism& aut, const GeneratingVector& v) {
  GeneratingVector out = v;
  for (Elem& e : out.c) e = apply(v.ctx, aut, e);
  return out;
}

std::vector<std::array<Elem, 5>> enumerate_vectors(const Context& ctx) {
  std::vector<Elem> pool;
  for (int k = 0; k < ctx.two_n(); ++k)
    for (int r = 0; r < 2; ++r) {
      Elem e{k, r};
      int o = elem_order(ctx, e);
      if (o == 2 || o == ctx.n) pool.push_back(e);
    }
  std::vector<std::array<Elem, 5>> out;
  std::array<Elem, 5> c;
  for (const Elem& c1 : pool) {
    c[0] = c1;
    for (const Elem& c2 : pool) {
      c[1] = c2;
      for (const Elem& c3 : pool) {
        c[2] = c3;
        Elem p123 = mul(ctx, mul(ctx, c1, c2), c3);
        for (const Elem& c4 : pool) {
          c[3] = c4;
          c[4] = inverse(ctx, mul(ctx, p123, c4));
          if (check_vector(ctx, c)) out.push_back(c);
        }
      }
    }
  }
  return out;
}

std::string to_string(ActionLabel label) {
  switch (label) {
    case ActionLabel::Type1: return "type1";
    case ActionLabel::Type2: return "type2";
    case ActionLabel::Unique: return "unique";
  }
  return "?";
}

ActionLabel parse_label(std::string_view text) {
  if (text == "type1") return ActionLabel::Type1;
  if (text == "type2") return ActionLabel::Type2;
  if (text == "unique") return ActionLabel::Unique;
  throw ValidationError("parse", "action must be type1, type2 or unique");
}

uint64_t encode(const Context& ctx, const std::array<Elem, 5>& c) {
  uint64_t key = 0;
  for (const Elem& e : c) key = key * (2 * ctx.two_n()) + (2 * e.k + e.refl);
  return key;
}

ActionLabel classify(const GeneratingVector& v) {
  if (v.ctx.n % 2 == 0) return ActionLabel::Unique;
  for (const Elem& e : v.c)
    if (e == Elem{v.ctx.n, 0}) return ActionLabel::Type1;
  return ActionLabel::Type2;
}

OrbitPartition orbit_classes(const Context& ctx) {
  std::vector<std::array<Elem, 5>> vectors = enumerate_vectors(ctx);
  std::vector<Automorphism> aut_gens = automorphism_generators(ctx);

  OrbitPartition result;
  result.class_of.reserve(vectors.size() * 2);
  for (const std::array<Elem, 5>& seed : vectors) {
    uint64_t seed_key = encode(ctx, seed);
    if (result.class_of.count(seed_key)) continue;
    int cls = static_cast<int>(result.classes.size());
    std::array<Elem, 5> min_member = seed;
    long long size = 0;
    std::deque<GeneratingVector> queue{{ctx, seed}};
    result.class_of.emplace(seed_key, cls);
    while (!queue.empty()) {
      GeneratingVector v = queue.front();
      queue.pop_front();
      ++size;
      min_member = std::min(min_member, v.c);
      auto visit = [&](const GeneratingVector& w) {
        if (result.class_of.emplace(encode(ctx, w.c), cls).second) queue.push_back(w);
      };
      for (int i = 0; i < 4; ++i) {
        visit(apply_braid_move(v, {i, true}));
        visit(apply_braid_move(v, {i, false}));
      }
      for (const Automorphism& aut : aut_gens) visit(apply_aut(aut, v));
    }
    GeneratingVector rep{ctx, min_member};
    result.classes.push_back({rep, size, classify(rep)});
  }
  // Type1 class (when present) first, then by representative.
  std::vector<int> order(result.classes.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    const OrbitClass& ca = result.classes[a];
    const OrbitClass& cb = result.classes[b];
    if (ca.label != cb.label) return ca.label < cb.label;
    return ca.representative.c < cb.representative.c;
  });
  std::vector<OrbitClass> sorted;
  std::vector<int> remap(order.size());
  for (size_t i = 0; i < order.size(); ++i) {
    remap[order[i]] = static_cast<int>(i);
    sorted.push_back(result.classes[order[i]]);
  }
  result.classes = std::move(sorted);
  for (auto& [key, cls] : result.class_of) cls = remap[cls];
  return result;
}

}  // namespace dihedral
