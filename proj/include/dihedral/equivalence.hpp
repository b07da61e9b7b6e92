#pragma once

#include <cstdint>
#include <unordered_map>
#include <vector>

#include "dihedral/actions.hpp"

namespace dihedral {

// Phi_{i,i+1}: (..., c_i, c_{i+1}, ...) -> (..., c_i c_{i+1} c_i^{-1}, c_i, ...)
struct BraidMove {
  int index = 0;  // 0..3
  bool forward = true;
};

GeneratingVector apply_braid_move(const GeneratingVector& v, BraidMove move);
GeneratingVector apply_aut(const Automorphism& aut, const GeneratingVector& v);

// Every valid generating vector of type (0;2,2,2,2,n), the order-n entry in
// any position. Deterministic order.
std::vector<std::array<Elem, 5>> enumerate_vectors(const Context& ctx);

enum class ActionLabel { Type1, Type2, Unique };
std::string to_string(ActionLabel label);
ActionLabel parse_label(std::string_view text);

uint64_t encode(const Context& ctx, const std::array<Elem, 5>& c);

struct OrbitClass {
  GeneratingVector representative;  // lexicographically minimal member
  long long orbit_size = 0;
  ActionLabel label = ActionLabel::Unique;
};

struct OrbitPartition {
  std::vector<OrbitClass> classes;
  std::unordered_map<uint64_t, int> class_of;  // encode(vector) -> class index
};

// Orbits under braid moves, their inverses, and entrywise Aut(G).
OrbitPartition orbit_classes(const Context& ctx);

// Invariant shortcut: Type1 iff some entry lies in the characteristic
// subgroup <a^n> (n odd); Unique for even n.
ActionLabel classify(const GeneratingVector& v);

}  // namespace dihedral
