#include "dihedral/decomposition.hpp"

#include <algorithm>
#include <numeric>

namespace dihedral {

DecompositionReport factor_dimensions(const GeneratingVector& v) {
  const Context& ctx = v.ctx;
  DecompositionReport report{v, classify(v), {}, 0};
  for (const RationalIrrepInfo& info : rational_irreps(ctx)) {
    int dim = 0;
    bool trivial = info.id == RationalIrrepId{RationalIrrepId::Kind::Linear, 0};
    if (!trivial) {
      int dim_v = dim_irrep(info.complex_rep);
      int s = 0;
      for (const Elem& e : v.c) {
        Subgroup stab = subgroup_from_generators(ctx, std::array{e});
        s += dim_v - dim_fix(ctx, info.complex_rep, stab);
      }
      long long twice = static_cast<long long>(info.field_degree) * (s - 2 * dim_v);
      if (twice % 2 != 0 || twice < 0)
        throw ConsistencyError("factor-dim", "dim " + to_string(info.id) +
                                                 " is fractional or negative");
      dim = static_cast<int>(twice / 2);
    }
    report.factors.push_back({info.id, dim, info.multiplicity});
    report.genus += dim * info.multiplicity;
  }
  return report;
}

QuotientDecomposition quotient_decomposition(const DecompositionReport& report,
                                             const Subgroup& h) {
  const Context& ctx = report.vector.ctx;
  QuotientDecomposition out;
  for (const RationalIrrepInfo& info : rational_irreps(ctx)) {
    int e = dim_fix(ctx, info.complex_rep, h);  // Schur index 1
    out.exponents[info.id] = e;
    for (const IsotypicalFactor& f : report.factors)
      if (f.rep == info.id) out.genus += e * f.dim;
  }
  return out;
}

int quotient_genus_coset(const GeneratingVector& v, const Subgroup& h) {
  const Context& ctx = v.ctx;
  // Index elements a^k s^r as 2k + r; coset id = minimal member index of Hg.
  const int total = ctx.order();
  auto elem_of = [&](int idx) { return Elem{idx / 2, idx % 2}; };
  auto index_of = [&](Elem e) { return 2 * e.k + e.refl; };
  std::vector<Elem> hs = elements(ctx, h);
  std::vector<int> coset(total, -1);
  std::vector<int> reps;
  for (int idx = 0; idx < total; ++idx) {
    if (coset[idx] >= 0) continue;
    int id = static_cast<int>(reps.size());
    reps.push_back(idx);
    for (const Elem& he : hs) coset[index_of(mul(ctx, he, elem_of(idx)))] = id;
  }
  int m = static_cast<int>(reps.size());
  long long total_ram = 0;
  for (const Elem& c : v.c) {
    // orbits of <c> acting by right multiplication on cosets
    std::vector<int> perm(m);
    for (int i = 0; i < m; ++i) perm[i] = coset[index_of(mul(ctx, elem_of(reps[i]), c))];
    std::vector<char> done(m, 0);
    for (int i = 0; i < m; ++i) {
      if (done[i]) continue;
      int len = 0;
      for (int j = i; !done[j]; j = perm[j]) {
        done[j] = 1;
        ++len;
      }
      total_ram += len - 1;
    }
  }
  long long rhs = -2LL * m + total_ram;  // = 2 gamma_H - 2
  if ((rhs + 2) % 2 != 0 || rhs + 2 < 0)
    throw ConsistencyError("non-integer-genus", "coset Riemann-Hurwitz gave a bad genus");
  return static_cast<int>((rhs + 2) / 2);
}

namespace {

std::map<RationalIrrepId, int> nonzero_exponents(const DecompositionReport& report,
                                                 const std::map<RationalIrrepId, int>& exps) {
  std::map<RationalIrrepId, int> out;
  for (const IsotypicalFactor& f : report.factors) {
    if (f.dim == 0) continue;
    auto it = exps.find(f.rep);
    if (it != exps.end() && it->second > 0) out[f.rep] = it->second;
  }
  return out;
}

// exists g with gHg^{-1} <= K
bool class_contained(const Context& ctx, const Subgroup& h, const Subgroup& k) {
  if (subgroup_order(ctx, h) >= subgroup_order(ctx, k)) return false;
  for (int kk = 0; kk < ctx.two_n(); ++kk)
    for (int r = 0; r < 2; ++r)
      if (is_subgroup_of(ctx, conjugate(ctx, h, Elem{kk, r}), k)) return true;
  return false;
}

}  // namespace

std::vector<Identification> identify_factors(const DecompositionReport& report) {
  const Context& ctx = report.vector.ctx;
  std::vector<SubgroupClass> classes = subgroup_classes(ctx);

  std::map<RationalIrrepId, int> mults;
  std::map<RationalIrrepId, int> dims;
  for (const IsotypicalFactor& f : report.factors) {
    mults[f.rep] = f.multiplicity;
    dims[f.rep] = f.dim;
  }

  std::map<std::map<RationalIrrepId, int>, Identification> by_target;
  auto entry_for = [&](const std::map<RationalIrrepId, int>& target) -> Identification& {
    Identification& id = by_target[target];
    if (id.target.empty()) {
      id.target = target;
      int power = -1;
      bool uniform = true;
      for (const auto& [rep, e] : target) {
        id.dim += e * dims[rep];
        if (!uniform || mults[rep] % e != 0) {
          uniform = false;
          continue;
        }
        int p = mults[rep] / e;
        if (power == -1) power = p;
        else if (p != power) uniform = false;
      }
      id.power = uniform ? power : 0;
    }
    return id;
  };

  std::map<Subgroup, std::map<RationalIrrepId, int>> class_exps;
  for (const SubgroupClass& cls : classes) {
    QuotientDecomposition q = quotient_decomposition(report, cls.rep);
    class_exps[cls.rep] = q.exponents;
    std::map<RationalIrrepId, int> target = nonzero_exponents(report, q.exponents);
    if (target.empty()) continue;
    entry_for(target).jacobian_witnesses.push_back(cls.rep);
  }

  for (const SubgroupClass& hc : classes) {
    for (const SubgroupClass& kc : classes) {
      if (!class_contained(ctx, hc.rep, kc.rep)) continue;
      std::map<RationalIrrepId, int> diff;
      bool ok = true;
      for (const auto& [rep, eh] : class_exps[hc.rep]) {
        int d = eh - class_exps[kc.rep][rep];
        if (d < 0) ok = false;
        if (d > 0) diff[rep] = d;
      }
      if (!ok) continue;
      std::map<RationalIrrepId, int> target = nonzero_exponents(report, diff);
      if (target.empty()) continue;
      entry_for(target).prym_witnesses.emplace_back(hc.rep, kc.rep);
    }
  }

  std::vector<Identification> out;
  for (auto& [target, id] : by_target) {
    auto by_order = [&](const Subgroup& a, const Subgroup& b) {
      int oa = subgroup_order(ctx, a), ob = subgroup_order(ctx, b);
      return oa != ob ? oa < ob : a < b;
    };
    std::sort(id.jacobian_witnesses.begin(), id.jacobian_witnesses.end(), by_order);
    std::sort(id.prym_witnesses.begin(), id.prym_witnesses.end(),
              [&](const auto& a, const auto& b) {
                if (a.first != b.first) return by_order(a.first, b.first);
                return by_order(a.second, b.second);
              });
    out.push_back(std::move(id));
  }
  return out;
}

std::vector<std::string> identification_notes(const DecompositionReport& report,
                                              const std::vector<Identification>& ids) {
  const Context& ctx = report.vector.ctx;
  std::vector<std::string> notes;
  if (report.label != ActionLabel::Type1) return notes;
  // The complement of the elliptic factor: all nonzero W factors, exponent 1.
  std::map<RationalIrrepId, int> complement;
  for (const IsotypicalFactor& f : report.factors)
    if (f.dim > 0 && f.rep.kind == RationalIrrepId::Kind::W) complement[f.rep] = 1;
  for (const Identification& id : ids) {
    if (id.target != complement) continue;
    Subgroup even = class_representative(ctx, dihedral_subgroup(ctx.two_n(), 0));  // <s>
    Subgroup odd = class_representative(ctx, dihedral_subgroup(ctx.two_n(), 1));   // <a*s>
    auto has = [&](const Subgroup& h) {
      return std::find(id.jacobian_witnesses.begin(), id.jacobian_witnesses.end(), h) !=
             id.jacobian_witnesses.end();
    };
    bool even_ok = has(even), odd_ok = has(odd);
    if (even_ok != odd_ok) {
      const Subgroup& yes = even_ok ? even : odd;
      const Subgroup& no = even_ok ? odd : even;
      notes.push_back("only the reflection class " + to_string(ctx, yes) +
                      " is a witness for the elliptic-complement product; " +
                      to_string(ctx, no) + " is not (its quotient also carries the elliptic factor)");
    }
  }
  return notes;
}

ConsistencyDiagnostic consistency_check(const DecompositionReport& report) {
  const Context& ctx = report.vector.ctx;
  ConsistencyDiagnostic diag;
  long long total = 0;
  for (const IsotypicalFactor& f : report.factors)
    total += static_cast<long long>(f.dim) * f.multiplicity;
  long long expected = 2LL * ctx.n - 1;
  if (total != expected)
    throw ConsistencyError("dimension-sum", "sum dim*mult = " + std::to_string(total) +
                                                " but genus is " + std::to_string(expected));
  diag.checks.push_back("sum dim*mult = " + std::to_string(expected));
  for (const SubgroupClass& cls : subgroup_classes(ctx)) {
    int algebra = quotient_decomposition(report, cls.rep).genus;
    int coset = quotient_genus_coset(report.vector, cls.rep);
    if (algebra != coset)
      throw ConsistencyError("quotient-genus",
                             "genus of X/" + to_string(ctx, cls.rep) + ": coset " +
                                 std::to_string(coset) + " != algebra " + std::to_string(algebra));
    diag.checks.push_back("genus X/" + to_string(ctx, cls.rep) + " = " + std::to_string(coset) +
                          " (both routes)");
  }
  return diag;
}

}  // namespace dihedral
