#include "dihedral/serialize.hpp"

#include <algorithm>
#include <sstream>

namespace dihedral {

namespace {

ordered_json target_json(const Context&, const std::map<RationalIrrepId, int>& target) {
  ordered_json out = ordered_json::object();
  for (const auto& [rep, e] : target) out[to_string(rep)] = e;
  return out;
}

ordered_json factors_json(const DecompositionReport& report) {
  ordered_json arr = ordered_json::array();
  for (const IsotypicalFactor& f : report.factors)
    arr.push_back({{"rep", to_string(f.rep)}, {"dim", f.dim}, {"multiplicity", f.multiplicity}});
  return arr;
}

}  // namespace

ordered_json classification_json(const Context& ctx, const OrbitPartition& partition) {
  ordered_json classes = ordered_json::array();
  for (const OrbitClass& cls : partition.classes)
    classes.push_back({{"representative", to_string(cls.representative)},
                       {"label", to_string(cls.label)},
                       {"orbit_size", cls.orbit_size}});
  return {{"n", ctx.n}, {"class_count", partition.classes.size()}, {"classes", classes}};
}

ordered_json label_json(const GeneratingVector& v, ActionLabel label) {
  return {{"n", v.ctx.n}, {"vector", to_string(v)}, {"label", to_string(label)}};
}

ordered_json decomposition_json(const DecompositionReport& report,
                                const std::vector<Identification>& ids,
                                const std::vector<std::string>& notes,
                                const ConsistencyDiagnostic& diag) {
  const Context& ctx = report.vector.ctx;
  ordered_json idents = ordered_json::array();
  for (const Identification& id : ids) {
    ordered_json jw = ordered_json::array();
    for (const Subgroup& h : id.jacobian_witnesses) jw.push_back(to_string(ctx, h));
    ordered_json pw = ordered_json::array();
    for (const auto& [h, k] : id.prym_witnesses)
      pw.push_back(ordered_json::array({to_string(ctx, h), to_string(ctx, k)}));
    idents.push_back({{"target", target_json(ctx, id.target)},
                      {"power", id.power},
                      {"dim", id.dim},
                      {"jacobian_witnesses", jw},
                      {"prym_witnesses", pw}});
  }
  return {{"n", ctx.n},
          {"vector", to_string(report.vector)},
          {"label", to_string(report.label)},
          {"genus", report.genus},
          {"factors", factors_json(report)},
          {"identifications", idents},
          {"notes", notes},
          {"checks", diag.checks}};
}

ordered_json quotient_json(const DecompositionReport& report, const Subgroup& h,
                           const QuotientDecomposition& q, int coset_genus) {
  const Context& ctx = report.vector.ctx;
  ordered_json exps = ordered_json::object();
  for (const auto& [rep, e] : q.exponents) exps[to_string(rep)] = e;
  return {{"n", ctx.n},
          {"vector", to_string(report.vector)},
          {"label", to_string(report.label)},
          {"subgroup", to_string(ctx, h)},
          {"genus_algebra", q.genus},
          {"genus_coset", coset_genus},
          {"exponents", exps}};
}

ordered_json shimura_json(const ShimuraReport& report) {
  return {{"n", report.n},
          {"label", to_string(report.label)},
          {"N", report.dimension},
          {"closed_form", report.closed_form},
          {"match", report.match}};
}

ordered_json model_json(const PlaneModel& model) {
  return {{"n", model.n},
          {"kind", model.kind == PlaneModel::Kind::Hyperelliptic ? "hyperelliptic"
                                                                 : "elliptic_n_gonal"},
          {"genus", model.genus},
          {"equation", model.equation},
          {"params", ordered_json::array({model.param1, model.param2})}};
}

std::string classification_text(const Context& ctx, const OrbitPartition& partition) {
  std::ostringstream out;
  out << partition.classes.size() << " topological class"
      << (partition.classes.size() == 1 ? "" : "es") << " for n = " << ctx.n << "\n";
  for (size_t i = 0; i < partition.classes.size(); ++i) {
    const OrbitClass& cls = partition.classes[i];
    out << "  class " << i + 1 << " [" << to_string(cls.label)
        << "]: representative (" << to_string(cls.representative) << "), orbit size "
        << cls.orbit_size << "\n";
  }
  return out.str();
}

std::string decomposition_text(const DecompositionReport& report,
                               const std::vector<Identification>& ids,
                               const std::vector<std::string>& notes) {
  const Context& ctx = report.vector.ctx;
  std::ostringstream out;
  out << "action [" << to_string(report.label) << "] on a genus-" << report.genus
      << " curve, vector (" << to_string(report.vector) << ")\n";
  out << "isogeny decomposition of JX:\n";
  for (const IsotypicalFactor& f : report.factors) {
    if (f.dim == 0) continue;
    out << "  " << to_string(f.rep) << ": dim " << f.dim;
    if (f.multiplicity > 1) out << ", exponent " << f.multiplicity;
    out << "\n";
  }
  if (!ids.empty()) out << "identifications:\n";
  for (const Identification& id : ids) {
    out << "  product";
    for (const auto& [rep, e] : id.target) {
      out << " " << to_string(rep);
      if (e > 1) out << "^" << e;
    }
    out << " (dim " << id.dim << ")";
    if (id.power > 0) out << " with exponent " << id.power << " in JX";
    out << "\n";
    for (const Subgroup& h : id.jacobian_witnesses)
      out << "    ~ J(X/" << to_string(ctx, h) << ")\n";
    for (const auto& [h, k] : id.prym_witnesses)
      out << "    ~ Prym(X/" << to_string(ctx, h) << " -> X/" << to_string(ctx, k) << ")\n";
  }
  for (const std::string& note : notes) out << "note: " << note << "\n";
  return out.str();
}

std::string quotient_text(const DecompositionReport& report, const Subgroup& h,
                          const QuotientDecomposition& q, int coset_genus) {
  const Context& ctx = report.vector.ctx;
  std::ostringstream out;
  out << "quotient X/" << to_string(ctx, h) << " for the " << to_string(report.label)
      << " action, n = " << ctx.n << "\n";
  out << "  genus (group algebra): " << q.genus << "\n";
  out << "  genus (coset Riemann-Hurwitz): " << coset_genus << "\n";
  out << "  J(X/H) ~";
  bool any = false;
  for (const IsotypicalFactor& f : report.factors) {
    auto it = q.exponents.find(f.rep);
    if (it == q.exponents.end() || it->second == 0 || f.dim == 0) continue;
    out << " " << to_string(f.rep);
    if (it->second > 1) out << "^" << it->second;
    any = true;
  }
  if (!any) out << " 0";
  out << "\n";
  return out.str();
}

std::string shimura_text(const ShimuraReport& report) {
  std::ostringstream out;
  out << "endomorphism-structure dimension for the " << to_string(report.label)
      << " action, n = " << report.n << "\n";
  out << "  N (Serre's formula) = " << report.dimension << "\n";
  out << "  closed form = " << report.closed_form
      << (report.match ? " (match)" : " (MISMATCH)") << "\n";
  return out.str();
}

std::string model_text(const PlaneModel& model) {
  std::ostringstream out;
  out << (model.kind == PlaneModel::Kind::Hyperelliptic ? "hyperelliptic"
                                                        : "elliptic n-gonal")
      << " model, n = " << model.n << ", genus " << model.genus << "\n";
  out << "  " << model.equation << "\n";
  out << "  parameters: " << model.param1 << ", " << model.param2 << "\n";
  return out.str();
}

GeneratingVector action_representative(const Context& ctx, ActionLabel label) {
  int n = ctx.n;
  bool odd = n % 2 == 1;
  if (label == ActionLabel::Type1 && !odd)
    throw ValidationError("invalid-label", "type1 actions exist only for odd n");
  if (label == ActionLabel::Type2 && !odd)
    throw ValidationError("invalid-label", "type2 actions exist only for odd n; use 'unique'");
  if (label == ActionLabel::Unique && odd)
    throw ValidationError("invalid-label",
                          "odd n has two classes; use 'type1' or 'type2'");
  std::array<Elem, 5> c;
  if (label == ActionLabel::Type1)
    c = {rotation(ctx, n), rotation(ctx, n), reflection(ctx, 1), reflection(ctx, 3),
         rotation(ctx, 2)};
  else
    c = {reflection(ctx, 0), reflection(ctx, 0), reflection(ctx, 1), reflection(ctx, 3),
         rotation(ctx, 2)};
  return validate_vector(ctx, c);
}

namespace {

void markdown_table_row(std::ostringstream& out, const std::vector<std::string>& cells) {
  out << "|";
  for (const std::string& c : cells) out << " " << c << " |";
  out << "\n";
}

void markdown_table_header(std::ostringstream& out, const std::vector<std::string>& cells) {
  markdown_table_row(out, cells);
  out << "|";
  for (size_t i = 0; i < cells.size(); ++i) out << "---|";
  out << "\n";
}

std::string char_value_text(const Context&, const CharValue& v) {
  if (!v.two_cos) return std::to_string(v.value);
  return "w^" + std::to_string(v.t) + "+w^-" + std::to_string(v.t);
}

}  // namespace

std::string markdown_report(const Context& ctx) {
  int n = ctx.n;
  std::ostringstream out;
  out << "# Dihedral group of order " << ctx.order() << " acting with signature (0; 2, 2, 2, 2, "
      << n << ")\n\n";
  out << "Curve genus " << 2 * n - 1 << ", stratum dimension "
      << strata_dimension(action_signature(ctx)) << ".\n\n";

  std::vector<ActionLabel> labels =
      n % 2 == 1 ? std::vector<ActionLabel>{ActionLabel::Type1, ActionLabel::Type2}
                 : std::vector<ActionLabel>{ActionLabel::Unique};

  out << "## Actions\n\n";
  markdown_table_header(out, {"label", "representative"});
  for (ActionLabel label : labels)
    markdown_table_row(out,
                       {to_string(label), "(" + to_string(action_representative(ctx, label)) + ")"});
  out << "\n";

  std::vector<IrrepId> irreps = complex_irreps(ctx);
  std::vector<SubgroupClass> classes = subgroup_classes(ctx);

  out << "## Character table\n\n";
  {
    std::vector<std::string> header = {"irrep"};
    std::vector<ConjClass> ccs = conjugacy_classes(ctx);
    for (const ConjClass& c : ccs) header.push_back(to_string(c));
    markdown_table_header(out, header);
    for (const IrrepId& id : irreps) {
      std::vector<std::string> row = {to_string(id)};
      for (const ConjClass& c : ccs)
        row.push_back(char_value_text(ctx, char_value(ctx, id, class_representative(ctx, c))));
      markdown_table_row(out, row);
    }
  }
  out << "\n";

  out << "## Fixed subspace dimensions\n\n";
  {
    std::vector<std::string> header = {"subgroup"};
    for (const IrrepId& id : irreps) header.push_back(to_string(id));
    markdown_table_header(out, header);
    for (const SubgroupClass& cls : classes) {
      std::vector<std::string> row = {to_string(ctx, cls.rep)};
      for (const IrrepId& id : irreps) row.push_back(std::to_string(dim_fix(ctx, id, cls.rep)));
      markdown_table_row(out, row);
    }
  }
  out << "\n";

  std::vector<DecompositionReport> reports;
  for (ActionLabel label : labels)
    reports.push_back(factor_dimensions(action_representative(ctx, label)));

  out << "## Isotypical factor dimensions\n\n";
  {
    std::vector<std::string> header = {"action"};
    for (const RationalIrrepInfo& info : rational_irreps(ctx))
      header.push_back(to_string(info.id) + " (x" + std::to_string(info.multiplicity) + ")");
    markdown_table_header(out, header);
    for (const DecompositionReport& r : reports) {
      std::vector<std::string> row = {to_string(r.label)};
      for (const IsotypicalFactor& f : r.factors) row.push_back(std::to_string(f.dim));
      markdown_table_row(out, row);
    }
  }
  out << "\n";

  for (const DecompositionReport& r : reports) {
    out << "## Quotient decompositions, " << to_string(r.label) << " action\n\n";
    std::vector<std::string> header = {"subgroup", "genus"};
    for (const IsotypicalFactor& f : r.factors)
      if (f.dim > 0) header.push_back(to_string(f.rep));
    markdown_table_header(out, header);
    for (const SubgroupClass& cls : classes) {
      QuotientDecomposition q = quotient_decomposition(r, cls.rep);
      std::vector<std::string> row = {to_string(ctx, cls.rep), std::to_string(q.genus)};
      for (const IsotypicalFactor& f : r.factors)
        if (f.dim > 0) row.push_back(std::to_string(q.exponents.at(f.rep)));
      markdown_table_row(out, row);
    }
    out << "\n";
  }

  out << "## Endomorphism-structure dimensions\n\n";
  markdown_table_header(out, {"action", "N", "closed form"});
  for (const DecompositionReport& r : reports) {
    ShimuraReport s = shimura_report(r);
    markdown_table_row(out, {to_string(s.label), std::to_string(s.dimension),
                             std::to_string(s.closed_form)});
  }
  return out.str();
}

}  // namespace dihedral
