#pragma once

#include <json.hpp>

#include "dihedral/models.hpp"
#include "dihedral/shimura.hpp"

namespace dihedral {

using ordered_json = nlohmann::ordered_json;

ordered_json classification_json(const Context& ctx, const OrbitPartition& partition);
ordered_json label_json(const GeneratingVector& v, ActionLabel label);
ordered_json decomposition_json(const DecompositionReport& report,
                                const std::vector<Identification>& ids,
                                const std::vector<std::string>& notes,
                                const ConsistencyDiagnostic& diag);
ordered_json quotient_json(const DecompositionReport& report, const Subgroup& h,
                           const QuotientDecomposition& q, int coset_genus);
ordered_json shimura_json(const ShimuraReport& report);
ordered_json model_json(const PlaneModel& model);

std::string classification_text(const Context& ctx, const OrbitPartition& partition);
std::string decomposition_text(const DecompositionReport& report,
                               const std::vector<Identification>& ids,
                               const std::vector<std::string>& notes);
std::string quotient_text(const DecompositionReport& report, const Subgroup& h,
                          const QuotientDecomposition& q, int coset_genus);
std::string shimura_text(const ShimuraReport& report);
std::string model_text(const PlaneModel& model);

// Markdown report for one n: fixed-subspace dimensions, isotypical factor
// dimensions per action, quotient decompositions, and endomorphism-structure
// dimensions (rows = subgroups/actions, columns = irreducibles/factors).
std::string markdown_report(const Context& ctx);

// Canonical representative vector for an action label (odd n: type1/type2,
// even n: unique); throws ValidationError for an impossible label/n pair.
GeneratingVector action_representative(const Context& ctx, ActionLabel label);

}  // namespace dihedral
