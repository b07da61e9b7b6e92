#include <CLI11.hpp>
#include <iostream>

#include "dihedral/serialize.hpp"

using namespace dihedral;

namespace {

struct CommonOpts {
  int n = 0;
  bool json = false;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
  cmd->add_option("--n", opts.n, "defines the group D_{2n} of order 4n")
      ->required()
      ->check(CLI::Range(2, 1000000));
  cmd->add_flag("--json", opts.json, "emit JSON instead of text");
}

void emit(const ordered_json& j, bool json, const std::string& text) {
  if (json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

DecompositionReport resolve_report(const Context& ctx, const std::string& vector_text,
                                   const std::string& action_text) {
  if (!vector_text.empty()) return factor_dimensions(parse_vector(ctx, vector_text));
  if (action_text.empty())
    throw ValidationError("usage", "one of --vector or --action is required");
  return factor_dimensions(action_representative(ctx, parse_label(action_text)));
}

int run(int argc, char** argv) {
  CLI::App app{"decomposition of Jacobians of genus-(2n-1) curves with a dihedral action "
               "of order 4n and signature (0; 2, 2, 2, 2, n)"};
  app.require_subcommand(1);

  CommonOpts classify_opts;
  std::string classify_vector;
  CLI::App* classify_cmd =
      app.add_subcommand("classify", "topological classes of actions, or the label of a vector");
  add_common(classify_cmd, classify_opts);
  classify_cmd->add_option("--vector", classify_vector,
                           "generating vector 'c1,c2,c3,c4,c5' (elements like a^3, s, a^2*s)");

  CommonOpts decompose_opts;
  std::string decompose_vector, decompose_action;
  CLI::App* decompose_cmd =
      app.add_subcommand("decompose", "isogeny decomposition of JX with identifications");
  add_common(decompose_cmd, decompose_opts);
  decompose_cmd->add_option("--vector", decompose_vector, "generating vector");
  decompose_cmd->add_option("--action", decompose_action, "type1 | type2 | unique");

  CommonOpts quotient_opts;
  std::string quotient_vector, quotient_action, quotient_subgroup;
  CLI::App* quotient_cmd =
      app.add_subcommand("quotient", "genus and decomposition of a quotient X/H");
  add_common(quotient_cmd, quotient_opts);
  quotient_cmd->add_option("--vector", quotient_vector, "generating vector");
  quotient_cmd->add_option("--action", quotient_action, "type1 | type2 | unique");
  quotient_cmd->add_option("--subgroup", quotient_subgroup, "subgroup like <a^2> or <a^3, s>")
      ->required();

  CommonOpts shimura_opts;
  std::string shimura_vector, shimura_action;
  CLI::App* shimura_cmd =
      app.add_subcommand("shimura", "endomorphism-structure dimension N (Serre's formula)");
  add_common(shimura_cmd, shimura_opts);
  shimura_cmd->add_option("--vector", shimura_vector, "generating vector");
  shimura_cmd->add_option("--action", shimura_action, "type1 | type2 | unique");

  CommonOpts model_opts;
  std::string model_action;
  std::vector<std::string> model_params;
  CLI::App* model_cmd = app.add_subcommand("model", "affine plane model of the curve");
  add_common(model_cmd, model_opts);
  model_cmd->add_option("--action", model_action, "type1 | type2 | unique")->required();
  model_cmd->add_option("--params", model_params, "two parameters (rational or decimal)")
      ->expected(2)
      ->required();

  CommonOpts report_opts;
  CLI::App* report_cmd =
      app.add_subcommand("report", "markdown report with all tables for this n");
  add_common(report_cmd, report_opts);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  try {
    if (*classify_cmd) {
      Context ctx(classify_opts.n);
      if (!classify_vector.empty()) {
        GeneratingVector v = parse_vector(ctx, classify_vector);
        ActionLabel label = classify(v);
        emit(label_json(v, label), classify_opts.json,
             "(" + to_string(v) + ") is a " + to_string(label) + " action\n");
      } else {
        if (ctx.n > 30)
          std::cerr << "warning: enumerating all generating vectors for n = " << ctx.n
                    << " may take a long time\n";
        OrbitPartition partition = orbit_classes(ctx);
        emit(classification_json(ctx, partition), classify_opts.json,
             classification_text(ctx, partition));
      }
    } else if (*decompose_cmd) {
      Context ctx(decompose_opts.n);
      DecompositionReport report = resolve_report(ctx, decompose_vector, decompose_action);
      ConsistencyDiagnostic diag = consistency_check(report);
      std::vector<Identification> ids = identify_factors(report);
      std::vector<std::string> notes = identification_notes(report, ids);
      emit(decomposition_json(report, ids, notes, diag), decompose_opts.json,
           decomposition_text(report, ids, notes));
    } else if (*quotient_cmd) {
      Context ctx(quotient_opts.n);
      DecompositionReport report = resolve_report(ctx, quotient_vector, quotient_action);
      Subgroup h = parse_subgroup(ctx, quotient_subgroup);
      QuotientDecomposition q = quotient_decomposition(report, h);
      int coset = quotient_genus_coset(report.vector, h);
      emit(quotient_json(report, h, q, coset), quotient_opts.json,
           quotient_text(report, h, q, coset));
    } else if (*shimura_cmd) {
      Context ctx(shimura_opts.n);
      DecompositionReport report = resolve_report(ctx, shimura_vector, shimura_action);
      ShimuraReport s = shimura_report(report);
      emit(shimura_json(s), shimura_opts.json, shimura_text(s));
    } else if (*model_cmd) {
      Context ctx(model_opts.n);
      ActionLabel label = parse_label(model_action);
      ModelParam p1 = parse_param(model_params[0]);
      ModelParam p2 = parse_param(model_params[1]);
      PlaneModel model = affine_model(label, ctx.n, p1, p2);
      if (model.kind == PlaneModel::Kind::Hyperelliptic)
        hyperelliptic_branch_check(ctx.n, p1, p2);
      emit(model_json(model), model_opts.json, model_text(model));
    } else if (*report_cmd) {
      Context ctx(report_opts.n);
      std::cout << markdown_report(ctx);
    }
  } catch (const ConsistencyError& e) {
    std::cerr << "consistency failure [" << e.code() << "]: " << e.what() << "\n";
    return 2;
  } catch (const ValidationError& e) {
    std::cerr << "error [" << e.code() << "]: " << e.what() << "\n";
    return 1;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
