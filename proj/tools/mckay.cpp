// Command-line front end: group input, invariant computations, and
// resolution-criteria verdicts, with text or JSON output.
//
// Exit codes: 0 success, 2 malformed input or violated precondition,
// 3 internal consistency failure.

#include <cstddef>
#include <exception>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "mckay/io.hpp"
#include "mckay/mckay.hpp"

namespace {

using mckay::json;

struct GlobalOptions {
  std::string format = "text";
  std::size_t cap = 10000;
  bool cap_explicit = false;
};

struct LoadedGroup {
  mckay::MatrixGroup group;
  json summary;
};

LoadedGroup load_group(const std::string& spec, const GlobalOptions& global) {
  if (spec.rfind("catalog:", 0) == 0) {
    const std::string name = spec.substr(8);
    mckay::MatrixGroup g = mckay::catalog_group(name, global.cap);
    json summary{{"group", spec},
                 {"order", g.order()},
                 {"size", g.dim()},
                 {"cyclotomic_order", g.cyclotomic_order()}};
    return {std::move(g), std::move(summary)};
  }
  std::ifstream in(spec);
  if (!in) throw mckay::precondition_error("cannot open group file '" + spec + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::parse_error& e) {
    throw mckay::precondition_error("malformed JSON in '" + spec + "': " + e.what());
  }
  const std::optional<std::size_t> cap_override =
      global.cap_explicit ? std::optional<std::size_t>(global.cap) : std::nullopt;
  mckay::MatrixGroup g = mckay::parse_group_spec(doc, global.cap, cap_override);
  json summary{{"group", "file:" + spec},
               {"order", g.order()},
               {"size", g.dim()},
               {"cyclotomic_order", g.cyclotomic_order()}};
  return {std::move(g), std::move(summary)};
}

void emit(const GlobalOptions& global, const json& doc, const std::string& text) {
  if (global.format == "json")
    std::cout << doc.dump(2) << "\n";
  else
    std::cout << text;
}

std::string render_input_summary(const json& summary) {
  std::string out = "group: " + summary["group"].get<std::string>();
  out += " (order " + std::to_string(summary["order"].get<std::size_t>()) + ", size " +
         std::to_string(summary["size"].get<std::size_t>()) + ", over Q(z" +
         std::to_string(summary["cyclotomic_order"].get<long>()) + "))\n";
  return out;
}

int run_group_info(const GlobalOptions& global, const std::string& group_spec) {
  LoadedGroup loaded = load_group(group_spec, global);
  const mckay::MatrixGroup& g = loaded.group;
  std::map<long, std::size_t> order_histogram;
  for (const auto& m : g.elements()) ++order_histogram[mckay::element_order(m, g.order())];
  const std::size_t classes = g.conjugacy_classes().classes.size();
  const std::size_t projective = g.projective_classes().classes.size();
  const std::size_t scalars = g.scalar_indices().size();

  json histogram = json::array();
  for (const auto& [order, count] : order_histogram)
    histogram.push_back({{"element_order", order}, {"count", count}});
  json doc{{"command", "group info"},
           {"input_summary", loaded.summary},
           {"result",
            {{"order", g.order()},
             {"element_order_histogram", histogram},
             {"conjugacy_classes", classes},
             {"projective_classes", projective},
             {"scalar_subgroup_order", scalars}}}};

  std::string text = render_input_summary(loaded.summary);
  text += "order: " + std::to_string(g.order()) + "\n";
  text += "element order histogram:";
  for (const auto& [order, count] : order_histogram)
    text += " " + std::to_string(order) + ":" + std::to_string(count);
  text += "\nconjugacy classes: " + std::to_string(classes) + "\n";
  text += "projective classes: " + std::to_string(projective) + "\n";
  text += "scalar subgroup order: " + std::to_string(scalars) + "\n";
  emit(global, doc, text);
  return 0;
}

int run_compute_stringy(const GlobalOptions& global, const std::string& group_spec, bool lift) {
  LoadedGroup loaded = load_group(group_spec, global);
  mckay::MatrixGroup g = loaded.group;
  if (lift) {
    g = mckay::cotangent_lift(g);
    loaded.summary["cotangent_lift"] = true;
  }
  const mckay::EPoly e = mckay::stringy_e_linear_symplectic(g);
  const mckay::Integer euler = mckay::euler_number(e);
  json doc{{"command", "compute stringy"},
           {"input_summary", loaded.summary},
           {"result", {{"polynomial", mckay::epoly_to_json(e)}}},
           {"euler", mckay::to_string(euler)}};
  std::string text = render_input_summary(loaded.summary);
  text += "E = " + e.to_string() + "\n";
  text += "Euler = " + mckay::to_string(euler) + "\n";
  emit(global, doc, text);
  return 0;
}

int run_compute_tpn(const GlobalOptions& global, const std::string& group_spec) {
  LoadedGroup loaded = load_group(group_spec, global);
  const mckay::MatrixGroup& g = loaded.group;
  const long n = static_cast<long>(g.dim()) - 1;
  const auto table = mckay::tpn_class_table(g);
  const mckay::EPoly e = mckay::hodge_tpn(g);
  const mckay::Integer euler_direct = mckay::euler_tpn(g);
  if (euler_direct != mckay::euler_number(e))
    throw mckay::internal_error("class-count Euler number disagrees with the polynomial value");

  json classes = json::array();
  for (const auto& row : table)
    classes.push_back({{"representative", row.representative},
                       {"size", row.block_size},
                       {"k", row.k}});
  json doc{{"command", "compute tpn"},
           {"input_summary", loaded.summary},
           {"result", {{"polynomial", mckay::epoly_to_json(e)}}},
           {"classes", classes},
           {"n", n},
           {"euler", mckay::to_string(euler_direct)}};

  std::string text = render_input_summary(loaded.summary);
  text += "n = " + std::to_string(n) + "\n";
  text += "projective classes (representative: eigenvalue multiplicities):\n";
  for (std::size_t c = 0; c < table.size(); ++c) {
    text += "  class " + std::to_string(c) + ": representative " +
            std::to_string(table[c].representative) + ", size " + std::to_string(table[c].block_size) +
            ", k = [";
    for (std::size_t i = 0; i < table[c].k.size(); ++i)
      text += (i ? ", " : "") + std::to_string(table[c].k[i]);
    text += "]\n";
  }
  text += "E = " + e.to_string() + "\n";
  text += "Euler = " + mckay::to_string(euler_direct) + "\n";
  emit(global, doc, text);
  return 0;
}

int run_check_sympres(const GlobalOptions& global, const std::string& group_spec, bool lift) {
  LoadedGroup loaded = load_group(group_spec, global);
  mckay::MatrixGroup g = loaded.group;
  if (lift) {
    g = mckay::cotangent_lift(g);
    loaded.summary["cotangent_lift"] = true;
  }
  const mckay::Codim2Verdict codim2 = mckay::passes_pure_codim2(g);
  const mckay::GenerationVerdict reflections = mckay::generated_by_symplectic_reflections(g);

  json verdict{{"pure_codim2", {{"pass", codim2.pass}}},
               {"reflection_generated",
                {{"pass", reflections.generated},
                 {"reflections", reflections.reflections.size()},
                 {"subgroup_order", reflections.subgroup_order}}}};
  std::string text = render_input_summary(loaded.summary);
  if (codim2.pass) {
    text += "pure-codim-2: PASS\n";
  } else {
    const mckay::Matrix& witness = g.element(*codim2.witness);
    verdict["pure_codim2"]["witness"] = {{"element", *codim2.witness},
                                         {"matrix", witness.to_string()},
                                         {"fixed_dim", codim2.witness_fixed_dim},
                                         {"codim", codim2.witness_codim}};
    text += "pure-codim-2: FAIL: witness element " + std::to_string(*codim2.witness) + " = " +
            witness.to_string() + ", fixed codim " + std::to_string(codim2.witness_codim) + "\n";
  }
  text += "generated by symplectic reflections: ";
  text += reflections.generated ? "PASS" : "FAIL";
  text += " (" + std::to_string(reflections.reflections.size()) + " reflections generate order " +
          std::to_string(reflections.subgroup_order) + " of " + std::to_string(g.order()) + ")\n";
  text += std::string("necessary conditions for a symplectic resolution: ") +
          ((codim2.pass && reflections.generated) ? "satisfied" : "violated (no resolution exists)") +
          "\n";

  json doc{{"command", "check sympres"},
           {"input_summary", loaded.summary},
           {"result", {{"verdict", verdict}}}};
  emit(global, doc, text);
  return 0;
}

int run_check_smooth(const GlobalOptions& global, const std::string& group_spec) {
  LoadedGroup loaded = load_group(group_spec, global);
  const mckay::GenerationVerdict verdict = mckay::generated_by_pseudo_reflections(loaded.group);
  json doc{{"command", "check smooth-quotient"},
           {"input_summary", loaded.summary},
           {"result",
            {{"verdict",
              {{"pass", verdict.generated},
               {"pseudo_reflections", verdict.reflections.size()},
               {"subgroup_order", verdict.subgroup_order}}}}}};
  std::string text = render_input_summary(loaded.summary);
  text += "generated by pseudo-reflections: ";
  text += verdict.generated ? "PASS" : "FAIL";
  text += " (" + std::to_string(verdict.reflections.size()) + " pseudo-reflections generate order " +
          std::to_string(verdict.subgroup_order) + " of " +
          std::to_string(loaded.group.order()) + ")\n";
  text += std::string("quotient C^n/G is ") + (verdict.generated ? "smooth" : "singular") + "\n";
  emit(global, doc, text);
  return 0;
}

int run_compute_hilb(const GlobalOptions& global, long genus, long terms, const std::string& method) {
  if (method != "product" && method != "strata" && method != "both")
    throw mckay::precondition_error("--method must be product, strata, or both");
  json summary{{"genus", genus}, {"terms", terms}, {"method", method}};

  std::vector<mckay::TPoly> rows;
  if (method == "both") {
    const mckay::SeriesMatchVerdict verdict = mckay::check_goettsche_vs_strata(genus, terms);
    if (!verdict.pass)
      throw mckay::internal_error(
          "product and strata series disagree at q^" + std::to_string(verdict.first_mismatch) +
          ": product " + verdict.product_side.to_string() + " vs strata " +
          verdict.strata_side.to_string());
  }
  if (method == "strata") {
    for (long n = 0; n <= terms; ++n) rows.push_back(mckay::hilb_poincare_strata(n, genus));
  } else {
    const mckay::QSeries series = mckay::goettsche_series(genus, terms);
    for (long n = 0; n <= terms; ++n) rows.push_back(series.coeff(static_cast<std::size_t>(n)));
  }

  json table = json::array();
  for (long n = 0; n <= terms; ++n)
    table.push_back({{"n", n},
                     {"coefficients", mckay::tpoly_to_json(rows[static_cast<std::size_t>(n)])},
                     {"poincare", rows[static_cast<std::size_t>(n)].to_string()}});
  json doc{{"command", "compute hilb"},
           {"input_summary", summary},
           {"result", {{"series", table}}}};
  if (method == "both") doc["result"]["cross_check"] = "pass";

  std::string text = "genus " + std::to_string(genus) + ", terms through q^" + std::to_string(terms) +
                     ", method " + method + "\n";
  for (long n = 0; n <= terms; ++n)
    text += "q^" + std::to_string(n) + ": " + rows[static_cast<std::size_t>(n)].to_string() + "\n";
  if (method == "both") text += "cross-check (product vs strata): PASS\n";
  emit(global, doc, text);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  GlobalOptions global;
  std::string group_spec;
  bool lift_stringy = false;
  bool lift_sympres = false;
  long genus = 0;
  long terms = 5;
  std::string method = "product";

  CLI::App app{"Exact McKay-correspondence invariants of finite matrix groups"};
  app.require_subcommand(1);
  app.add_option("--format", global.format, "Output format: text or json")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  auto* cap_option =
      app.add_option("--cap", global.cap, "Group closure cap (elements)")->capture_default_str();

  const std::string group_help = "Group input: catalog:<name> or a path to a group-spec JSON file";

  auto* group_cmd = app.add_subcommand("group", "Group structure queries");
  group_cmd->require_subcommand(1);
  auto* info_cmd = group_cmd->add_subcommand("info", "Order, classes, and scalar subgroup");
  info_cmd->add_option("--group", group_spec, group_help)->required();

  auto* compute_cmd = app.add_subcommand("compute", "Invariant computations");
  compute_cmd->require_subcommand(1);
  auto* stringy_cmd =
      compute_cmd->add_subcommand("stringy", "Stringy E-function of C^2n/G for symplectic G");
  stringy_cmd->add_option("--group", group_spec, group_help)->required();
  stringy_cmd->add_flag("--cotangent", lift_stringy,
                        "Apply the cotangent lift GL(n) -> Sp(2n) first");
  auto* tpn_cmd = compute_cmd->add_subcommand(
      "tpn", "Hodge polynomial and Euler number for T*P^n/G, G in SL(n+1)");
  tpn_cmd->add_option("--group", group_spec, group_help)->required();
  auto* hilb_cmd = compute_cmd->add_subcommand(
      "hilb", "Poincare polynomials of Hilbert schemes of T* of a curve");
  hilb_cmd->add_option("--genus", genus, "Genus of the base curve")->required();
  hilb_cmd->add_option("--terms", terms, "Truncation order in q")->required();
  hilb_cmd->add_option("--method", method, "product, strata, or both")->capture_default_str();

  auto* check_cmd = app.add_subcommand("check", "Necessary-condition verdicts");
  check_cmd->require_subcommand(1);
  auto* sympres_cmd = check_cmd->add_subcommand(
      "sympres", "Symplectic-resolution necessary conditions for C^2n/G");
  sympres_cmd->add_option("--group", group_spec, group_help)->required();
  sympres_cmd->add_flag("--cotangent", lift_sympres,
                        "Apply the cotangent lift GL(n) -> Sp(2n) first");
  auto* smooth_cmd =
      check_cmd->add_subcommand("smooth-quotient", "Chevalley-Shephard-Todd smoothness test");
  smooth_cmd->add_option("--group", group_spec, group_help)->required();

  for (auto* sub : {group_cmd, compute_cmd, check_cmd}) sub->fallthrough();
  for (auto* sub : {info_cmd, stringy_cmd, tpn_cmd, hilb_cmd, sympres_cmd, smooth_cmd})
    sub->fallthrough();

  try {
    app.parse(argc, argv);
    global.cap_explicit = cap_option->count() > 0;
    if (info_cmd->parsed()) return run_group_info(global, group_spec);
    if (stringy_cmd->parsed()) return run_compute_stringy(global, group_spec, lift_stringy);
    if (tpn_cmd->parsed()) return run_compute_tpn(global, group_spec);
    if (hilb_cmd->parsed()) return run_compute_hilb(global, genus, terms, method);
    if (sympres_cmd->parsed()) return run_check_sympres(global, group_spec, lift_sympres);
    if (smooth_cmd->parsed()) return run_check_smooth(global, group_spec);
    return 2;
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  } catch (const mckay::internal_error& e) {
    std::cerr << "internal consistency failure: " << e.what() << "\n";
    return 3;
  } catch (const mckay::precondition_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
