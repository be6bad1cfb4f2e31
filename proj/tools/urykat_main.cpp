#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include <CLI11.hpp>

#include "urykat/fsin.hpp"
#include "urykat/io.hpp"
#include "urykat/lemma_one.hpp"
#include "urykat/suite.hpp"

namespace {

using urykat::Json;

struct Emitter {
  std::string command;
  Json config = Json::object();
  Json inputs = Json::object();
  std::string output_path;

  void note_input(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream bytes;
    bytes << in.rdbuf();
    inputs[path] = urykat::fnv1a_hex(bytes.str());
  }

  int emit(bool pass, Json result) {
    Json report;
    report["command"] = command;
    report["config"] = config;
    report["inputs"] = inputs;
    report["pass"] = pass;
    report["result"] = std::move(result);
    const std::string text = report.dump(2);
    std::cout << text << "\n";
    if (!output_path.empty()) {
      std::ofstream out(output_path);
      out << text << "\n";
    }
    std::cerr << command << ": " << (pass ? "pass" : "FAIL") << "\n";
    return pass ? 0 : 1;
  }

  int emit_error(const urykat::Error& e) {
    Json report;
    report["command"] = command;
    report["config"] = config;
    report["inputs"] = inputs;
    report["pass"] = false;
    report["error"] = Json{{"code", e.code_name()}, {"message", e.what()}};
    std::cout << report.dump(2) << "\n";
    std::cerr << command << ": error [" << e.code_name() << "] " << e.what() << "\n";
    return (e.code() == urykat::Errc::usage_error || e.code() == urykat::Errc::parse_error) ? 2
                                                                                            : 1;
  }
};

std::size_t env_budget(const char* name, std::size_t fallback) {
  const char* value = std::getenv(name);
  if (!value) return fallback;
  char* end = nullptr;
  unsigned long long parsed = std::strtoull(value, &end, 10);
  if (!end || *end != '\0' || parsed == 0) return fallback;
  return static_cast<std::size_t>(parsed);
}

std::vector<std::string> split_list(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string current;
  for (char c : text) {
    if (c == sep) {
      if (!current.empty()) out.push_back(current);
      current.clear();
    } else {
      current += c;
    }
  }
  if (!current.empty()) out.push_back(current);
  return out;
}

urykat::Approximant load_approximant_or_space(const std::string& path, const urykat::Grid& fallback_grid) {
  Json j = urykat::read_json_file(path);
  if (j.contains("grid")) return urykat::approximant_from_json(j);
  urykat::Approximant a;
  a.space = urykat::space_from_json(j);
  a.grid = fallback_grid;
  return a;
}

urykat::GroupPtr group_for(const urykat::Approximant& approximant, const std::string& subgroup_path,
                           std::uint64_t search_budget, Emitter& emitter) {
  if (subgroup_path.empty()) {
    return urykat::IsometryGroup::full(approximant.space, search_budget);
  }
  emitter.note_input(subgroup_path);
  return urykat::subgroup_from_json(approximant.space, urykat::read_json_file(subgroup_path));
}

Json nbhd_to_json(const urykat::NbhdSet& set) {
  Json anchors = Json::array();
  for (const auto& [p, eps] : set.anchors) {
    anchors.push_back(Json{{"point", set.group->space()->point_id(p)},
                           {"eps", urykat::format_rational(eps)}});
  }
  return Json{{"anchors", anchors},
              {"members", urykat::element_set_to_json(*set.group, set.members)},
              {"size", set.members.size()}};
}

}  // namespace

int main(int argc, char** argv) {
  using namespace urykat;

  CLI::App app{"exact Katetov-function toolkit: approximants, isometry groups, "
               "neighbourhood refinement and functional-balance checks"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string grid_text = "2:2";
  int k = 2;
  int rounds = 2;
  std::size_t size_budget = env_budget("URYKAT_SIZE_BUDGET", 4096);
  std::uint64_t search_budget = env_budget("URYKAT_SEARCH_BUDGET", 50'000'000);
  int jobs = 1;
  std::string output_path;
  app.add_option("--grid", grid_text, "grid as q:B (values i/q up to B)")->capture_default_str();
  app.add_option("--k", k, "control-set bound")->capture_default_str();
  app.add_option("--rounds", rounds, "extension rounds")->capture_default_str();
  app.add_option("--budget", size_budget, "point-count budget")->capture_default_str();
  app.add_option("--search-budget", search_budget, "search node budget")->capture_default_str();
  app.add_option("--jobs", jobs, "parallelism degree (1 = serial)")->capture_default_str();
  app.add_option("-o,--output", output_path, "also write the JSON report to a file");

  // validate ------------------------------------------------------------
  auto* cmd_validate = app.add_subcommand("validate", "check the metric axioms of a space file");
  std::string validate_path;
  cmd_validate->add_option("file", validate_path)->required();

  // katetov -------------------------------------------------------------
  auto* cmd_katetov = app.add_subcommand("katetov", "Katetov function operations");
  cmd_katetov->require_subcommand(1);
  auto* kat_check = cmd_katetov->add_subcommand("check", "verify the two defining inequalities");
  std::string kat_fn_path;
  kat_check->add_option("file", kat_fn_path)->required();
  auto* kat_extend = cmd_katetov->add_subcommand("extend", "extension from a controller subset");
  std::string kat_space_path, kat_subset_text, kat_values_text;
  kat_extend->add_option("--space", kat_space_path)->required();
  kat_extend->add_option("--subset", kat_subset_text, "comma-separated point ids")->required();
  kat_extend->add_option("--values", kat_values_text, "comma-separated rationals")->required();
  auto* kat_supdist = cmd_katetov->add_subcommand("supdist", "sup distance of two functions");
  std::string kat_f_path, kat_g_path;
  kat_supdist->add_option("f", kat_f_path)->required();
  kat_supdist->add_option("g", kat_g_path)->required();

  // approximant ----------------------------------------------------------
  auto* cmd_approx = app.add_subcommand("approximant", "grow or re-check approximants");
  cmd_approx->require_subcommand(1);
  auto* approx_build = cmd_approx->add_subcommand("build", "iterate the extension rounds");
  std::string approx_seed_path;
  approx_build->add_option("--seed", approx_seed_path)->required();
  auto* approx_check = cmd_approx->add_subcommand("check", "re-verify the k-point property");
  std::string approx_file_path;
  approx_check->add_option("file", approx_file_path)->required();

  // iso -------------------------------------------------------------------
  auto* cmd_iso = app.add_subcommand("iso", "isometry group operations");
  cmd_iso->require_subcommand(1);
  auto* iso_group = cmd_iso->add_subcommand("group", "full isometry group of a space");
  std::string iso_space_path;
  iso_group->add_option("file", iso_space_path)->required();
  auto* iso_extend = cmd_iso->add_subcommand("extend", "back-and-forth partial extension");
  std::string iso_ext_space, iso_pairs_text;
  int iso_target = 0;
  iso_extend->add_option("file", iso_ext_space)->required();
  iso_extend->add_option("--pairs", iso_pairs_text, "a:b,c:d source:target pairs")->required();
  iso_extend->add_option("--target", iso_target, "target matched size (default: whole space)");
  auto* iso_nbhd = cmd_iso->add_subcommand("nbhd", "basic neighbourhood within the group");
  std::string iso_nbhd_space;
  std::vector<std::string> iso_anchor_texts;
  iso_nbhd->add_option("file", iso_nbhd_space)->required();
  iso_nbhd->add_option("--anchor", iso_anchor_texts, "point:eps, repeatable")->required();

  // lemma1 ------------------------------------------------------------------
  auto* cmd_lemma1 = app.add_subcommand("lemma1", "single-anchor refinement containment");
  std::string l1_approx_path, l1_targets_text, l1_eps_text, l1_subgroup_path;
  cmd_lemma1->add_option("--approximant", l1_approx_path)->required();
  cmd_lemma1->add_option("--targets", l1_targets_text, "comma-separated point ids")->required();
  cmd_lemma1->add_option("--eps", l1_eps_text)->required();
  cmd_lemma1->add_option("--subgroup", l1_subgroup_path, "JSON list of cycle strings");

  // fsin ----------------------------------------------------------------------
  auto* cmd_fsin = app.add_subcommand("fsin", "functional-balance probes");
  cmd_fsin->require_subcommand(1);
  auto* fsin_discrete = cmd_fsin->add_subcommand("discrete", "left uniform discreteness of A");
  std::string fd_space, fd_elements, fd_subgroup;
  std::vector<std::string> fd_anchors;
  fsin_discrete->add_option("--space", fd_space)->required();
  fsin_discrete->add_option("--elements", fd_elements, "comma-separated cycle strings")->required();
  fsin_discrete->add_option("--anchor", fd_anchors, "point:eps for V, repeatable")->required();
  fsin_discrete->add_option("--subgroup", fd_subgroup);
  auto* fsin_neutral = cmd_fsin->add_subcommand("neutrality", "find U with UA inside AV");
  std::string fn_space, fn_elements, fn_subgroup;
  std::vector<std::string> fn_anchors;
  fsin_neutral->add_option("--space", fn_space)->required();
  fsin_neutral->add_option("--elements", fn_elements)->required();
  fsin_neutral->add_option("--anchor", fn_anchors, "point:eps for V, repeatable")->required();
  fsin_neutral->add_option("--subgroup", fn_subgroup);
  auto* fsin_t4 = cmd_fsin->add_subcommand("theorem4", "construct and verify the balance instance");
  std::string t4_approx, t4_elements, t4_x, t4_eps, t4_subgroup;
  fsin_t4->add_option("--approximant", t4_approx)->required();
  fsin_t4->add_option("--elements", t4_elements, "A as comma-separated cycle strings")->required();
  fsin_t4->add_option("--x", t4_x)->required();
  fsin_t4->add_option("--eps", t4_eps)->required();
  fsin_t4->add_option("--subgroup", t4_subgroup);
  auto* fsin_disp = cmd_fsin->add_subcommand("displacement", "shifted-profile bound");
  std::string dp_space, dp_eps, dp_elements, dp_subgroup;
  int dp_samples = 0;
  fsin_disp->add_option("--space", dp_space)->required();
  fsin_disp->add_option("--eps", dp_eps)->required();
  fsin_disp->add_option("--elements", dp_elements, "V; defaults to every element within eps");
  fsin_disp->add_option("--samples", dp_samples, "0 = exhaustive grid enumeration");
  fsin_disp->add_option("--subgroup", dp_subgroup);

  // suite ------------------------------------------------------------------
  auto* cmd_suite = app.add_subcommand("suite", "run the full verification battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  Emitter emitter;
  emitter.output_path = output_path;
  emitter.config = Json{{"grid", grid_text},
                        {"k", k},
                        {"rounds", rounds},
                        {"budget", static_cast<long>(size_budget)},
                        {"search_budget", search_budget},
                        {"jobs", jobs}};

  try {
    const Grid cli_grid = parse_grid(grid_text);

    if (cmd_validate->parsed()) {
      emitter.command = "validate";
      emitter.note_input(validate_path);
      Json j = read_json_file(validate_path);
      std::vector<std::string> points = j.at("points").get<std::vector<std::string>>();
      std::vector<std::vector<Rational>> dist;
      for (const auto& row : j.at("dist")) {
        dist.push_back(parse_rationals(row.get<std::vector<std::string>>()));
      }
      bool pseudo = j.value("pseudometric", false);
      auto violation = MetricSpace::check(points, dist, pseudo);
      if (!violation) {
        return emitter.emit(true, Json{{"valid", true}, {"points", points.size()}});
      }
      auto name = [&](int idx) {
        return idx >= 0 && idx < static_cast<int>(points.size()) ? points[static_cast<std::size_t>(idx)] : "?";
      };
      Json detail{{"valid", false},
                  {"violation", errc_name(violation->kind)},
                  {"witness", Json::array({name(violation->i), name(violation->j)})}};
      if (violation->kind == Errc::triangle_violation) {
        detail["witness"] = Json::array({name(violation->i), name(violation->j), name(violation->k)});
      }
      return emitter.emit(false, detail);
    }

    if (kat_check->parsed()) {
      emitter.command = "katetov check";
      emitter.note_input(kat_fn_path);
      Json j = read_json_file(kat_fn_path);
      SpacePtr space = j.at("space").is_string()
                           ? space_from_json(read_json_file(j.at("space").get<std::string>()))
                           : space_from_json(j.at("space"));
      auto values = parse_rationals(j.at("values").get<std::vector<std::string>>());
      auto verdict = is_katetov(*space, values);
      Json detail{{"katetov", verdict.ok}};
      if (!verdict.ok) {
        detail["failed_inequality"] =
            verdict.which == KatetovCheck::Which::lipschitz ? "lipschitz" : "katetov";
        detail["witness"] = Json::array(
            {space->point_id(verdict.i), space->point_id(verdict.j)});
      }
      return emitter.emit(verdict.ok, detail);
    }

    if (kat_extend->parsed()) {
      emitter.command = "katetov extend";
      emitter.note_input(kat_space_path);
      SpacePtr space = space_from_json(read_json_file(kat_space_path));
      auto ids = split_list(kat_subset_text, ',');
      auto values = parse_rationals(split_list(kat_values_text, ','));
      if (ids.size() != values.size()) fail(Errc::length_mismatch, "subset vs values");
      std::vector<std::pair<int, Rational>> paired;
      for (std::size_t i = 0; i < ids.size(); ++i) {
        paired.emplace_back(space->index_of(ids[i]), values[i]);
      }
      std::sort(paired.begin(), paired.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      std::vector<int> indices;
      std::vector<Rational> ordered;
      for (auto& [idx, v] : paired) {
        indices.push_back(idx);
        ordered.push_back(v);
      }
      KatetovFunction ext = katetov_extension(subspace(space, indices), ordered);
      return emitter.emit(true, function_to_json(ext));
    }

    if (kat_supdist->parsed()) {
      emitter.command = "katetov supdist";
      emitter.note_input(kat_f_path);
      emitter.note_input(kat_g_path);
      KatetovFunction f = function_from_json(read_json_file(kat_f_path));
      KatetovFunction g = function_from_json(read_json_file(kat_g_path));
      Rational d = sup_metric(f, g);
      return emitter.emit(true, Json{{"sup_distance", format_rational(d)}});
    }

    if (approx_build->parsed()) {
      emitter.command = "approximant build";
      emitter.note_input(approx_seed_path);
      SpacePtr seed = space_from_json(read_json_file(approx_seed_path));
      Approximant result = build_approximant(seed, k, rounds, cli_grid, size_budget, jobs);
      Json detail = approximant_to_json(result);
      detail["points"] = result.space->size();
      return emitter.emit(true, detail);
    }

    if (approx_check->parsed()) {
      emitter.command = "approximant check";
      emitter.note_input(approx_file_path);
      Approximant a = approximant_from_json(read_json_file(approx_file_path));
      auto verdict = check_one_point_property(*a.space, k, a.grid);
      Json detail{{"k", k}, {"certified", verdict.certified}};
      if (verdict.missing) {
        Json subset = Json::array();
        for (int idx : verdict.missing->subset) subset.push_back(a.space->point_id(idx));
        detail["missing"] = Json{{"subset", subset},
                                 {"profile", format_rationals(verdict.missing->values)}};
      }
      return emitter.emit(verdict.certified, detail);
    }

    if (iso_group->parsed()) {
      emitter.command = "iso group";
      emitter.note_input(iso_space_path);
      SpacePtr space = space_from_json(read_json_file(iso_space_path));
      GroupPtr group = IsometryGroup::full(space, search_budget);
      return emitter.emit(true, group_to_json(*group));
    }

    if (iso_extend->parsed()) {
      emitter.command = "iso extend";
      emitter.note_input(iso_ext_space);
      Approximant a = load_approximant_or_space(iso_ext_space, cli_grid);
      std::vector<std::pair<int, int>> pairs;
      for (const auto& token : split_list(iso_pairs_text, ',')) {
        auto colon = token.find(':');
        if (colon == std::string::npos) fail(Errc::usage_error, "pairs are source:target");
        pairs.emplace_back(a.space->index_of(token.substr(0, colon)),
                           a.space->index_of(token.substr(colon + 1)));
      }
      PartialIsometry start = partial_isometry(a.space, std::move(pairs));
      const int target = iso_target > 0 ? iso_target : a.space->size();
      BackAndForthResult result = extend_partial_isometry(start, target);
      Json matched = Json::array();
      for (const auto& [s, t] : result.extension.pairs) {
        matched.push_back(Json::array({a.space->point_id(s), a.space->point_id(t)}));
      }
      Json detail{{"success", result.success}, {"pairs", matched}};
      if (!result.success) {
        Json anchors = Json::array();
        for (int idx : result.missing_anchor) anchors.push_back(a.space->point_id(idx));
        detail["missing"] = Json{{"direction", result.forward_failure ? "forward" : "backward"},
                                 {"anchors", anchors},
                                 {"profile", format_rationals(result.missing_profile)}};
      }
      return emitter.emit(result.success, detail);
    }

    if (iso_nbhd->parsed()) {
      emitter.command = "iso nbhd";
      emitter.note_input(iso_nbhd_space);
      SpacePtr space = space_from_json(read_json_file(iso_nbhd_space));
      GroupPtr group = IsometryGroup::full(space, search_budget);
      std::vector<std::pair<int, Rational>> anchors;
      for (const auto& token : iso_anchor_texts) {
        auto colon = token.find(':');
        if (colon == std::string::npos) fail(Errc::usage_error, "anchors are point:eps");
        anchors.emplace_back(space->index_of(token.substr(0, colon)),
                             parse_rational(token.substr(colon + 1)));
      }
      NbhdSet set = nbhd(group, std::move(anchors));
      return emitter.emit(true, nbhd_to_json(set));
    }

    if (cmd_lemma1->parsed()) {
      emitter.command = "lemma1";
      emitter.note_input(l1_approx_path);
      Approximant a = load_approximant_or_space(l1_approx_path, cli_grid);
      GroupPtr group = group_for(a, l1_subgroup_path, search_budget, emitter);
      std::vector<int> targets;
      for (const auto& id : split_list(l1_targets_text, ',')) {
        targets.push_back(a.space->index_of(id));
      }
      Lemma1Instance inst = build_lemma1_instance(a, group, targets, parse_rational(l1_eps_text));
      Lemma1Report report = verify_lemma1(inst);
      Json detail{{"gamma", format_rational(report.gamma)},
                  {"y", report.y_id},
                  {"y_added", report.y_added},
                  {"degenerate", report.degenerate},
                  {"passed", report.passed},
                  {"extended_group_size", report.extended_order},
                  {"dropped_elements", report.dropped_cycles},
                  {"refined_nbhd_size", report.refined_size},
                  {"target_nbhd_size", report.target_nbhd_size},
                  {"witnesses", report.failures},
                  {"details", report.details}};
      return emitter.emit(report.passed, detail);
    }

    if (fsin_discrete->parsed() || fsin_neutral->parsed()) {
      const bool neutral = fsin_neutral->parsed();
      emitter.command = neutral ? "fsin neutrality" : "fsin discrete";
      const std::string space_path = neutral ? fn_space : fd_space;
      const std::string subgroup_path = neutral ? fn_subgroup : fd_subgroup;
      const std::string elements_text = neutral ? fn_elements : fd_elements;
      const auto anchor_texts = neutral ? fn_anchors : fd_anchors;
      emitter.note_input(space_path);
      Approximant a = load_approximant_or_space(space_path, cli_grid);
      GroupPtr group = group_for(a, subgroup_path, search_budget, emitter);
      ElementSet subset;
      {
        std::set<int> collected;
        for (const auto& cycles : split_list(elements_text, ',')) {
          collected.insert(group->parse_cycles(cycles));
        }
        subset.assign(collected.begin(), collected.end());
      }
      std::vector<std::pair<int, Rational>> anchors;
      for (const auto& token : anchor_texts) {
        auto colon = token.find(':');
        if (colon == std::string::npos) fail(Errc::usage_error, "anchors are point:eps");
        anchors.emplace_back(a.space->index_of(token.substr(0, colon)),
                             parse_rational(token.substr(colon + 1)));
      }
      NbhdSet v = nbhd(group, std::move(anchors));
      if (!neutral) {
        auto verdict = is_left_uniformly_discrete(*group, subset, v);
        Json detail{{"discrete", verdict.discrete}, {"v", nbhd_to_json(v)}};
        if (!verdict.discrete) {
          detail["witness"] = Json::array({group->cycle_notation(verdict.witness_a),
                                           group->cycle_notation(verdict.witness_b)});
        }
        return emitter.emit(verdict.discrete, detail);
      }
      UniformityBasis basis = generate_basis(group, a.grid, 2);
      NeutralityResult result = neutrality_check(*group, subset, v, basis);
      Json detail{{"found", result.found}, {"basis_size", basis.sets.size()}};
      if (result.found) {
        detail["u"] = nbhd_to_json(*result.u);
      } else {
        Json witnesses = Json::array();
        for (const auto& [b, u, el] : result.witnesses) {
          witnesses.push_back(Json{{"basis_index", b},
                                   {"u", group->cycle_notation(u)},
                                   {"a", group->cycle_notation(el)}});
        }
        detail["witnesses"] = witnesses;
      }
      return emitter.emit(result.found, detail);
    }

    if (fsin_t4->parsed()) {
      emitter.command = "fsin theorem4";
      emitter.note_input(t4_approx);
      Approximant a = load_approximant_or_space(t4_approx, cli_grid);
      GroupPtr group = group_for(a, t4_subgroup, search_budget, emitter);
      ElementSet subset;
      {
        std::set<int> collected;
        for (const auto& cycles : split_list(t4_elements, ',')) {
          collected.insert(group->parse_cycles(cycles));
        }
        subset.assign(collected.begin(), collected.end());
      }
      Theorem4Instance inst = theorem4_construct(a, group, subset, a.space->index_of(t4_x),
                                                 parse_rational(t4_eps));
      Theorem4Report report = verify_theorem4(inst);
      Json detail{{"passed", report.passed},
                  {"pairs_checked", report.pairs_checked},
                  {"z", inst.grown.space->point_id(inst.z)},
                  {"z_added", inst.z_added},
                  {"D", format_rational(inst.big_d)},
                  {"w_size", inst.w_members.size()},
                  {"construction", inst.construction_log},
                  {"witnesses", report.failures},
                  {"details", report.details}};
      return emitter.emit(report.passed, detail);
    }

    if (fsin_disp->parsed()) {
      emitter.command = "fsin displacement";
      emitter.note_input(dp_space);
      Approximant a = load_approximant_or_space(dp_space, cli_grid);
      GroupPtr group = group_for(a, dp_subgroup, search_budget, emitter);
      const Rational eps = parse_rational(dp_eps);
      ElementSet v;
      if (dp_elements.empty()) {
        v = max_displacement_set(*group, eps);
      } else {
        std::set<int> collected;
        for (const auto& cycles : split_list(dp_elements, ',')) {
          collected.insert(group->parse_cycles(cycles));
        }
        v.assign(collected.begin(), collected.end());
      }
      DisplacementReport report =
          displacement_bound_check(*group, v, eps, a.grid, dp_samples, 0x0D15ULL);
      Json detail{{"passed", report.passed},
                  {"functions_checked", report.functions_checked},
                  {"pairs_checked", report.pairs_checked},
                  {"bound_attained", report.bound_attained},
                  {"v_size", v.size()},
                  {"witnesses", report.failures}};
      return emitter.emit(report.passed, detail);
    }

    if (cmd_suite->parsed()) {
      emitter.command = "suite";
      SuiteConfig config;
      config.build_grid = cli_grid;
      config.k = k;
      config.rounds = rounds;
      config.size_budget = size_budget;
      config.jobs = jobs;
      SuiteOutcome outcome = run_acceptance_suite(config, &std::cerr);
      return emitter.emit(outcome.all_passed, outcome.report);
    }

    fail(Errc::usage_error, "no subcommand matched");
  } catch (const Error& e) {
    return emitter.emit_error(e);
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 2;
  }
}
