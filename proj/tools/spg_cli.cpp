// Command-line frontend: construction, verification, random-set checks and
// text diagrams, each run reproducible from its manifest.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "spg/construction1.hpp"
#include "spg/construction2.hpp"
#include "spg/covering.hpp"
#include "spg/diagram.hpp"
#include "spg/enumerate.hpp"
#include "spg/error.hpp"
#include "spg/hypergeom.hpp"
#include "spg/json_io.hpp"
#include "spg/ops.hpp"
#include "spg/polytope.hpp"
#include "spg/properties.hpp"
#include "spg/version.hpp"

using spg::Json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitPropertyFailed = 1;
constexpr int kExitConstructionFailed = 2;
constexpr int kExitUsage = 64;

spg::CheckOptions check_options(const Json& cfg) {
  spg::CheckOptions o;
  o.candidate_budget = cfg.value("budget", o.candidate_budget);
  o.sample_count = cfg.value("samples", o.sample_count);
  o.seed = cfg.value("check_seed", cfg.value("seed", o.seed));
  o.jobs = cfg.value("jobs", 0);
  if (o.jobs <= 0) o.jobs = static_cast<int>(std::thread::hardware_concurrency());
  if (o.jobs <= 0) o.jobs = 1;
  return o;
}

void write_manifest(const std::string& command, const Json& cfg, const Json& outputs,
                    const std::vector<std::string>& waived) {
  std::string path;
  if (cfg.contains("manifest") && !cfg.at("manifest").get<std::string>().empty())
    path = cfg.at("manifest").get<std::string>();
  else if (outputs.contains("family"))
    path = outputs.at("family").get<std::string>() + ".manifest.json";
  else
    return;
  Json m;
  m["command"] = command;
  m["version"] = spg::kToolVersion;
  m["config"] = cfg;
  m["outputs"] = outputs;
  m["waived"] = waived;
  spg::write_json_file(path, m);
}

void print_results(const std::vector<spg::VerificationResult>& results) {
  for (const auto& r : results) {
    std::printf("%-22s %-10s %s  (%zu candidates)%s\n", spg::property_name(r.property),
                r.mode == spg::CheckMode::Exhaustive ? "exhaustive" : "sampled",
                r.passed ? "pass" : "FAIL", r.candidates,
                r.note.empty() ? "" : ("  [" + r.note + "]").c_str());
  }
}

bool all_passed(const std::vector<spg::VerificationResult>& results) {
  for (const auto& r : results)
    if (!r.passed) return false;
  return true;
}

int finish_run(const std::string& command, const Json& cfg, const Json& outputs,
               const std::vector<std::string>& waived, Json report,
               const std::vector<spg::VerificationResult>& results) {
  Json props = Json::array();
  for (const auto& r : results) props.push_back(r.to_json());
  report["command"] = command;
  report["version"] = spg::kToolVersion;
  report["properties"] = props;
  if (cfg.contains("report") && !cfg.at("report").get<std::string>().empty())
    spg::write_json_file(cfg.at("report").get<std::string>(), report);
  write_manifest(command, cfg, outputs, waived);
  print_results(results);
  return all_passed(results) ? kExitOk : kExitPropertyFailed;
}

// ---------------------------------------------------------------------------

int cmd_covering(const Json& cfg) {
  const int n = cfg.at("n").get<int>();
  const int d = cfg.at("d").get<int>();
  const uint64_t seed = cfg.value("seed", 1ull);
  auto fam = spg::build_disjoint_covering_designs(n, d, seed);
  auto family = fam.to_layer_family();

  Json outputs;
  if (cfg.contains("out") && !cfg.at("out").get<std::string>().empty()) {
    spg::write_json_file(cfg.at("out").get<std::string>(), spg::family_to_json(family));
    outputs["family"] = cfg.at("out");
  }

  auto opts = check_options(cfg);
  std::vector<spg::VerificationResult> results;
  results.push_back(spg::check_covering_family(family, spg::CoveringVariant::covering(), opts));
  results.push_back(spg::check_covering_family(family, spg::CoveringVariant::completeness(), opts));

  int bound = spg::lambda_lower_bound(n, d);
  Json report;
  report["stats"] = {{"n", n},
                     {"d", d},
                     {"seed", seed},
                     {"layers", family.layer_count()},
                     {"members", family.member_count()},
                     {"lambda_lower_bound", bound},
                     {"meets_lower_bound", family.layer_count() >= bound},
                     {"leftover_merged", fam.leftover_merged}};
  std::printf("covering designs: %d layers (guaranteed bound %d)%s\n", family.layer_count(), bound,
              family.layer_count() < bound ? "  [shortfall]" : "");
  return finish_run("covering", cfg, outputs, {}, std::move(report), results);
}

int cmd_build_c1(const Json& cfg) {
  spg::Pipeline1Config pc;
  pc.n = cfg.at("n").get<int>();
  pc.d = cfg.at("d").get<int>();
  pc.m = cfg.value("m", 3);
  pc.seed = cfg.value("seed", 1ull);
  pc.strict = cfg.value("strict", false);
  if (cfg.contains("separation_bound")) pc.separation_bound = cfg.at("separation_bound").get<int>();
  pc.retry_budget = cfg.value("retries", pc.retry_budget);

  auto res = spg::pipeline1(pc, check_options(cfg));

  Json outputs;
  if (cfg.contains("out") && !cfg.at("out").get<std::string>().empty()) {
    spg::write_json_file(cfg.at("out").get<std::string>(), spg::family_to_json(res.Z));
    outputs["family"] = cfg.at("out");
  }
  if (cfg.contains("records") && !cfg.at("records").get<std::string>().empty()) {
    Json rj;
    rj["pipeline"] = 1;
    rj["universe"] = spg::universe_to_json(res.W.universe);
    rj["records"] = spg::records1_to_json(res.W.universe, res.records);
    spg::write_json_file(cfg.at("records").get<std::string>(), rj);
    outputs["records"] = cfg.at("records");
  }
  if (cfg.contains("diagrams") && !cfg.at("diagrams").get<std::string>().empty()) {
    spg::write_text_file(cfg.at("diagrams").get<std::string>(),
                         spg::render_diagrams(res.W.universe, res.records));
    outputs["diagrams"] = cfg.at("diagrams");
  }
  if (cfg.contains("report")) outputs["report"] = cfg.at("report");

  Json report;
  report["stats"] = res.stats_json();
  std::printf("pipeline 1: n=%d d=%d m=%d ell=%d delta=%d members=%zu separation %s\n", pc.n, pc.d,
              pc.m, res.ell, res.delta, res.Z.member_count(),
              res.separation_clean ? "clean" : "violated");
  return finish_run("build-c1", cfg, outputs, res.waived, std::move(report), res.reports);
}

int cmd_build_c2(const Json& cfg) {
  spg::SectionedConfig sc;
  sc.n = cfg.at("n").get<int>();
  sc.m = cfg.value("m", 1);
  sc.epsilon = cfg.value("epsilon", 0.25);
  sc.seed = cfg.value("seed", 1ull);
  sc.strict = cfg.value("strict", false);
  sc.pairwise_diff_min = cfg.value("pairwise_diff", sc.pairwise_diff_min);
  if (cfg.contains("four_union")) sc.four_union_min = cfg.at("four_union").get<int>();
  sc.retry_budget = cfg.value("retries", sc.retry_budget);
  sc.mesh_budget = cfg.value("mesh_budget", sc.mesh_budget);

  auto res = spg::pipeline2(sc, check_options(cfg));

  Json outputs;
  if (cfg.contains("out") && !cfg.at("out").get<std::string>().empty()) {
    spg::write_json_file(cfg.at("out").get<std::string>(), spg::family_to_json(res.Z));
    outputs["family"] = cfg.at("out");
  }
  if (cfg.contains("records") && !cfg.at("records").get<std::string>().empty()) {
    Json rj;
    rj["pipeline"] = 2;
    rj["universe"] = spg::universe_to_json(res.W.universe);
    rj["records"] = spg::records2_to_json(res.W.universe, res.records);
    spg::write_json_file(cfg.at("records").get<std::string>(), rj);
    outputs["records"] = cfg.at("records");
  }
  if (cfg.contains("diagrams") && !cfg.at("diagrams").get<std::string>().empty()) {
    spg::write_text_file(cfg.at("diagrams").get<std::string>(),
                         spg::render_diagrams(res.W.universe, res.records));
    outputs["diagrams"] = cfg.at("diagrams");
  }
  if (cfg.contains("report")) outputs["report"] = cfg.at("report");

  Json report;
  report["stats"] = res.stats_json();
  std::printf("pipeline 2: n=%d d=%d m=%d sections %d..%d layers=%d members=%zu "
              "diameter-bound formula %.3f\n",
              sc.n, sc.d(), sc.m, res.jl, res.jr, res.Z.layer_count(), res.Z.member_count(),
              res.bound_value);
  return finish_run("build-c2", cfg, outputs, res.waived, std::move(report), res.reports);
}

int cmd_polytope(const Json& cfg) {
  auto incidence = spg::incidence_from_json(spg::read_json_file(cfg.at("in").get<std::string>()));
  auto gp = spg::spg_from_incidence(incidence);

  std::optional<spg::LayerFamily> family;
  if (cfg.contains("layered_from")) family = spg::layered_spg(gp, cfg.at("layered_from").get<int>());
  if (cfg.value("to_path", false)) family = spg::to_path(gp);

  Json outputs;
  if (cfg.contains("dot") && !cfg.at("dot").get<std::string>().empty()) {
    spg::write_text_file(cfg.at("dot").get<std::string>(), spg::dot_export(gp));
    outputs["dot"] = cfg.at("dot");
  }
  if (cfg.contains("out") && !cfg.at("out").get<std::string>().empty()) {
    if (!family) spg::fail(spg::Errc::Domain, "--out needs --layered-from or --to-path");
    spg::write_json_file(cfg.at("out").get<std::string>(), spg::family_to_json(*family));
    outputs["family"] = cfg.at("out");
  }

  std::vector<spg::VerificationResult> results;
  Json report;
  report["stats"] = {{"n", incidence.n},
                     {"d", incidence.d},
                     {"vertices", gp.vertex_count()},
                     {"edges", gp.edges.size()},
                     {"diameter", gp.diameter()}};
  if (cfg.value("verify", false)) {
    auto opts = check_options(cfg);
    results.push_back(spg::check_dimension_reduction(gp, opts));
    results.push_back(spg::check_strong_adjacency(gp, opts));
    results.push_back(spg::check_endpoint_count(gp, opts));
    if (family) {
      results.push_back(spg::check_dimension_reduction(*family, opts));
      results.push_back(spg::check_strong_adjacency(*family, opts));
      results.push_back(spg::check_endpoint_count(*family, opts));
    }
  }
  std::printf("polytope: n=%d d=%d vertices=%d edges=%zu diameter=%d\n", incidence.n, incidence.d,
              gp.vertex_count(), gp.edges.size(), gp.diameter());
  return finish_run("polytope", cfg, outputs, {}, std::move(report), results);
}

int cmd_verify(const Json& cfg) {
  auto family = spg::family_from_json(spg::read_json_file(cfg.at("in").get<std::string>()));
  auto opts = check_options(cfg);

  std::vector<spg::VerificationResult> results;
  std::string props = cfg.value("props", std::string("dr,adj,sa,ec"));
  std::stringstream ss(props);
  std::string token;
  while (std::getline(ss, token, ',')) {
    if (token.empty()) continue;
    int m = 1;
    auto colon = token.find(':');
    if (colon != std::string::npos) {
      m = std::stoi(token.substr(colon + 1));
      token = token.substr(0, colon);
    }
    if (token == "dr") results.push_back(spg::check_dimension_reduction(family, opts));
    else if (token == "adj") results.push_back(spg::check_adjacency(family, opts));
    else if (token == "sa") results.push_back(spg::check_strong_adjacency(family, opts));
    else if (token == "ec") results.push_back(spg::check_endpoint_count(family, opts));
    else if (token == "cov")
      results.push_back(spg::check_covering_family(family, spg::CoveringVariant::covering(), opts));
    else if (token == "mcov")
      results.push_back(
          spg::check_covering_family(family, spg::CoveringVariant::m_covering(m), opts));
    else if (token == "complete")
      results.push_back(
          spg::check_covering_family(family, spg::CoveringVariant::completeness(), opts));
    else if (token == "link")
      results.push_back(spg::check_covering_family(family, spg::CoveringVariant::linkage(), opts));
    else if (token == "seccov")
      results.push_back(spg::check_sectioned_covering(family, m, opts));
    else if (token == "widthcov")
      results.push_back(spg::check_width_covering(family, opts));
    else if (token == "pm")
      results.push_back(spg::check_pseudomanifold(family, opts));
    else if (token == "normal")
      results.push_back(spg::check_normal(family, opts));
    else
      spg::fail(spg::Errc::Domain, "unknown property token '" + token + "'");
  }

  Json report;
  report["in"] = cfg.at("in");
  return finish_run("verify", cfg, Json::object(), {}, std::move(report), results);
}

int cmd_rand_check(const Json& cfg) {
  const std::string mode = cfg.value("mode", std::string("exact"));
  const long long N = cfg.at("N").get<long long>();
  const double p1 = cfg.at("p1").get<double>();
  const double p2 = cfg.at("p2").get<double>();
  const double eps = cfg.at("eps").get<double>();
  const uint64_t seed = cfg.value("seed", 1ull);

  spg::ConcentrationReport rep;
  if (mode == "exact") {
    rep = spg::concentration_exact(N, p1, p2, eps);
  } else if (mode == "mc") {
    int ell = cfg.value("ell", 2);
    size_t trials = cfg.value("trials", size_t{100000});
    std::vector<double> p{p1, p2};
    while (static_cast<int>(p.size()) < ell) p.push_back(p2);
    rep = spg::concentration_monte_carlo(N, p, eps, trials, seed);
  } else {
    spg::fail(spg::Errc::Domain, "mode must be exact or mc");
  }

  Json report;
  report["command"] = "rand-check";
  report["version"] = spg::kToolVersion;
  report["concentration"] = rep.to_json();
  if (cfg.contains("report") && !cfg.at("report").get<std::string>().empty())
    spg::write_json_file(cfg.at("report").get<std::string>(), report);
  write_manifest("rand-check", cfg, Json::object(), {});
  std::printf("%s: right tail %.6g (envelope %.6g), left tail %.6g (envelope %.6g)\n",
              rep.mode.c_str(), rep.right_tail, rep.right_envelope, rep.left_tail,
              rep.left_envelope);
  bool ok = rep.right_tail <= rep.right_envelope + 1e-12 &&
            rep.left_tail <= rep.left_envelope + 1e-12;
  return ok ? kExitOk : kExitPropertyFailed;
}

int cmd_diagram(const Json& cfg) {
  Json rj = spg::read_json_file(cfg.at("records").get<std::string>());
  auto base = spg::universe_from_json(rj.at("universe"));
  std::string text;
  if (rj.at("pipeline").get<int>() == 1)
    text = spg::render_diagrams(base, spg::records1_from_json(base, rj.at("records")));
  else
    text = spg::render_diagrams(base, spg::records2_from_json(base, rj.at("records")));
  if (cfg.contains("out") && !cfg.at("out").get<std::string>().empty())
    spg::write_text_file(cfg.at("out").get<std::string>(), text);
  else
    std::fputs(text.c_str(), stdout);
  return kExitOk;
}

int dispatch(const std::string& command, const Json& cfg) {
  if (command == "covering") return cmd_covering(cfg);
  if (command == "build-c1") return cmd_build_c1(cfg);
  if (command == "build-c2") return cmd_build_c2(cfg);
  if (command == "polytope") return cmd_polytope(cfg);
  if (command == "verify") return cmd_verify(cfg);
  if (command == "rand-check") return cmd_rand_check(cfg);
  if (command == "diagram") return cmd_diagram(cfg);
  spg::fail(spg::Errc::Domain, "unknown command '" + command + "'");
}

int cmd_replay(const Json& cfg) {
  Json manifest = spg::read_json_file(cfg.at("manifest").get<std::string>());
  return dispatch(manifest.at("command").get<std::string>(), manifest.at("config"));
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{std::string(spg::kToolName) + " " + spg::kToolVersion +
               " - subset partition graph construction and verification"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(spg::kToolVersion));

  Json cfg;
  std::string command;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option_function<std::string>(
        "--report", [&](const std::string& v) { cfg["report"] = v; }, "verification report path");
    sub->add_option_function<std::string>(
        "--manifest", [&](const std::string& v) { cfg["manifest"] = v; }, "manifest path");
    sub->add_option_function<size_t>(
        "--budget", [&](size_t v) { cfg["budget"] = v; }, "exhaustive candidate budget");
    sub->add_option_function<size_t>(
        "--samples", [&](size_t v) { cfg["samples"] = v; }, "sampled-mode candidate count");
    sub->add_option_function<int>(
        "--jobs", [&](int v) { cfg["jobs"] = v; }, "verification parallelism (default: hardware)");
  };

  // covering
  {
    auto* sub = app.add_subcommand("covering", "partition d-subsets into covering designs");
    sub->add_option_function<int>("--n", [&](int v) { cfg["n"] = v; }, "symbols")->required();
    sub->add_option_function<int>("--d", [&](int v) { cfg["d"] = v; }, "dimension")->required();
    sub->add_option_function<uint64_t>("--seed", [&](uint64_t v) { cfg["seed"] = v; }, "seed");
    sub->add_option_function<std::string>("--out", [&](const std::string& v) { cfg["out"] = v; },
                                          "family JSON path");
    add_common(sub);
    sub->callback([&] { command = "covering"; });
  }
  // build-c1
  {
    auto* sub = app.add_subcommand("build-c1", "doubled family from merged covering designs");
    sub->add_option_function<int>("--n", [&](int v) { cfg["n"] = v; }, "symbols")->required();
    sub->add_option_function<int>("--d", [&](int v) { cfg["d"] = v; }, "dimension")->required();
    sub->add_option_function<int>("--m", [&](int v) { cfg["m"] = v; }, "merge width (>= 3)");
    sub->add_option_function<uint64_t>("--seed", [&](uint64_t v) { cfg["seed"] = v; }, "seed");
    auto* strict = sub->add_flag_callback("--strict", [&] { cfg["strict"] = true; },
                                          "enforce separation by rejection");
    sub->add_flag_callback("--relaxed", [&] { cfg["strict"] = false; }, "log separation only")
        ->excludes(strict);
    sub->add_option_function<std::string>("--out", [&](const std::string& v) { cfg["out"] = v; },
                                          "family JSON path");
    sub->add_option_function<std::string>(
        "--records", [&](const std::string& v) { cfg["records"] = v; }, "interpolation records");
    sub->add_option_function<std::string>(
        "--diagrams", [&](const std::string& v) { cfg["diagrams"] = v; }, "text diagrams path");
    add_common(sub);
    sub->callback([&] { command = "build-c1"; });
  }
  // build-c2
  {
    auto* sub = app.add_subcommand("build-c2", "sectioned doubled family from stacked meshes");
    sub->add_option_function<int>("--n", [&](int v) { cfg["n"] = v; }, "symbols (multiple of 4)")
        ->required();
    sub->add_option_function<int>("--m", [&](int v) { cfg["m"] = v; }, "merge width (>= 1)");
    sub->add_option_function<double>("--epsilon", [&](double v) { cfg["epsilon"] = v; },
                                     "section window parameter (default 1/4)");
    sub->add_option_function<uint64_t>("--seed", [&](uint64_t v) { cfg["seed"] = v; }, "seed");
    auto* strict = sub->add_flag_callback("--strict", [&] { cfg["strict"] = true; },
                                          "enforce separation by rejection");
    sub->add_flag_callback("--desk", [&] { cfg["strict"] = false; }, "log separation only")
        ->excludes(strict);
    sub->add_option_function<std::string>("--out", [&](const std::string& v) { cfg["out"] = v; },
                                          "family JSON path");
    sub->add_option_function<std::string>(
        "--records", [&](const std::string& v) { cfg["records"] = v; }, "interpolation records");
    sub->add_option_function<std::string>(
        "--diagrams", [&](const std::string& v) { cfg["diagrams"] = v; }, "text diagrams path");
    add_common(sub);
    sub->callback([&] { command = "build-c2"; });
  }
  // polytope
  {
    auto* sub = app.add_subcommand("polytope", "dual graph of a simple polytope incidence");
    sub->add_option_function<std::string>("--in", [&](const std::string& v) { cfg["in"] = v; },
                                          "incidence JSON path")
        ->required();
    sub->add_option_function<int>("--layered-from",
                                  [&](int v) { cfg["layered_from"] = v; }, "layer from vertex");
    sub->add_flag_callback("--to-path", [&] { cfg["to_path"] = true; },
                           "collapse to a path family from an eccentric vertex");
    sub->add_flag_callback("--verify", [&] { cfg["verify"] = true; }, "run the property checkers");
    sub->add_option_function<std::string>("--out", [&](const std::string& v) { cfg["out"] = v; },
                                          "family JSON path");
    sub->add_option_function<std::string>("--dot", [&](const std::string& v) { cfg["dot"] = v; },
                                          "DOT export path");
    add_common(sub);
    sub->callback([&] { command = "polytope"; });
  }
  // verify
  {
    auto* sub = app.add_subcommand("verify", "check properties of a family JSON");
    sub->add_option_function<std::string>("--in", [&](const std::string& v) { cfg["in"] = v; },
                                          "family JSON path")
        ->required();
    sub->add_option_function<std::string>(
           "--props", [&](const std::string& v) { cfg["props"] = v; },
           "comma list: dr,adj,sa,ec,cov,mcov:m,complete,link,seccov:m,widthcov,pm,normal")
        ->required();
    sub->add_option_function<uint64_t>("--seed", [&](uint64_t v) { cfg["seed"] = v; },
                                       "sampling seed");
    add_common(sub);
    sub->callback([&] { command = "verify"; });
  }
  // rand-check
  {
    auto* sub = app.add_subcommand("rand-check", "hypergeometric concentration vs tail bounds");
    sub->add_option_function<std::string>("--mode", [&](const std::string& v) { cfg["mode"] = v; },
                                          "exact | mc");
    sub->add_option_function<long long>("--N", [&](long long v) { cfg["N"] = v; }, "population")
        ->required();
    sub->add_option_function<double>("--p1", [&](double v) { cfg["p1"] = v; }, "ratio 1")->required();
    sub->add_option_function<double>("--p2", [&](double v) { cfg["p2"] = v; }, "ratio 2")->required();
    sub->add_option_function<double>("--eps", [&](double v) { cfg["eps"] = v; }, "deviation")
        ->required();
    sub->add_option_function<int>("--ell", [&](int v) { cfg["ell"] = v; },
                                  "set count (mc mode; extra sets reuse p2)");
    sub->add_option_function<size_t>("--trials", [&](size_t v) { cfg["trials"] = v; }, "mc trials");
    sub->add_option_function<uint64_t>("--seed", [&](uint64_t v) { cfg["seed"] = v; }, "seed");
    add_common(sub);
    sub->callback([&] { command = "rand-check"; });
  }
  // diagram
  {
    auto* sub = app.add_subcommand("diagram", "render interpolation records as text boxes");
    sub->add_option_function<std::string>(
           "--records", [&](const std::string& v) { cfg["records"] = v; }, "records JSON path")
        ->required();
    sub->add_option_function<std::string>("--out", [&](const std::string& v) { cfg["out"] = v; },
                                          "output path (stdout otherwise)");
    sub->callback([&] { command = "diagram"; });
  }
  // replay
  {
    auto* sub = app.add_subcommand("replay", "re-run a recorded manifest");
    sub->add_option_function<std::string>(
           "--manifest", [&](const std::string& v) { cfg["manifest"] = v; }, "manifest path")
        ->required();
    sub->callback([&] { command = "replay"; });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (command == "replay") return cmd_replay(cfg);
    return dispatch(command, cfg);
  } catch (const spg::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConstructionFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConstructionFailed;
  }
}
