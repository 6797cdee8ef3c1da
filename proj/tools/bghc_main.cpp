// Command-line surface for basis-graph construction, good-cycle and
// Hamiltonian-cycle counting, witness generation, bound evaluation, and
// verification campaigns. Exit codes: 0 pass, 1 fail, 2 usage error.

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "bghc/bounds.hpp"
#include "bghc/campaign.hpp"
#include "bghc/engine.hpp"
#include "bghc/graphic.hpp"
#include "bghc/io.hpp"

using nlohmann::json;

namespace {

struct InstanceArgs {
  std::string family;  // uniform | catalan | gencat | graphic
  std::string params;
  std::string gen;         // graphic generator name
  std::string graph_json;  // path to a multigraph JSON file
};

std::vector<int> parse_ints(const std::string& s) {
  std::vector<int> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) out.push_back(std::stoi(tok));
  return out;
}

bghc::Multigraph build_graph(const InstanceArgs& a) {
  if (!a.graph_json.empty()) {
    std::ifstream in(a.graph_json);
    if (!in) throw bghc::Error("BadParams", "cannot open " + a.graph_json);
    json j;
    in >> j;
    return bghc::multigraph_from_json(j);
  }
  auto p = parse_ints(a.params);
  if (a.gen == "cycle") return bghc::mg_cycle(p.at(0));
  if (a.gen == "complete") return bghc::mg_complete(p.at(0));
  if (a.gen == "k2_sum_cycle") return bghc::mg_k2_sum_cycle(p.at(0));
  if (a.gen == "theta") return bghc::mg_theta(p.at(0), p.at(1), p.at(2));
  if (a.gen == "prism") return bghc::mg_prism(p.at(0));
  throw bghc::Error("BadParams", "unknown generator: " + a.gen);
}

std::unique_ptr<bghc::FamilyInstance> build_instance(const InstanceArgs& a) {
  if (a.family == "uniform") {
    auto p = parse_ints(a.params);
    return std::make_unique<bghc::UniformInstance>(bghc::UniformSpec::make(p.at(0), p.at(1)));
  }
  if (a.family == "catalan") {
    auto p = parse_ints(a.params);
    return std::make_unique<bghc::CatalanInstance>(bghc::catalan_matroid(p.at(0)));
  }
  if (a.family == "gencat") {
    return std::make_unique<bghc::CatalanInstance>(
        bghc::GenCatalan::make(bghc::StepWord::parse(a.params)));
  }
  if (a.family == "graphic") {
    return std::make_unique<bghc::GraphicInstance>(build_graph(a));
  }
  throw bghc::Error("BadParams", "unknown family: " + a.family);
}

void add_instance_flags(CLI::App* cmd, InstanceArgs& args) {
  cmd->add_option("--family", args.family, "uniform | catalan | gencat | graphic")->required();
  cmd->add_option("--params", args.params,
                  "uniform: r,n  catalan: k  gencat: Q word  graphic: generator params");
  cmd->add_option("--gen", args.gen, "graphic generator: cycle k2_sum_cycle complete theta prism");
  cmd->add_option("--graph-json", args.graph_json, "multigraph JSON file (family=graphic)");
}

std::pair<int, int> parse_edge(const std::string& s) {
  auto p = parse_ints(s);
  if (p.size() != 2) throw bghc::Error("BadParams", "--edge expects u,v");
  return {p[0], p[1]};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"matroid basis graphs: good cycles, Hamiltonian counts, bounds"};
  app.require_subcommand(1);

  InstanceArgs inst_args;
  std::string edge_str;
  std::string out_path;
  uint64_t cap = 0;
  uint64_t target = 0;
  bool want_dot = false;
  bool want_json = false;
  bool use_oracle = false;

  auto* cmd_bases = app.add_subcommand("bases", "enumerate the basis family");
  add_instance_flags(cmd_bases, inst_args);

  auto* cmd_bg = app.add_subcommand("bg", "build the basis graph");
  add_instance_flags(cmd_bg, inst_args);
  cmd_bg->add_flag("--dot", want_dot, "emit DOT instead of JSON");

  auto* cmd_good = app.add_subcommand("good-cycles", "good cycles for a basis-graph edge");
  add_instance_flags(cmd_good, inst_args);
  cmd_good->add_option("--edge", edge_str, "edge u,v")->required();
  cmd_good->add_flag("--oracle", use_oracle, "use the brute-force oracle instead of templates");

  auto* cmd_count = app.add_subcommand("count-hc", "Hamiltonian cycles through an edge");
  add_instance_flags(cmd_count, inst_args);
  cmd_count->add_option("--edge", edge_str, "edge u,v")->required();
  cmd_count->add_option("--cap", cap, "stop counting at this threshold");

  auto* cmd_witness = app.add_subcommand("witness", "generate validated witness cycles");
  add_instance_flags(cmd_witness, inst_args);
  cmd_witness->add_option("--edge", edge_str, "edge u,v")->required();
  cmd_witness->add_option("--target", target, "stop once this many distinct witnesses exist");

  std::string bounds_family, bounds_params;
  auto* cmd_bounds = app.add_subcommand("bounds", "evaluate the lower-bound formulas");
  cmd_bounds->add_option("--family", bounds_family, "graphic2 | graphicK | catalan | uniform")
      ->required();
  cmd_bounds->add_option("--params", bounds_params, "graphic2: n  graphicK: n,k  catalan: k  uniform: r,n")
      ->required();
  cmd_bounds->add_flag("--json", want_json, "JSON output");

  bghc::Campaign campaign;
  bool no_witnesses = false;
  std::string grid_str;
  auto* cmd_verify = app.add_subcommand("verify", "run a verification campaign");
  cmd_verify->add_option("--family", campaign.family,
                         "graphic2 | graphicK | catalan | gencat | uniform")
      ->required();
  cmd_verify->add_option("--n-max", campaign.n_max, "graphic pools: max order (<= 5)");
  cmd_verify->add_option("--m-max", campaign.m_max, "graphic pools: max size (<= 8)");
  cmd_verify->add_option("--k-max", campaign.k_max, "catalan: max k");
  cmd_verify->add_option("--len-max", campaign.gencat_len_max, "gencat sweep: max word length");
  cmd_verify->add_option("--grid", grid_str, "uniform grid, e.g. 2,4;2,5;3,5");
  cmd_verify->add_option("--cap", cap, "override the bound-derived counting cap");
  cmd_verify->add_option("--seed", campaign.seed, "recorded in the report (enumeration is exhaustive)");
  cmd_verify->add_option("--json", out_path, "write the JSON report here");
  cmd_verify->add_flag("--no-witnesses", no_witnesses, "skip witness generation");

  auto* cmd_export = app.add_subcommand("export", "DOT export with good-cycle highlights");
  add_instance_flags(cmd_export, inst_args);
  cmd_export->add_option("--edge", edge_str, "highlight the good cycles of this edge");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*cmd_bases) {
      auto inst = build_instance(inst_args);
      std::cout << bghc::family_to_json(inst->family()).dump(2) << "\n";
    } else if (*cmd_bg) {
      auto inst = build_instance(inst_args);
      if (want_dot)
        std::cout << bghc::export_dot(inst->family(), inst->graph());
      else
        std::cout << bghc::basis_graph_to_json(inst->graph()).dump(2) << "\n";
    } else if (*cmd_good) {
      auto inst = build_instance(inst_args);
      auto [u, v] = parse_edge(edge_str);
      auto cycles = use_oracle
                        ? bghc::good_cycles_bruteforce(inst->family(), inst->graph(), u, v)
                        : inst->template_good_cycles(u, v);
      json arr = json::array();
      for (const auto& gc : cycles) arr.push_back(bghc::good_cycle_to_json(gc));
      std::cout << json{{"edge", {u, v}}, {"count", cycles.size()}, {"good_cycles", arr}}.dump(2)
                << "\n";
    } else if (*cmd_count) {
      auto inst = build_instance(inst_args);
      auto [u, v] = parse_edge(edge_str);
      std::optional<uint64_t> c;
      if (cap > 0) c = cap;
      auto hc = bghc::count_hc_through_edge(inst->graph(), u, v, c);
      std::cout << json{{"edge", {u, v}}, {"value", hc.value}, {"capped", hc.capped}}.dump(2)
                << "\n";
    } else if (*cmd_witness) {
      auto inst = build_instance(inst_args);
      auto [u, v] = parse_edge(edge_str);
      bghc::WitnessPolicy policy;
      policy.target = target > 0 ? target : 1;
      auto ws = bghc::witnesses_recursive(*inst, u, v, policy);
      bghc::validate_witness_set(inst->graph(), ws);
      std::cout << bghc::witness_set_to_json(ws).dump(2) << "\n";
    } else if (*cmd_bounds) {
      auto p = parse_ints(bounds_params);
      bghc::BoundValue bv;
      if (bounds_family == "graphic2") {
        bv = {bghc::bound_2conn(p.at(0)), "thm-2conn"};
      } else if (bounds_family == "graphicK") {
        bv = bghc::hc_lower(p.at(0), p.at(1));
      } else if (bounds_family == "catalan") {
        bv = bghc::catalan_lower(p.at(0));
      } else if (bounds_family == "uniform") {
        bv = bghc::uniform_lower(p.at(0), p.at(1));
      } else {
        throw bghc::Error("BadParams", "unknown bounds family: " + bounds_family);
      }
      if (want_json)
        std::cout << json{{"params", bounds_params},
                          {"formula_tag", bv.formula_tag},
                          {"value", bv.value.str()}}
                         .dump(2)
                  << "\n";
      else
        std::cout << bv.value.str() << "\n";
    } else if (*cmd_verify) {
      if (cap > 0) campaign.cap = cap;
      campaign.witnesses = !no_witnesses;
      if (!grid_str.empty()) {
        campaign.uniform_grid.clear();
        std::stringstream ss(grid_str);
        std::string tok;
        while (std::getline(ss, tok, ';')) {
          auto rn = parse_ints(tok);
          campaign.uniform_grid.emplace_back(rn.at(0), rn.at(1));
        }
      }
      auto result = bghc::run_campaign(campaign);
      json report = bghc::campaign_report(campaign, result);
      if (!out_path.empty()) {
        std::ofstream out(out_path);
        out << report.dump(2) << "\n";
      }
      size_t fails = 0, capped = 0;
      for (const auto& r : result.records) {
        if (r.status == "FAIL") ++fails;
        if (r.status == "CAPPED-PASS") ++capped;
      }
      std::cout << (result.pass ? "PASS" : "FAIL") << ": " << result.records.size()
                << " records, " << capped << " capped-pass, " << fails << " fail\n";
      if (!result.pass) {
        for (const auto& r : result.records)
          if (r.status == "FAIL")
            std::cout << "  FAIL " << r.instance << " edge=(" << r.edge_u << "," << r.edge_v
                      << ") note=" << r.note << "\n";
        return 1;
      }
    } else if (*cmd_export) {
      auto inst = build_instance(inst_args);
      std::vector<std::pair<int, int>> highlights;
      if (!edge_str.empty()) {
        auto [u, v] = parse_edge(edge_str);
        for (const auto& gc : inst->template_good_cycles(u, v))
          for (const auto& e : bghc::good_cycle_edges(gc)) highlights.push_back(e);
      }
      std::cout << bghc::export_dot(inst->family(), inst->graph(), highlights);
    }
  } catch (const bghc::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == "BadParams" ? 2 : 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
