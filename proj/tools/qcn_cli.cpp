// qcn: conflict graphs, rate regions, schedules and simulations for storage QCN models.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qcn/classify.hpp"
#include "qcn/error.hpp"
#include "qcn/pipeline.hpp"
#include "qcn/rate_region.hpp"
#include "qcn/report.hpp"
#include "qcn/scheduling.hpp"
#include "qcn/simulation.hpp"

namespace {

struct RunConfig {
  std::string config_path;
  std::string out;
  std::string pattern;
  std::string io = "finite";
  bool coded = false;
  bool dnt = false;
  std::string rates;
  std::string policy = "frame";
  std::string format = "adjacency";
  std::int64_t horizon = 100000;
  std::uint64_t seed = 1;
  int precision = 4;
};

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(cfg.out, std::ios::binary);
  if (!f) throw qcn::Error("cannot write " + cfg.out);
  f << text;
}

qcn::Analysis load(const RunConfig& cfg) {
  qcn::SystemDescription desc = qcn::load_system_description(cfg.config_path);
  qcn::AnalysisOptions opt;
  if (!cfg.pattern.empty()) opt.pattern = qcn::parse_pattern(cfg.pattern);
  opt.io = qcn::parse_io_regime(cfg.io);
  opt.coded = cfg.coded;
  opt.do_not_transmit = cfg.dnt;
  return qcn::analyze(desc, opt);
}

std::vector<qcn::Rational> require_rates(const RunConfig& cfg) {
  if (cfg.rates.empty()) throw qcn::Error("--rates is required");
  return qcn::parse_rational_list(cfg.rates);
}

int cmd_graph(const RunConfig& cfg) {
  auto a = load(cfg);
  if (cfg.format == "adjacency")
    emit(cfg, qcn::export_adjacency(a.graph));
  else if (cfg.format == "edges")
    emit(cfg, qcn::export_edge_list(a.graph));
  else
    throw qcn::Error("unknown graph format '" + cfg.format + "' (expected adjacency or edges)");
  return 0;
}

int cmd_props(const RunConfig& cfg) {
  auto a = load(cfg);
  emit(cfg, qcn::format_report(a.graph, qcn::classify(a.graph)));
  return 0;
}

int cmd_region(const RunConfig& cfg) {
  auto a = load(cfg);
  qcn::RateRegion region(a.graph);
  std::string text = qcn::export_region(region);
  if (cfg.precision != 4) text += "volume_decimal " + qcn::to_decimal(region.volume(), cfg.precision) + "\n";
  emit(cfg, text);
  return 0;
}

int cmd_schedule(const RunConfig& cfg) {
  auto a = load(cfg);
  qcn::RateRegion region(a.graph);
  auto dec = qcn::decompose_rate(region, require_rates(cfg));
  auto schedule = qcn::build_frame_schedule(dec);
  std::ostringstream os;
  os << "# frame " << schedule.frame << "\n# margin " << qcn::to_string(dec.margin) << "\n# phi";
  for (const auto& p : dec.phi) os << " " << qcn::to_string(p);
  os << "\n";
  os << qcn::export_schedule(a.graph, region.family(), schedule);
  emit(cfg, os.str());
  return 0;
}

int cmd_simulate(const RunConfig& cfg) {
  auto a = load(cfg);
  qcn::RateRegion region(a.graph, {.max_volume_dim = 0});
  auto rates = require_rates(cfg);
  std::vector<qcn::Rational> all = region.to_all_flows(region.to_active(rates));
  qcn::Policy policy = qcn::Policy::online();
  if (cfg.policy == "frame")
    policy = qcn::Policy::frame(qcn::build_frame_schedule(qcn::decompose_rate(region, rates)));
  else if (cfg.policy != "online")
    throw qcn::Error("unknown policy '" + cfg.policy + "' (expected frame or online)");
  std::optional<qcn::CodedContext> ctx;
  if (a.transform) ctx = qcn::CodedContext{&a.transform->system, &*a.layout, qcn::DofMode::Exact};
  auto trace = qcn::simulate(a.graph, region.family(), policy, qcn::ArrivalProcess(all, cfg.seed), cfg.horizon, ctx);
  if (!cfg.out.empty()) emit(cfg, qcn::export_trace(trace));
  std::cout << qcn::format_verdict(qcn::stability_verdict(trace)) << "\n";
  return 0;
}

int cmd_compare(const RunConfig& cfg) {
  qcn::SystemDescription desc = qcn::load_system_description(cfg.config_path);
  qcn::StorageSystem base = qcn::build_system(desc);
  auto table = qcn::compare_volumes(base, qcn::coded_layout_for(desc, base));
  emit(cfg, qcn::format_compare(table));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rate regions and schedules for storage networks modelled as queued cross-bar networks"};
  app.require_subcommand(1, 1);
  RunConfig cfg;

  auto common = [&](CLI::App* sub) {
    sub->add_option("config", cfg.config_path, "system description file")->required();
    sub->add_option("--pattern", cfg.pattern, "traffic pattern override");
    sub->add_option("--io", cfg.io, "I/O regime: finite or infinite");
    sub->add_flag("--coded", cfg.coded, "analyse the coded-storage upper bound");
    sub->add_flag("--dnt", cfg.dnt, "add do-not-transmit vertices");
    sub->add_option("--out", cfg.out, "output file (default stdout)");
  };

  auto graph = app.add_subcommand("graph", "export the conflict graph");
  common(graph);
  graph->add_option("--format", cfg.format, "adjacency or edges");
  auto props = app.add_subcommand("props", "classify the conflict graph");
  common(props);
  auto region = app.add_subcommand("region", "V/H representation and volume of the rate region");
  common(region);
  region->add_option("--precision", cfg.precision, "additional decimal rendering of the volume")->check(CLI::Range(0, 30));
  auto schedule = app.add_subcommand("schedule", "frame schedule for a rate vector");
  common(schedule);
  schedule->add_option("--rates", cfg.rates, "r11,r12,... (i-major)");
  auto simulate = app.add_subcommand("simulate", "queueing simulation and stability verdict");
  common(simulate);
  simulate->add_option("--rates", cfg.rates, "r11,r12,... (i-major)");
  simulate->add_option("--policy", cfg.policy, "frame or online");
  simulate->add_option("--horizon", cfg.horizon, "slots")->check(CLI::PositiveNumber);
  simulate->add_option("--seed", cfg.seed, "arrival seed");
  auto compare = app.add_subcommand("compare", "uncoded vs coded volumes across traffic patterns");
  compare->add_option("config", cfg.config_path, "system description file")->required();
  compare->add_option("--out", cfg.out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*graph) return cmd_graph(cfg);
    if (*props) return cmd_props(cfg);
    if (*region) return cmd_region(cfg);
    if (*schedule) return cmd_schedule(cfg);
    if (*simulate) return cmd_simulate(cfg);
    if (*compare) return cmd_compare(cfg);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
