#include <CLI11.hpp>

#include <fstream>
#include <iostream>

#include "skewrank/io.hpp"
#include "skewrank/suites.hpp"

namespace {

using nlohmann::json;
using namespace skewrank;

struct GlobalOpts {
  std::string config_path;
  std::string out_path;
  std::uint64_t cap = 1ull << 26;
  int workers = 1;
  std::uint64_t seed = 12345;
};

json load_config(const GlobalOpts& g) {
  std::ifstream in(g.config_path);
  if (!in) throw std::runtime_error("cannot open config file: " + g.config_path);
  json cfg;
  in >> cfg;
  return cfg;
}

void emit(const GlobalOpts& g, const json& report) {
  const std::string text = report.dump(2) + "\n";
  if (g.out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(g.out_path);
    if (!out) throw std::runtime_error("cannot open output file: " + g.out_path);
    out << text;
  }
}

std::vector<codes::Code> load_codes(const json& cfg) {
  std::vector<codes::Code> cs;
  if (cfg.contains("codes"))
    for (const auto& spec : cfg["codes"]) cs.push_back(io::code_from_json(cfg, spec));
  return cs;
}

json resolved_for(const json& cfg, const std::vector<codes::Code>& cs) {
  json r;
  if (!cs.empty() && cs[0].is_quot())
    r["ring"] = io::ring_resolved_json(*cs[0].ring());
  else if (cfg.contains("field"))
    r["field"] = io::tower_resolved_json(*io::tower_from_json(cfg["field"]));
  return r;
}

void add_global(CLI::App* cmd, GlobalOpts& g) {
  cmd->add_option("--config", g.config_path, "path to the JSON run configuration")->required();
  cmd->add_option("--out", g.out_path, "output path for the JSON report (stdout when omitted)");
  cmd->add_option("--cap", g.cap, "codeword enumeration cap");
  cmd->add_option("--workers", g.workers, "worker threads for enumeration");
  cmd->add_option("--seed", g.seed, "seed for randomized property batteries");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact constructions and equivalence invariants for sum-rank metric codes"};
  app.require_subcommand(1);

  GlobalOpts g;
  std::string s_pattern = "1";
  std::string suite_name;

  CLI::App* c_construct = app.add_subcommand("construct", "build a code and persist its basis");
  CLI::App* c_weights = app.add_subcommand("weights", "exact weight distribution report");
  CLI::App* c_msrd = app.add_subcommand("msrd-check", "minimum distance against the size bound");
  CLI::App* c_ideal = app.add_subcommand("idealiser", "generalised idealiser for a block pattern");
  CLI::App* c_nuclear = app.add_subcommand("nuclear", "nuclear parameters with ring fingerprints");
  CLI::App* c_dist = app.add_subcommand("distinguish", "inequivalence certificate for two codes");
  CLI::App* c_verify = app.add_subcommand("verify-theorem", "run a named verification suite");
  for (CLI::App* cmd : {c_construct, c_weights, c_msrd, c_ideal, c_nuclear, c_dist, c_verify})
    add_global(cmd, g);
  c_ideal->add_option("--s", s_pattern, "bit pattern, one digit per block, 1 = left action");
  c_verify->add_option("--suite", suite_name, "suite name")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    const json cfg = load_config(g);
    if (c_construct->parsed()) {
      auto cs = load_codes(cfg);
      if (cs.empty()) throw std::runtime_error("config has no codes");
      json rep = io::report_envelope("construct", cfg);
      rep["resolved"] = resolved_for(cfg, cs);
      json arr = json::array();
      for (const auto& c : cs) arr.push_back(io::code_summary_json(c));
      rep["result"] = arr;
      emit(g, rep);
      return 0;
    }
    if (c_weights->parsed() || c_msrd->parsed()) {
      auto cs = load_codes(cfg);
      if (cs.empty()) throw std::runtime_error("config has no codes");
      json rep = io::report_envelope(c_weights->parsed() ? "weights" : "msrd-check", cfg);
      rep["resolved"] = resolved_for(cfg, cs);
      json arr = json::array();
      for (const auto& c : cs) {
        codes::CodeReport cr = codes::weight_distribution(c, g.cap, g.workers);
        json jr = io::code_report_to_json(c.p(), cr);
        if (c_msrd->parsed()) {
          jr["summary"] = cr.msrd && cr.nondegenerate
                              ? "maximum sum-rank distance, nondegenerate"
                              : (cr.msrd ? "maximum sum-rank distance" : "below the size bound");
        }
        arr.push_back(jr);
      }
      rep["result"] = arr;
      emit(g, rep);
      return 0;
    }
    if (c_ideal->parsed()) {
      auto cs = load_codes(cfg);
      if (cs.empty()) throw std::runtime_error("config has no codes");
      const codes::Code& c0 = cs[0];
      std::vector<int> s;
      for (char ch : s_pattern) s.push_back(ch == '1' ? 1 : 0);
      json rep = io::report_envelope("idealiser", cfg);
      rep["resolved"] = resolved_for(cfg, cs);
      bool all_ones = std::all_of(s.begin(), s.end(), [](int b) { return b == 1; });
      bool all_zero = std::all_of(s.begin(), s.end(), [](int b) { return b == 0; });
      inv::Subring sub = [&]() {
        if (c0.is_quot()) {
          if (all_ones) return inv::left_idealiser(c0);
          if (all_zero) return inv::right_idealiser(c0);
          return inv::s_idealiser(codes::to_matrix_code(c0), s);
        }
        return inv::s_idealiser(c0, s);
      }();
      json jr = io::subring_to_json(sub);
      jr["fingerprint"] = io::fingerprint_to_json(c0.p(), inv::fingerprint(sub));
      jr["pattern"] = s_pattern;
      rep["result"] = jr;
      emit(g, rep);
      return 0;
    }
    if (c_nuclear->parsed()) {
      auto cs = load_codes(cfg);
      if (cs.empty()) throw std::runtime_error("config has no codes");
      json rep = io::report_envelope("nuclear", cfg);
      rep["resolved"] = resolved_for(cfg, cs);
      json arr = json::array();
      for (const auto& c : cs)
        arr.push_back(io::nuclear_to_json(c.p(), inv::nuclear_parameters(c, inv::kDefaultRingCap, g.cap)));
      rep["result"] = arr;
      emit(g, rep);
      return 0;
    }
    if (c_dist->parsed()) {
      auto cs = load_codes(cfg);
      if (cs.size() != 2) throw std::runtime_error("distinguish needs exactly two codes");
      inv::DistinguishOptions opt;
      opt.enum_cap = g.cap;
      opt.workers = g.workers;
      inv::DistinguishResult d = inv::distinguish(cs[0], cs[1], opt);
      json rep = io::report_envelope("distinguish", cfg);
      rep["resolved"] = resolved_for(cfg, cs);
      json jr = io::distinguish_to_json(cs[0].p(), d);
      jr["codes"] = json::array({io::code_summary_json(cs[0]), io::code_summary_json(cs[1])});
      rep["result"] = jr;
      emit(g, rep);
      return d.verdict == inv::Verdict::undetermined ? 2 : 0;
    }
    if (c_verify->parsed()) {
      auto cs = load_codes(cfg);
      gf::TowerPtr tw;
      if (cfg.contains("field")) tw = io::tower_from_json(cfg["field"]);
      suites::SuiteOptions opt;
      opt.enum_cap = g.cap;
      opt.workers = g.workers;
      opt.seed = g.seed;
      if (cfg.contains("suite") && cfg["suite"].contains("battery_size"))
        opt.battery_size = cfg["suite"]["battery_size"].get<int>();
      suites::SuiteResult sr = suites::run_named_suite(suite_name, cs, tw, opt);
      json rep = io::report_envelope("verify-theorem", cfg);
      rep["resolved"] = resolved_for(cfg, cs);
      json jr;
      jr["suite"] = sr.suite;
      jr["status"] = sr.status;
      if (!sr.reason.empty()) jr["reason"] = sr.reason;
      json checks = json::array();
      for (const auto& c : sr.checks)
        checks.push_back(json{{"name", c.name},
                              {"pass", c.pass},
                              {"expected", c.expected},
                              {"got", c.got}});
      jr["checks"] = checks;
      rep["result"] = jr;
      emit(g, rep);
      return sr.status == "FAIL" ? 1 : 0;
    }
  } catch (const std::exception& ex) {
    json err{{"schema_version", 1}, {"error", ex.what()}};
    std::cerr << err.dump(2) << "\n";
    return 1;
  }
  return 1;
}
