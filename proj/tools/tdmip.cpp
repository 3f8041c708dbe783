#include "verify.hpp"

#include <tdm/colpipe.hpp>
#include <tdm/errors.hpp>
#include <tdm/formats.hpp>
#include <tdm/instances.hpp>
#include <tdm/matrix.hpp>
#include <tdm/rowpipe.hpp>
#include <tdm/stableset.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

using namespace tdm;

namespace {

enum Exit { ok = 0, infeasible = 1, input_error = 2, cap_exceeded = 3 };

int env_cap(const char* name, int fallback) {
  if (const char* v = std::getenv(name)) {
    int k = std::atoi(v);
    if (k > 0) return k;
  }
  return fallback;
}

std::string first_token(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw InputError("cannot open '" + path + "'");
  std::string line;
  while (std::getline(f, line)) {
    if (auto p = line.find('#'); p != std::string::npos) line.erase(p);
    std::istringstream ss(line);
    std::string t;
    if (ss >> t) return t;
  }
  throw InputError("'" + path + "' is empty");
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw InputError("cannot write '" + out + "'");
  f << text;
}

nlohmann::ordered_json set_json(const VertexSet& s) {
  auto a = nlohmann::ordered_json::array();
  for (int v : s) a.push_back(v);
  return a;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"tdmip: integer programs with bounded subdeterminants and stable sets"};
  app.require_subcommand(1);
  bool json_out = false;
  app.add_flag("--json", json_out, "JSON output where text is the default");

  // solve-ip
  auto* solve_ip = app.add_subcommand("solve-ip", "solve a two-per-row or two-per-column IP");
  bool rows = false, cols = false;
  std::int64_t delta = 0;
  std::string file;
  auto* fr = solve_ip->add_flag("--rows", rows, "at most two nonzeros per row");
  auto* fc = solve_ip->add_flag("--cols", cols, "at most two nonzeros per column");
  fr->excludes(fc);
  solve_ip->add_option("--delta", delta, "subdeterminant bound")->required()->check(CLI::PositiveNumber);
  solve_ip->add_option("file", file, "IP file")->required();

  // solve-stableset
  auto* solve_ss = app.add_subcommand("solve-stableset", "maximum weight (VW) or minimum slack cost (E costs) stable set");
  solve_ss->add_option("file", file, "GRAPH file")->required();

  // analyze
  auto* analyze = app.add_subcommand("analyze", "graph and matrix parameters");
  std::string what;
  int rho = 1;
  analyze->add_option("what", what, "ocp | oct | delta | resilience")->required()->check(
      CLI::IsMember({"ocp", "oct", "delta", "resilience"}));
  analyze->add_option("file", file, "GRAPH or IP file")->required();
  analyze->add_option("--rho", rho, "deletion budget for resilience")->check(CLI::NonNegativeNumber);

  // gen
  auto* gen = app.add_subcommand("gen", "instance generators");
  std::string kind, out;
  int height = 3, n = 6, m = 8;
  std::uint64_t seed = 1;
  bool gen_cols = false;
  gen->add_option("kind", kind, "wall | escher | random-ip | k4n1")->required()->check(
      CLI::IsMember({"wall", "escher", "random-ip", "k4n1"}));
  gen->add_option("height", height, "wall height");
  gen->add_option("--n", n, "variables")->check(CLI::PositiveNumber);
  gen->add_option("--m", m, "constraints")->check(CLI::PositiveNumber);
  gen->add_option("--delta", delta, "target subdeterminant bound");
  gen->add_flag("--cols", gen_cols, "two nonzeros per column instead of per row");
  gen->add_option("--seed", seed, "random seed");
  gen->add_option("-o,--output", out, "output file");

  // verify
  auto* verify = app.add_subcommand("verify", "randomized self-checks against exhaustive oracles");
  std::string suite;
  int trials = 20;
  verify->add_option("suite", suite, "prop-dual | gadget | rowpipe | colpipe | slack")->required()->check(
      CLI::IsMember({"prop-dual", "gadget", "rowpipe", "colpipe", "slack"}));
  verify->add_option("--trials", trials, "number of trials")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    if (rc == 0) return Exit::ok;
    std::cerr << app.help();
    return Exit::input_error;
  }

  try {
    if (*solve_ip) {
      if (!rows && !cols) throw InputError("solve-ip: one of --rows / --cols is required");
      auto ip = load_ip(file);
      IPResult r = rows ? solve_two_per_row(ip, delta).result : solve_two_per_column(ip, delta).result;
      std::cout << ip_result_to_json(r) << '\n';
      return r.status == IPStatus::infeasible ? Exit::infeasible : Exit::ok;
    }
    if (*solve_ss) {
      auto gf = load_graph(file);
      nlohmann::ordered_json j;
      if (!gf.vweight.empty()) {
        auto r = max_weight_stable_set(gf.g, gf.vweight);
        j["mode"] = "weight";
        j["set"] = set_json(r.set);
        j["value"] = to_string(r.value);
      } else {
        auto inst = StableSetInstance::from_costs(gf.g, gf.cost);
        auto r = max_weight_stable_set(inst.g, inst.w);
        j["mode"] = "cost";
        j["set"] = set_json(r.set);
        j["value"] = to_string(slack_cost(inst, r.set));
      }
      std::cout << j.dump(2) << '\n';
      return Exit::ok;
    }
    if (*analyze) {
      const int cap = env_cap("TDM_OCP_CAP", kOcpCap);
      if (what == "delta") {
        RationalMatrix a;
        if (first_token(file) == "IP") a = load_ip(file).A;
        else a = incidence_matrix(load_graph(file).g);
        auto cert = max_abs_subdeterminant(a, std::min(a.rows(), a.cols()));
        if (json_out) std::cout << nlohmann::ordered_json{{"delta", cert.delta}}.dump() << '\n';
        else std::cout << "delta = " << cert.delta << '\n';
        return Exit::ok;
      }
      auto g = load_graph(file).g;
      if (what == "ocp" || what == "oct") {
        int v = what == "ocp" ? ocp_brute(g, cap) : oct_brute(g, env_cap("TDM_OCT_CAP", kOctCap));
        if (json_out) std::cout << nlohmann::ordered_json{{what, v}}.dump() << '\n';
        else std::cout << what << " = " << v << '\n';
        return Exit::ok;
      }
      auto rep = resilience_check(g, rho, cap);
      if (json_out) {
        nlohmann::ordered_json j{{"resilient", rep.resilient}, {"ocp", rep.ocp}, {"witness", set_json(rep.witness)}};
        std::cout << j.dump() << '\n';
      } else {
        std::cout << "ocp = " << rep.ocp << '\n' << "resilient(" << rho << ") = " << (rep.resilient ? "yes" : "no") << '\n';
      }
      return Exit::ok;
    }
    if (*gen) {
      if (kind == "wall" || kind == "escher") {
        auto w = kind == "wall" ? elementary_wall(height) : escher_wall(height);
        emit(write_graph(w.g), out);
      } else if (kind == "k4n1") {
        emit(write_embed(k4_projective_fixture()), out);
      } else {
        IPGenOptions o;
        o.n = n;
        o.m = m;
        o.delta_target = delta > 0 ? delta : 2;
        auto ip = gen_cols ? random_two_per_column_ip(seed, o) : random_two_per_row_ip(seed, o);
        emit(write_ip(ip), out);
      }
      return Exit::ok;
    }
    if (*verify) {
      auto r = tdmcli::run_suite(suite, trials, seed);
      std::cout << (r.passed == r.trials ? "PASS " : "FAIL ") << r.passed << '/' << r.trials << '\n';
      if (!r.first_failure.empty()) std::cerr << r.first_failure << '\n';
      return r.passed == r.trials ? Exit::ok : Exit::infeasible;
    }
  } catch (const CapExceeded& e) {
    std::cerr << "cap exceeded: " << e.what() << '\n';
    return Exit::cap_exceeded;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return Exit::input_error;
  } catch (const NotDeltaModular& e) {
    std::cerr << "delta promise violated: " << e.what() << '\n';
    return Exit::input_error;
  } catch (const PreconditionError& e) {
    std::cerr << "precondition failed: " << e.what() << '\n';
    return Exit::input_error;
  }
  return Exit::input_error;
}
