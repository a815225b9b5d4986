#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "heckepaths/fusion.hpp"
#include "heckepaths/graphs.hpp"
#include "heckepaths/hecke.hpp"
#include "heckepaths/identities.hpp"
#include "heckepaths/traces.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

constexpr int kExitPass = 0;
constexpr int kExitBreach = 1;
constexpr int kExitConfig = 2;
constexpr int kExitCap = 3;

struct Options {
  int k = 0, n = 0;
  std::string ade;
  int lmax = 1;
  bool expand = false;
  std::vector<std::string> suites;
  std::string out;
  std::string format = "json";
  std::size_t cap = hk::kDefaultPathCap;
  int jobs = 0;
  double tol = 0.0;  // 0 keeps the per-suite defaults
};

std::string fmt15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

hk::GraphRep make_graph(const Options& o) {
  if (!o.ade.empty()) {
    if (o.k || o.n) throw CLI::ValidationError("give either --ade or --k/--n, not both");
    return hk::ade_graph(o.ade);
  }
  if (o.k < 2 || o.n < o.k + 1)
    throw CLI::ValidationError("need --ade or a valid --k/--n pair");
  return hk::basic_graph(hk::RankLevel(o.k, o.n));
}

void write_output(const Options& o, const std::string& text) {
  std::string path = o.out;
  if (path.empty()) {
    const char* dir = std::getenv("HECKEPATHS_OUTDIR");
    if (dir && *dir) path = std::string(dir) + "/report." + (o.format == "csv" ? "csv" : "jsonl");
  }
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open output file " + path);
  f << text;
}

nlohmann::ordered_json matrix_json(const hk::CMat& m) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (int r = 0; r < m.rows(); ++r) {
    nlohmann::ordered_json row = nlohmann::ordered_json::array();
    for (int c = 0; c < m.cols(); ++c)
      row.push_back({fmt15(m(r, c).real()), fmt15(m(r, c).imag())});
    rows.push_back(row);
  }
  return rows;
}

int cmd_graph(const Options& o) {
  hk::GraphRep g = make_graph(o);
  write_output(o, hk::graph_to_json(g) + "\n");
  return kExitPass;
}

int cmd_trace(const Options& o) {
  hk::GraphRep g = make_graph(o);
  hk::TraceFamily fam = hk::build_traces(g, o.lmax);
  hk::FusionBasis basis;
  if (o.expand && g.basic()) basis = hk::build_fusion_basis(g);
  std::string text;
  for (int L = 1; L <= o.lmax; ++L) {
    for (int kind = 0; kind < 2; ++kind) {
      nlohmann::ordered_json j;
      j["graph"] = g.kind;
      j["k"] = g.rl.k;
      j["n"] = g.rl.n;
      j["L"] = L;
      j["kind"] = kind ? "Ztilde" : "Z";
      j["matrix"] = matrix_json(kind ? fam.Zt[L]
                                     : hk::CMat(fam.Z[L].cast<std::complex<double>>()));
      if (o.expand && g.basic()) {
        hk::Expansion e = hk::n_expand(
            g, basis, kind ? fam.Zt[L] : hk::CMat(fam.Z[L].cast<std::complex<double>>()));
        nlohmann::ordered_json coeffs = nlohmann::ordered_json::object();
        for (int l = 0; l < g.size(); ++l)
          if (std::abs(e.z(l)) > 1e-12)
            coeffs[g.labels[l]] = {fmt15(e.z(l).real()), fmt15(e.z(l).imag())};
        j["expansion"] = coeffs;
        j["expansion_residual"] = fmt15(e.residual);
      }
      text += j.dump();
      text += '\n';
    }
  }
  write_output(o, text);
  return kExitPass;
}

bool suite_selected(const Options& o, const std::string& name) {
  if (o.suites.empty()) return true;
  for (const auto& s : o.suites)
    if (s == "all" || s == name) return true;
  return false;
}

int cmd_verify(const Options& o) {
  static const std::vector<std::string> known = {
      "all",          "relations",    "oracle",       "recursion-tilde",
      "recursion-z",  "recursion-cross", "tables",    "n-tables",
      "hooks",        "closed-forms", "markov",       "universality",
      "trig",         "quotient-chain", "partial-trace", "fusion-ring"};
  for (const auto& s : o.suites) {
    bool ok = false;
    for (const auto& k : known) ok = ok || s == k;
    if (!ok) throw CLI::ValidationError("unknown suite: " + s);
  }
  hk::GraphRep g = make_graph(o);
  const int k = g.rl.k;
  auto tol = [&](double dflt) { return o.tol > 0 ? o.tol : dflt; };
  hk::ReportList all;
  auto add = [&](hk::ReportList r) {
    for (auto& x : r) all.push_back(std::move(x));
  };
  hk::TraceFamily fam = hk::build_traces(g, o.lmax);
  if (suite_selected(o, "relations")) add(hk::verify_relations(g, std::min(o.lmax, 6), tol(1e-9)));
  if (suite_selected(o, "oracle"))
    add(hk::verify_oracle(g, std::min(o.lmax, 6), tol(1e-9), 10000, o.cap));
  if (suite_selected(o, "recursion-tilde")) add(hk::verify_recursion_tilde(g, fam, tol(1e-8)));
  if (suite_selected(o, "recursion-z")) add(hk::verify_recursion_z(g, fam, tol(1e-8)));
  if (suite_selected(o, "recursion-cross")) add(hk::verify_cross_consistency(g, fam, tol(1e-8)));
  if (suite_selected(o, "tables")) add(hk::verify_polynomial_tables(g, fam, tol(1e-8)));
  if (g.basic() && suite_selected(o, "n-tables")) add(hk::verify_n_tables(g, fam, tol(1e-8)));
  if (g.basic() && suite_selected(o, "hooks")) add(hk::verify_hook_expansion(g, fam, tol(1e-8)));
  if (k <= 3 && suite_selected(o, "closed-forms")) add(hk::verify_closed_forms(g, fam, tol(1e-8)));
  if (suite_selected(o, "markov")) add(hk::verify_markov(g, fam, tol(1e-9)));
  if (!g.basic() && suite_selected(o, "universality"))
    add(hk::verify_universality(g, o.lmax, tol(1e-8)));
  if (g.basic() && k == 3 && suite_selected(o, "trig"))
    add(hk::verify_trig_identity(g.rl, tol(1e-9)));
  if (k <= 3 && o.lmax >= k + 2 && suite_selected(o, "quotient-chain"))
    add(hk::verify_quotient_chain(g, std::min(o.lmax, k + 4), tol(1e-8)));
  if (g.basic() && k == 3 && suite_selected(o, "partial-trace"))
    add(hk::verify_partial_trace(g, tol(1e-9)));
  if (g.basic() && suite_selected(o, "fusion-ring")) add(hk::verify_fusion_ring(g));
  write_output(o, o.format == "csv" ? hk::reports_to_csv(all) : hk::reports_to_jsonl(all));
  for (const auto& r : all)
    if (!r.pass) return kExitBreach;
  return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"path representations of the Hecke algebra: graphs, traces, identities"};
  app.require_subcommand(1);
  Options o;

  auto add_common = [&](CLI::App* cmd, bool with_l) {
    cmd->add_option("--k", o.k, "rank parameter (basic graph)");
    cmd->add_option("--n", o.n, "cutoff n, q = exp(i pi / n)");
    cmd->add_option("--ade", o.ade, "ADE graph name (A4, D4, E6, ...)");
    cmd->add_option("--out", o.out, "output file (default stdout or $HECKEPATHS_OUTDIR)");
    cmd->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--cap", o.cap, "path-space dimension cap")->check(CLI::PositiveNumber);
    cmd->add_option("--jobs", o.jobs, "worker threads for the kernels");
    if (with_l)
      cmd->add_option("--L,--Lmax", o.lmax, "maximal trace length")->check(CLI::PositiveNumber);
  };

  CLI::App* cg = app.add_subcommand("graph", "dump a graph as JSON");
  add_common(cg, false);
  CLI::App* ct = app.add_subcommand("trace", "compute Z and Ztilde matrices");
  add_common(ct, true);
  ct->add_flag("--expand", o.expand, "attach fusion-basis coefficients");
  CLI::App* cv = app.add_subcommand("verify", "run identity suites");
  add_common(cv, true);
  cv->add_option("--suite", o.suites, "suite ids (repeatable; default all)");
  cv->add_option("--tol", o.tol, "tolerance override for every suite");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitPass : kExitConfig;
  }

#ifdef _OPENMP
  if (o.jobs > 0) omp_set_num_threads(o.jobs);
#endif

  try {
    if (app.got_subcommand("graph")) return cmd_graph(o);
    if (app.got_subcommand("trace")) return cmd_trace(o);
    return cmd_verify(o);
  } catch (const hk::CapExceeded& e) {
    std::cerr << e.what() << "\n";
    return kExitCap;
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << e.what() << "\n";
    return kExitConfig;
  }
}
