// Acceptance gate: one line per criterion, exit 0 iff all pass.
#include <chrono>
#include <cstdio>
#include <string>
#include <vector>

#include "heckepaths/identities.hpp"

using namespace hk;

namespace {

using Clock = std::chrono::steady_clock;

struct Gate {
  int failures = 0;

  void line(int idx, const std::string& name, bool pass, double resid, double secs,
            const std::string& note) {
    std::printf("%s  %d. %-46s max residual %.3g  (%.1fs)%s%s\n", pass ? "PASS" : "FAIL",
                idx, name.c_str(), resid, secs, note.empty() ? "" : "  ", note.c_str());
    if (!pass) ++failures;
  }
};

struct Acc {
  double resid = 0.0;
  bool ok = true;
  std::string note;

  void add(const ReportList& reports) {
    for (const auto& r : reports) {
      resid = std::max(resid, r.residual);
      if (!r.pass && ok) {
        ok = false;
        note = r.id + " " + r.params + " " + r.detail;
      }
    }
  }
};

double secs_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

std::vector<GraphRep> basic_grid(int nmax_off = 6) {
  std::vector<GraphRep> gs;
  for (int k = 2; k <= 4; ++k)
    for (int n = k + 2; n <= k + nmax_off; ++n) gs.push_back(basic_graph(RankLevel(k, n)));
  return gs;
}

}  // namespace

int main() {
  Gate gate;
  const std::vector<std::string> ade_small = {"A4", "D4", "E6"};
  const std::vector<std::string> ade_full = {"A4", "A5", "D4", "D5", "E6"};

  {  // 1. generator relations and the quotient
    auto t0 = Clock::now();
    Acc a;
    for (const auto& g : basic_grid()) {
      a.add(verify_relations(g, 6, 1e-9));
    }
    for (const auto& name : ade_small) a.add(verify_relations(ade_graph(name), 6, 1e-9));
    double t = secs_since(t0);
    bool in_budget = t <= 60.0;
    gate.line(1, "Hecke/braid relations and quotient", a.ok && in_budget, a.resid, t,
              in_budget ? a.note : "over the 60s budget");
  }

  {  // 2. contraction vs brute-force oracle
    auto t0 = Clock::now();
    Acc a;
    for (const auto& g : basic_grid()) a.add(verify_oracle(g, 6, 1e-9));
    for (const auto& name : ade_small) a.add(verify_oracle(ade_graph(name), 6, 1e-9));
    double t = secs_since(t0);
    bool in_budget = t <= 120.0;
    gate.line(2, "trace oracle equivalence", a.ok && in_budget, a.resid, t,
              in_budget ? a.note : "over the 120s budget");
  }

  {  // 3. tabulated expansions in the G's and in the fusion basis
    auto t0 = Clock::now();
    Acc a;
    for (int k = 3; k <= 5; ++k) {
      GraphRep g = basic_graph(RankLevel(k, k + 3));
      TraceFamily fam = build_traces(g, 5);
      a.add(verify_polynomial_tables(g, fam, 1e-8));
      a.add(verify_n_tables(g, fam, 1e-8));
    }
    gate.line(3, "polynomial and fusion-basis tables", a.ok, a.resid, secs_since(t0), a.note);
  }

  {  // 4. recursions in L, plus regeneration from the recursion alone
    auto t0 = Clock::now();
    Acc a;
    for (const auto& g : basic_grid()) {
      TraceFamily fam = build_traces(g, 9);
      a.add(verify_recursion_tilde(g, fam, 1e-8));
      a.add(verify_recursion_z(g, fam, 1e-8));
      a.add(verify_cross_consistency(g, fam, 1e-8));
    }
    for (const auto& name : ade_full) {
      GraphRep g = ade_graph(name);
      TraceFamily fam = build_traces(g, 9);
      a.add(verify_recursion_tilde(g, fam, 1e-8));
      a.add(verify_recursion_z(g, fam, 1e-8));
      a.add(verify_cross_consistency(g, fam, 1e-8));
    }
    gate.line(4, "recursion formulae and cross-consistency", a.ok, a.resid, secs_since(t0),
              a.note);
  }

  {  // 5. closed forms and the hook expansion
    auto t0 = Clock::now();
    Acc a;
    for (int n = 4; n <= 8; ++n) {
      GraphRep g = basic_graph(RankLevel(2, n));
      TraceFamily fam = build_traces(g, 12);
      a.add(verify_closed_forms(g, fam, 1e-8));
    }
    for (const auto& name : ade_full) {
      GraphRep g = ade_graph(name);
      TraceFamily fam = build_traces(g, 12);
      a.add(verify_closed_forms(g, fam, 1e-8));
    }
    for (int n = 5; n <= 9; ++n) {
      GraphRep g = basic_graph(RankLevel(3, n));
      TraceFamily fam = build_traces(g, 10);
      a.add(verify_closed_forms(g, fam, 1e-8));
    }
    for (int k = 2; k <= 4; ++k)
      for (int n = k + 2; n <= k + 6; ++n) {
        GraphRep g = basic_graph(RankLevel(k, n));
        TraceFamily fam = build_traces(g, 8);
        a.add(verify_hook_expansion(g, fam, 1e-8));
      }
    gate.line(5, "closed forms and hook expansions", a.ok, a.resid, secs_since(t0), a.note);
  }

  {  // 6. Markov identities on every constructed graph
    auto t0 = Clock::now();
    Acc a;
    for (const auto& g : basic_grid()) {
      TraceFamily fam = build_traces(g, 9);
      a.add(verify_markov(g, fam, 1e-9));
    }
    for (int k = 3; k <= 5; ++k) {
      GraphRep g = basic_graph(RankLevel(k, k + 3));
      TraceFamily fam = build_traces(g, 9);
      a.add(verify_markov(g, fam, 1e-9));
    }
    for (const auto& name : ade_full) {
      GraphRep g = ade_graph(name);
      TraceFamily fam = build_traces(g, 9);
      a.add(verify_markov(g, fam, 1e-9));
    }
    gate.line(6, "Markov edge sums and averages", a.ok, a.resid, secs_since(t0), a.note);
  }

  {  // 7. universality of the fusion-basis coefficients
    auto t0 = Clock::now();
    Acc a;
    for (const auto& name : {"A4", "A5", "D4", "D5", "E6", "E7", "E8"})
      a.add(verify_universality(ade_graph(name), 8, 1e-8));
    gate.line(7, "universality across ADE graphs", a.ok, a.resid, secs_since(t0), a.note);
  }

  {  // 8. antisymmetrizer chain, trigonometric and partial-trace identities
    auto t0 = Clock::now();
    Acc a;
    for (int n : {6, 7}) {
      GraphRep g = basic_graph(RankLevel(3, n));
      for (int L : {5, 6, 7}) a.add(verify_quotient_chain(g, L, 1e-8));
      a.add(verify_partial_trace(g, 1e-9));
    }
    for (int n : {6, 7, 8}) a.add(verify_trig_identity(RankLevel(3, n), 1e-9));
    gate.line(8, "antisymmetrizer, trigonometric, partial traces", a.ok, a.resid,
              secs_since(t0), a.note);
  }

  {  // 9. fusion ring structure, exact integer checks
    auto t0 = Clock::now();
    Acc a;
    for (int k = 2; k <= 4; ++k)
      for (int n = k + 2; n <= k + 7; ++n)
        a.add(verify_fusion_ring(basic_graph(RankLevel(k, n))));
    double t = secs_since(t0);
    bool in_budget = t <= 30.0;
    gate.line(9, "fusion ring closure", a.ok && in_budget, a.resid, t,
              in_budget ? a.note : "over the 30s budget");
  }

  if (gate.failures) std::printf("%d criterion(s) FAILED\n", gate.failures);
  return gate.failures ? 1 : 0;
}
