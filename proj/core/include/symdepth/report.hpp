#pragma once

#include <string>
#include <vector>

namespace symdepth {

/// One verified instance: the graph summary, the computed quantities, and the
/// exact integer slack between them. verdict is "holds" iff slack >= 0.
/// Exploratory instances (no guarantee backs the bound) have guaranteed set
/// to false; their violations are findings, not failures.
struct VerificationReport {
  std::string id;
  int n = 0;
  int edge_count = 0;
  bool chordal = false;
  int s = 0;
  int alpha2 = 0;
  int depth = 0;
  int bound = 0;
  int slack = 0;
  std::string verdict;  // "holds" | "violated"
  bool guaranteed = true;
  int characteristic = 0;
  long long ms = 0;
  std::string graph_json;  // reproducer payload
  std::string note;        // mode labels and auxiliary inputs
};

/// CSV with header id,n,edges,chordal,s,alpha2,depth,bound,slack,verdict,char,ms.
std::string reports_to_csv(const std::vector<VerificationReport>& reports);

/// JSON array of report objects (graph embedded as an object).
std::string reports_to_json(const std::vector<VerificationReport>& reports);

/// Minimal reproducer for a violated instance: id, graph, s, characteristic,
/// and the note payload.
std::string reproducer_json(const VerificationReport& report);

/// Exit code of a campaign: 2 when any guaranteed instance is violated,
/// otherwise 0.
int summarize_exit_code(const std::vector<VerificationReport>& reports);

}  // namespace symdepth
