#include "symdepth/report.hpp"

#include <sstream>

#include "json.hpp"

namespace symdepth {

std::string reports_to_csv(const std::vector<VerificationReport>& reports) {
  std::ostringstream out;
  out << "id,n,edges,chordal,s,alpha2,depth,bound,slack,verdict,char,ms\n";
  for (const VerificationReport& r : reports) {
    out << r.id << ',' << r.n << ',' << r.edge_count << ',' << (r.chordal ? "true" : "false")
        << ',' << r.s << ',' << r.alpha2 << ',' << r.depth << ',' << r.bound << ',' << r.slack
        << ',' << r.verdict << ',' << r.characteristic << ',' << r.ms << '\n';
  }
  return out.str();
}

namespace {

nlohmann::ordered_json report_to_json(const VerificationReport& r) {
  nlohmann::ordered_json j;
  j["id"] = r.id;
  j["n"] = r.n;
  j["edges"] = r.edge_count;
  j["chordal"] = r.chordal;
  j["s"] = r.s;
  j["alpha2"] = r.alpha2;
  j["depth"] = r.depth;
  j["bound"] = r.bound;
  j["slack"] = r.slack;
  j["verdict"] = r.verdict;
  j["guaranteed"] = r.guaranteed;
  j["char"] = r.characteristic;
  j["ms"] = r.ms;
  if (!r.graph_json.empty()) j["graph"] = nlohmann::ordered_json::parse(r.graph_json);
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

}  // namespace

std::string reports_to_json(const std::vector<VerificationReport>& reports) {
  nlohmann::ordered_json out = nlohmann::ordered_json::array();
  for (const VerificationReport& r : reports) out.push_back(report_to_json(r));
  return out.dump();
}

std::string reproducer_json(const VerificationReport& report) {
  nlohmann::ordered_json j;
  j["id"] = report.id;
  if (!report.graph_json.empty()) j["graph"] = nlohmann::ordered_json::parse(report.graph_json);
  j["s"] = report.s;
  j["char"] = report.characteristic;
  if (!report.note.empty()) j["note"] = report.note;
  return j.dump();
}

int summarize_exit_code(const std::vector<VerificationReport>& reports) {
  for (const VerificationReport& r : reports) {
    if (r.guaranteed && r.verdict == "violated") return 2;
  }
  return 0;
}

}  // namespace symdepth
