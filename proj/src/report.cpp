#include "heckepaths/identities.hpp"

#include <cstdio>

#include <json.hpp>

namespace hk {

namespace {

std::string fmt15(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string fmt3(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.3f", x);
  return buf;
}

}  // namespace

std::string reports_to_jsonl(const ReportList& reports) {
  std::string out;
  for (const auto& r : reports) {
    nlohmann::ordered_json j;
    j["id"] = r.id;
    j["params"] = r.params;
    j["residual"] = fmt15(r.residual);
    j["tol"] = fmt15(r.tol);
    j["pass"] = r.pass;
    j["seconds"] = fmt3(r.seconds);
    if (!r.detail.empty()) j["detail"] = r.detail;
    out += j.dump();
    out += '\n';
  }
  return out;
}

std::string reports_to_csv(const ReportList& reports) {
  std::string out = "id,params,residual,tol,pass,seconds,detail\n";
  auto quote = [](const std::string& s) {
    std::string q = "\"";
    for (char c : s) {
      if (c == '"') q += '"';
      q += c;
    }
    return q + "\"";
  };
  for (const auto& r : reports) {
    out += r.id + "," + quote(r.params) + "," + fmt15(r.residual) + "," + fmt15(r.tol) +
           "," + (r.pass ? "true" : "false") + "," + fmt3(r.seconds) + "," +
           quote(r.detail) + "\n";
  }
  return out;
}

}  // namespace hk
