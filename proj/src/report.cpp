#include "gmotzkin/report.hpp"

#include <json.hpp>

#include <cstdio>

namespace gm {

void Report::fail(std::string params, std::string lhs, std::string rhs)
{
  if (!pass)
    return;
  pass = false;
  counterexample = Counterexample{std::move(params), std::move(lhs), std::move(rhs)};
}

std::string reports_json(const std::vector<Report>& reports, bool timing)
{
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) {
    nlohmann::ordered_json o;
    o["id"] = r.id;
    o["range"] = r.range;
    o["status"] = r.pass ? "pass" : "fail";
    if (r.counterexample)
      o["counterexample"] = {{"params", r.counterexample->params},
                             {"lhs", r.counterexample->lhs},
                             {"rhs", r.counterexample->rhs}};
    if (timing)
      o["elapsed_ms"] = r.elapsed_ms;
    o["routes"] = r.routes;
    o["checks"] = r.checks;
    if (!r.detail.empty())
      o["detail"] = r.detail;
    arr.push_back(std::move(o));
  }
  return arr.dump(2) + "\n";
}

std::string reports_text(const std::vector<Report>& reports, bool timing)
{
  std::string out;
  std::size_t failed = 0;
  for (const auto& r : reports) {
    out += (r.pass ? "PASS " : "FAIL ") + r.id + "  [" + r.range + "]";
    out += "  checks=" + std::to_string(r.checks);
    if (timing) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "  %.1f ms", r.elapsed_ms);
      out += buf;
    }
    out += "\n";
    if (r.counterexample) {
      ++failed;
      out += "    at " + r.counterexample->params + ": " + r.counterexample->lhs + " != " + r.counterexample->rhs + "\n";
    }
    if (!r.detail.empty())
      out += "    " + r.detail + "\n";
  }
  out += std::to_string(reports.size() - failed) + "/" + std::to_string(reports.size()) + " passed\n";
  return out;
}

}
