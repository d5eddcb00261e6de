#pragma once

#include <optional>
#include <string>
#include <vector>

namespace gm {

struct Counterexample {
  std::string params;
  std::string lhs;
  std::string rhs;
};

// Outcome of one exhaustive check. A failing report always carries a counterexample.
struct Report {
  std::string id;
  std::string range;
  bool pass = true;
  std::optional<Counterexample> counterexample;
  double elapsed_ms = 0;
  std::vector<std::string> routes;  // formula, series, enumeration, bijection
  std::size_t checks = 0;           // number of individual comparisons
  std::string detail;

  // Records a mismatch; only the first one is kept.
  void fail(std::string params, std::string lhs, std::string rhs);
};

// JSON list of {id, range, status, counterexample?, elapsed_ms?, routes, checks, detail}.
std::string reports_json(const std::vector<Report>& reports, bool timing);
std::string reports_text(const std::vector<Report>& reports, bool timing);

}
