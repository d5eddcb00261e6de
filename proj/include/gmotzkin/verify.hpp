#pragma once

#include "gmotzkin/report.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gm {

struct VerifyOptions {
  // Overrides each identity's default n bound when set.
  std::optional<unsigned> max_n;
  unsigned max_m = 4;
  // Longest path length the enumeration route may touch.
  unsigned oracle_n = 10;
  unsigned threads = 1;
};

// Catalog keys in their fixed report order.
const std::vector<std::string>& identity_names();
bool is_identity(const std::string& id);

// Throws std::invalid_argument for an unknown id.
Report verify_identity(const std::string& id, const VerifyOptions& opt = {});
// Runs the whole catalog; reports come back in catalog order.
std::vector<Report> verify_all(const VerifyOptions& opt = {});

// Families for the three-way check: G, V, H, D, U, alpha, beta, gamma, mu,
// lambda, r and every L pair (Ldd compares series against enumeration only).
const std::vector<std::string>& crosscheck_names();
bool is_crosscheck_family(const std::string& family);
Report cross_check(const std::string& family, unsigned n_max, const VerifyOptions& opt = {});

}
