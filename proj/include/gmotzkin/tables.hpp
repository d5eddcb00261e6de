#pragma once

#include "gmotzkin/bigint.hpp"

#include <string>
#include <vector>

namespace gm {

struct Cell {
  long n;
  long i;
  BigInt value;
};

// Triangle keys accepted by table(): V, H, D, U, alpha, beta, mu, r, the ten
// L pairs, and the auxiliary M, B, Cpt, Gnk.
const std::vector<std::string>& table_stats();
bool is_table_stat(const std::string& stat);

// Nonzero cells with 0 <= i <= n < rows, row-major. Ldd comes from the series
// solution, everything else from closed forms.
std::vector<Cell> table(const std::string& stat, unsigned rows);

// CSV: header "n,i,value". JSON: array of {"n", "i", "value"} objects where
// value is a number when it fits in 64 bits and a decimal string otherwise.
std::string table_csv(const std::vector<Cell>& cells);
std::string table_json(const std::vector<Cell>& cells);

}
