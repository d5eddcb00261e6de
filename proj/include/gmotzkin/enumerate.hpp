#pragma once

#include "gmotzkin/bigint.hpp"
#include "gmotzkin/path.hpp"

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

namespace gm {

inline constexpr unsigned kDefaultOracleN = 10;

// Depth-first stream over all paths of x-length n, tag order U < D < H < V.
// A non-empty prefix restricts the stream to completions of that prefix.
class PathStream {
public:
  explicit PathStream(unsigned n, std::vector<Step> prefix = {});

  // Advances to the next path; false once exhausted.
  bool next();
  const std::vector<Step>& current() const { return steps_; }

private:
  bool feasible(Step s, unsigned rem, long h) const;
  void descend();

  unsigned n_;
  std::size_t floor_;  // prefix length; never backtrack past it
  std::vector<Step> steps_;
  std::vector<unsigned> rem_;  // remaining x-length before each step
  std::vector<long> height_;   // height before each step
  bool started_ = false;
  bool done_ = false;
};

// Valid prefixes used to split an enumeration into independent jobs.
// Completed paths shorter than the split depth are returned too.
std::vector<std::vector<Step>> split_prefixes(unsigned n, unsigned depth);

void for_each_path(unsigned n, const std::function<void(const std::vector<Step>&)>& fn);

std::uint64_t count_paths(unsigned n, unsigned threads = 1);

// Every statistic the oracle needs, accumulated in one pass over all paths of
// each length 0..max_len. Indexed [length][value or level].
struct Tally {
  unsigned max_len = 0;
  std::vector<std::uint64_t> total;
  std::array<std::vector<std::vector<std::uint64_t>>, 4> zcount;
  std::array<std::array<std::vector<std::vector<std::uint64_t>>, 4>, 4> pair;
  std::vector<std::vector<std::uint64_t>> returns;
  std::array<std::vector<std::vector<std::uint64_t>>, 4> level_step;
  std::vector<std::vector<std::uint64_t>> points;
  std::vector<std::vector<std::uint64_t>> peak_ud;
  std::vector<std::vector<std::uint64_t>> peak_uv;

  explicit Tally(unsigned max_len = 0);
  void add(const std::vector<Step>& steps, unsigned len);
  void merge(const Tally& other);

  // Safe lookups returning zero outside the stored range.
  std::uint64_t z(Step s, unsigned len, unsigned i) const;
  std::uint64_t pairs(Step a, Step b, unsigned len, unsigned i) const;
  std::uint64_t ret(unsigned len, unsigned i) const;
  std::uint64_t at_level(Step s, unsigned len, unsigned lvl) const;
  std::uint64_t pts(unsigned len, unsigned lvl) const;
  std::uint64_t ud_peaks(unsigned len, unsigned lvl) const;
  std::uint64_t uv_peaks(unsigned len, unsigned lvl) const;
};

Tally build_tally(unsigned max_len, unsigned threads = 1);

// Process-wide memoized tally covering at least max_len.
const Tally& shared_tally(unsigned max_len, unsigned threads = 1);

}
