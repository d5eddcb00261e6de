#pragma once

#include "gmotzkin/bigint.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace gm {

// Tag order doubles as the enumeration order.
enum class Step : std::uint8_t { U = 0, D = 1, H = 2, V = 3 };

constexpr int step_dx(Step s) { return s == Step::V ? 0 : 1; }
constexpr int step_dy(Step s) { return s == Step::U ? 1 : (s == Step::H ? 0 : -1); }
char step_char(Step s);

class InvalidPath : public std::runtime_error {
public:
  enum class Kind { NegativeHeight, NonzeroFinalHeight, BadToken };
  InvalidPath(Kind kind, long where, const std::string& msg)
    : std::runtime_error(msg), kind_(kind), where_(where) {}
  Kind kind() const { return kind_; }
  // Offending index for NegativeHeight/BadToken, final height otherwise.
  long where() const { return where_; }
private:
  Kind kind_;
  long where_;
};

// A first-quadrant path from (0,0) to (n,0). Only produced through validate().
class Path {
public:
  Path() = default;

  const std::vector<Step>& steps() const { return steps_; }
  std::size_t size() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  Step operator[](std::size_t i) const { return steps_[i]; }
  unsigned length() const;
  std::string str() const;

  bool operator==(const Path&) const = default;
  auto operator<=>(const Path&) const = default;

private:
  friend Path validate(std::vector<Step> steps);
  friend Path unchecked_path(std::vector<Step> steps);
  explicit Path(std::vector<Step> s) : steps_(std::move(s)) {}
  std::vector<Step> steps_;
};

Path validate(std::vector<Step> steps);
// For callers that established validity by construction.
Path unchecked_path(std::vector<Step> steps);

std::vector<Step> parse_steps(std::string_view text);
Path parse_path(std::string_view text);
std::string steps_str(const std::vector<Step>& steps);

struct ZCount { Step z; };
struct PairCount { Step first, second; };
struct ReturnSteps {};
struct LevelStep { Step z; unsigned level; };
struct PointsAtLevel { unsigned level; };
struct PeakUD { unsigned level; };
struct PeakUV { unsigned level; };

using StatKind = std::variant<ZCount, PairCount, ReturnSteps, LevelStep, PointsAtLevel, PeakUD, PeakUV>;

unsigned statistic(const Path& p, const StatKind& s);

struct Decomposition {
  enum class Kind { Empty, HeadH, Arch };
  Kind kind = Kind::Empty;
  Step close = Step::D;  // Arch only
  Path inner;            // Arch only
  Path rest;             // HeadH and Arch
};

Decomposition first_return_decompose(const Path& p);
Path reassemble(const Decomposition& d);

std::vector<Path> primitive_components(const Path& p);

// a^{#h} b^{#v} c^{#d}
BigInt weight(const Path& p, long a, long b, long c);

}
