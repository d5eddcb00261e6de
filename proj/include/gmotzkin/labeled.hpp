#pragma once

#include "gmotzkin/path.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace gm {

enum class Label : std::uint8_t { None, One, Two, Y };

struct LStep {
  Step base;
  Label label = Label::None;

  bool operator==(const LStep&) const = default;
  auto operator<=>(const LStep&) const = default;
};

using LPath = std::vector<LStep>;

// Dot-separated tokens: u, d, h, v, d1, d2, dy, h1, h2, v1, v2.
LPath parse_labeled(std::string_view text);
std::string labeled_str(const LPath& p);
std::string token(const LStep& s);

std::vector<Step> underlying(const LPath& p);
// Throws InvalidPath unless the underlying steps form a valid path.
void require_valid(const LPath& p);
unsigned x_length(const LPath& p);

// Height before each step (size p.size() + 1; last entry is the final height).
std::vector<long> heights(const LPath& p);

LPath unlabeled(const std::vector<Step>& s);

}
