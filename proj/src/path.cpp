#include "gmotzkin/path.hpp"

#include <array>

namespace gm {

char step_char(Step s)
{
  static constexpr std::array<char, 4> chars{'u', 'd', 'h', 'v'};
  return chars[static_cast<unsigned>(s)];
}

unsigned Path::length() const
{
  unsigned n = 0;
  for (Step s : steps_)
    n += step_dx(s);
  return n;
}

std::string Path::str() const { return steps_str(steps_); }

std::string steps_str(const std::vector<Step>& steps)
{
  std::string out;
  out.reserve(steps.size());
  for (Step s : steps)
    out.push_back(step_char(s));
  return out;
}

Path validate(std::vector<Step> steps)
{
  long h = 0;
  for (std::size_t i = 0; i < steps.size(); ++i) {
    h += step_dy(steps[i]);
    if (h < 0)
      throw InvalidPath(InvalidPath::Kind::NegativeHeight, static_cast<long>(i),
                        "path goes below the axis at step " + std::to_string(i));
  }
  if (h != 0)
    throw InvalidPath(InvalidPath::Kind::NonzeroFinalHeight, h,
                      "path ends at height " + std::to_string(h));
  return Path(std::move(steps));
}

Path unchecked_path(std::vector<Step> steps) { return Path(std::move(steps)); }

std::vector<Step> parse_steps(std::string_view text)
{
  std::vector<Step> out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    switch (text[i]) {
    case 'u': out.push_back(Step::U); break;
    case 'd': out.push_back(Step::D); break;
    case 'h': out.push_back(Step::H); break;
    case 'v': out.push_back(Step::V); break;
    default:
      throw InvalidPath(InvalidPath::Kind::BadToken, static_cast<long>(i),
                        std::string("unknown step '") + text[i] + "' at offset " + std::to_string(i));
    }
  }
  return out;
}

Path parse_path(std::string_view text) { return validate(parse_steps(text)); }

namespace {

template <class... Ts> struct overloaded : Ts... { using Ts::operator()...; };

}

unsigned statistic(const Path& p, const StatKind& s)
{
  const auto& st = p.steps();
  return std::visit(overloaded{
    [&](const ZCount& k) {
      unsigned c = 0;
      for (Step x : st)
        c += x == k.z;
      return c;
    },
    [&](const PairCount& k) {
      unsigned c = 0;
      for (std::size_t i = 1; i < st.size(); ++i)
        c += st[i - 1] == k.first && st[i] == k.second;
      return c;
    },
    [&](const ReturnSteps&) {
      unsigned c = 0;
      long h = 0;
      for (Step x : st) {
        h += step_dy(x);
        c += h == 0 && (x == Step::D || x == Step::V);
      }
      return c;
    },
    [&](const LevelStep& k) {
      unsigned c = 0;
      long h = 0;
      for (Step x : st) {
        h += step_dy(x);
        c += x == k.z && h == static_cast<long>(k.level);
      }
      return c;
    },
    [&](const PointsAtLevel& k) {
      unsigned c = k.level == 0 ? 1 : 0;
      long h = 0;
      for (Step x : st) {
        h += step_dy(x);
        c += h == static_cast<long>(k.level);
      }
      return c;
    },
    [&](const PeakUD& k) {
      unsigned c = 0;
      long h = 0;
      for (std::size_t i = 0; i < st.size(); ++i) {
        h += step_dy(st[i]);
        c += st[i] == Step::U && i + 1 < st.size() && st[i + 1] == Step::D && h == static_cast<long>(k.level);
      }
      return c;
    },
    [&](const PeakUV& k) {
      unsigned c = 0;
      long h = 0;
      for (std::size_t i = 0; i < st.size(); ++i) {
        h += step_dy(st[i]);
        c += st[i] == Step::U && i + 1 < st.size() && st[i + 1] == Step::V && h == static_cast<long>(k.level);
      }
      return c;
    },
  }, s);
}

Decomposition first_return_decompose(const Path& p)
{
  const auto& st = p.steps();
  Decomposition out;
  if (st.empty())
    return out;
  if (st[0] == Step::H) {
    out.kind = Decomposition::Kind::HeadH;
    out.rest = unchecked_path({st.begin() + 1, st.end()});
    return out;
  }
  // st[0] == U: find where the height first drops back to zero.
  long h = 0;
  std::size_t close = 0;
  for (std::size_t i = 0; i < st.size(); ++i) {
    h += step_dy(st[i]);
    if (h == 0) {
      close = i;
      break;
    }
  }
  out.kind = Decomposition::Kind::Arch;
  out.close = st[close];
  out.inner = unchecked_path({st.begin() + 1, st.begin() + static_cast<long>(close)});
  out.rest = unchecked_path({st.begin() + static_cast<long>(close) + 1, st.end()});
  return out;
}

Path reassemble(const Decomposition& d)
{
  std::vector<Step> s;
  switch (d.kind) {
  case Decomposition::Kind::Empty:
    break;
  case Decomposition::Kind::HeadH:
    s.push_back(Step::H);
    s.insert(s.end(), d.rest.steps().begin(), d.rest.steps().end());
    break;
  case Decomposition::Kind::Arch:
    s.push_back(Step::U);
    s.insert(s.end(), d.inner.steps().begin(), d.inner.steps().end());
    s.push_back(d.close);
    s.insert(s.end(), d.rest.steps().begin(), d.rest.steps().end());
    break;
  }
  return validate(std::move(s));
}

std::vector<Path> primitive_components(const Path& p)
{
  std::vector<Path> out;
  const auto& st = p.steps();
  long h = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < st.size(); ++i) {
    h += step_dy(st[i]);
    if (h == 0) {
      out.push_back(unchecked_path({st.begin() + static_cast<long>(start), st.begin() + static_cast<long>(i) + 1}));
      start = i + 1;
    }
  }
  return out;
}

BigInt weight(const Path& p, long a, long b, long c)
{
  unsigned nh = 0, nv = 0, nd = 0;
  for (Step s : p.steps()) {
    nh += s == Step::H;
    nv += s == Step::V;
    nd += s == Step::D;
  }
  return ipow(a, nh) * ipow(b, nv) * ipow(c, nd);
}

}
