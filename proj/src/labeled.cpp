#include "gmotzkin/labeled.hpp"

namespace gm {

std::string token(const LStep& s)
{
  std::string t(1, step_char(s.base));
  switch (s.label) {
  case Label::None: break;
  case Label::One: t += '1'; break;
  case Label::Two: t += '2'; break;
  case Label::Y: t += 'y'; break;
  }
  return t;
}

LPath parse_labeled(std::string_view text)
{
  LPath out;
  if (text.empty())
    return out;
  std::size_t pos = 0;
  long index = 0;
  while (true) {
    const std::size_t dot = text.find('.', pos);
    const std::string_view tok = text.substr(pos, dot == std::string_view::npos ? std::string_view::npos : dot - pos);
    auto bad = [&] {
      return InvalidPath(InvalidPath::Kind::BadToken, index, "unknown token '" + std::string(tok) + "' at position " + std::to_string(index));
    };
    if (tok.empty() || tok.size() > 2)
      throw bad();
    LStep s;
    switch (tok[0]) {
    case 'u': s.base = Step::U; break;
    case 'd': s.base = Step::D; break;
    case 'h': s.base = Step::H; break;
    case 'v': s.base = Step::V; break;
    default: throw bad();
    }
    if (tok.size() == 2) {
      if (s.base == Step::U)
        throw bad();
      switch (tok[1]) {
      case '1': s.label = Label::One; break;
      case '2': s.label = Label::Two; break;
      case 'y':
        if (s.base != Step::D)
          throw bad();
        s.label = Label::Y;
        break;
      default: throw bad();
      }
    }
    out.push_back(s);
    ++index;
    if (dot == std::string_view::npos)
      break;
    pos = dot + 1;
  }
  return out;
}

std::string labeled_str(const LPath& p)
{
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i)
      out += '.';
    out += token(p[i]);
  }
  return out;
}

std::vector<Step> underlying(const LPath& p)
{
  std::vector<Step> s;
  s.reserve(p.size());
  for (const auto& x : p)
    s.push_back(x.base);
  return s;
}

void require_valid(const LPath& p) { validate(underlying(p)); }

unsigned x_length(const LPath& p)
{
  unsigned n = 0;
  for (const auto& s : p)
    n += step_dx(s.base);
  return n;
}

std::vector<long> heights(const LPath& p)
{
  std::vector<long> h(p.size() + 1, 0);
  for (std::size_t i = 0; i < p.size(); ++i)
    h[i + 1] = h[i] + step_dy(p[i].base);
  return h;
}

LPath unlabeled(const std::vector<Step>& s)
{
  LPath p;
  p.reserve(s.size());
  for (Step x : s)
    p.push_back({x, Label::None});
  return p;
}

}
