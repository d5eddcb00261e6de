#include "gmotzkin/bijections.hpp"

#include "gmotzkin/enumerate.hpp"
#include "gmotzkin/formulas.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <functional>
#include <mutex>
#include <thread>

namespace gm {

namespace {

constexpr LStep U{Step::U};
constexpr LStep D{Step::D};
constexpr LStep H{Step::H};
constexpr LStep V{Step::V};
constexpr LStep d1{Step::D, Label::One};
constexpr LStep d2{Step::D, Label::Two};
constexpr LStep dy{Step::D, Label::Y};
constexpr LStep h1{Step::H, Label::One};
constexpr LStep h2{Step::H, Label::Two};
constexpr LStep v1{Step::V, Label::One};
constexpr LStep v2{Step::V, Label::Two};

constexpr unsigned bit(Label l) { return 1u << static_cast<unsigned>(l); }
constexpr unsigned kNone = bit(Label::None);
constexpr unsigned kOneTwo = bit(Label::One) | bit(Label::Two);

// Labels permitted on step i of a path, given its neighbours and the height
// before the step. Zero means the base step itself is not allowed.
unsigned allowed(LabelRule r, Step s, const Step* prev, const Step* next, long height)
{
  switch (r) {
  case LabelRule::Plain: return kNone;
  case LabelRule::HTwo: return s == Step::H ? kOneTwo : kNone;
  case LabelRule::DTwo: return s == Step::D ? kOneTwo : kNone;
  case LabelRule::Matching: return (s == Step::D || s == Step::V) ? kOneTwo : kNone;
  case LabelRule::LhForm:
    if (s != Step::H)
      return kNone;
    return height > 0 ? kOneTwo : bit(Label::One);
  case LabelRule::LvuForm: return (s == Step::V && next && *next == Step::U) ? kOneTwo : kNone;
  case LabelRule::DyckTwo:
    if (s == Step::U)
      return kNone;
    return s == Step::D ? kOneTwo : 0;
  case LabelRule::DyckHat:
    if (s == Step::U)
      return kNone;
    if (s != Step::D)
      return 0;
    return bit(Label::Y) | bit(Label::One) | (prev && *prev == Step::U ? bit(Label::Two) : 0);
  case LabelRule::HatD: return s == Step::D ? bit(Label::Y) : kNone;
  }
  return 0;
}

std::vector<unsigned> allowed_masks(LabelRule r, const std::vector<Step>& s)
{
  std::vector<unsigned> m(s.size());
  long h = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const Step* prev = i > 0 ? &s[i - 1] : nullptr;
    const Step* next = i + 1 < s.size() ? &s[i + 1] : nullptr;
    m[i] = allowed(r, s[i], prev, next, h);
    h += step_dy(s[i]);
  }
  return m;
}

bool valid_steps(const std::vector<Step>& s)
{
  long h = 0;
  for (Step x : s) {
    h += step_dy(x);
    if (h < 0)
      return false;
  }
  return h == 0;
}

void expand_labels(const std::vector<Step>& s, LabelRule r, std::vector<LPath>& out)
{
  const auto masks = allowed_masks(r, s);
  for (unsigned m : masks)
    if (m == 0)
      return;
  LPath cur = unlabeled(s);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == s.size()) {
      out.push_back(cur);
      return;
    }
    for (Label l : {Label::None, Label::One, Label::Two, Label::Y}) {
      if (masks[i] & bit(l)) {
        cur[i].label = l;
        rec(i + 1);
      }
    }
  };
  rec(0);
}

// DFS in tag order over paths with #u + #h = n (or semilength n when only u/d).
void for_each_budget_path(unsigned n, bool dyck, const std::function<void(const std::vector<Step>&)>& fn)
{
  std::vector<Step> cur;
  std::function<void(unsigned, long)> rec = [&](unsigned used, long h) {
    if (used == n && h == 0) {
      fn(cur);
      return;
    }
    for (Step s : {Step::U, Step::D, Step::H, Step::V}) {
      if (dyck && (s == Step::H || s == Step::V))
        continue;
      if ((s == Step::U || s == Step::H) && used == n)
        continue;
      if ((s == Step::D || s == Step::V) && h == 0)
        continue;
      cur.push_back(s);
      rec(used + ((s == Step::U || s == Step::H) ? 1 : 0), h + step_dy(s));
      cur.pop_back();
    }
  };
  rec(0, 0);
}

LPath slice(const LPath& p, std::size_t from, std::size_t to) { return LPath(p.begin() + from, p.begin() + to); }

void append(LPath& out, const LPath& more) { out.insert(out.end(), more.begin(), more.end()); }

// Top-level blocks: single steps at level 0 (h) or primitive arches.
std::vector<LPath> blocks(const LPath& p)
{
  std::vector<LPath> out;
  long h = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    h += step_dy(p[i].base);
    if (h == 0) {
      out.push_back(slice(p, start, i + 1));
      start = i + 1;
    }
  }
  return out;
}

// Indices of h2 steps at height 0 of p.
std::vector<std::size_t> level0_h2(const LPath& p)
{
  std::vector<std::size_t> idx;
  long h = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] == h2 && h == 0)
      idx.push_back(i);
    h += step_dy(p[i].base);
  }
  return idx;
}

// ---- last-factor swap engine ----

struct Swap {
  LPath from, to;
};

struct SwapTable {
  std::vector<Swap> rules;  // longer patterns first
};

const SwapTable& table_for(BijectionId id)
{
  static const SwapTable phi{{{{h1, V}, {D}}, {{U, V}, {h2}}, {{D}, {h1, V}}, {{h2}, {U, V}}}};
  static const SwapTable tau{{{{U, V, V}, {d1}}, {{H, V}, {d2}}, {{d1}, {U, V, V}}, {{d2}, {H, V}}}};
  static const SwapTable tau_bar{{{{H, V}, {D}}, {{D}, {H, V}}}};
  static const SwapTable varphi_bar{{{{U, d1}, {H}}, {{H}, {U, d1}}, {{d2}, {V}}, {{V}, {d2}}}};
  static const SwapTable theta{{{{U, v1, v1}, {d1}},
                                {{U, v1, v2}, {d2}},
                                {{U, v2}, {H}},
                                {{H}, {U, v2}},
                                {{d1}, {U, v1, v1}},
                                {{d2}, {U, v1, v2}}}};
  static const SwapTable rho{{{{U, V, V}, {h1, V}}, {{h1, V}, {U, V, V}}, {{h2, V}, {D}}, {{D}, {h2, V}}}};
  switch (id) {
  case BijectionId::phi: return phi;
  case BijectionId::tau: return tau;
  case BijectionId::tau_bar: return tau_bar;
  case BijectionId::varphi_bar: return varphi_bar;
  case BijectionId::theta: return theta;
  case BijectionId::rho: return rho;
  default: throw std::logic_error("no swap table for " + bijection_name(id));
  }
}

struct Match {
  std::size_t start;
  const Swap* rule;
};

// Rightmost starting position; at equal positions the table order decides.
std::optional<Match> last_factor(const SwapTable& t, const LPath& p)
{
  for (std::size_t s = p.size(); s-- > 0;) {
    for (const auto& r : t.rules) {
      if (s + r.from.size() > p.size())
        continue;
      if (std::equal(r.from.begin(), r.from.end(), p.begin() + static_cast<long>(s)))
        return Match{s, &r};
    }
  }
  return std::nullopt;
}

std::optional<std::size_t> last_return(const LPath& p)
{
  long h = 0;
  std::optional<std::size_t> last;
  for (std::size_t i = 0; i < p.size(); ++i) {
    h += step_dy(p[i].base);
    if (h == 0 && (p[i].base == Step::D || p[i].base == Step::V))
      last = i;
  }
  return last;
}

bool uses_swap_table(BijectionId id)
{
  switch (id) {
  case BijectionId::phi:
  case BijectionId::tau:
  case BijectionId::tau_bar:
  case BijectionId::varphi_bar:
  case BijectionId::theta:
  case BijectionId::rho: return true;
  default: return false;
  }
}

// ---- chi1, chi2, hat_varphi ----

LPath chi1_forward(const LPath& p)
{
  LPath out;
  long h = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const LStep s = p[i];
    if (s.base == Step::H) {
      if (h > 0) {
        out.push_back({Step::V, s.label});
        out.push_back(U);
      } else {
        out.push_back(H);
      }
    } else if (s == V && i + 1 < p.size() && p[i + 1] == U) {
      out.push_back(H);
      h += step_dy(p[i].base) + step_dy(p[i + 1].base);
      ++i;
      continue;
    } else {
      out.push_back(s);
    }
    h += step_dy(s.base);
  }
  return out;
}

LPath chi1_backward(const LPath& p)
{
  LPath out;
  long h = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const LStep s = p[i];
    if (s.base == Step::V && s.label != Label::None) {
      out.push_back({Step::H, s.label});
      h += step_dy(p[i].base) + step_dy(p[i + 1].base);
      ++i;
      continue;
    }
    if (s.base == Step::H) {
      if (h > 0) {
        out.push_back(V);
        out.push_back(U);
      } else {
        out.push_back(h1);
      }
    } else {
      out.push_back(s);
    }
    h += step_dy(s.base);
  }
  return out;
}

LPath chi2_rec(const LPath& q);

LPath chi2_primitive(const LPath& q)
{
  const LPath inner = slice(q, 1, q.size() - 1);
  const Label close = q.back().label;
  LPath out;
  if (close == Label::Two) {  // Case 1
    out.push_back(U);
    append(out, chi2_rec(inner));
    out.push_back(V);
    return out;
  }
  if (inner.empty())
    return {h1};
  const auto parts = blocks(inner);
  auto ret = [](const LPath& b) { return b.back().label; };
  auto inner_of = [](const LPath& b) { return slice(b, 1, b.size() - 1); };
  const bool all_one = std::all_of(parts.begin(), parts.end(), [&](const LPath& b) { return ret(b) == Label::One; });
  out.push_back(U);
  if (all_one) {  // Case 2
    for (std::size_t j = 0; j < parts.size(); ++j) {
      if (j)
        out.push_back(h2);
      append(out, chi2_rec(inner_of(parts[j])));
    }
    out.push_back(D);
    return out;
  }
  // Cases 3 and 4: maximal trailing run of equal return labels.
  const Label m = ret(parts.back());
  std::size_t j = parts.size() - 1;
  while (j > 0 && ret(parts[j - 1]) == m)
    --j;
  LPath head;
  for (std::size_t t = 0; t < j; ++t)
    append(head, parts[t]);
  append(out, chi2_rec(head));
  for (std::size_t t = j; t < parts.size(); ++t) {
    out.push_back(h2);
    append(out, chi2_rec(inner_of(parts[t])));
  }
  out.push_back(V);
  return out;
}

LPath chi2_rec(const LPath& q)
{
  LPath out;
  for (const auto& b : blocks(q))
    append(out, chi2_primitive(b));
  return out;
}

LPath chi2_inv_rec(const LPath& p);

bool has_level1_h2(const LPath& arch)
{
  long h = 0;
  for (const auto& s : arch) {
    if (s == h2 && h == 1)
      return true;
    h += step_dy(s.base);
  }
  return false;
}

// Splits p at the given h2 positions, dropping the h2 steps.
std::vector<LPath> split_at(const LPath& p, const std::vector<std::size_t>& cuts)
{
  std::vector<LPath> parts;
  std::size_t from = 0;
  for (std::size_t c : cuts) {
    parts.push_back(slice(p, from, c));
    from = c + 1;
  }
  parts.push_back(slice(p, from, p.size()));
  return parts;
}

LPath chi2_inv_primitive(const LPath& p)
{
  const LPath inner = slice(p, 1, p.size() - 1);
  const auto cuts = level0_h2(inner);
  LPath out{U};
  if (p.back().base == Step::D) {  // Case 2
    for (const auto& part : split_at(inner, cuts)) {
      out.push_back(U);
      append(out, chi2_inv_rec(part));
      out.push_back(d1);
    }
    out.push_back(d1);
    return out;
  }
  if (cuts.empty()) {  // Case 1
    append(out, chi2_inv_rec(inner));
    out.push_back(d2);
    return out;
  }
  const LPath head = slice(inner, 0, cuts.front());
  const LPath tail = slice(inner, cuts.front() + 1, inner.size());
  std::vector<std::size_t> tail_cuts;
  for (std::size_t k = 1; k < cuts.size(); ++k)
    tail_cuts.push_back(cuts[k] - cuts.front() - 1);
  bool case3 = false;
  if (!head.empty() && head.back().base == Step::V) {
    const auto hb = blocks(head);
    case3 = !has_level1_h2(hb.back());
  }
  append(out, chi2_inv_rec(head));
  for (const auto& part : split_at(tail, tail_cuts)) {
    out.push_back(U);
    append(out, chi2_inv_rec(part));
    out.push_back(case3 ? d1 : d2);
  }
  out.push_back(d1);
  return out;
}

LPath chi2_inv_rec(const LPath& p)
{
  LPath out;
  for (const auto& b : blocks(p)) {
    if (b.size() == 1) {
      if (b[0] != h1)
        throw DomainViolation("level-0 step " + token(b[0]) + " is not h1");
      out.push_back(U);
      out.push_back(d1);
    } else {
      append(out, chi2_inv_primitive(b));
    }
  }
  return out;
}

LPath hat_forward(const LPath& q)
{
  LPath out;
  for (std::size_t i = 0; i < q.size(); ++i) {
    if (q[i] == U && i + 1 < q.size() && q[i + 1] == d2) {
      out.push_back(H);
      ++i;
    } else if (q[i] == d1) {
      out.push_back(V);
    } else {
      out.push_back(q[i]);
    }
  }
  return out;
}

LPath hat_backward(const LPath& p)
{
  LPath out;
  for (const auto& s : p) {
    if (s == H) {
      out.push_back(U);
      out.push_back(d2);
    } else if (s == V) {
      out.push_back(d1);
    } else {
      out.push_back(s);
    }
  }
  return out;
}

// ---- exceptional sets as stated, independent of the swap engine ----

// Whether p is a concatenation of the given blocks.
bool tiled_by(const LPath& p, const std::vector<LPath>& tiles)
{
  std::vector<char> ok(p.size() + 1, 0);
  ok[0] = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (!ok[i])
      continue;
    for (const auto& t : tiles)
      if (i + t.size() <= p.size() && std::equal(t.begin(), t.end(), p.begin() + static_cast<long>(i)))
        ok[i + t.size()] = 1;
  }
  return ok[p.size()];
}

bool expected_exceptional(BijectionId id, const LPath& p)
{
  switch (id) {
  case BijectionId::phi: return tiled_by(p, {{h1}});
  case BijectionId::tau: return tiled_by(p, {{H}, {U, V}});
  case BijectionId::tau_bar: {
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i].base == Step::D)
        return false;
      if (i + 1 < p.size() && p[i].base == Step::H && p[i + 1].base == Step::V)
        return false;
    }
    return true;
  }
  case BijectionId::varphi: return tiled_by(p, {{H}});
  case BijectionId::varphi_bar: return p.empty();
  case BijectionId::theta: return tiled_by(p, {{U, v1}});
  case BijectionId::rho: return tiled_by(p, {{h1}, {U, V}});
  default: return false;
  }
}

// Suffix shape printed alongside each "last factor" search.
bool printed_suffix_shape(BijectionId id, const LPath& suffix)
{
  auto all = [&](std::initializer_list<LStep> ok) {
    return std::all_of(suffix.begin(), suffix.end(), [&](const LStep& s) {
      return std::find(ok.begin(), ok.end(), s) != ok.end();
    });
  };
  switch (id) {
  case BijectionId::phi:
  case BijectionId::tau: return all({V});
  case BijectionId::varphi: return all({H});
  case BijectionId::varphi_bar: return all({d1});
  case BijectionId::theta: return all({v1, v2});
  case BijectionId::rho: {
    std::size_t r = 0;
    while (r < suffix.size() && suffix[r] == V)
      ++r;
    return tiled_by(slice(suffix, r, suffix.size()), {{h1}, {U, V}});
  }
  default: return true;
  }
}

std::optional<LPath> printed_suffix(BijectionId id, const LPath& p)
{
  if (uses_swap_table(id)) {
    const auto m = last_factor(table_for(id), p);
    if (!m)
      return std::nullopt;
    return slice(p, m->start + m->rule->from.size(), p.size());
  }
  if (id == BijectionId::varphi) {
    const auto r = last_return(p);
    if (!r)
      return std::nullopt;
    return slice(p, *r + 1, p.size());
  }
  return std::nullopt;
}

unsigned count_base(const LPath& p, Step s)
{
  return static_cast<unsigned>(std::count_if(p.begin(), p.end(), [&](const LStep& x) { return x.base == s; }));
}

unsigned high_h(const LPath& p)
{
  unsigned c = 0;
  long h = 0;
  for (const auto& s : p) {
    if (s.base == Step::H && h > 0)
      ++c;
    h += step_dy(s.base);
  }
  return c;
}

unsigned vu_factors(const LPath& p)
{
  unsigned c = 0;
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (p[i].base == Step::V && p[i + 1].base == Step::U)
      ++c;
  return c;
}

// Statistic whose parity the involution flips.
unsigned tracked(BijectionId id, const LPath& p)
{
  switch (id) {
  case BijectionId::phi: return count_base(p, Step::H);
  case BijectionId::theta: return count_base(p, Step::U);
  case BijectionId::rho: return high_h(p);
  default: return count_base(p, Step::D);
  }
}

std::string tracked_name(BijectionId id)
{
  switch (id) {
  case BijectionId::phi: return "#h";
  case BijectionId::theta: return "#u";
  case BijectionId::rho: return "#high h";
  default: return "#d";
  }
}

// Runs check(i) over [0, count) on several threads; keeps the failure with the
// smallest index so the report does not depend on scheduling.
struct Failure {
  std::size_t index;
  Counterexample ce;
};

std::optional<Failure> scan(std::size_t count, unsigned threads,
                            const std::function<std::optional<Counterexample>(std::size_t)>& check)
{
  threads = std::max(1u, threads);
  std::optional<Failure> best;
  std::mutex mu;
  auto worker = [&](std::size_t from, std::size_t to) {
    for (std::size_t i = from; i < to; ++i) {
      if (auto ce = check(i)) {
        std::lock_guard lk(mu);
        if (!best || i < best->index)
          best = Failure{i, *ce};
        return;
      }
    }
  };
  if (threads == 1 || count < 1024) {
    worker(0, count);
    return best;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + threads - 1) / threads;
  for (unsigned t = 0; t < threads; ++t) {
    const std::size_t from = t * chunk;
    const std::size_t to = std::min(count, from + chunk);
    if (from < to)
      pool.emplace_back(worker, from, to);
  }
  for (auto& th : pool)
    th.join();
  return best;
}

Counterexample ce(const std::string& params, const std::string& lhs, const std::string& rhs)
{
  return Counterexample{params, lhs, rhs};
}

std::string path_or_eps(const LPath& p) { return p.empty() ? "e" : labeled_str(p); }

BigInt signed_sum_formula(BijectionId id, unsigned n, BigInt& weight, BigInt& rhs)
{
  BigInt s = 0;
  weight = 0;
  const long N = n;
  auto add = [&](long i, const BigInt& count, long base) {
    s += ipow(base, static_cast<unsigned long>(i)) * count;
    weight += ipow(std::abs(base), static_cast<unsigned long>(i)) * count;
  };
  switch (id) {
  case BijectionId::phi:
    for (long i = 0; i <= N; ++i)
      add(i, h_count(N, i), -2);
    rhs = sign_pow(N);
    break;
  case BijectionId::tau:
    for (long i = 0; i <= N; ++i)
      add(i, d_count(N, i), -2);
    rhs = ipow(2, n);
    break;
  case BijectionId::tau_bar:
    rhs = 0;
    for (long i = 0; i <= N; ++i) {
      add(i, d_count(N, i), -1);
      rhs += binom(N, i) * catalan(i);
    }
    break;
  case BijectionId::varphi:
    for (long i = 0; i <= N; ++i)
      add(i, d_count(N + i, i), -1);
    rhs = 1;
    break;
  case BijectionId::varphi_bar:
    for (long i = 0; i <= N; ++i)
      add(i, d_count(N + i, i), -2);
    rhs = n == 0 ? 1 : 0;
    break;
  case BijectionId::theta:
    for (long i = 0; i <= N; ++i)
      add(i, u_count(N, i), -2);
    rhs = sign_pow(N);
    break;
  case BijectionId::rho:
    for (long i = 0; i <= N; ++i)
      add(i, l_count(Pair::vu, N, i), -2);
    rhs = ipow(2, n);
    break;
  default: throw std::logic_error("no signed identity");
  }
  return s;
}

void check_involution(BijectionId id, unsigned n, unsigned threads, Report& rep)
{
  const Form form = domain_form(id);
  const auto dom = enumerate_form(form, n);
  const std::string pn = "n=" + std::to_string(n);

  BigInt sum_all = 0, sum_exc = 0;
  std::size_t even = 0, odd = 0, exc = 0;
  for (const auto& p : dom) {
    const int sg = tracked(id, p) % 2 == 0 ? 1 : -1;
    sum_all += sg;
    if (is_exceptional(id, p)) {
      sum_exc += sg;
      ++exc;
    } else {
      (sg > 0 ? even : odd) += 1;
    }
  }

  std::atomic<std::size_t> shape_misses{0};
  std::mutex first_mu;
  std::optional<std::size_t> first_miss;
  auto res = scan(dom.size(), threads, [&](std::size_t k) -> std::optional<Counterexample> {
    const LPath& p = dom[k];
    const std::string at = pn + " path=" + path_or_eps(p);
    const bool e = is_exceptional(id, p);
    if (e != expected_exceptional(id, p))
      return ce(at, std::string("exceptional by search: ") + (e ? "yes" : "no"), "exceptional as stated: no");
    if (e)
      return std::nullopt;
    if (auto suf = printed_suffix(id, p); suf && !printed_suffix_shape(id, *suf)) {
      ++shape_misses;
      std::lock_guard lk(first_mu);
      if (!first_miss || k < *first_miss)
        first_miss = k;
    }
    const LPath q = apply_bijection(id, p);
    if (!in_form(q, form.rule) || measure(q, form.measure) != n)
      return ce(at, "image " + path_or_eps(q), "image in the domain");
    const unsigned a = tracked(id, p), b = tracked(id, q);
    if (a + 1 != b && b + 1 != a)
      return ce(at, tracked_name(id) + " " + std::to_string(a) + " -> " + std::to_string(b), "differ by one");
    if (is_exceptional(id, q))
      return ce(at, "image " + path_or_eps(q) + " is exceptional", "non-exceptional image");
    const LPath back = apply_bijection(id, q);
    if (back != p)
      return ce(at, "f(f(P)) = " + path_or_eps(back), path_or_eps(p));
    return std::nullopt;
  });
  rep.checks += dom.size();
  if (res)
    rep.fail(res->ce.params, res->ce.lhs, res->ce.rhs);

  if (even != odd)
    rep.fail(pn, "non-exceptional even " + std::to_string(even), "odd " + std::to_string(odd));
  BigInt weight, rhs;
  const BigInt formula = signed_sum_formula(id, n, weight, rhs);
  rep.checks += 4;
  if (BigInt(dom.size()) != weight)
    rep.fail(pn + " domain size", std::to_string(dom.size()), to_string(weight));
  if (sum_all != formula)
    rep.fail(pn + " signed sum over domain", to_string(sum_all), to_string(formula));
  if (sum_exc != rhs)
    rep.fail(pn + " signed sum over exceptional set", to_string(sum_exc), to_string(rhs));
  if (formula != rhs)
    rep.fail(pn + " identity", to_string(formula), to_string(rhs));

  std::string d = pn + ": domain " + std::to_string(dom.size()) + ", exceptional " + std::to_string(exc) +
                  ", signed sum " + to_string(sum_all);
  if (shape_misses > 0)
    d += "; printed suffix shape fails on " + std::to_string(shape_misses.load()) + " paths (first " +
         path_or_eps(dom[*first_miss]) + "), map is an involution regardless";
  if (!rep.detail.empty())
    rep.detail += "; ";
  rep.detail += d;
}

// Checks f : A -> B and g : B -> A are mutually inverse bijections.
void check_pair(const std::vector<LPath>& a, const std::vector<LPath>& b, const std::function<LPath(const LPath&)>& f,
                const std::function<LPath(const LPath&)>& g, const std::function<bool(const LPath&, const LPath&)>& keeps,
                const std::string& pn, unsigned threads, Report& rep)
{
  std::vector<LPath> images(a.size());
  auto res = scan(a.size(), threads, [&](std::size_t k) -> std::optional<Counterexample> {
    const std::string at = pn + " path=" + path_or_eps(a[k]);
    images[k] = f(a[k]);
    if (!keeps(a[k], images[k]))
      return ce(at, "image " + path_or_eps(images[k]), "statistic preserved");
    const LPath back = g(images[k]);
    if (back != a[k])
      return ce(at, "inverse(image) = " + path_or_eps(back), path_or_eps(a[k]));
    return std::nullopt;
  });
  if (!res)
    res = scan(b.size(), threads, [&](std::size_t k) -> std::optional<Counterexample> {
      const LPath back = f(g(b[k]));
      if (back != b[k])
        return ce(pn + " path=" + path_or_eps(b[k]), "f(inverse(P)) = " + path_or_eps(back), path_or_eps(b[k]));
      return std::nullopt;
    });
  rep.checks += a.size() + b.size();
  if (res) {
    rep.fail(res->ce.params, res->ce.lhs, res->ce.rhs);
    return;
  }
  std::sort(images.begin(), images.end());
  if (std::adjacent_find(images.begin(), images.end()) != images.end())
    rep.fail(pn, "repeated image " + path_or_eps(*std::adjacent_find(images.begin(), images.end())), "injective");
  auto sorted_b = b;
  std::sort(sorted_b.begin(), sorted_b.end());
  if (images != sorted_b)
    rep.fail(pn, "image set of size " + std::to_string(images.size()), "codomain of size " + std::to_string(b.size()));
}

}  // namespace

const std::vector<std::pair<std::string, BijectionId>>& bijection_names()
{
  static const std::vector<std::pair<std::string, BijectionId>> names = {
    {"phi", BijectionId::phi},
    {"tau", BijectionId::tau},
    {"tau_bar", BijectionId::tau_bar},
    {"varphi", BijectionId::varphi},
    {"varphi_bar", BijectionId::varphi_bar},
    {"hat_varphi", BijectionId::hat_varphi},
    {"hat_varphi_inv", BijectionId::hat_varphi_inv},
    {"theta", BijectionId::theta},
    {"chi1", BijectionId::chi1},
    {"chi2", BijectionId::chi2},
    {"chi2_inv", BijectionId::chi2_inv},
    {"rho", BijectionId::rho},
  };
  return names;
}

std::optional<BijectionId> bijection_by_name(const std::string& name)
{
  for (const auto& [k, v] : bijection_names())
    if (k == name)
      return v;
  return std::nullopt;
}

std::string bijection_name(BijectionId id)
{
  for (const auto& [k, v] : bijection_names())
    if (v == id)
      return k;
  return "?";
}

unsigned measure(const LPath& p, Measure m)
{
  switch (m) {
  case Measure::XLength: return x_length(p);
  case Measure::UPlusH: return count_base(p, Step::U) + count_base(p, Step::H);
  case Measure::Semilength: return count_base(p, Step::U);
  }
  return 0;
}

bool in_form(const LPath& p, LabelRule rule)
{
  const auto s = underlying(p);
  if (!valid_steps(s))
    return false;
  const auto masks = allowed_masks(rule, s);
  for (std::size_t i = 0; i < p.size(); ++i)
    if (!(masks[i] & bit(p[i].label)))
      return false;
  return true;
}

std::vector<LPath> enumerate_form(Form f, unsigned n)
{
  std::vector<LPath> out;
  auto take = [&](const std::vector<Step>& s) { expand_labels(s, f.rule, out); };
  switch (f.measure) {
  case Measure::XLength: for_each_path(n, take); break;
  case Measure::UPlusH: for_each_budget_path(n, false, take); break;
  case Measure::Semilength: for_each_budget_path(n, true, take); break;
  }
  return out;
}

Form domain_form(BijectionId id)
{
  switch (id) {
  case BijectionId::phi: return {LabelRule::HTwo, Measure::XLength};
  case BijectionId::tau: return {LabelRule::DTwo, Measure::XLength};
  case BijectionId::tau_bar: return {LabelRule::Plain, Measure::XLength};
  case BijectionId::varphi: return {LabelRule::Plain, Measure::UPlusH};
  case BijectionId::varphi_bar: return {LabelRule::DTwo, Measure::UPlusH};
  case BijectionId::hat_varphi: return {LabelRule::DyckHat, Measure::Semilength};
  case BijectionId::hat_varphi_inv: return {LabelRule::HatD, Measure::UPlusH};
  case BijectionId::theta: return {LabelRule::Matching, Measure::XLength};
  case BijectionId::chi1: return {LabelRule::LhForm, Measure::XLength};
  case BijectionId::chi2: return {LabelRule::DyckTwo, Measure::Semilength};
  case BijectionId::chi2_inv: return {LabelRule::LhForm, Measure::XLength};
  case BijectionId::rho: return {LabelRule::LhForm, Measure::XLength};
  }
  throw std::logic_error("unknown bijection");
}

Form codomain_form(BijectionId id)
{
  switch (id) {
  case BijectionId::hat_varphi: return domain_form(BijectionId::hat_varphi_inv);
  case BijectionId::hat_varphi_inv: return domain_form(BijectionId::hat_varphi);
  case BijectionId::chi1: return {LabelRule::LvuForm, Measure::XLength};
  case BijectionId::chi2: return domain_form(BijectionId::chi2_inv);
  case BijectionId::chi2_inv: return domain_form(BijectionId::chi2);
  default: return domain_form(id);
  }
}

bool is_exceptional(BijectionId id, const LPath& p)
{
  if (uses_swap_table(id))
    return !last_factor(table_for(id), p);
  if (id == BijectionId::varphi)
    return !last_return(p);
  return false;
}

LPath apply_bijection(BijectionId id, const LPath& p)
{
  const Form dom = domain_form(id);
  const bool ok = in_form(p, dom.rule) || (id == BijectionId::chi1 && in_form(p, LabelRule::LvuForm));
  if (!ok)
    throw DomainViolation("'" + path_or_eps(p) + "' is not in the domain of " + bijection_name(id));
  if (is_exceptional(id, p))
    throw DomainViolation("'" + path_or_eps(p) + "' is in the exceptional set of " + bijection_name(id));

  if (uses_swap_table(id)) {
    const auto m = *last_factor(table_for(id), p);
    LPath out = slice(p, 0, m.start);
    append(out, m.rule->to);
    out.insert(out.end(), p.begin() + static_cast<long>(m.start + m.rule->from.size()), p.end());
    return out;
  }
  switch (id) {
  case BijectionId::varphi: {
    LPath out = p;
    const std::size_t r = *last_return(p);
    out[r].base = out[r].base == Step::D ? Step::V : Step::D;
    return out;
  }
  case BijectionId::hat_varphi: return hat_forward(p);
  case BijectionId::hat_varphi_inv: return hat_backward(p);
  case BijectionId::chi1: return in_form(p, LabelRule::LhForm) ? chi1_forward(p) : chi1_backward(p);
  case BijectionId::chi2: return chi2_rec(p);
  case BijectionId::chi2_inv: return chi2_inv_rec(p);
  default: break;
  }
  throw std::logic_error("unhandled bijection");
}

Report check_bijection(BijectionId id, unsigned n, unsigned threads)
{
  const auto t0 = std::chrono::steady_clock::now();
  Report rep;
  rep.id = bijection_name(id);
  rep.range = "n=" + std::to_string(n);
  rep.routes = {"bijection", "enumeration", "formula"};
  const std::string pn = "n=" + std::to_string(n);
  auto apply = [](BijectionId b) { return [b](const LPath& p) { return apply_bijection(b, p); }; };

  switch (id) {
  case BijectionId::chi1: {
    const auto lh = enumerate_form({LabelRule::LhForm, Measure::XLength}, n);
    const auto lvu = enumerate_form({LabelRule::LvuForm, Measure::XLength}, n);
    check_pair(lh, lvu, apply(id), apply(id),
               [](const LPath& p, const LPath& q) { return in_form(q, LabelRule::LvuForm) && high_h(p) == vu_factors(q); },
               pn, threads, rep);
    BigInt w = 0;
    for (long i = 0; i <= static_cast<long>(n); ++i)
      w += ipow(2, static_cast<unsigned long>(i)) * l_count(Pair::vu, n, i);
    rep.checks += 2;
    if (BigInt(lvu.size()) != w)
      rep.fail(pn + " weighted vu count", std::to_string(lvu.size()), to_string(w));
    if (w != ipow(2, n) * catalan(n))
      rep.fail(pn + " sum 2^i L^vu", to_string(w), to_string(ipow(2, n) * catalan(n)));
    rep.detail = pn + ": |L^h| = |L^vu| = " + std::to_string(lvu.size());
    break;
  }
  case BijectionId::chi2:
  case BijectionId::chi2_inv: {
    rep.id = "chi2";
    const auto dyck = enumerate_form(domain_form(BijectionId::chi2), n);
    const auto lh = enumerate_form(domain_form(BijectionId::chi2_inv), n);
    check_pair(dyck, lh, apply(BijectionId::chi2), apply(BijectionId::chi2_inv),
               [n](const LPath&, const LPath& q) { return in_form(q, LabelRule::LhForm) && x_length(q) == n; }, pn,
               threads, rep);
    const BigInt w = ipow(2, n) * catalan(n);
    rep.checks += 1;
    if (BigInt(dyck.size()) != w)
      rep.fail(pn + " weighted Dyck count", std::to_string(dyck.size()), to_string(w));
    rep.detail = pn + ": |C^d| = |L^h| = " + std::to_string(dyck.size());
    break;
  }
  case BijectionId::hat_varphi:
  case BijectionId::hat_varphi_inv: {
    rep.id = "hat_varphi";
    const auto chat = enumerate_form(domain_form(BijectionId::hat_varphi), n);
    const auto dhat = enumerate_form(domain_form(BijectionId::hat_varphi_inv), n);
    auto ys = [](const LPath& p) {
      return std::count_if(p.begin(), p.end(), [](const LStep& s) { return s.label == Label::Y; });
    };
    check_pair(chat, dhat, apply(BijectionId::hat_varphi), apply(BijectionId::hat_varphi_inv),
               [n, ys](const LPath& p, const LPath& q) {
                 return in_form(q, LabelRule::HatD) && measure(q, Measure::UPlusH) == n && ys(p) == ys(q);
               },
               pn, threads, rep);
    // Distribution of dy steps against D_{n+i,i}, and the total at y = 1.
    std::vector<std::size_t> by_y(n + 1, 0);
    for (const auto& p : chat)
      ++by_y[static_cast<std::size_t>(ys(p))];
    for (unsigned i = 0; i <= n; ++i) {
      ++rep.checks;
      const BigInt f = d_count(n + i, i);
      if (BigInt(by_y[i]) != f)
        rep.fail(pn + " i=" + std::to_string(i) + " paths with i dy steps", std::to_string(by_y[i]), to_string(f));
    }
    BigInt total = n == 0 ? BigInt(1) : BigInt(0);
    for (long k = 1; k <= static_cast<long>(n); ++k)
      total += narayana(n, k) * ipow(3, static_cast<unsigned long>(k)) * ipow(2, static_cast<unsigned long>(n - k));
    ++rep.checks;
    if (BigInt(chat.size()) != total)
      rep.fail(pn + " |C-hat| at y=1", std::to_string(chat.size()), to_string(total));
    rep.detail = pn + ": |C-hat| = |D-hat| = " + std::to_string(chat.size()) + " at y=1";
    break;
  }
  default: check_involution(id, n, threads, rep); break;
  }
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}
