#include "gmotzkin/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <memory>
#include <mutex>
#include <thread>

namespace gm {

PathStream::PathStream(unsigned n, std::vector<Step> prefix)
  : n_(n), floor_(prefix.size())
{
  unsigned rem = n;
  long h = 0;
  for (Step s : prefix) {
    if (!feasible(s, rem, h)) {
      done_ = true;
      return;
    }
    steps_.push_back(s);
    rem_.push_back(rem);
    height_.push_back(h);
    rem -= static_cast<unsigned>(step_dx(s));
    h += step_dy(s);
  }
}

bool PathStream::feasible(Step s, unsigned rem, long h) const
{
  switch (s) {
  case Step::U: return rem >= 1;
  case Step::D: return rem >= 1 && h >= 1;
  case Step::H: return rem >= 1;
  case Step::V: return h >= 1;
  }
  return false;
}

void PathStream::descend()
{
  unsigned rem = n_;
  long h = 0;
  if (!steps_.empty()) {
    rem = rem_.back() - static_cast<unsigned>(step_dx(steps_.back()));
    h = height_.back() + step_dy(steps_.back());
  }
  // Every state that is not complete has a feasible move, so this never stalls.
  while (rem != 0 || h != 0) {
    for (Step s : {Step::U, Step::D, Step::H, Step::V}) {
      if (feasible(s, rem, h)) {
        steps_.push_back(s);
        rem_.push_back(rem);
        height_.push_back(h);
        rem -= static_cast<unsigned>(step_dx(s));
        h += step_dy(s);
        break;
      }
    }
  }
}

bool PathStream::next()
{
  if (done_)
    return false;
  if (!started_) {
    started_ = true;
    descend();
    return true;
  }
  while (steps_.size() > floor_) {
    Step last = steps_.back();
    unsigned rem = rem_.back();
    long h = height_.back();
    steps_.pop_back();
    rem_.pop_back();
    height_.pop_back();
    for (unsigned t = static_cast<unsigned>(last) + 1; t < 4; ++t) {
      Step s = static_cast<Step>(t);
      if (feasible(s, rem, h)) {
        steps_.push_back(s);
        rem_.push_back(rem);
        height_.push_back(h);
        descend();
        return true;
      }
    }
  }
  done_ = true;
  return false;
}

std::vector<std::vector<Step>> split_prefixes(unsigned n, unsigned depth)
{
  std::vector<std::vector<Step>> out;
  std::vector<Step> cur;
  std::function<void(unsigned, long)> rec = [&](unsigned rem, long h) {
    if (cur.size() == depth || (rem == 0 && h == 0)) {
      out.push_back(cur);
      return;
    }
    for (Step s : {Step::U, Step::D, Step::H, Step::V}) {
      bool ok = s == Step::V ? h >= 1 : (rem >= 1 && (s != Step::D || h >= 1));
      if (!ok)
        continue;
      cur.push_back(s);
      rec(rem - static_cast<unsigned>(step_dx(s)), h + step_dy(s));
      cur.pop_back();
    }
  };
  rec(n, 0);
  return out;
}

void for_each_path(unsigned n, const std::function<void(const std::vector<Step>&)>& fn)
{
  PathStream stream(n);
  while (stream.next())
    fn(stream.current());
}

namespace {

// Runs job(i) for i in [0, count) on up to `threads` workers.
template <class Job>
void run_jobs(std::size_t count, unsigned threads, Job job)
{
  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(count)));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i)
      job(i, 0u);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = next++; i < count; i = next++)
        job(i, t);
    });
  }
  for (auto& th : pool)
    th.join();
}

}

std::uint64_t count_paths(unsigned n, unsigned threads)
{
  if (threads <= 1) {
    std::uint64_t c = 0;
    PathStream s(n);
    while (s.next())
      ++c;
    return c;
  }
  auto prefixes = split_prefixes(n, 4);
  std::vector<std::uint64_t> partial(threads, 0);
  run_jobs(prefixes.size(), threads, [&](std::size_t i, unsigned t) {
    PathStream s(n, prefixes[i]);
    std::uint64_t c = 0;
    while (s.next())
      ++c;
    partial[t] += c;
  });
  std::uint64_t total = 0;
  for (auto c : partial)
    total += c;
  return total;
}

namespace {

using Grid = std::vector<std::vector<std::uint64_t>>;

Grid make_grid(unsigned max_len, unsigned width)
{
  return Grid(max_len + 1, std::vector<std::uint64_t>(width, 0));
}

std::uint64_t lookup(const Grid& g, unsigned len, unsigned i)
{
  if (len >= g.size() || i >= g[len].size())
    return 0;
  return g[len][i];
}

void merge_grid(Grid& into, const Grid& from)
{
  for (std::size_t a = 0; a < from.size(); ++a)
    for (std::size_t b = 0; b < from[a].size(); ++b)
      into[a][b] += from[a][b];
}

}

// Step counts per path are bounded by 2*len+1; levels by len.
Tally::Tally(unsigned m) : max_len(m), total(m + 1, 0)
{
  const unsigned w = 2 * m + 2;
  for (auto& g : zcount)
    g = make_grid(m, w);
  for (auto& row : pair)
    for (auto& g : row)
      g = make_grid(m, w);
  returns = make_grid(m, w);
  for (auto& g : level_step)
    g = make_grid(m, w);
  points = make_grid(m, w);
  peak_ud = make_grid(m, w);
  peak_uv = make_grid(m, w);
}

void Tally::add(const std::vector<Step>& st, unsigned len)
{
  std::array<unsigned, 4> zc{};
  std::array<std::array<unsigned, 4>, 4> pc{};
  unsigned ret = 0;
  long h = 0;
  ++total[len];
  ++points[len][0];
  for (std::size_t i = 0; i < st.size(); ++i) {
    const Step s = st[i];
    const auto si = static_cast<unsigned>(s);
    h += step_dy(s);
    ++zc[si];
    if (i > 0)
      ++pc[static_cast<unsigned>(st[i - 1])][si];
    if (h == 0 && (s == Step::D || s == Step::V))
      ++ret;
    ++level_step[si][len][static_cast<std::size_t>(h)];
    ++points[len][static_cast<std::size_t>(h)];
    if (s == Step::U && i + 1 < st.size()) {
      if (st[i + 1] == Step::D)
        ++peak_ud[len][static_cast<std::size_t>(h)];
      else if (st[i + 1] == Step::V)
        ++peak_uv[len][static_cast<std::size_t>(h)];
    }
  }
  for (unsigned a = 0; a < 4; ++a) {
    ++zcount[a][len][zc[a]];
    for (unsigned b = 0; b < 4; ++b)
      ++pair[a][b][len][pc[a][b]];
  }
  ++returns[len][ret];
}

void Tally::merge(const Tally& o)
{
  for (unsigned l = 0; l <= max_len; ++l)
    total[l] += o.total[l];
  for (unsigned a = 0; a < 4; ++a) {
    merge_grid(zcount[a], o.zcount[a]);
    merge_grid(level_step[a], o.level_step[a]);
    for (unsigned b = 0; b < 4; ++b)
      merge_grid(pair[a][b], o.pair[a][b]);
  }
  merge_grid(returns, o.returns);
  merge_grid(points, o.points);
  merge_grid(peak_ud, o.peak_ud);
  merge_grid(peak_uv, o.peak_uv);
}

std::uint64_t Tally::z(Step s, unsigned len, unsigned i) const { return lookup(zcount[static_cast<unsigned>(s)], len, i); }
std::uint64_t Tally::pairs(Step a, Step b, unsigned len, unsigned i) const
{
  return lookup(pair[static_cast<unsigned>(a)][static_cast<unsigned>(b)], len, i);
}
std::uint64_t Tally::ret(unsigned len, unsigned i) const { return lookup(returns, len, i); }
std::uint64_t Tally::at_level(Step s, unsigned len, unsigned lvl) const
{
  return lookup(level_step[static_cast<unsigned>(s)], len, lvl);
}
std::uint64_t Tally::pts(unsigned len, unsigned lvl) const { return lookup(points, len, lvl); }
std::uint64_t Tally::ud_peaks(unsigned len, unsigned lvl) const { return lookup(peak_ud, len, lvl); }
std::uint64_t Tally::uv_peaks(unsigned len, unsigned lvl) const { return lookup(peak_uv, len, lvl); }

Tally build_tally(unsigned max_len, unsigned threads)
{
  Tally out(max_len);
  for (unsigned len = 0; len <= max_len; ++len) {
    auto prefixes = split_prefixes(len, 4);
    const unsigned workers = std::max(1u, threads);
    std::vector<std::unique_ptr<Tally>> partial;
    for (unsigned t = 0; t < workers; ++t)
      partial.push_back(std::make_unique<Tally>(max_len));
    run_jobs(prefixes.size(), workers, [&](std::size_t i, unsigned t) {
      PathStream s(len, prefixes[i]);
      while (s.next())
        partial[t]->add(s.current(), len);
    });
    for (auto& p : partial)
      out.merge(*p);
  }
  return out;
}

const Tally& shared_tally(unsigned max_len, unsigned threads)
{
  static std::mutex mu;
  static std::map<unsigned, std::unique_ptr<Tally>> cache;
  std::lock_guard lock(mu);
  auto it = cache.lower_bound(max_len);
  if (it != cache.end())
    return *it->second;
  auto t = std::make_unique<Tally>(build_tally(max_len, threads));
  return *cache.emplace(max_len, std::move(t)).first->second;
}

}
