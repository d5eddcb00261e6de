#include "gmotzkin/gmotzkin.h"

#include "gmotzkin/bijections.hpp"
#include "gmotzkin/enumerate.hpp"
#include "gmotzkin/equations.hpp"
#include "gmotzkin/tables.hpp"
#include "gmotzkin/verify.hpp"

#include <json.hpp>

#include <algorithm>
#include <string>
#include <vector>

struct gm_text {
  std::string s;
};

struct gm_report {
  std::vector<gm::Report> reports;
};

namespace {

thread_local std::string g_error;

// Names that solve to a one-variable series.
const std::vector<std::string> kPlainSeries = {"G", "C", "M", "R", "r"};

gm_status fail(gm_status s, std::string msg)
{
  g_error = std::move(msg);
  return s;
}

std::string joined(const std::vector<std::string>& v)
{
  std::string out;
  for (const auto& s : v)
    out += (out.empty() ? "" : ", ") + s;
  return out;
}

std::vector<std::string> series_names()
{
  std::vector<std::string> v;
  for (const auto& [name, eq] : gm::equation_names())
    v.push_back(name);
  v.push_back("r");
  return v;
}

std::vector<std::string> names_of(gm_name_kind kind)
{
  switch (kind) {
  case GM_NAMES_TABLE: return gm::table_stats();
  case GM_NAMES_IDENTITY: return gm::identity_names();
  case GM_NAMES_BIJECTION: {
    std::vector<std::string> v;
    for (const auto& [name, id] : gm::bijection_names())
      v.push_back(name);
    return v;
  }
  case GM_NAMES_SERIES: return series_names();
  case GM_NAMES_CROSSCHECK: return gm::crosscheck_names();
  }
  return {};
}

gm::VerifyOptions to_options(const gm_verify_options* o)
{
  gm::VerifyOptions v;
  if (!o)
    return v;
  if (o->has_max_n)
    v.max_n = o->max_n;
  v.max_m = o->max_m;
  v.oracle_n = o->oracle_n;
  v.threads = o->threads == 0 ? 1 : o->threads;
  return v;
}

gm_text* text(std::string s) { return new gm_text{std::move(s)}; }

// Translates library exceptions into status codes at the boundary.
template <class F>
gm_status guarded(F&& f)
{
  g_error.clear();
  try {
    return f();
  } catch (const gm::DomainViolation& e) {
    return fail(GM_ERR_DOMAIN, e.what());
  } catch (const gm::InvalidPath& e) {
    return fail(GM_ERR_INVALID_PATH, e.what());
  } catch (const gm::SeriesError& e) {
    return fail(GM_ERR_SERIES, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(GM_ERR_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(GM_ERR_INTERNAL, e.what());
  } catch (...) {
    return fail(GM_ERR_INTERNAL, "unknown exception");
  }
}

}  // namespace

extern "C" {

const char* gm_last_error(void) { return g_error.c_str(); }
const char* gm_version(void) { return "1.0.0"; }

const char* gm_text_str(const gm_text* t) { return t ? t->s.c_str() : ""; }
size_t gm_text_size(const gm_text* t) { return t ? t->s.size() : 0; }
void gm_text_free(gm_text* t) { delete t; }

gm_status gm_list_names(gm_name_kind kind, gm_text** out)
{
  return guarded([&] {
    if (!out)
      return fail(GM_ERR_ARGUMENT, "null output pointer");
    std::string s;
    for (const auto& n : names_of(kind))
      s += n + "\n";
    *out = text(std::move(s));
    return GM_OK;
  });
}

gm_status gm_enumerate(unsigned n, gm_path_callback cb, void* user)
{
  return guarded([&] {
    if (!cb)
      return fail(GM_ERR_ARGUMENT, "null callback");
    // Early stop unwinds out of the walk with a private tag.
    struct Stop {};
    try {
      gm::for_each_path(n, [&](const std::vector<gm::Step>& s) {
        if (cb(gm::steps_str(s).c_str(), user) != 0)
          throw Stop{};
      });
    } catch (const Stop&) {
    }
    return GM_OK;
  });
}

gm_status gm_count_paths(unsigned n, unsigned threads, uint64_t* out)
{
  return guarded([&] {
    if (!out)
      return fail(GM_ERR_ARGUMENT, "null output pointer");
    *out = gm::count_paths(n, threads == 0 ? 1 : threads);
    return GM_OK;
  });
}

gm_status gm_table(const char* stat, unsigned rows, gm_format format, gm_text** out)
{
  return guarded([&] {
    if (!stat || !out)
      return fail(GM_ERR_ARGUMENT, "null argument");
    if (!gm::is_table_stat(stat))
      return fail(GM_ERR_UNKNOWN_NAME, std::string("unknown stat '") + stat + "'; valid: " + joined(gm::table_stats()));
    if (format != GM_FORMAT_CSV && format != GM_FORMAT_JSON)
      return fail(GM_ERR_ARGUMENT, "table format must be csv or json");
    const auto cells = gm::table(stat, rows);
    *out = text(format == GM_FORMAT_CSV ? gm::table_csv(cells) : gm::table_json(cells));
    return GM_OK;
  });
}

gm_status gm_series(const char* name, unsigned order, unsigned y_order, gm_text** out)
{
  return guarded([&] {
    if (!name || !out)
      return fail(GM_ERR_ARGUMENT, "null argument");
    const std::string nm = name;
    const auto names = series_names();
    if (std::find(names.begin(), names.end(), nm) == names.end())
      return fail(GM_ERR_UNKNOWN_NAME, "unknown series '" + nm + "'; valid: " + joined(names));
    if (order == 0)
      return fail(GM_ERR_ARGUMENT, "order must be positive");
    nlohmann::ordered_json j;
    j["name"] = nm;
    j["x_order"] = order;
    const bool plain = std::find(kPlainSeries.begin(), kPlainSeries.end(), nm) != kPlainSeries.end();
    if (plain) {
      gm::Series s;
      if (nm == "r")
        s = gm::little_schroder_series(order);
      else if (nm == "G")
        s = gm::g_series(order);
      else
        s = gm::solve_series(*gm::equation_by_name(nm), order);
      j["coefficients"] = nlohmann::ordered_json::parse(gm::to_json(s));
    } else {
      const unsigned yo = y_order == 0 ? order : y_order;
      j["y_order"] = yo;
      const gm::BiSeries& s = gm::solved(*gm::equation_by_name(nm), order, yo);
      j["coefficients"] = nlohmann::ordered_json::parse(gm::to_json(s));
    }
    *out = text(j.dump() + "\n");
    return GM_OK;
  });
}

size_t gm_report_count(const gm_report* r) { return r ? r->reports.size() : 0; }

size_t gm_report_passed(const gm_report* r)
{
  if (!r)
    return 0;
  size_t k = 0;
  for (const auto& x : r->reports)
    k += x.pass ? 1 : 0;
  return k;
}

gm_status gm_report_render(const gm_report* r, gm_format format, int timing, gm_text** out)
{
  return guarded([&] {
    if (!r || !out)
      return fail(GM_ERR_ARGUMENT, "null argument");
    if (format == GM_FORMAT_JSON)
      *out = text(gm::reports_json(r->reports, timing != 0));
    else if (format == GM_FORMAT_TEXT)
      *out = text(gm::reports_text(r->reports, timing != 0));
    else
      return fail(GM_ERR_ARGUMENT, "report format must be text or json");
    return GM_OK;
  });
}

void gm_report_free(gm_report* r) { delete r; }

gm_status gm_bijection_apply(const char* name, const char* path, gm_text** out)
{
  return guarded([&] {
    if (!name || !path || !out)
      return fail(GM_ERR_ARGUMENT, "null argument");
    const auto id = gm::bijection_by_name(name);
    if (!id)
      return fail(GM_ERR_UNKNOWN_NAME,
                  std::string("unknown bijection '") + name + "'; valid: " + joined(names_of(GM_NAMES_BIJECTION)));
    *out = text(gm::labeled_str(gm::apply_bijection(*id, gm::parse_labeled(path))));
    return GM_OK;
  });
}

gm_status gm_bijection_check(const char* name, unsigned n, unsigned threads, gm_report** out)
{
  return guarded([&] {
    if (!name || !out)
      return fail(GM_ERR_ARGUMENT, "null argument");
    const auto id = gm::bijection_by_name(name);
    if (!id)
      return fail(GM_ERR_UNKNOWN_NAME,
                  std::string("unknown bijection '") + name + "'; valid: " + joined(names_of(GM_NAMES_BIJECTION)));
    *out = new gm_report{{gm::check_bijection(*id, n, threads == 0 ? 1 : threads)}};
    return GM_OK;
  });
}

gm_verify_options gm_verify_defaults(void)
{
  const gm::VerifyOptions d;
  return gm_verify_options{0, 0, d.max_m, d.oracle_n, d.threads};
}

gm_status gm_verify(const char* identity, const gm_verify_options* opt, gm_report** out)
{
  return guarded([&] {
    if (!identity || !out)
      return fail(GM_ERR_ARGUMENT, "null argument");
    const std::string id = identity;
    const auto o = to_options(opt);
    if (id == "all") {
      *out = new gm_report{gm::verify_all(o)};
      return GM_OK;
    }
    if (!gm::is_identity(id))
      return fail(GM_ERR_UNKNOWN_NAME, "unknown identity '" + id + "'; valid: all, " + joined(gm::identity_names()));
    *out = new gm_report{{gm::verify_identity(id, o)}};
    return GM_OK;
  });
}

gm_status gm_crosscheck(const char* family, unsigned max_n, const gm_verify_options* opt, gm_report** out)
{
  return guarded([&] {
    if (!family || !out)
      return fail(GM_ERR_ARGUMENT, "null argument");
    if (!gm::is_crosscheck_family(family))
      return fail(GM_ERR_UNKNOWN_NAME,
                  std::string("unknown family '") + family + "'; valid: " + joined(gm::crosscheck_names()));
    *out = new gm_report{{gm::cross_check(family, max_n, to_options(opt))}};
    return GM_OK;
  });
}

}
