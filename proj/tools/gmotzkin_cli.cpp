// Command-line front end. Talks to the library only through gmotzkin.h.
#include "gmotzkin/gmotzkin.h"

#include <CLI11.hpp>

#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

namespace {

constexpr int kOk = 0;
constexpr int kVerifyFailed = 1;
constexpr int kUsage = 2;

std::vector<std::string> names(gm_name_kind kind)
{
  gm_text* t = nullptr;
  std::vector<std::string> out;
  if (gm_list_names(kind, &t) != GM_OK)
    return out;
  std::string cur;
  for (const char* p = gm_text_str(t); *p; ++p) {
    if (*p == '\n') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += *p;
    }
  }
  gm_text_free(t);
  return out;
}

int report_error(gm_status s)
{
  std::cerr << "error: " << gm_last_error() << "\n";
  return s == GM_ERR_INTERNAL || s == GM_ERR_SERIES ? kVerifyFailed : kUsage;
}

int emit(gm_status s, gm_text* t)
{
  if (s != GM_OK)
    return report_error(s);
  std::fwrite(gm_text_str(t), 1, gm_text_size(t), stdout);
  gm_text_free(t);
  return kOk;
}

// Prints the report and maps its verdict onto the exit code.
int finish(gm_report* r, gm_format fmt, bool timing)
{
  gm_text* t = nullptr;
  const gm_status s = gm_report_render(r, fmt, timing ? 1 : 0, &t);
  const bool all = gm_report_passed(r) == gm_report_count(r);
  gm_report_free(r);
  if (s != GM_OK)
    return report_error(s);
  std::fwrite(gm_text_str(t), 1, gm_text_size(t), stdout);
  gm_text_free(t);
  return all ? kOk : kVerifyFailed;
}

// Reports from several calls rendered as one document.
int finish_many(std::vector<gm_report*>& rs, gm_format fmt, bool timing)
{
  bool all = true;
  std::string body;
  std::size_t passed = 0, total = 0;
  for (gm_report* r : rs) {
    all = all && gm_report_passed(r) == gm_report_count(r);
    passed += gm_report_passed(r);
    total += gm_report_count(r);
    gm_text* t = nullptr;
    if (gm_report_render(r, fmt, timing ? 1 : 0, &t) == GM_OK) {
      std::string s = gm_text_str(t);
      if (fmt == GM_FORMAT_JSON) {
        // Splice the single-element arrays into one array.
        const auto a = s.find('['), b = s.rfind(']');
        s = s.substr(a + 1, b - a - 1);
        while (!s.empty() && (s.back() == '\n' || s.back() == ' '))
          s.pop_back();
        body += (body.empty() ? "" : ",") + s;
      } else {
        // Drop the per-report summary line; one summary follows at the end.
        s.erase(s.rfind('\n', s.size() - 2) + 1);
        body += s;
      }
    }
    gm_text_free(t);
    gm_report_free(r);
  }
  if (fmt == GM_FORMAT_JSON)
    std::cout << "[" << body << "\n]\n";
  else
    std::cout << body << passed << "/" << total << " passed\n";
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv)
{
  CLI::App app{"Generalized Motzkin path enumeration, tables and identity checks"};
  app.require_subcommand(1);
  unsigned threads = 1;
  app.add_option("--threads", threads, "Worker threads (output is identical for any value)")
    ->check(CLI::Range(1u, 256u));

  auto* en = app.add_subcommand("enumerate", "Count or list all paths of x-length n");
  unsigned en_n = 0;
  std::string emit_kind = "count";
  en->add_option("--n", en_n, "Path length")->required()->check(CLI::Range(0u, 16u));
  en->add_option("--emit", emit_kind, "count or paths")->check(CLI::IsMember({"count", "paths"}));

  auto* tb = app.add_subcommand("table", "Print a triangle as n,i,value rows");
  std::string tb_stat, tb_format = "csv";
  unsigned tb_rows = 0;
  tb->add_option("--stat", tb_stat, "Statistic")->required()->check(CLI::IsMember(names(GM_NAMES_TABLE)));
  tb->add_option("--rows", tb_rows, "Number of rows (n = 0 .. rows-1)")->required()->check(CLI::Range(0u, 64u));
  tb->add_option("--format", tb_format, "csv or json")->check(CLI::IsMember({"csv", "json"}));

  auto* vf = app.add_subcommand("verify", "Run catalog identities");
  std::string vf_id, vf_report = "text";
  unsigned vf_max_n = 0, vf_max_m = 4, vf_oracle = 10;
  bool timing = false;
  std::vector<std::string> ids = names(GM_NAMES_IDENTITY);
  ids.insert(ids.begin(), "all");
  vf->add_option("--identity", vf_id, "Catalog key or 'all'")->required()->check(CLI::IsMember(ids));
  auto* vf_max_n_opt = vf->add_option("--max-n", vf_max_n, "Override every identity's n bound")->check(CLI::Range(0u, 60u));
  vf->add_option("--max-m", vf_max_m, "m bound for two-parameter identities")->check(CLI::Range(0u, 10u));
  vf->add_option("--oracle-n", vf_oracle, "Longest path length for exhaustive enumeration")->check(CLI::Range(0u, 12u));
  vf->add_option("--report", vf_report, "text or json")->check(CLI::IsMember({"text", "json"}));
  vf->add_flag("--timing", timing, "Include elapsed milliseconds in the report");

  auto* bj = app.add_subcommand("bijection", "Apply or certify a bijection");
  std::string bj_name, bj_input, bj_report = "text";
  unsigned bj_n = 0;
  bool bj_check = false;
  bj->add_option("--name", bj_name, "Bijection")->required()->check(CLI::IsMember(names(GM_NAMES_BIJECTION)));
  auto* in_opt = bj->add_option("--input", bj_input, "Dot-separated labeled path, e.g. u.d1");
  auto* check_opt = bj->add_flag("--check", bj_check, "Certify by exhaustion at sizes 0..n");
  auto* n_opt = bj->add_option("--n", bj_n, "Largest size for --check")->check(CLI::Range(0u, 8u));
  bj->add_option("--report", bj_report, "text or json")->check(CLI::IsMember({"text", "json"}));
  bj->add_flag("--timing", timing, "Include elapsed milliseconds in the report");
  in_opt->excludes(check_opt);
  n_opt->needs(check_opt);
  check_opt->needs(n_opt);

  auto* sr = app.add_subcommand("series", "Dump fixed-point series coefficients as JSON");
  std::string sr_name;
  unsigned sr_order = 0, sr_y_order = 0;
  sr->add_option("--name", sr_name, "Series")->required()->check(CLI::IsMember(names(GM_NAMES_SERIES)));
  sr->add_option("--order", sr_order, "Number of x coefficients")->required()->check(CLI::Range(1u, 200u));
  sr->add_option("--y-order", sr_y_order, "Number of y coefficients (defaults to --order)")->check(CLI::Range(1u, 200u));

  auto* cc = app.add_subcommand("crosscheck", "Compare closed forms, series and enumeration cell by cell");
  std::string cc_stat, cc_report = "text";
  unsigned cc_max_n = 8, cc_oracle = 10;
  cc->add_option("--stat", cc_stat, "Family")->required()->check(CLI::IsMember(names(GM_NAMES_CROSSCHECK)));
  cc->add_option("--max-n", cc_max_n, "Largest n")->required()->check(CLI::Range(0u, 60u));
  cc->add_option("--oracle-n", cc_oracle, "Longest path length for exhaustive enumeration")->check(CLI::Range(0u, 12u));
  cc->add_option("--report", cc_report, "text or json")->check(CLI::IsMember({"text", "json"}));
  cc->add_flag("--timing", timing, "Include elapsed milliseconds in the report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  const auto report_fmt = [](const std::string& s) { return s == "json" ? GM_FORMAT_JSON : GM_FORMAT_TEXT; };

  if (*en) {
    if (emit_kind == "count") {
      uint64_t c = 0;
      const gm_status s = gm_count_paths(en_n, threads, &c);
      if (s != GM_OK)
        return report_error(s);
      std::cout << c << "\n";
      return kOk;
    }
    const gm_status s = gm_enumerate(
      en_n,
      [](const char* p, void*) {
        std::fputs(p, stdout);
        std::fputc('\n', stdout);
        return 0;
      },
      nullptr);
    return s == GM_OK ? kOk : report_error(s);
  }

  if (*tb) {
    gm_text* t = nullptr;
    const gm_status s = gm_table(tb_stat.c_str(), tb_rows, tb_format == "json" ? GM_FORMAT_JSON : GM_FORMAT_CSV, &t);
    return emit(s, t);
  }

  if (*vf) {
    gm_verify_options o = gm_verify_defaults();
    o.has_max_n = vf_max_n_opt->count() > 0;
    o.max_n = vf_max_n;
    o.max_m = vf_max_m;
    o.oracle_n = vf_oracle;
    o.threads = threads;
    gm_report* r = nullptr;
    const gm_status s = gm_verify(vf_id.c_str(), &o, &r);
    if (s != GM_OK)
      return report_error(s);
    return finish(r, report_fmt(vf_report), timing);
  }

  if (*bj) {
    if (!bj_check) {
      if (in_opt->count() == 0) {
        std::cerr << "error: bijection needs --input <path> or --check --n <N>\n";
        return kUsage;
      }
      gm_text* t = nullptr;
      const gm_status s = gm_bijection_apply(bj_name.c_str(), bj_input.c_str(), &t);
      if (s != GM_OK)
        return report_error(s);
      std::cout << gm_text_str(t) << "\n";
      gm_text_free(t);
      return kOk;
    }
    std::vector<gm_report*> rs;
    for (unsigned n = 0; n <= bj_n; ++n) {
      gm_report* r = nullptr;
      const gm_status s = gm_bijection_check(bj_name.c_str(), n, threads, &r);
      if (s != GM_OK) {
        for (gm_report* x : rs)
          gm_report_free(x);
        return report_error(s);
      }
      rs.push_back(r);
    }
    return finish_many(rs, report_fmt(bj_report), timing);
  }

  if (*sr) {
    gm_text* t = nullptr;
    const gm_status s = gm_series(sr_name.c_str(), sr_order, sr_y_order, &t);
    return emit(s, t);
  }

  if (*cc) {
    gm_verify_options o = gm_verify_defaults();
    o.oracle_n = cc_oracle;
    o.threads = threads;
    gm_report* r = nullptr;
    const gm_status s = gm_crosscheck(cc_stat.c_str(), cc_max_n, &o, &r);
    if (s != GM_OK)
      return report_error(s);
    return finish(r, report_fmt(cc_report), timing);
  }
  return kUsage;
}
