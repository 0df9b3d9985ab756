// Command-line front end for the surfcoh library.  Talks to the core only
// through the C API in surfcoh.h.
//
//   surfcoh verify --suite cup --g 2..3 --n 2..3 [--samples N] [--seed S]
//                  [--relation-sign minus|plus] [--format text|json] [--out PATH]
//                  [--unsafe-large]
//   surfcoh table --g 2..3 --n 2..4 [--format text|json] [--out PATH]
//                  [--unsafe-large]
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage/config error.

#include <CLI11.hpp>

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <string>

#include "surfcoh.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

// "a..b" or a single "a".
bool parse_range(const std::string& text, int& lo, int& hi) {
  auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      lo = hi = std::stoi(text);
    } else {
      lo = std::stoi(text.substr(0, dots));
      hi = std::stoi(text.substr(dots + 2));
    }
  } catch (const std::exception&) {
    return false;
  }
  return true;
}

int write_output(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::fputs(content.c_str(), stdout);
    return 0;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) {
    std::fprintf(stderr, "error: cannot open '%s' for writing\n", out_path.c_str());
    return 1;
  }
  f << content;
  return f.good() ? 0 : 1;
}

int fail_usage(const std::string& msg) {
  std::fprintf(stderr, "error: %s\n", msg.c_str());
  return kExitUsage;
}

struct ConfigDeleter {
  void operator()(surfcoh_config* c) const { surfcoh_config_free(c); }
};
struct ReportDeleter {
  void operator()(surfcoh_report* r) const { surfcoh_report_free(r); }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact verification suites for surface configuration spaces"};
  app.require_subcommand(1);

  std::string suite = "all";
  std::string g_range = "2..3";
  std::string n_range = "2..3";
  int samples = 200;
  std::uint64_t seed = 1;
  std::string relation_sign = "minus";
  std::string format = "text";
  std::string out_path;
  bool unsafe_large = false;

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("--suite", suite,
                     "suite id: cup, crossing, push, sym, isotropic, johnson, "
                     "cover, all");
  verify->add_option("--g", g_range, "genus range, e.g. 2..3 or 2");
  verify->add_option("--n", n_range, "point count range, e.g. 2..3 or 2");
  verify->add_option("--samples", samples, "samples per randomized check");
  verify->add_option("--seed", seed, "seed for all sampled inputs");
  verify->add_option("--relation-sign", relation_sign, "minus or plus");
  verify->add_option("--format", format, "text or json");
  verify->add_option("--out", out_path, "write the report to this file");
  verify->add_flag("--unsafe-large", unsafe_large, "lift the size caps");

  std::string t_g_range = "2..3";
  std::string t_n_range = "2..4";
  std::string t_format = "text";
  std::string t_out_path;
  bool t_unsafe_large = false;
  CLI::App* table = app.add_subcommand("table", "computed vs closed-form ranks");
  table->add_option("--g", t_g_range, "genus range");
  table->add_option("--n", t_n_range, "point count range");
  table->add_option("--format", t_format, "text or json");
  table->add_option("--out", t_out_path, "write the table to this file");
  table->add_flag("--unsafe-large", t_unsafe_large, "lift the size caps");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  if (verify->parsed()) {
    if (format != "text" && format != "json") {
      return fail_usage("--format must be text or json");
    }
    int g_lo = 0, g_hi = 0, n_lo = 0, n_hi = 0;
    if (!parse_range(g_range, g_lo, g_hi)) return fail_usage("cannot parse --g");
    if (!parse_range(n_range, n_lo, n_hi)) return fail_usage("cannot parse --n");

    std::unique_ptr<surfcoh_config, ConfigDeleter> cfg(surfcoh_config_new());
    if (!cfg) return fail_usage("out of memory");
    if (surfcoh_config_set_suite(cfg.get(), suite.c_str()) != SURFCOH_OK ||
        surfcoh_config_set_genus_range(cfg.get(), g_lo, g_hi) != SURFCOH_OK ||
        surfcoh_config_set_points_range(cfg.get(), n_lo, n_hi) != SURFCOH_OK ||
        surfcoh_config_set_samples(cfg.get(), samples) != SURFCOH_OK ||
        surfcoh_config_set_seed(cfg.get(), seed) != SURFCOH_OK ||
        surfcoh_config_set_relation_sign(cfg.get(), relation_sign.c_str()) !=
            SURFCOH_OK ||
        surfcoh_config_set_allow_large(cfg.get(), unsafe_large ? 1 : 0) !=
            SURFCOH_OK) {
      return fail_usage(surfcoh_last_error());
    }

    surfcoh_report* raw = nullptr;
    surfcoh_status st = surfcoh_run(cfg.get(), &raw);
    if (st != SURFCOH_OK) return fail_usage(surfcoh_last_error());
    std::unique_ptr<surfcoh_report, ReportDeleter> report(raw);

    const char* rendered = format == "json" ? surfcoh_report_json(report.get())
                                            : surfcoh_report_text(report.get());
    if (!rendered) return fail_usage("could not render report");
    if (write_output(rendered, out_path) != 0) return kExitUsage;
    return surfcoh_report_passed(report.get()) ? kExitPass : kExitCheckFailure;
  }

  if (t_format != "text" && t_format != "json") {
    return fail_usage("--format must be text or json");
  }
  int g_lo = 0, g_hi = 0, n_lo = 0, n_hi = 0;
  if (!parse_range(t_g_range, g_lo, g_hi)) return fail_usage("cannot parse --g");
  if (!parse_range(t_n_range, n_lo, n_hi)) return fail_usage("cannot parse --n");
  char* text = nullptr;
  surfcoh_status st = surfcoh_rank_table(g_lo, g_hi, n_lo, n_hi,
                                         t_format == "json" ? 1 : 0,
                                         t_unsafe_large ? 1 : 0, &text);
  if (st != SURFCOH_OK) return fail_usage(surfcoh_last_error());
  int rc = write_output(text, t_out_path);
  surfcoh_string_free(text);
  return rc == 0 ? kExitPass : kExitUsage;
}
