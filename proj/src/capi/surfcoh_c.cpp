#include "surfcoh.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <memory>
#include <string>

#include "../core/johnson.hpp"
#include "../core/suites.hpp"

namespace {

thread_local std::string g_last_error;

surfcoh_status fail(surfcoh_status code, const std::string& msg) {
  g_last_error = msg;
  return code;
}

template <typename Fn>
surfcoh_status guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const surfcoh::ConfigError& e) {
    return fail(SURFCOH_ERROR_CONFIG, e.what());
  } catch (const std::invalid_argument& e) {
    return fail(SURFCOH_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::out_of_range& e) {
    return fail(SURFCOH_ERROR_INVALID_ARGUMENT, e.what());
  } catch (const std::exception& e) {
    return fail(SURFCOH_ERROR_INTERNAL, e.what());
  } catch (...) {
    return fail(SURFCOH_ERROR_INTERNAL, "unknown error");
  }
}

}  // namespace

struct surfcoh_config {
  surfcoh::SuiteConfig cfg;
};

struct surfcoh_report {
  explicit surfcoh_report(surfcoh::SuiteReport r) : report(std::move(r)) {}
  surfcoh::SuiteReport report;
  std::string json_cache;
  std::string text_cache;
};

extern "C" {

const char* surfcoh_version(void) { return "0.1.0"; }

const char* surfcoh_last_error(void) { return g_last_error.c_str(); }

surfcoh_config* surfcoh_config_new(void) { return new (std::nothrow) surfcoh_config(); }

void surfcoh_config_free(surfcoh_config* cfg) { delete cfg; }

surfcoh_status surfcoh_config_set_suite(surfcoh_config* cfg, const char* suite) {
  if (!cfg || !suite) return fail(SURFCOH_ERROR_INVALID_ARGUMENT, "null argument");
  return guarded([&] {
    const auto& ids = surfcoh::suite_ids();
    if (std::find(ids.begin(), ids.end(), std::string(suite)) == ids.end()) {
      return fail(SURFCOH_ERROR_CONFIG, std::string("unknown suite '") + suite + "'");
    }
    cfg->cfg.suite = suite;
    return SURFCOH_OK;
  });
}

surfcoh_status surfcoh_config_set_genus_range(surfcoh_config* cfg, int lo, int hi) {
  if (!cfg) return fail(SURFCOH_ERROR_INVALID_ARGUMENT, "null config");
  cfg->cfg.g_lo = lo;
  cfg->cfg.g_hi = hi;
  return SURFCOH_OK;
}

surfcoh_status surfcoh_config_set_points_range(surfcoh_config* cfg, int lo, int hi) {
  if (!cfg) return fail(SURFCOH_ERROR_INVALID_ARGUMENT, "null config");
  cfg->cfg.n_lo = lo;
  cfg->cfg.n_hi = hi;
  return SURFCOH_OK;
}

surfcoh_status surfcoh_config_set_samples(surfcoh_config* cfg, int samples) {
  if (!cfg) return fail(SURFCOH_ERROR_INVALID_ARGUMENT, "null config");
  cfg->cfg.samples = samples;
  return SURFCOH_OK;
}

surfcoh_status surfcoh_config_set_seed(surfcoh_config* cfg, uint64_t seed) {
  if (!cfg) return fail(SURFCOH_ERROR_INVALID_ARGUMENT, "null config");
  cfg->cfg.seed = seed;
  return SURFCOH_OK;
}

surfcoh_status surfcoh_config_set_relation_sign(surfcoh_config* cfg, const char* sign) {
  if (!cfg || !sign) return fail(SURFCOH_ERROR_INVALID_ARGUMENT, "null argument");
  std::string s = sign;
  if (s == "minus") {
    cfg->cfg.relation_sign = surfcoh::RelationSign::Minus;
  } else if (s == "plus") {
    cfg->cfg.relation_sign = surfcoh::RelationSign::Plus;
  } else {
    return fail(SURFCOH_ERROR_CONFIG, "relation sign must be 'minus' or 'plus'");
  }
  return SURFCOH_OK;
}

surfcoh_status surfcoh_config_set_allow_large(surfcoh_config* cfg, int allow) {
  if (!cfg) return fail(SURFCOH_ERROR_INVALID_ARGUMENT, "null config");
  cfg->cfg.allow_large = allow != 0;
  return SURFCOH_OK;
}

surfcoh_status surfcoh_run(const surfcoh_config* cfg, surfcoh_report** out) {
  if (!cfg || !out) return fail(SURFCOH_ERROR_INVALID_ARGUMENT, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto report = std::make_unique<surfcoh_report>(surfcoh::run_suite(cfg->cfg));
    *out = report.release();
    return SURFCOH_OK;
  });
}

void surfcoh_report_free(surfcoh_report* report) { delete report; }

int surfcoh_report_passed(const surfcoh_report* report) {
  return report && report->report.passed() ? 1 : 0;
}

size_t surfcoh_report_check_count(const surfcoh_report* report) {
  return report ? report->report.checks().size() : 0;
}

size_t surfcoh_report_failure_count(const surfcoh_report* report) {
  return report ? report->report.failure_count() : 0;
}

const char* surfcoh_report_json(surfcoh_report* report) {
  if (!report) return nullptr;
  if (report->json_cache.empty()) report->json_cache = report->report.to_json();
  return report->json_cache.c_str();
}

const char* surfcoh_report_text(surfcoh_report* report) {
  if (!report) return nullptr;
  if (report->text_cache.empty()) report->text_cache = report->report.to_text();
  return report->text_cache.c_str();
}

surfcoh_status surfcoh_rank_table(int g_lo, int g_hi, int n_lo, int n_hi, int as_json,
                                  int allow_large, char** out) {
  if (!out) return fail(SURFCOH_ERROR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] {
    std::string table =
        surfcoh::rank_table(g_lo, g_hi, n_lo, n_hi, as_json != 0, allow_large != 0);
    char* buf = static_cast<char*>(std::malloc(table.size() + 1));
    if (!buf) return fail(SURFCOH_ERROR_INTERNAL, "out of memory");
    std::memcpy(buf, table.c_str(), table.size() + 1);
    *out = buf;
    return SURFCOH_OK;
  });
}

void surfcoh_string_free(char* s) { std::free(s); }

surfcoh_status surfcoh_image_rank(int genus, int points, int allow_large,
                                  long long* out_rank) {
  if (!out_rank) return fail(SURFCOH_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    if (genus < 2 || points < 1) {
      return fail(SURFCOH_ERROR_INVALID_ARGUMENT, "need genus >= 2 and points >= 1");
    }
    if (!allow_large &&
        (genus > surfcoh::kGenusCap || points > surfcoh::kPointsCap)) {
      return fail(SURFCOH_ERROR_CONFIG, "size exceeds desk-scale caps");
    }
    *out_rank = static_cast<long long>(
        surfcoh::image_rank(surfcoh::ConfSpaceModel(genus, points)));
    return SURFCOH_OK;
  });
}

surfcoh_status surfcoh_cover_genus(int genus, int sheets, long long* out_genus) {
  if (!out_genus) return fail(SURFCOH_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    if (genus < 2 || sheets < 1) {
      return fail(SURFCOH_ERROR_INVALID_ARGUMENT, "need genus >= 2 and sheets >= 1");
    }
    *out_genus = static_cast<long long>(surfcoh::cover_genus(genus, sheets));
    return SURFCOH_OK;
  });
}

surfcoh_status surfcoh_tau_hits_basic(int genus, int* out_hits) {
  if (!out_hits) return fail(SURFCOH_ERROR_INVALID_ARGUMENT, "null output pointer");
  return guarded([&] {
    if (genus < 2) return fail(SURFCOH_ERROR_INVALID_ARGUMENT, "need genus >= 2");
    if (genus > surfcoh::kGenusCap) {
      return fail(SURFCOH_ERROR_CONFIG, "size exceeds desk-scale caps");
    }
    surfcoh::SymplecticSpace space(genus);
    surfcoh::WedgeTwoModOmega target = surfcoh::mod_omega(
        space, surfcoh::wedge2(space, space.unit_a(1), space.unit_a(2)));
    *out_hits = surfcoh::tau_hits(space, space.unit_b(1), target) ? 1 : 0;
    return SURFCOH_OK;
  });
}

}  // extern "C"
