#include "knapfrob/knapfrob.h"

#include <cstring>
#include <sstream>
#include <string>

#include "diagfrob.hpp"
#include "error.hpp"
#include "experiments.hpp"
#include "json_io.hpp"
#include "knapsack.hpp"

struct kf_instance {
  kf::KnapsackInstance inst;
};

namespace {

thread_local std::string g_last_error;

kf_status map_code(kf::errc c) {
  switch (c) {
    case kf::errc::bad_input: return KF_ERR_BAD_INPUT;
    case kf::errc::rank_deficient: return KF_ERR_RANK_DEFICIENT;
    case kf::errc::rank_config: return KF_ERR_RANK_CONFIG;
    case kf::errc::not_primitive: return KF_ERR_NOT_PRIMITIVE;
    case kf::errc::cone_not_pointed: return KF_ERR_CONE_NOT_POINTED;
    case kf::errc::budget_exceeded: return KF_ERR_BUDGET_EXCEEDED;
    case kf::errc::unsupported_dimension: return KF_ERR_UNSUPPORTED_DIMENSION;
    case kf::errc::unsupported_rank: return KF_ERR_UNSUPPORTED_RANK;
    case kf::errc::not_in_cone: return KF_ERR_NOT_IN_CONE;
    case kf::errc::not_interior: return KF_ERR_NOT_INTERIOR;
    case kf::errc::inexact: return KF_ERR_INEXACT;
    case kf::errc::precondition_violated: return KF_ERR_PRECONDITION_VIOLATED;
    case kf::errc::interval_too_wide: return KF_ERR_INTERVAL_TOO_WIDE;
    case kf::errc::insufficient_data: return KF_ERR_INSUFFICIENT_DATA;
    case kf::errc::too_large: return KF_ERR_TOO_LARGE;
    case kf::errc::construction_failed: return KF_ERR_CONSTRUCTION_FAILED;
    case kf::errc::bad_direction: return KF_ERR_BAD_DIRECTION;
    case kf::errc::bad_parameter: return KF_ERR_BAD_PARAMETER;
    case kf::errc::parse_error: return KF_ERR_PARSE;
    case kf::errc::internal: return KF_ERR_INTERNAL;
  }
  return KF_ERR_INTERNAL;
}

char* dup_string(const std::string& s) {
  char* out = new char[s.size() + 1];
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
kf_status guarded(Fn&& fn) {
  try {
    fn();
    return KF_OK;
  } catch (const kf::error& e) {
    g_last_error = e.what();
    return map_code(e.code);
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return KF_ERR_INTERNAL;
  } catch (...) {
    g_last_error = "unknown failure";
    return KF_ERR_INTERNAL;
  }
}

kf_status require(const void* p, const char* what) {
  if (p) return KF_OK;
  g_last_error = std::string("null ") + what;
  return KF_ERR_BAD_PARAMETER;
}

} // namespace

extern "C" {

const char* kf_version(void) { return "0.1.0"; }

const char* kf_last_error(void) { return g_last_error.c_str(); }

void kf_string_free(char* s) { delete[] s; }

kf_status kf_instance_parse(const char* json_text, kf_instance** out) {
  if (kf_status s = require(json_text, "instance text")) return s;
  if (kf_status s = require(out, "output handle")) return s;
  *out = nullptr;
  return guarded([&] {
    kf::IntMat a = kf::parse_instance_json(json_text);
    auto* h = new kf_instance{kf::make_instance(a)};
    *out = h;
  });
}

void kf_instance_free(kf_instance* inst) { delete inst; }

kf_status kf_validate(const char* json_text, char** report) {
  if (kf_status s = require(json_text, "instance text")) return s;
  if (kf_status s = require(report, "output handle")) return s;
  *report = nullptr;
  return guarded([&] {
    kf::IntMat a = kf::parse_instance_json(json_text);
    try {
      kf::validate_matrix(a);
      *report = dup_string(kf::validation_report(a));
    } catch (const kf::error& e) {
      *report = dup_string(kf::validation_failure_report(e));
      throw;
    }
  });
}

kf_status kf_feasible(const kf_instance* inst, const char* b, uint64_t budget,
                      char** json_out) {
  if (kf_status s = require(inst, "instance")) return s;
  if (kf_status s = require(b, "vector")) return s;
  if (kf_status s = require(json_out, "output handle")) return s;
  *json_out = nullptr;
  return guarded([&] {
    kf::IntVec bv = kf::parse_int_csv(b);
    kf::FeasibilityOutcome out = kf::feasible(inst->inst, bv, budget);
    *json_out = dup_string(kf::feasible_report(out));
  });
}

kf_status kf_frobenius(const char* a, uint64_t budget, char** json_out) {
  if (kf_status s = require(a, "vector")) return s;
  if (kf_status s = require(json_out, "output handle")) return s;
  *json_out = nullptr;
  return guarded([&] {
    kf::IntVec av = kf::parse_int_csv(a);
    kf::Int f = kf::frobenius_number(av, budget);
    *json_out = dup_string(kf::frobenius_report(f));
  });
}

kf_status kf_gdiag(const kf_instance* inst, const char* mode, uint64_t budget,
                   int precision_bits, char** json_out) {
  if (kf_status s = require(inst, "instance")) return s;
  if (kf_status s = require(json_out, "output handle")) return s;
  *json_out = nullptr;
  return guarded([&] {
    std::string m = mode ? mode : "auto";
    if (m != "auto" && m != "exact")
      kf::fail(kf::errc::bad_parameter, "mode must be auto or exact");
    kf::DiagFrobResult r = kf::exact_g(inst->inst, budget, precision_bits);
    if (m == "exact" && !r.exact)
      kf::fail(kf::errc::inexact, "only a two-sided interval is certified here");
    kf::GBounds gb = kf::certified_upper_bound(inst->inst, precision_bits);
    *json_out = dup_string(kf::gdiag_report(r, gb));
  });
}

kf_status kf_bound(const kf_instance* inst, int precision_bits, char** json_out) {
  if (kf_status s = require(inst, "instance")) return s;
  if (kf_status s = require(json_out, "output handle")) return s;
  *json_out = nullptr;
  return guarded([&] {
    kf::GBounds gb = kf::certified_upper_bound(inst->inst, precision_bits);
    *json_out = dup_string(kf::bound_report(gb));
  });
}

kf_status kf_survey_csv(size_t m, size_t n, const char* t_cap, int filter_all,
                        uint64_t budget, uint64_t seed, char** csv_out) {
  if (kf_status s = require(t_cap, "cap")) return s;
  if (kf_status s = require(csv_out, "output handle")) return s;
  *csv_out = nullptr;
  return guarded([&] {
    kf::FamilyQuery q;
    q.m = m;
    q.n = n;
    q.t_cap = kf::parse_rat(t_cap);
    q.filter = filter_all ? kf::FamilyFilter::all : kf::FamilyFilter::conforming;
    kf::SurveyOptions opts;
    opts.budget = budget;
    opts.seed = seed;
    kf::SurveyResult res = kf::survey(q, opts);
    std::ostringstream os;
    kf::write_survey_csv(res, os);
    *csv_out = dup_string(os.str());
  });
}

kf_status kf_adversarial(size_t m, size_t n, size_t count, uint64_t budget,
                         char** json_out) {
  if (kf_status s = require(json_out, "output handle")) return s;
  *json_out = nullptr;
  return guarded([&] {
    kf::AdversarialSequence seq = kf::adversarial_sequence(m, n, count, budget);
    *json_out = dup_string(kf::adversarial_report(seq));
  });
}

kf_status kf_direction(const char* alpha, size_t count, const char* ratio_floor,
                       uint64_t budget, char** json_out) {
  if (kf_status s = require(alpha, "direction")) return s;
  if (kf_status s = require(json_out, "output handle")) return s;
  *json_out = nullptr;
  return guarded([&] {
    kf::RatVec av = kf::parse_rat_csv(alpha);
    kf::Rat floor_v(0);
    if (ratio_floor && *ratio_floor) floor_v = kf::parse_rat(ratio_floor);
    kf::DirectionSequence seq = kf::direction_sequence(av, count, floor_v, budget);
    *json_out = dup_string(kf::direction_report(seq));
  });
}

kf_status kf_kannan(const char* a, uint64_t budget, int precision_bits,
                    char** json_out) {
  if (kf_status s = require(a, "vector")) return s;
  if (kf_status s = require(json_out, "output handle")) return s;
  *json_out = nullptr;
  return guarded([&] {
    kf::IntVec av = kf::parse_int_csv(a);
    kf::KannanReport rep = kf::kannan_check(av, budget, precision_bits);
    *json_out = dup_string(kf::kannan_report(rep));
  });
}

} // extern "C"
