#include "json_io.hpp"

#include <json.hpp>

namespace kf {

using nlohmann::json;

namespace {

// Numbers beyond 64-bit JSON range degrade to decimal strings.
json int_json(const Int& v) {
  if (v.fits_slong_p()) return json(static_cast<std::int64_t>(v.get_si()));
  return json(v.get_str());
}

json rat_json(const Rat& r) {
  return json{{"num", int_json(r.get_num())},
              {"den", int_json(r.get_den())},
              {"float", r.get_d()}};
}

json iv_json(const RatIv& iv) {
  return json{{"lo", rat_json(iv.lo)}, {"hi", rat_json(iv.hi)}};
}

json vec_json(const IntVec& v) {
  json a = json::array();
  for (const Int& e : v) a.push_back(int_json(e));
  return a;
}

json mat_json(const IntMat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows; ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols; ++j) row.push_back(int_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

Int int_from_json(const json& e) {
  if (e.is_number_integer()) return Int(static_cast<long>(e.get<std::int64_t>()));
  if (e.is_string()) {
    Int v;
    if (mpz_set_str(v.get_mpz_t(), e.get<std::string>().c_str(), 10) != 0)
      fail(errc::parse_error, "malformed integer literal");
    return v;
  }
  fail(errc::parse_error, "matrix entries must be integers");
}

} // namespace

const char* errc_name(errc c) {
  switch (c) {
    case errc::bad_input: return "bad_input";
    case errc::rank_deficient: return "rank_deficient";
    case errc::rank_config: return "rank_config";
    case errc::not_primitive: return "not_primitive";
    case errc::cone_not_pointed: return "cone_not_pointed";
    case errc::budget_exceeded: return "budget_exceeded";
    case errc::unsupported_dimension: return "unsupported_dimension";
    case errc::unsupported_rank: return "unsupported_rank";
    case errc::not_in_cone: return "not_in_cone";
    case errc::not_interior: return "not_interior";
    case errc::inexact: return "inexact";
    case errc::precondition_violated: return "precondition_violated";
    case errc::interval_too_wide: return "interval_too_wide";
    case errc::insufficient_data: return "insufficient_data";
    case errc::too_large: return "too_large";
    case errc::construction_failed: return "construction_failed";
    case errc::bad_direction: return "bad_direction";
    case errc::bad_parameter: return "bad_parameter";
    case errc::parse_error: return "parse_error";
    case errc::internal: return "internal";
  }
  return "unknown";
}

IntMat parse_instance_json(const std::string& text) {
  json j = json::parse(text, nullptr, false);
  if (j.is_discarded()) fail(errc::parse_error, "malformed JSON");
  if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("A"))
    fail(errc::parse_error, "instance needs fields m, n, A");
  if (!j["m"].is_number_integer() || !j["n"].is_number_integer())
    fail(errc::parse_error, "m and n must be integers");
  std::int64_t m = j["m"].get<std::int64_t>();
  std::int64_t n = j["n"].get<std::int64_t>();
  if (m < 1 || n < 1 || m > 16 || n > 16)
    fail(errc::parse_error, "m and n out of range");
  const json& rows = j["A"];
  if (!rows.is_array() || rows.size() != (std::size_t)m)
    fail(errc::parse_error, "A must have m rows");
  IntMat a((std::size_t)m, (std::size_t)n);
  for (std::size_t i = 0; i < (std::size_t)m; ++i) {
    const json& row = rows[i];
    if (!row.is_array() || row.size() != (std::size_t)n)
      fail(errc::parse_error, "each row of A must have n entries");
    for (std::size_t c = 0; c < (std::size_t)n; ++c) a(i, c) = int_from_json(row[c]);
  }
  return a;
}

std::string instance_to_json(const IntMat& a) {
  json j{{"m", a.rows}, {"n", a.cols}, {"A", mat_json(a)}};
  return j.dump();
}

IntVec parse_int_csv(const std::string& text) {
  IntVec out;
  std::size_t pos = 0;
  if (text.empty()) fail(errc::parse_error, "empty vector");
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    std::string tok = text.substr(pos, next - pos);
    Int v;
    if (tok.empty() || mpz_set_str(v.get_mpz_t(), tok.c_str(), 10) != 0)
      fail(errc::parse_error, "malformed integer: '" + tok + "'");
    out.push_back(v);
    pos = next + 1;
    if (next == text.size()) break;
  }
  return out;
}

Rat parse_rat(const std::string& text) {
  Rat v;
  if (text.empty() || mpq_set_str(v.get_mpq_t(), text.c_str(), 10) != 0)
    fail(errc::parse_error, "malformed rational: '" + text + "'");
  if (v.get_den() == 0) fail(errc::parse_error, "zero denominator");
  v.canonicalize();
  return v;
}

RatVec parse_rat_csv(const std::string& text) {
  RatVec out;
  std::size_t pos = 0;
  if (text.empty()) fail(errc::parse_error, "empty vector");
  while (pos <= text.size()) {
    std::size_t next = text.find(',', pos);
    if (next == std::string::npos) next = text.size();
    out.push_back(parse_rat(text.substr(pos, next - pos)));
    pos = next + 1;
    if (next == text.size()) break;
  }
  return out;
}

std::string validation_report(const IntMat& a) {
  return json{{"valid", true}, {"m", a.rows}, {"n", a.cols}}.dump();
}

std::string validation_failure_report(const error& e) {
  json j{{"valid", false}, {"reason", errc_name(e.code)}, {"detail", e.what()}};
  return j.dump();
}

std::string error_report(const error& e) {
  json j{{"error", errc_name(e.code)}, {"detail", e.what()}};
  return j.dump();
}

std::string feasible_report(const FeasibilityOutcome& out) {
  json j{{"feasible", out.feasible},
         {"witness", out.witness ? vec_json(*out.witness) : json(nullptr)},
         {"nodes", out.nodes}};
  return j.dump();
}

std::string frobenius_report(const Int& f) {
  return json{{"frobenius", int_json(f)}}.dump();
}

std::string gdiag_report(const DiagFrobResult& r, const GBounds& gb) {
  json j{{"g", rat_json(r.g.lo)},
         {"g_hi", rat_json(r.g.hi)},
         {"exact", r.exact},
         {"attained", r.attained},
         {"witness", r.witness ? vec_json(*r.witness) : json(nullptr)},
         {"upper_det", rat_json(gb.det_bound.hi)},
         {"upper_jarnik", rat_json(gb.jarnik.hi)}};
  return j.dump();
}

std::string bound_report(const GBounds& gb) {
  json j{{"upper_det", rat_json(gb.det_bound.hi)},
         {"upper_jarnik", rat_json(gb.jarnik.hi)},
         {"upper_ball", gb.ball ? rat_json(gb.ball->hi) : json(nullptr)},
         {"certified_upper", rat_json(gb.upper())}};
  return j.dump();
}

std::string adversarial_report(const AdversarialSequence& seq) {
  json terms = json::array();
  for (const AdversarialTerm& t : seq.terms) {
    terms.push_back(json{{"t", int_json(t.t)},
                         {"A", mat_json(t.a)},
                         {"det_sq", int_json(t.det_sq)},
                         {"g", rat_json(t.g_lower)},
                         {"g_exact", t.g_exact},
                         {"p1", t.p1},
                         {"p2", t.p2},
                         {"minima_match", t.minima_match},
                         {"xi", t.xi},
                         {"diam_qt", t.diam_qt},
                         {"lower_bound", t.lower_bound},
                         {"ratio", t.ratio},
                         {"ratio_ok", t.ratio_ok}});
  }
  json j{{"m", seq.m},
         {"n", seq.n},
         {"s_basis", mat_json(seq.s_basis)},
         {"constant", rat_json(seq.constant)},
         {"terms", std::move(terms)}};
  return j.dump();
}

std::string direction_report(const DirectionSequence& seq) {
  json terms = json::array();
  for (const DirectionTerm& t : seq.terms) {
    terms.push_back(json{{"t", int_json(t.t)},
                         {"a", vec_json(t.a)},
                         {"frobenius", int_json(t.f)},
                         {"norm_sq", int_json(t.norm_sq)},
                         {"excess", rat_json(t.excess)},
                         {"excess_ratio", rat_json(t.excess_ratio)},
                         {"ratio_ok", t.ratio_ok},
                         {"direction_err_sq", rat_json(t.direction_err_sq)},
                         {"minima_match", t.minima_match}});
  }
  json minima = json::array();
  for (const Int& e : seq.base_minima_sq) minima.push_back(int_json(e));
  json j{{"base", vec_json(seq.base)},
         {"base_minima_sq", std::move(minima)},
         {"ratio_floor", rat_json(seq.ratio_floor)},
         {"terms", std::move(terms)}};
  return j.dump();
}

std::string kannan_report(const KannanReport& rep) {
  json j{{"a", vec_json(rep.a)},
         {"frobenius", int_json(rep.f)},
         {"skipped", rep.skipped},
         {"mu", iv_json(rep.mu)},
         {"mu_exact", rep.mu_exact},
         {"plus_form", rat_json(rep.plus_form)},
         {"minus_form", rat_json(rep.minus_form)},
         {"matches_plus", rep.matches_plus},
         {"matches_minus", rep.matches_minus}};
  return j.dump();
}

} // namespace kf
