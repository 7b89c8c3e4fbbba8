#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <nlohmann/json.hpp>
#include <string>

#include <knapfrob/knapfrob.h>

using json = nlohmann::json;

namespace {

const char* kExample = "{\"m\":2,\"n\":3,\"A\":[[0,1,2],[1,1,0]]}";

struct Out {
  char* p = nullptr;
  ~Out() { kf_string_free(p); }
  json parsed() const {
    REQUIRE(p != nullptr);
    return json::parse(p);
  }
};

struct Inst {
  kf_instance* h = nullptr;
  ~Inst() { kf_instance_free(h); }
};

} // namespace

TEST_CASE("version string") {
  const char* v = kf_version();
  REQUIRE(v != nullptr);
  CHECK(std::string(v).size() > 0);
}

TEST_CASE("instance parsing") {
  Inst i;
  CHECK(kf_instance_parse(kExample, &i.h) == KF_OK);
  CHECK(i.h != nullptr);

  kf_instance* bad = nullptr;
  CHECK(kf_instance_parse("{\"m\":1,\"n\":3,\"A\":[[2,4,6]]}", &bad) ==
        KF_ERR_NOT_PRIMITIVE);
  CHECK(bad == nullptr);
  CHECK(std::string(kf_last_error()).size() > 0);

  CHECK(kf_instance_parse("not json", &bad) == KF_ERR_PARSE);
  CHECK(kf_instance_parse("{\"m\":2,\"n\":3}", &bad) == KF_ERR_PARSE);
  CHECK(kf_instance_parse(nullptr, &bad) == KF_ERR_BAD_PARAMETER);
  CHECK(kf_instance_parse(kExample, nullptr) == KF_ERR_BAD_PARAMETER);
}

TEST_CASE("validation reports both verdicts") {
  Out ok;
  CHECK(kf_validate(kExample, &ok.p) == KF_OK);
  json r = ok.parsed();
  CHECK(r["valid"] == true);
  CHECK(r["m"] == 2);

  Out bad;
  CHECK(kf_validate("{\"m\":1,\"n\":2,\"A\":[[1,-1]]}", &bad.p) ==
        KF_ERR_CONE_NOT_POINTED);
  json rb = bad.parsed();
  CHECK(rb["valid"] == false);
  CHECK(rb["reason"] == "cone_not_pointed");
}

TEST_CASE("feasibility and frobenius") {
  Inst i;
  REQUIRE(kf_instance_parse(kExample, &i.h) == KF_OK);
  Out holes;
  CHECK(kf_feasible(i.h, "3,0", 1000000, &holes.p) == KF_OK);
  CHECK(holes.parsed()["feasible"] == false);
  Out even;
  CHECK(kf_feasible(i.h, "4,0", 1000000, &even.p) == KF_OK);
  json je = even.parsed();
  CHECK(je["feasible"] == true);
  REQUIRE(je["witness"].is_array());
  CHECK(je["witness"].size() == 3);

  Out wrong;
  CHECK(kf_feasible(i.h, "1,2,3", 1000000, &wrong.p) == KF_ERR_BAD_INPUT);

  Out f;
  CHECK(kf_frobenius("3,5", 1000000, &f.p) == KF_OK);
  CHECK(f.parsed() == json::parse("{\"frobenius\":7}"));
  Out fneg;
  CHECK(kf_frobenius("1,7", 1000000, &fneg.p) == KF_OK);
  CHECK(fneg.parsed()["frobenius"] == -1);
  Out fbad;
  CHECK(kf_frobenius("2,4", 1000000, &fbad.p) == KF_ERR_BAD_INPUT);
  CHECK(kf_frobenius("3,,5", 1000000, &fbad.p) == KF_ERR_PARSE);
}

TEST_CASE("diagonal frobenius report") {
  Inst i;
  REQUIRE(kf_instance_parse(kExample, &i.h) == KF_OK);
  Out g;
  CHECK(kf_gdiag(i.h, "auto", 1000000, 64, &g.p) == KF_OK);
  json jg = g.parsed();
  CHECK(jg["g"]["num"] == 0);
  CHECK(jg["g"]["den"] == 1);
  CHECK(jg["exact"] == true);
  CHECK(jg["attained"] == false);
  CHECK(jg["witness"] == json::parse("[1,0]"));
  CHECK(jg["upper_det"]["num"] == 3);
  CHECK(jg["upper_det"]["den"] == 2);

  Out ex;
  CHECK(kf_gdiag(i.h, "exact", 1000000, 64, &ex.p) == KF_OK);
  Out badmode;
  CHECK(kf_gdiag(i.h, "fast", 1000000, 64, &badmode.p) == KF_ERR_BAD_PARAMETER);
}

TEST_CASE("bounds report") {
  Inst i;
  REQUIRE(kf_instance_parse(kExample, &i.h) == KF_OK);
  Out b;
  CHECK(kf_bound(i.h, 64, &b.p) == KF_OK);
  json jb = b.parsed();
  CHECK(jb["certified_upper"]["num"] == 3);
  CHECK(jb["certified_upper"]["den"] == 2);
  CHECK(jb["upper_ball"].is_object());
}

TEST_CASE("survey csv through the c api") {
  Out csv;
  CHECK(kf_survey_csv(1, 2, "2", 0, 1000000, 0, &csv.p) == KF_OK);
  std::string s(csv.p);
  CHECK(s.rfind("m,n,det_sq,g_num,g_den,X_float64,attained,filtered,exact\n", 0) == 0);
  std::size_t lines = 0;
  for (char c : s)
    if (c == '\n') ++lines;
  CHECK(lines == 2); // header + (1,1), the only conforming row of norm <= 2
  Out all;
  CHECK(kf_survey_csv(1, 2, "2", 1, 1000000, 0, &all.p) == KF_OK);
  std::size_t lines_all = 0;
  for (char c : std::string(all.p))
    if (c == '\n') ++lines_all;
  CHECK(lines_all == 5); // header + all four
  Out bad;
  CHECK(kf_survey_csv(2, 2, "2", 0, 1000000, 0, &bad.p) == KF_ERR_RANK_CONFIG);
  CHECK(kf_survey_csv(1, 2, "x", 0, 1000000, 0, &bad.p) == KF_ERR_PARSE);
}

TEST_CASE("generators through the c api") {
  Out adv;
  CHECK(kf_adversarial(1, 3, 3, 1000000, &adv.p) == KF_OK);
  json ja = adv.parsed();
  REQUIRE(ja["terms"].size() == 3);
  CHECK(ja["constant"]["den"] == 30);
  CHECK(ja["terms"][0]["det_sq"] == 17);

  Out dir;
  CHECK(kf_direction("1/3,2/3", 2, "1/60", 1000000, &dir.p) == KF_OK);
  json jd = dir.parsed();
  REQUIRE(jd["terms"].size() == 2);
  CHECK(jd["terms"][0]["frobenius"] == 39);
  Out dbad;
  CHECK(kf_direction("2/3,1/3", 1, nullptr, 1000000, &dbad.p) == KF_ERR_BAD_DIRECTION);

  Out kan;
  CHECK(kf_kannan("3,5", 1000000, 64, &kan.p) == KF_OK);
  json jk = kan.parsed();
  CHECK(jk["matches_plus"] == true);
  CHECK(jk["matches_minus"] == false);
  CHECK(jk["mu"]["lo"]["num"] == 15);
}

TEST_CASE("null argument handling") {
  CHECK(kf_validate(nullptr, nullptr) == KF_ERR_BAD_PARAMETER);
  CHECK(kf_feasible(nullptr, "1", 1, nullptr) == KF_ERR_BAD_PARAMETER);
  CHECK(kf_gdiag(nullptr, "auto", 1, 64, nullptr) == KF_ERR_BAD_PARAMETER);
  kf_string_free(nullptr);  // harmless
  kf_instance_free(nullptr);
}
