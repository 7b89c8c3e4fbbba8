#include <cstdint>
#include <cstring>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <knapfrob/knapfrob.h>

namespace {

int exit_code(kf_status s) {
  switch (s) {
    case KF_OK:
      return 0;
    case KF_ERR_PARSE:
    case KF_ERR_BAD_INPUT:
    case KF_ERR_BAD_PARAMETER:
      return 2;
    case KF_ERR_RANK_DEFICIENT:
    case KF_ERR_RANK_CONFIG:
    case KF_ERR_NOT_PRIMITIVE:
    case KF_ERR_CONE_NOT_POINTED:
    case KF_ERR_NOT_IN_CONE:
    case KF_ERR_NOT_INTERIOR:
    case KF_ERR_PRECONDITION_VIOLATED:
    case KF_ERR_BAD_DIRECTION:
      return 3;
    case KF_ERR_BUDGET_EXCEEDED:
      return 4;
    case KF_ERR_UNSUPPORTED_DIMENSION:
    case KF_ERR_UNSUPPORTED_RANK:
    case KF_ERR_INEXACT:
    case KF_ERR_INTERVAL_TOO_WIDE:
    case KF_ERR_INSUFFICIENT_DATA:
    case KF_ERR_TOO_LARGE:
      return 5;
    default:
      return 6;
  }
}

int report_error(kf_status s) {
  std::cerr << "error " << int(s) << ": " << kf_last_error() << "\n";
  return exit_code(s);
}

bool read_file(const std::string& path, std::string& out) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return false;
  std::ostringstream ss;
  ss << in.rdbuf();
  out = ss.str();
  return true;
}

// Prints and releases a C-API string result.
int finish(kf_status s, char* payload, const std::string& out_path = "") {
  if (payload) {
    std::size_t len = std::strlen(payload);
    if (out_path.empty()) {
      std::cout << payload;
      if (len == 0 || payload[len - 1] != '\n') std::cout << "\n";
    } else {
      std::ofstream out(out_path, std::ios::binary);
      if (!out) {
        kf_string_free(payload);
        std::cerr << "error: cannot write " << out_path << "\n";
        return 2;
      }
      out << payload;
    }
    kf_string_free(payload);
  }
  if (s != KF_OK) return report_error(s);
  return 0;
}

struct InstanceHandle {
  kf_instance* h = nullptr;
  ~InstanceHandle() { kf_instance_free(h); }
};

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"integer knapsack feasibility and diagonal Frobenius numbers"};
  app.set_version_flag("--version", kf_version());
  app.require_subcommand(1);

  std::uint64_t budget = 1000000;
  int precision_bits = 64;
  std::uint64_t seed = 0;
  app.add_option("--budget", budget, "enumeration budget (default 1000000)");
  app.add_option("--precision-bits", precision_bits,
                 "working precision for enclosures (default 64)");
  app.add_option("--seed", seed, "seed for randomized spot checks (default 0)");

  int rc = 0;

  std::string val_path;
  auto* c_validate = app.add_subcommand("validate", "check instance assumptions");
  c_validate->add_option("path", val_path, "instance JSON file")->required();
  c_validate->callback([&] {
    std::string text;
    if (!read_file(val_path, text)) {
      std::cerr << "error: cannot read " << val_path << "\n";
      rc = 2;
      return;
    }
    char* report = nullptr;
    kf_status s = kf_validate(text.c_str(), &report);
    rc = finish(s, report);
  });

  std::string feas_path, feas_b;
  auto* c_feasible = app.add_subcommand("feasible", "decide feasibility of A x = b");
  c_feasible->add_option("path", feas_path, "instance JSON file")->required();
  c_feasible->add_option("b", feas_b, "right-hand side, comma-separated")->required();
  c_feasible->callback([&] {
    std::string text;
    if (!read_file(feas_path, text)) {
      std::cerr << "error: cannot read " << feas_path << "\n";
      rc = 2;
      return;
    }
    InstanceHandle inst;
    kf_status s = kf_instance_parse(text.c_str(), &inst.h);
    if (s != KF_OK) {
      rc = report_error(s);
      return;
    }
    char* out = nullptr;
    s = kf_feasible(inst.h, feas_b.c_str(), budget, &out);
    rc = finish(s, out);
  });

  std::string frob_a;
  auto* c_frob = app.add_subcommand("frobenius", "classical Frobenius number");
  c_frob->add_option("a", frob_a, "positive coprime vector, comma-separated")
      ->required();
  c_frob->callback([&] {
    char* out = nullptr;
    kf_status s = kf_frobenius(frob_a.c_str(), budget, &out);
    rc = finish(s, out);
  });

  std::string gdiag_path, gdiag_mode = "auto";
  auto* c_gdiag = app.add_subcommand("gdiag", "diagonal Frobenius number");
  c_gdiag->add_option("path", gdiag_path, "instance JSON file")->required();
  c_gdiag->add_option("--mode", gdiag_mode, "auto or exact (default auto)");
  c_gdiag->callback([&] {
    std::string text;
    if (!read_file(gdiag_path, text)) {
      std::cerr << "error: cannot read " << gdiag_path << "\n";
      rc = 2;
      return;
    }
    InstanceHandle inst;
    kf_status s = kf_instance_parse(text.c_str(), &inst.h);
    if (s != KF_OK) {
      rc = report_error(s);
      return;
    }
    char* out = nullptr;
    s = kf_gdiag(inst.h, gdiag_mode.c_str(), budget, precision_bits, &out);
    rc = finish(s, out);
  });

  std::string bound_path;
  auto* c_bound = app.add_subcommand("bound", "certified upper bounds for g");
  c_bound->add_option("path", bound_path, "instance JSON file")->required();
  c_bound->callback([&] {
    std::string text;
    if (!read_file(bound_path, text)) {
      std::cerr << "error: cannot read " << bound_path << "\n";
      rc = 2;
      return;
    }
    InstanceHandle inst;
    kf_status s = kf_instance_parse(text.c_str(), &inst.h);
    if (s != KF_OK) {
      rc = report_error(s);
      return;
    }
    char* out = nullptr;
    s = kf_bound(inst.h, precision_bits, &out);
    rc = finish(s, out);
  });

  std::size_t sv_m = 0, sv_n = 0;
  std::string sv_cap, sv_filter = "conforming", sv_out;
  auto* c_survey = app.add_subcommand("survey", "normalized g over a lattice family");
  c_survey->add_option("m", sv_m, "rows")->required();
  c_survey->add_option("n", sv_n, "columns")->required();
  c_survey->add_option("T", sv_cap, "covolume cap, rational")->required();
  c_survey->add_option("--filter", sv_filter, "conforming (default) or all");
  c_survey->add_option("--out", sv_out, "write CSV here instead of stdout");
  c_survey->callback([&] {
    if (sv_filter != "all" && sv_filter != "conforming") {
      std::cerr << "error: --filter must be all or conforming\n";
      rc = 2;
      return;
    }
    char* out = nullptr;
    kf_status s = kf_survey_csv(sv_m, sv_n, sv_cap.c_str(), sv_filter == "all",
                                budget, seed, &out);
    rc = finish(s, out, sv_out);
  });

  std::size_t adv_m = 0, adv_n = 0, adv_count = 0;
  auto* c_adv = app.add_subcommand("adversarial", "lower-bound instance sequence");
  c_adv->add_option("m", adv_m, "rows")->required();
  c_adv->add_option("n", adv_n, "columns")->required();
  c_adv->add_option("count", adv_count, "terms to emit (max 10)")->required();
  c_adv->callback([&] {
    char* out = nullptr;
    kf_status s = kf_adversarial(adv_m, adv_n, adv_count, budget, &out);
    rc = finish(s, out);
  });

  std::string dir_alpha, dir_floor;
  std::size_t dir_count = 0;
  auto* c_dir = app.add_subcommand("direction", "growth sequence along a direction");
  c_dir->add_option("alpha", dir_alpha, "increasing rationals in (0,1), comma-separated")
      ->required();
  c_dir->add_option("count", dir_count, "terms to emit")->required();
  c_dir->add_option("--ratio-floor", dir_floor, "rational excess-ratio floor");
  c_dir->callback([&] {
    char* out = nullptr;
    kf_status s = kf_direction(dir_alpha.c_str(), dir_count,
                               dir_floor.empty() ? nullptr : dir_floor.c_str(),
                               budget, &out);
    rc = finish(s, out);
  });

  std::string kan_a;
  auto* c_kannan = app.add_subcommand("kannan", "covering identity report");
  c_kannan->add_option("a", kan_a, "positive coprime vector, comma-separated")
      ->required();
  c_kannan->callback([&] {
    char* out = nullptr;
    kf_status s = kf_kannan(kan_a.c_str(), budget, precision_bits, &out);
    rc = finish(s, out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }
  return rc;
}
