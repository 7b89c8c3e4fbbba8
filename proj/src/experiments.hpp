#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "diagfrob.hpp"
#include "knapsack.hpp"
#include "lattice.hpp"

namespace kf {

enum class FamilyFilter { all, conforming };

struct FamilyQuery {
  std::size_t m = 0;
  std::size_t n = 0;
  Rat t_cap;          // covolume cap: sqrt(det(A A^T)) <= t_cap
  FamilyFilter filter = FamilyFilter::conforming;
};

// Complete duplicate-free list of full-rank primitive m-row lattices in Z^n
// with covolume <= t_cap, each as a canonical (HNF) basis matrix.
std::vector<IntMat> enumerate_family(const FamilyQuery& q,
                                     std::uint64_t budget = 50000000);

struct ExperimentRecord {
  std::size_t m = 0, n = 0;
  IntMat basis;       // canonical basis; rows of the instance matrix
  Int det_sq;         // det(A A^T)
  bool filtered = false; // failed the conformance validation; g not defined
  Rat g;              // certified lower end when not exact
  bool attained = false;
  bool exact = false;
  double x = 0;       // g / det_sq^(1/(2(n-m)))
};

struct SurveyOptions {
  std::uint64_t budget = 1000000;
  std::uint64_t family_budget = 50000000;
  std::uint64_t seed = 0;      // drives the basis-independence spot checks
  std::size_t spot_check_every = 20; // 0 disables
};

struct SurveyResult {
  std::vector<ExperimentRecord> records;
  std::size_t enumerated = 0;
  std::size_t discarded = 0;   // conformance failures dropped by the filter
};

SurveyResult survey(const FamilyQuery& q, const SurveyOptions& opts = {});

void write_survey_csv(const SurveyResult& res, std::ostream& os);

// Survival function S(t) = fraction of records with x > t, sampled on grid.
std::vector<std::pair<double, double>> survival_table(
    const std::vector<ExperimentRecord>& recs, const std::vector<double>& grid);

struct TailFit {
  double slope = 0;
  double intercept = 0;
  double t_min = 0;
  std::size_t points = 0;      // fitted log-log points
};

// Least-squares slope of log S against log t over t >= t_min, S(t) > 0.
TailFit tail_fit(const std::vector<std::pair<double, double>>& table, double t_min);

// Grid = positive x values, t_min = 75th percentile; needs >= 500 records.
TailFit survey_tail_fit(const std::vector<ExperimentRecord>& recs);

double normalized_mean(const std::vector<ExperimentRecord>& recs);

struct MeanStability {
  double mean_low = 0;   // cap t1
  double mean_high = 0;  // cap t2
  double ratio = 0;      // max/min, 0 when either mean is 0
};

MeanStability mean_stability(const FamilyQuery& q, const Rat& t1, const Rat& t2,
                             const SurveyOptions& opts = {});

struct AdversarialTerm {
  Int t;
  IntMat a;            // instance matrix A_t
  Int det_sq;          // det(A_t A_t^T), strictly increasing
  Rat g_lower;         // exact g when g_exact, else certified lower end
  bool g_exact = false;
  bool p1 = false;     // det(M_t) > t
  bool p2 = false;     // diam(Q_t) < (3/2) xi det(L_t) diam(Q_S)
  bool minima_match = false; // first n-m-1 minima of L_t equal those of M
  double xi = 0;
  double diam_qt = 0;
  double lower_bound = 0; // xi det(L_t) - 1
  double ratio = 0;       // g / sqrt(det_sq)
  bool ratio_ok = false;  // exact: g >= constant * sqrt(det_sq)
};

struct AdversarialSequence {
  std::size_t m = 0, n = 0;
  IntMat s_basis;      // the seed subspace S as rows
  Rat constant;        // reported ratio floor
  std::vector<AdversarialTerm> terms;
};

// Supported configurations: (m,n) = (1,3) and (2,3); count <= 10.
AdversarialSequence adversarial_sequence(std::size_t m, std::size_t n,
                                         std::size_t count,
                                         std::uint64_t budget = 1000000);

struct DirectionTerm {
  Int t;
  IntVec a;            // the emitted vector a(t)
  Int f;               // Frobenius number of a(t)
  Int norm_sq;
  Rat excess;          // f - ||a||_1, positive on emitted terms
  Rat excess_ratio;    // excess / ||a||^2
  bool ratio_ok = false;   // excess_ratio >= ratio_floor
  Rat direction_err_sq;    // || alpha~ - a/||a||_inf ||^2, strictly decreasing
  bool minima_match = false; // first n-2 minima of the kernel match the base
};

struct DirectionSequence {
  IntVec base;         // a = q alpha, primitive
  std::vector<Int> base_minima_sq; // kernel minima of the base vector
  Rat ratio_floor;
  std::vector<DirectionTerm> terms;
};

// alpha strictly increasing in (0,1), size n-1 >= 2.
DirectionSequence direction_sequence(const RatVec& alpha, std::size_t count,
                                     const Rat& ratio_floor = Rat(0),
                                     std::uint64_t budget = 1000000);

struct KannanReport {
  IntVec a;
  Int f;
  bool skipped = false;    // f < 0: no positive holes
  RatIv mu;                // inhomogeneous minimum of S_a(1) in Lambda_a(1)
  bool mu_exact = false;
  Rat plus_form;           // f + ||a||_1
  Rat minus_form;          // f - ||a||_1
  bool matches_plus = false;
  bool matches_minus = false;
};

// n in {2,3}; positive primitive a.
KannanReport kannan_check(const IntVec& a, std::uint64_t budget = 1000000,
                          int bits = 64);

} // namespace kf
