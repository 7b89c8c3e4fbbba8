#pragma once

#include <string>

#include "diagfrob.hpp"
#include "error.hpp"
#include "experiments.hpp"
#include "knapsack.hpp"

namespace kf {

// Stable name of an error class, used in reports and by the CLI.
const char* errc_name(errc c);

// {"m": int, "n": int, "A": [[int, ...], ...]}; throws parse_error.
IntMat parse_instance_json(const std::string& text);

std::string instance_to_json(const IntMat& a);

// "3,5,-7" -> vector; throws parse_error.
IntVec parse_int_csv(const std::string& text);

// "1/3,2/3" -> rationals; throws parse_error.
RatVec parse_rat_csv(const std::string& text);

Rat parse_rat(const std::string& text);

std::string validation_report(const IntMat& a);        // {"valid": true, "m": .., "n": ..}
std::string validation_failure_report(const error& e); // {"valid": false, ...}
std::string error_report(const error& e);
std::string feasible_report(const FeasibilityOutcome& out);
std::string frobenius_report(const Int& f);
std::string gdiag_report(const DiagFrobResult& r, const GBounds& gb);
std::string bound_report(const GBounds& gb);
std::string adversarial_report(const AdversarialSequence& seq);
std::string direction_report(const DirectionSequence& seq);
std::string kannan_report(const KannanReport& rep);

} // namespace kf
