#pragma once

#include <stdexcept>
#include <string>
#include <unordered_map>

#include "tourplan/model.hpp"
#include "tourplan/scoring.hpp"

namespace tourplan {

class UnsupportedMetricError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The fixed tourism domain: durative move/visit/eat actions over locations
// with opening-hour timed literals, a free-time budget and the metric
// counters. Deterministic text; exported bytes are golden-file stable.
std::string export_domain();

// Problem encoding for `kind`. Only M1Prime is expressible as a linear plan
// metric; the others involve nonlinear penalty terms and are rejected.
// All clock times are shifted so the plan starts at 0. Numeric literals are
// integers or integer fractions, never decimal floats.
std::string export_problem(const TouristProblem& problem, MetricKind kind,
                           const std::string& name = "agenda");

// Identifier mapping used in exported problems (JSON ids sanitized to PDDL
// names, the reserved restaurant id becoming "restaurant").
std::unordered_map<std::string, std::string> pddl_names(const TouristProblem& problem);

// Parses a temporal-plan trace ("time: (action args) [duration]" per line;
// blank lines and ';' comments ignored) into a Plan against `problem`.
// Times are shifted back by t_start and rounded to whole minutes.
// Throws ParseError naming the line on malformed input and ValidationError
// (UnknownPoi) for actions over unknown locations.
Plan import_plan_trace(const TouristProblem& problem, const std::string& trace_text);

// Inverse of import_plan_trace for valid plans; used to hand plans to
// external tooling and to round-trip in tests.
std::string plan_to_trace(const TouristProblem& problem, const Plan& plan);

}  // namespace tourplan
