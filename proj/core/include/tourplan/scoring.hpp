#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

#include "tourplan/model.hpp"
#include "tourplan/rational.hpp"

namespace tourplan {

// How the low-occupation penalty is computed. Reciprocal is the default
// 1/(free_time*total_time) form (capped at 1 when free_time is 0); Linear is
// (total_time-free_time)/total_time, the form expressible as a linear plan
// metric.
enum class OccupVariant { Reciprocal, Linear };

// Objectives, all minimized:
//   M1 = P_U1 + P_journey + P_#visits + P_occup        in [0,4]
//   M2 = P_U2 + P_#visits + P_occup                    in [0,3]
//   M3 = P_U3 + P_journey + P_#visits + P_occup        in [0,4]
//   M1' = M1 with the Linear occupation variant
enum class MetricKind { M1, M2, M3, M1Prime };

const char* to_string(MetricKind k);
MetricKind metric_from_string(const std::string& s);
OccupVariant variant_for(MetricKind k);  // Linear for M1', Reciprocal otherwise

class DegenerateDenominatorError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Raw utilities, the six penalties and the slack. The restaurant visit never
// counts as a POI visit: it carries zero value, and it is excluded from the
// U3 time denominator, from the visit count, and from U1*. Its duration does
// count as occupied time.
struct PenaltyBreakdown {
    Rat u1, u2, u3;
    Rat p_u1, p_u2, p_u3;
    Rat p_journey, p_visits, p_occup;
    int free_time = 0;
    OccupVariant occup_variant = OccupVariant::Reciprocal;
};

// Integer aggregates of a plan, sufficient to score it. The solver keeps
// these incrementally during search; scoring a full Plan derives them first.
struct PlanSums {
    std::int64_t value = 0;          // sum of v_p over non-restaurant visits
    std::int64_t value_minutes = 0;  // sum of v_p * dur_p
    int visit_minutes = 0;           // sum of dur_p, restaurant excluded
    int lunch_minutes = 0;           // restaurant visit duration, if any
    int travel_minutes = 0;
    int visit_count = 0;             // restaurant excluded
};

PlanSums plan_sums(const TouristProblem& problem, const Plan& plan);

Rat utility_u1(const TouristProblem& problem, const Plan& plan);
Rat utility_u2(const TouristProblem& problem, const Plan& plan);
Rat utility_u3(const TouristProblem& problem, const Plan& plan);
Rat penalty_journey(const TouristProblem& problem, const Plan& plan);
Rat penalty_visits(const TouristProblem& problem, const Plan& plan, VisitPref pref);
Rat penalty_occup(const TouristProblem& problem, const Plan& plan, OccupPref pref,
                  OccupVariant variant);

PenaltyBreakdown breakdown_from_sums(const TouristProblem& problem, const PlanSums& sums,
                                     OccupVariant variant);
PenaltyBreakdown compute_breakdown(const TouristProblem& problem, const Plan& plan,
                                   OccupVariant variant = OccupVariant::Reciprocal);

// Recomposes one metric from an already-computed breakdown. The breakdown's
// occupation variant must match the metric's.
Rat metric_value(const PenaltyBreakdown& b, MetricKind kind);

Rat metric_from_sums(const TouristProblem& problem, const PlanSums& sums, MetricKind kind);
Rat metric(const TouristProblem& problem, const Plan& plan, MetricKind kind);

// Post-hoc evaluation measures used by the benchmark harness.
Rat eval_u1_star(const TouristProblem& problem, const Plan& plan);
Rat eval_occupation(const TouristProblem& problem, const Plan& plan);

}  // namespace tourplan
