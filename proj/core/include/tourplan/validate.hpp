#pragma once

#include <string>
#include <vector>

#include "tourplan/model.hpp"

namespace tourplan {

enum class ViolationCode {
    DuplicateVisit,
    EmptyPosition,
    DestinationNotLast,
    DurationOutOfBounds,
    OutsideOpeningHours,
    TravelTimeViolated,
    LunchMisplaced,
    HorizonExceeded,
    UnknownPoi,
};

const char* to_string(ViolationCode code);

struct Violation {
    ViolationCode code;
    std::string detail;  // names the offending action/position and times
};

// Normative feasibility check. Returns an empty list iff the plan satisfies
// every constraint family:
//   referential integrity, at-most-once visits, a gap-free alternating
//   move/visit chain from start_loc, arrival at final_loc last, the lunch
//   visit pinned to its window, durations within [dmin, dmax], visits inside
//   opening hours, travel times respected (non-strict: a transition may meet
//   the travel bound exactly, and waiting is allowed), and the whole route
//   inside [t_start, t_end].
//
// Families are checked in that order and checking stops after the first
// family that fails, so the report names the root cause rather than its
// cascade (e.g. a corrupted POI id is one UnknownPoi violation, not also a
// broken chain).
std::vector<Violation> validate(const TouristProblem& problem, const Plan& plan);

inline bool is_valid(const TouristProblem& problem, const Plan& plan) {
    return validate(problem, plan).empty();
}

// Chronological timeline of the plan with slack rows; stable output intended
// for golden-file comparison.
std::string explain(const TouristProblem& problem, const Plan& plan);

}  // namespace tourplan
