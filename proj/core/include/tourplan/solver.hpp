#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "tourplan/model.hpp"
#include "tourplan/rational.hpp"
#include "tourplan/scoring.hpp"

namespace tourplan {

class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct SolveOptions {
    // Visit durations are searched on {dmin, dmin+g, ...} united with {dmax}.
    int duration_grid = 5;
    std::int64_t node_limit = 0;  // <=0: unlimited
    double time_limit_s = 0;      // <=0: unlimited
    // When set, the POI branching order is a seeded shuffle instead of the
    // utility-density heuristic. Off by default; search stays exact either
    // way.
    std::optional<std::uint64_t> branch_seed;
};

struct SolveResult {
    Plan plan;
    Rat objective;
    PenaltyBreakdown breakdown;
    std::int64_t nodes_explored = 0;
    std::int64_t elapsed_ms = 0;
    bool proven_optimal = false;
};

// Duration grid for one POI: dmin, dmin+g, ... plus dmax.
std::vector<int> duration_grid(const Recommendation& rec, int grid);

// Earliest-start schedule for an ordered selection of POIs (which may include
// the restaurant id to position lunch): each visit starts at
// max(previous finish + travel, open), the restaurant exactly at l_start.
// Returns nullopt when a closing time, the lunch start, or the route horizon
// is violated. `durations` runs parallel to `ordered_pois`; the restaurant's
// entry is ignored (its duration is the lunch window length).
std::optional<Plan> schedule_sequence(const TouristProblem& problem,
                                      const std::vector<std::string>& ordered_pois,
                                      const std::vector<int>& durations);

// Depth-first branch-and-bound over visit selection, order and grid
// durations, minimizing `kind`. The returned plan always passes `validate`
// and its objective equals scoring::metric on it exactly.
//
// Determinism: nodes close before they branch and children are expanded in a
// fixed order (descending v/dmin, then POI id; durations ascending), and the
// incumbent is replaced only on strictly better objective. Among equal-cost
// optima this prefers the plan found first in that order.
//
// Throws InfeasibleError when no plan exists (or none was found within the
// configured limits).
SolveResult solve(const TouristProblem& problem, MetricKind kind, const SolveOptions& opts = {});

// A search prefix: visits in order (restaurant id allowed) with their
// durations. Used to probe the admissible bound from tests.
struct SearchPrefix {
    std::vector<std::string> pois;
    std::vector<int> durations;
};

// Admissible lower bound on `kind` over every completion of the prefix
// (earliest-start, same grid space as solve). With every POI placed the bound
// equals the exact metric of the closed plan. Throws InfeasibleError if the
// prefix itself cannot be scheduled.
Rat lower_bound(const TouristProblem& problem, MetricKind kind, const SearchPrefix& prefix,
                const SolveOptions& opts = {});

}  // namespace tourplan
