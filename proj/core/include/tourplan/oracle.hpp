#pragma once

#include <cstdint>
#include <stdexcept>

#include "tourplan/solver.hpp"

namespace tourplan {

class OracleSizeError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Ground-truth optimum by exhaustive enumeration over subsets of V, their
// orderings and grid durations, with the mandatory lunch visit tried at every
// slot of each sequence. Candidates are scheduled earliest-start, scored via
// `scoring`, and an improving candidate must pass `validate` before it is
// accepted. Shares nothing with the solver's search or bounds beyond the
// schedule_sequence primitive.
//
// Subsets are enumerated by ascending size, so equal-cost optima resolve to
// fewer visits first, then lexicographic enumeration order.
//
// nodes_explored in the result counts fully enumerated
// (subset, order, durations) combinations per restaurant slot; on an instance
// where nothing is infeasible and no lunch is specified it equals
// sum_k C(|V'|,k)*k!*prod(grid sizes), V' excluding POIs whose dmin exceeds
// the horizon.
SolveResult oracle_solve(const TouristProblem& problem, MetricKind kind, int duration_grid = 5,
                         int max_visits = 7);

// The closed-form size of the oracle's enumeration space (no feasibility
// pruning): sum_k C(|V'|,k) * k! * (product of duration-grid sizes over each
// size-k subset of V').
std::uint64_t oracle_leaf_space(const TouristProblem& problem, int duration_grid);

}  // namespace tourplan
