#include "tourplan/scoring.hpp"

namespace tourplan {

const char* to_string(MetricKind k) {
    switch (k) {
        case MetricKind::M1: return "m1";
        case MetricKind::M2: return "m2";
        case MetricKind::M3: return "m3";
        case MetricKind::M1Prime: return "m1prime";
    }
    return "?";
}

MetricKind metric_from_string(const std::string& s) {
    if (s == "m1") return MetricKind::M1;
    if (s == "m2") return MetricKind::M2;
    if (s == "m3") return MetricKind::M3;
    if (s == "m1prime" || s == "m1'") return MetricKind::M1Prime;
    throw ParseError("metric: expected m1|m2|m3|m1prime, got '" + s + "'");
}

OccupVariant variant_for(MetricKind k) {
    return k == MetricKind::M1Prime ? OccupVariant::Linear : OccupVariant::Reciprocal;
}

PlanSums plan_sums(const TouristProblem& problem, const Plan& plan) {
    PlanSums s;
    for (const auto& v : plan.visits) {
        if (v.poi_id == kRestaurantId) {
            s.lunch_minutes += v.dur;
            continue;
        }
        const Recommendation* rec = problem.find_visit(v.poi_id);
        const std::int64_t value = rec ? rec->value : 0;
        s.value += value;
        s.value_minutes += value * v.dur;
        s.visit_minutes += v.dur;
        s.visit_count += 1;
    }
    for (const auto& m : plan.moves) s.travel_minutes += m.dur;
    return s;
}

namespace {

Rat u1_from_sums(const TouristProblem& problem, const PlanSums& s) {
    const std::int64_t total_value = problem.value_sum();
    if (total_value == 0) {
        if (problem.visits.empty()) return Rat(0);  // empty agenda: worst utility
        throw DegenerateDenominatorError("utility u1: all recommendation values are zero");
    }
    return Rat(s.value, total_value);
}

Rat u2_from_sums(const TouristProblem& problem, const PlanSums& s) {
    return Rat(s.value_minutes, problem.total_time());
}

Rat u3_from_sums(const PlanSums& s) {
    if (s.visit_minutes == 0) return Rat(0);
    return Rat(s.value_minutes, s.visit_minutes);
}

Rat visits_penalty(const TouristProblem& problem, int visit_count, VisitPref pref) {
    const std::int64_t n = static_cast<std::int64_t>(problem.visits.size());
    if (pref == VisitPref::Indif) return Rat(0);
    if (n == 0) return Rat(0);  // nothing recommended, nothing to penalize
    if (pref == VisitPref::Many) return Rat(n - visit_count, n);
    return Rat(visit_count, n);
}

Rat occup_penalty(const TouristProblem& problem, int free, OccupPref pref, OccupVariant variant) {
    const std::int64_t total = problem.total_time();
    switch (pref) {
        case OccupPref::Indif:
            return Rat(0);
        case OccupPref::High:
            return Rat(free, total);
        case OccupPref::Low:
            if (variant == OccupVariant::Linear) return Rat(total - free, total);
            // 1/(free*total) diverges at free_time 0; capped at the penalty
            // ceiling.
            if (free == 0) return Rat(1);
            return Rat(1, static_cast<std::int64_t>(free) * total);
    }
    return Rat(0);
}

}  // namespace

Rat utility_u1(const TouristProblem& problem, const Plan& plan) {
    return u1_from_sums(problem, plan_sums(problem, plan));
}

Rat utility_u2(const TouristProblem& problem, const Plan& plan) {
    return u2_from_sums(problem, plan_sums(problem, plan));
}

Rat utility_u3(const TouristProblem& problem, const Plan& plan) {
    return u3_from_sums(plan_sums(problem, plan));
}

Rat penalty_journey(const TouristProblem& problem, const Plan& plan) {
    return Rat(plan_sums(problem, plan).travel_minutes, problem.total_time());
}

Rat penalty_visits(const TouristProblem& problem, const Plan& plan, VisitPref pref) {
    return visits_penalty(problem, plan_sums(problem, plan).visit_count, pref);
}

Rat penalty_occup(const TouristProblem& problem, const Plan& plan, OccupPref pref,
                  OccupVariant variant) {
    return occup_penalty(problem, free_time(problem, plan), pref, variant);
}

PenaltyBreakdown breakdown_from_sums(const TouristProblem& problem, const PlanSums& s,
                                     OccupVariant variant) {
    PenaltyBreakdown b;
    const Rat vmax(problem.vmax);
    b.u1 = u1_from_sums(problem, s);
    b.u2 = u2_from_sums(problem, s);
    b.u3 = u3_from_sums(s);
    b.p_u1 = Rat(1) - b.u1;
    b.p_u2 = (vmax - b.u2) / vmax;
    b.p_u3 = (vmax - b.u3) / vmax;
    b.p_journey = Rat(s.travel_minutes, problem.total_time());
    b.p_visits = visits_penalty(problem, s.visit_count, problem.route.pref_visits);
    b.free_time = problem.total_time() - s.visit_minutes - s.lunch_minutes - s.travel_minutes;
    b.p_occup = occup_penalty(problem, b.free_time, problem.route.pref_occup, variant);
    b.occup_variant = variant;
    return b;
}

PenaltyBreakdown compute_breakdown(const TouristProblem& problem, const Plan& plan,
                                   OccupVariant variant) {
    return breakdown_from_sums(problem, plan_sums(problem, plan), variant);
}

Rat metric_value(const PenaltyBreakdown& b, MetricKind kind) {
    switch (kind) {
        case MetricKind::M1:
        case MetricKind::M1Prime:
            return b.p_u1 + b.p_journey + b.p_visits + b.p_occup;
        case MetricKind::M2:
            return b.p_u2 + b.p_visits + b.p_occup;
        case MetricKind::M3:
            return b.p_u3 + b.p_journey + b.p_visits + b.p_occup;
    }
    return Rat(0);
}

Rat metric_from_sums(const TouristProblem& problem, const PlanSums& sums, MetricKind kind) {
    return metric_value(breakdown_from_sums(problem, sums, variant_for(kind)), kind);
}

Rat metric(const TouristProblem& problem, const Plan& plan, MetricKind kind) {
    return metric_from_sums(problem, plan_sums(problem, plan), kind);
}

Rat eval_u1_star(const TouristProblem& problem, const Plan& plan) {
    const PlanSums s = plan_sums(problem, plan);
    if (s.visit_count == 0) return Rat(0);
    return Rat(s.value, static_cast<std::int64_t>(s.visit_count) * problem.vmax);
}

Rat eval_occupation(const TouristProblem& problem, const Plan& plan) {
    return Rat(1) - Rat(free_time(problem, plan), problem.total_time());
}

}  // namespace tourplan
