#include "tourplan/validate.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "tourplan/scoring.hpp"

namespace tourplan {

const char* to_string(ViolationCode code) {
    switch (code) {
        case ViolationCode::DuplicateVisit: return "DuplicateVisit";
        case ViolationCode::EmptyPosition: return "EmptyPosition";
        case ViolationCode::DestinationNotLast: return "DestinationNotLast";
        case ViolationCode::DurationOutOfBounds: return "DurationOutOfBounds";
        case ViolationCode::OutsideOpeningHours: return "OutsideOpeningHours";
        case ViolationCode::TravelTimeViolated: return "TravelTimeViolated";
        case ViolationCode::LunchMisplaced: return "LunchMisplaced";
        case ViolationCode::HorizonExceeded: return "HorizonExceeded";
        case ViolationCode::UnknownPoi: return "UnknownPoi";
    }
    return "?";
}

namespace {

std::string interval(int start, int end) {
    return "[" + std::to_string(start) + ", " + std::to_string(end) + "]";
}

using Violations = std::vector<Violation>;

void check_unknown(const TouristProblem& p, const Plan& plan, Violations& out) {
    std::unordered_set<std::string> known;
    for (const auto& loc : p.locations()) known.insert(loc);
    for (std::size_t i = 0; i < plan.visits.size(); ++i) {
        const auto& v = plan.visits[i];
        const bool restaurant_ok = v.poi_id == kRestaurantId && p.has_lunch();
        if (!restaurant_ok && !p.find_visit(v.poi_id)) {
            out.push_back({ViolationCode::UnknownPoi,
                           "visit " + std::to_string(i) + " references '" + v.poi_id +
                               "' which is not a recommended POI" +
                               (v.poi_id == kRestaurantId ? " (no lunch window specified)" : "")});
        }
    }
    for (std::size_t i = 0; i < plan.moves.size(); ++i) {
        const auto& m = plan.moves[i];
        for (const std::string& loc : {m.from_loc, m.to_loc}) {
            if (!known.count(loc)) {
                out.push_back({ViolationCode::UnknownPoi,
                               "move " + std::to_string(i) + " references unknown location '" +
                                   loc + "'"});
            }
        }
    }
}

void check_duplicates(const Plan& plan, Violations& out) {
    std::unordered_map<std::string, std::size_t> first_seen;
    for (std::size_t i = 0; i < plan.visits.size(); ++i) {
        const auto& id = plan.visits[i].poi_id;
        auto [it, inserted] = first_seen.emplace(id, i);
        if (!inserted) {
            out.push_back({ViolationCode::DuplicateVisit,
                           "POI '" + id + "' visited at positions " + std::to_string(it->second) +
                               " and " + std::to_string(i)});
        }
    }
}

// The chain start_loc -> visit_1 -> ... -> visit_k -> final_loc must have one
// move per leg and no gaps. The last move's target is DestinationNotLast's
// business, not a chain gap.
void check_chain(const TouristProblem& p, const Plan& plan, Violations& out) {
    const std::size_t k = plan.visits.size();
    if (k == 0 && plan.moves.empty()) return;  // staying put; endpoint check follows
    if (plan.moves.size() != k + 1) {
        out.push_back({ViolationCode::EmptyPosition,
                       "expected " + std::to_string(k + 1) + " moves for " + std::to_string(k) +
                           " visits, got " + std::to_string(plan.moves.size())});
        return;
    }
    if (plan.moves.front().from_loc != p.route.start_loc) {
        out.push_back({ViolationCode::EmptyPosition,
                       "route must begin at '" + p.route.start_loc + "', first move leaves from '" +
                           plan.moves.front().from_loc + "'"});
    }
    for (std::size_t i = 0; i < k; ++i) {
        if (plan.moves[i].to_loc != plan.visits[i].poi_id) {
            out.push_back({ViolationCode::EmptyPosition,
                           "move " + std::to_string(i) + " arrives at '" + plan.moves[i].to_loc +
                               "' but visit " + std::to_string(i) + " is at '" +
                               plan.visits[i].poi_id + "'"});
        }
        if (plan.moves[i + 1].from_loc != plan.visits[i].poi_id) {
            out.push_back({ViolationCode::EmptyPosition,
                           "move " + std::to_string(i + 1) + " leaves from '" +
                               plan.moves[i + 1].from_loc + "' but visit " + std::to_string(i) +
                               " is at '" + plan.visits[i].poi_id + "'"});
        }
    }
}

void check_destination(const TouristProblem& p, const Plan& plan, Violations& out) {
    if (plan.moves.empty()) {
        if (p.route.start_loc != p.route.final_loc) {
            out.push_back({ViolationCode::DestinationNotLast,
                           "plan has no moves but the route must end at '" + p.route.final_loc +
                               "'"});
        }
        return;
    }
    if (plan.moves.back().to_loc != p.route.final_loc) {
        out.push_back({ViolationCode::DestinationNotLast,
                       "last move arrives at '" + plan.moves.back().to_loc +
                           "', route destination is '" + p.route.final_loc + "'"});
    }
}

void check_lunch(const TouristProblem& p, const Plan& plan, Violations& out) {
    std::vector<const VisitAction*> restaurant_visits;
    for (const auto& v : plan.visits) {
        if (v.poi_id == kRestaurantId) restaurant_visits.push_back(&v);
    }
    if (!p.has_lunch()) return;  // stray restaurant visits already flagged as unknown
    const LunchWindow& w = *p.route.lunch;
    if (restaurant_visits.empty()) {
        out.push_back({ViolationCode::LunchMisplaced,
                       "lunch window " + interval(w.l_start, w.l_end) +
                           " specified but the plan has no restaurant visit"});
        return;
    }
    for (const VisitAction* v : restaurant_visits) {
        if (v->t_s != w.l_start || v->dur != w.length()) {
            out.push_back({ViolationCode::LunchMisplaced,
                           "restaurant visit occupies " + interval(v->t_s, v->finish()) +
                               ", lunch window is " + interval(w.l_start, w.l_end)});
        }
    }
}

void check_durations(const TouristProblem& p, const Plan& plan, Violations& out) {
    for (std::size_t i = 0; i < plan.visits.size(); ++i) {
        const auto& v = plan.visits[i];
        if (v.poi_id == kRestaurantId) continue;  // pinned by the lunch family
        const Recommendation* rec = p.find_visit(v.poi_id);
        if (!rec) continue;
        if (v.dur < rec->dmin || v.dur > rec->dmax) {
            out.push_back({ViolationCode::DurationOutOfBounds,
                           "visit " + std::to_string(i) + " ('" + v.poi_id + "') lasts " +
                               std::to_string(v.dur) + " min, recommended interval is " +
                               interval(rec->dmin, rec->dmax)});
        }
    }
}

void check_opening_hours(const TouristProblem& p, const Plan& plan, Violations& out) {
    for (std::size_t i = 0; i < plan.visits.size(); ++i) {
        const auto& v = plan.visits[i];
        const PoiHours* h = p.find_hours(v.poi_id);
        if (!h) continue;  // restaurant or unknown
        if (v.t_s < h->open || v.finish() > h->close) {
            out.push_back({ViolationCode::OutsideOpeningHours,
                           "visit " + std::to_string(i) + " ('" + v.poi_id + "') at " +
                               interval(v.t_s, v.finish()) + " is outside opening hours " +
                               interval(h->open, h->close)});
        }
    }
}

// Moves must carry the table's travel time, leave no earlier than the
// previous activity ends, and arrive no later than the next visit begins.
// Meeting a bound exactly is allowed, as is waiting.
void check_travel(const TouristProblem& p, const Plan& plan, Violations& out) {
    for (std::size_t i = 0; i < plan.moves.size(); ++i) {
        const auto& m = plan.moves[i];
        const TravelTable::Entry* e = p.travel.find(m.from_loc, m.to_loc);
        if (e && m.dur != e->minutes) {
            out.push_back({ViolationCode::TravelTimeViolated,
                           "move " + std::to_string(i) + " (" + m.from_loc + " -> " + m.to_loc +
                               ") claims " + std::to_string(m.dur) + " min, travel table says " +
                               std::to_string(e->minutes)});
        }
        if (i > 0 && i - 1 < plan.visits.size()) {
            const auto& prev = plan.visits[i - 1];
            if (m.t_s < prev.finish()) {
                out.push_back({ViolationCode::TravelTimeViolated,
                               "move " + std::to_string(i) + " departs at " +
                                   std::to_string(m.t_s) + " before visit " +
                                   std::to_string(i - 1) + " ends at " +
                                   std::to_string(prev.finish())});
            }
        }
        if (i < plan.visits.size()) {
            const auto& next = plan.visits[i];
            if (next.t_s < m.finish()) {
                out.push_back({ViolationCode::TravelTimeViolated,
                               "visit " + std::to_string(i) + " starts at " +
                                   std::to_string(next.t_s) + " before move " + std::to_string(i) +
                                   " arrives at " + std::to_string(m.finish())});
            }
        }
    }
}

void check_horizon(const TouristProblem& p, const Plan& plan, Violations& out) {
    const int t0 = p.route.t_start;
    const int t1 = p.route.t_end;
    auto check = [&](int start, int end, const std::string& what) {
        if (start < t0 || end > t1) {
            out.push_back({ViolationCode::HorizonExceeded,
                           what + " at " + interval(start, end) + " leaves the route horizon " +
                               interval(t0, t1)});
        }
    };
    for (std::size_t i = 0; i < plan.visits.size(); ++i) {
        check(plan.visits[i].t_s, plan.visits[i].finish(), "visit " + std::to_string(i));
    }
    for (std::size_t i = 0; i < plan.moves.size(); ++i) {
        check(plan.moves[i].t_s, plan.moves[i].finish(), "move " + std::to_string(i));
    }
}

}  // namespace

std::vector<Violation> validate(const TouristProblem& problem, const Plan& plan) {
    using CheckFn = void (*)(const TouristProblem&, const Plan&, Violations&);
    // Normative family order; see the header.
    const CheckFn families[] = {
        check_unknown,
        [](const TouristProblem&, const Plan& pl, Violations& out) { check_duplicates(pl, out); },
        check_chain,
        check_destination,
        check_lunch,
        check_durations,
        check_opening_hours,
        check_travel,
        check_horizon,
    };
    Violations out;
    for (CheckFn family : families) {
        family(problem, plan, out);
        if (!out.empty()) return out;
    }
    return out;
}

std::string explain(const TouristProblem& problem, const Plan& plan) {
    struct Row {
        int start;
        int end;
        std::string kind;
        std::string what;
    };
    std::vector<Row> rows;
    for (const auto& m : plan.moves) {
        rows.push_back({m.t_s, m.finish(), "move", m.from_loc + " -> " + m.to_loc});
    }
    for (const auto& v : plan.visits) {
        rows.push_back({v.t_s, v.finish(), v.poi_id == kRestaurantId ? "lunch" : "visit", v.poi_id});
    }
    std::stable_sort(rows.begin(), rows.end(), [](const Row& a, const Row& b) {
        return a.start != b.start ? a.start < b.start : a.end < b.end;
    });

    // Insert slack rows wherever the timeline has a hole.
    std::vector<Row> timeline;
    int cursor = problem.route.t_start;
    for (const auto& r : rows) {
        if (r.start > cursor) timeline.push_back({cursor, r.start, "slack", "-"});
        timeline.push_back(r);
        cursor = std::max(cursor, r.end);
    }
    if (cursor < problem.route.t_end) {
        timeline.push_back({cursor, problem.route.t_end, "slack", "-"});
    }

    const PlanSums sums = plan_sums(problem, plan);
    std::ostringstream os;
    os << "agenda " << problem.route.t_start << ".." << problem.route.t_end << " (total "
       << problem.total_time() << " min)\n";
    for (const auto& r : timeline) {
        char line[160];
        std::snprintf(line, sizeof(line), "%5d .. %5d  %-6s %-28s %5d\n", r.start, r.end,
                      r.kind.c_str(), r.what.c_str(), r.end - r.start);
        os << line;
    }
    os << "totals: visits=" << sums.visit_minutes << " lunch=" << sums.lunch_minutes
       << " travel=" << sums.travel_minutes << " slack=" << free_time(problem, plan)
       << " horizon=" << problem.total_time() << "\n";
    return os.str();
}

}  // namespace tourplan
