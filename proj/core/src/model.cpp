#include "tourplan/model.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>
#include <unordered_set>

namespace tourplan {

const char* to_string(VisitPref p) {
    switch (p) {
        case VisitPref::Few: return "few";
        case VisitPref::Indif: return "indif";
        case VisitPref::Many: return "many";
    }
    return "?";
}

const char* to_string(OccupPref p) {
    switch (p) {
        case OccupPref::High: return "high";
        case OccupPref::Indif: return "indif";
        case OccupPref::Low: return "low";
    }
    return "?";
}

VisitPref visit_pref_from_string(const std::string& s) {
    if (s == "few") return VisitPref::Few;
    if (s == "indif") return VisitPref::Indif;
    if (s == "many") return VisitPref::Many;
    throw ParseError("route.pref_visits: expected few|indif|many, got '" + s + "'");
}

OccupPref occup_pref_from_string(const std::string& s) {
    if (s == "high") return OccupPref::High;
    if (s == "indif") return OccupPref::Indif;
    if (s == "low") return OccupPref::Low;
    throw ParseError("route.pref_occup: expected high|indif|low, got '" + s + "'");
}

const TravelTable::Entry* TravelTable::find(const std::string& from, const std::string& to) const {
    for (const auto& e : entries) {
        if (e.from == from && e.to == to) return &e;
    }
    return nullptr;
}

int TravelTable::minutes(const std::string& from, const std::string& to) const {
    const Entry* e = find(from, to);
    if (!e) throw ValidationError("travel: missing entry for pair (" + from + ", " + to + ")");
    return e->minutes;
}

std::int64_t TouristProblem::value_sum() const {
    std::int64_t sum = 0;
    for (const auto& r : visits) sum += r.value;
    return sum;
}

const Recommendation* TouristProblem::find_visit(const std::string& poi_id) const {
    for (const auto& r : visits) {
        if (r.poi_id == poi_id) return &r;
    }
    return nullptr;
}

const PoiHours* TouristProblem::find_hours(const std::string& poi_id) const {
    for (const auto& h : hours) {
        if (h.poi_id == poi_id) return &h;
    }
    return nullptr;
}

std::vector<std::string> TouristProblem::locations() const {
    std::vector<std::string> locs;
    locs.push_back(route.start_loc);
    if (route.final_loc != route.start_loc) locs.push_back(route.final_loc);
    for (const auto& r : visits) locs.push_back(r.poi_id);
    if (has_lunch()) locs.push_back(kRestaurantId);
    return locs;
}

namespace {

void check_time_point(int t, const std::string& what) {
    if (t < 0 || t > kDayMinutes) {
        throw ValidationError(what + ": time point " + std::to_string(t) +
                              " outside [0, " + std::to_string(kDayMinutes) + "]");
    }
}

}  // namespace

void check_invariants(const TouristProblem& p) {
    const auto& r = p.route;
    check_time_point(r.t_start, "route.t_start");
    check_time_point(r.t_end, "route.t_end");
    if (r.t_start >= r.t_end) {
        throw ValidationError("route: t_start (" + std::to_string(r.t_start) +
                              ") must be before t_end (" + std::to_string(r.t_end) + ")");
    }
    if (r.start_loc.empty()) throw ValidationError("route.start_loc: empty identifier");
    if (r.final_loc.empty()) throw ValidationError("route.final_loc: empty identifier");
    if (r.start_loc == kRestaurantId || r.final_loc == kRestaurantId) {
        throw ValidationError("route: '" + kRestaurantId + "' is reserved for the lunch restaurant");
    }
    if (r.lunch) {
        check_time_point(r.lunch->l_start, "route.lunch.l_start");
        check_time_point(r.lunch->l_end, "route.lunch.l_end");
        if (!(r.t_start <= r.lunch->l_start && r.lunch->l_start < r.lunch->l_end &&
              r.lunch->l_end <= r.t_end)) {
            throw ValidationError("route.lunch: window [" + std::to_string(r.lunch->l_start) +
                                  ", " + std::to_string(r.lunch->l_end) +
                                  ") must be ordered and inside the route horizon");
        }
    }
    if (p.vmax <= 0) throw ValidationError("vmax: must be positive");

    std::unordered_set<std::string> visit_ids;
    for (const auto& rec : p.visits) {
        if (rec.poi_id.empty()) throw ValidationError("visits: empty POI identifier");
        if (rec.poi_id == kRestaurantId) {
            throw ValidationError("visits: '" + kRestaurantId + "' is reserved and cannot be recommended");
        }
        if (rec.poi_id == r.start_loc || rec.poi_id == r.final_loc) {
            throw ValidationError("visits: POI '" + rec.poi_id + "' collides with a route endpoint");
        }
        if (!visit_ids.insert(rec.poi_id).second) {
            throw ValidationError("visits: POI '" + rec.poi_id + "' recommended twice");
        }
        if (rec.value < 0 || rec.value > p.vmax) {
            throw ValidationError("visits: POI '" + rec.poi_id + "' value " +
                                  std::to_string(rec.value) + " outside [0, vmax=" +
                                  std::to_string(p.vmax) + "]");
        }
        if (!(0 < rec.dmin && rec.dmin <= rec.dmax)) {
            throw ValidationError("visits: POI '" + rec.poi_id + "' duration interval [" +
                                  std::to_string(rec.dmin) + ", " + std::to_string(rec.dmax) +
                                  "] must satisfy 0 < dmin <= dmax");
        }
    }

    std::unordered_set<std::string> hour_ids;
    for (const auto& h : p.hours) {
        if (!hour_ids.insert(h.poi_id).second) {
            throw ValidationError("hours: POI '" + h.poi_id + "' listed twice");
        }
        check_time_point(h.open, "hours '" + h.poi_id + "' open");
        check_time_point(h.close, "hours '" + h.poi_id + "' close");
        if (h.open >= h.close) {
            throw ValidationError("hours: POI '" + h.poi_id + "' must open before closing");
        }
    }
    for (const auto& rec : p.visits) {
        if (!hour_ids.count(rec.poi_id)) {
            throw ValidationError("hours: no opening hours for recommended POI '" + rec.poi_id + "'");
        }
    }

    std::set<std::pair<std::string, std::string>> seen_pairs;
    for (const auto& e : p.travel.entries) {
        if (e.minutes < 0) {
            throw ValidationError("travel: negative time for pair (" + e.from + ", " + e.to + ")");
        }
        if (!seen_pairs.insert({e.from, e.to}).second) {
            throw ValidationError("travel: duplicate entry for pair (" + e.from + ", " + e.to + ")");
        }
    }
    const auto locs = p.locations();
    for (const auto& a : locs) {
        for (const auto& b : locs) {
            if (a == b) continue;
            if (!seen_pairs.count({a, b})) {
                throw ValidationError("travel: missing entry for pair (" + a + ", " + b + ")");
            }
        }
    }
}

int free_time(const TouristProblem& problem, const Plan& plan) {
    int busy = 0;
    for (const auto& v : plan.visits) busy += v.dur;
    for (const auto& m : plan.moves) busy += m.dur;
    return problem.total_time() - busy;
}

}  // namespace tourplan
