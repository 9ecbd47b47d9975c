#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace tourplan {

// Times are integer minutes from 00:00; a day is at most 1440 minutes.
constexpr int kDayMinutes = 1440;

// Reserved location id for the single generic lunch restaurant. It exists
// only when the route specifies a lunch window and never appears among the
// recommended visits.
inline const std::string kRestaurantId = "__restaurant__";

class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct PoiHours {
    std::string poi_id;
    int open = 0;   // minutes from 00:00
    int close = 0;  // open < close

    bool operator==(const PoiHours&) const = default;
};

struct Recommendation {
    std::string poi_id;
    int value = 0;  // 0 <= value <= vmax
    int dmin = 0;   // 0 < dmin <= dmax, minutes
    int dmax = 0;

    bool operator==(const Recommendation&) const = default;
};

// Directed travel times; no symmetry or triangle inequality is assumed.
struct TravelTable {
    struct Entry {
        std::string from;
        std::string to;
        int minutes = 0;

        bool operator==(const Entry&) const = default;
    };

    std::string mode;
    std::vector<Entry> entries;

    // Looks up an ordered pair; throws ValidationError when absent.
    int minutes(const std::string& from, const std::string& to) const;
    const Entry* find(const std::string& from, const std::string& to) const;

    bool operator==(const TravelTable&) const = default;
};

struct LunchWindow {
    int l_start = 0;
    int l_end = 0;

    int length() const { return l_end - l_start; }
    bool operator==(const LunchWindow&) const = default;
};

enum class VisitPref { Few, Indif, Many };
enum class OccupPref { High, Indif, Low };

const char* to_string(VisitPref p);
const char* to_string(OccupPref p);
VisitPref visit_pref_from_string(const std::string& s);
OccupPref occup_pref_from_string(const std::string& s);

struct RouteDetails {
    int t_start = 0;
    int t_end = 0;
    std::string start_loc;
    std::string final_loc;
    std::optional<LunchWindow> lunch;
    std::string mode;
    VisitPref pref_visits = VisitPref::Indif;
    OccupPref pref_occup = OccupPref::Indif;

    bool operator==(const RouteDetails&) const = default;
};

// One user's problem instance: route details, recommended visits, opening
// hours and travel times. Immutable after construction/load; safe to share
// read-only across threads.
struct TouristProblem {
    RouteDetails route;
    std::vector<Recommendation> visits;
    std::vector<PoiHours> hours;
    TravelTable travel;
    int vmax = 300;

    int total_time() const { return route.t_end - route.t_start; }
    bool has_lunch() const { return route.lunch.has_value(); }
    int lunch_length() const { return has_lunch() ? route.lunch->length() : 0; }
    std::int64_t value_sum() const;

    const Recommendation* find_visit(const std::string& poi_id) const;
    const PoiHours* find_hours(const std::string& poi_id) const;

    // start_loc, final_loc, every recommended POI, and the restaurant when
    // lunch is present. Duplicates removed (start_loc may equal final_loc).
    std::vector<std::string> locations() const;

    bool operator==(const TouristProblem&) const = default;
};

struct VisitAction {
    std::string poi_id;
    int t_s = 0;
    int dur = 0;

    int finish() const { return t_s + dur; }
    bool operator==(const VisitAction&) const = default;
};

struct MoveAction {
    std::string from_loc;
    std::string to_loc;
    int t_s = 0;
    int dur = 0;

    int finish() const { return t_s + dur; }
    bool operator==(const MoveAction&) const = default;
};

// A candidate agenda: visits and moves in chronological order. Plans are
// plain data; `validate` decides whether one is feasible.
struct Plan {
    std::vector<VisitAction> visits;
    std::vector<MoveAction> moves;

    bool empty() const { return visits.empty() && moves.empty(); }
    bool operator==(const Plan&) const = default;
};

// Enforces every type invariant; throws ValidationError naming the POI or
// field at fault. load_problem runs this after parsing.
void check_invariants(const TouristProblem& problem);

// Canonical JSON instance format (see README for the schema).
TouristProblem load_problem(const std::string& json_text);
std::string save_problem(const TouristProblem& problem, int indent = 2);

Plan load_plan(const std::string& json_text);
std::string save_plan(const Plan& plan, int indent = 2);

inline int total_time(const TouristProblem& problem) { return problem.total_time(); }

// Horizon minutes not consumed by visits (lunch included) or moves. Negative
// only for overcommitted plans, which the validator rejects.
int free_time(const TouristProblem& problem, const Plan& plan);

}  // namespace tourplan
