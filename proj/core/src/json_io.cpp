#include <nlohmann/json.hpp>

#include "tourplan/model.hpp"

// Canonical instance and plan documents. Parsing is strict about types and
// required fields so errors name the offending spot instead of surfacing as
// a generic exception later.

namespace tourplan {

using nlohmann::json;

namespace {

const json& require(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw ParseError(where + ": missing field '" + key + "'");
    return *it;
}

int require_int(const json& obj, const std::string& key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_number_integer()) {
        throw ParseError(where + "." + key + ": expected an integer number of minutes");
    }
    return v.get<int>();
}

std::string require_string(const json& obj, const std::string& key, const std::string& where) {
    const json& v = require(obj, key, where);
    if (!v.is_string()) throw ParseError(where + "." + key + ": expected a string");
    return v.get<std::string>();
}

json parse_document(const std::string& text, const char* what) {
    json doc = json::parse(text, nullptr, false);
    if (doc.is_discarded()) throw ParseError(std::string(what) + ": malformed JSON");
    if (!doc.is_object()) throw ParseError(std::string(what) + ": top level must be an object");
    return doc;
}

}  // namespace

TouristProblem load_problem(const std::string& json_text) {
    json doc = parse_document(json_text, "problem");

    TouristProblem p;
    const json& route = require(doc, "route", "problem");
    if (!route.is_object()) throw ParseError("problem.route: expected an object");
    p.route.t_start = require_int(route, "t_start", "route");
    p.route.t_end = require_int(route, "t_end", "route");
    p.route.start_loc = require_string(route, "start_loc", "route");
    p.route.final_loc = require_string(route, "final_loc", "route");
    p.route.mode = require_string(route, "mode", "route");
    p.route.pref_visits = visit_pref_from_string(require_string(route, "pref_visits", "route"));
    p.route.pref_occup = occup_pref_from_string(require_string(route, "pref_occup", "route"));
    if (auto it = route.find("lunch"); it != route.end() && !it->is_null()) {
        if (!it->is_object()) throw ParseError("route.lunch: expected an object");
        LunchWindow w;
        w.l_start = require_int(*it, "l_start", "route.lunch");
        w.l_end = require_int(*it, "l_end", "route.lunch");
        p.route.lunch = w;
    }

    p.vmax = doc.contains("vmax") ? require_int(doc, "vmax", "problem") : 300;

    const json& visits = require(doc, "visits", "problem");
    if (!visits.is_array()) throw ParseError("problem.visits: expected an array");
    for (const auto& v : visits) {
        Recommendation r;
        r.poi_id = require_string(v, "id", "visits[]");
        r.value = require_int(v, "value", "visits[]");
        r.dmin = require_int(v, "dmin", "visits[]");
        r.dmax = require_int(v, "dmax", "visits[]");
        p.visits.push_back(std::move(r));
    }

    const json& hours = require(doc, "hours", "problem");
    if (!hours.is_array()) throw ParseError("problem.hours: expected an array");
    for (const auto& h : hours) {
        PoiHours ph;
        ph.poi_id = require_string(h, "id", "hours[]");
        ph.open = require_int(h, "open", "hours[]");
        ph.close = require_int(h, "close", "hours[]");
        p.hours.push_back(std::move(ph));
    }

    const json& travel = require(doc, "travel", "problem");
    if (!travel.is_array()) throw ParseError("problem.travel: expected an array");
    p.travel.mode = p.route.mode;
    for (const auto& t : travel) {
        TravelTable::Entry e;
        e.from = require_string(t, "from", "travel[]");
        e.to = require_string(t, "to", "travel[]");
        e.minutes = require_int(t, "minutes", "travel[]");
        p.travel.entries.push_back(std::move(e));
    }

    check_invariants(p);
    return p;
}

std::string save_problem(const TouristProblem& p, int indent) {
    json route = {
        {"t_start", p.route.t_start}, {"t_end", p.route.t_end},
        {"start_loc", p.route.start_loc}, {"final_loc", p.route.final_loc},
        {"mode", p.route.mode},
        {"pref_visits", to_string(p.route.pref_visits)},
        {"pref_occup", to_string(p.route.pref_occup)},
    };
    if (p.route.lunch) {
        route["lunch"] = {{"l_start", p.route.lunch->l_start}, {"l_end", p.route.lunch->l_end}};
    }

    json visits = json::array();
    for (const auto& r : p.visits) {
        visits.push_back({{"id", r.poi_id}, {"value", r.value}, {"dmin", r.dmin}, {"dmax", r.dmax}});
    }
    json hours = json::array();
    for (const auto& h : p.hours) {
        hours.push_back({{"id", h.poi_id}, {"open", h.open}, {"close", h.close}});
    }
    json travel = json::array();
    for (const auto& e : p.travel.entries) {
        travel.push_back({{"from", e.from}, {"to", e.to}, {"minutes", e.minutes}});
    }

    json doc = {{"route", route}, {"vmax", p.vmax}, {"visits", visits},
                {"hours", hours}, {"travel", travel}};
    return doc.dump(indent) + "\n";
}

Plan load_plan(const std::string& json_text) {
    json doc = parse_document(json_text, "plan");

    Plan plan;
    const json& visits = require(doc, "visits", "plan");
    if (!visits.is_array()) throw ParseError("plan.visits: expected an array");
    for (const auto& v : visits) {
        VisitAction a;
        a.poi_id = require_string(v, "id", "plan.visits[]");
        a.t_s = require_int(v, "start", "plan.visits[]");
        a.dur = require_int(v, "dur", "plan.visits[]");
        plan.visits.push_back(std::move(a));
    }
    const json& moves = require(doc, "moves", "plan");
    if (!moves.is_array()) throw ParseError("plan.moves: expected an array");
    for (const auto& m : moves) {
        MoveAction a;
        a.from_loc = require_string(m, "from", "plan.moves[]");
        a.to_loc = require_string(m, "to", "plan.moves[]");
        a.t_s = require_int(m, "start", "plan.moves[]");
        a.dur = require_int(m, "dur", "plan.moves[]");
        plan.moves.push_back(std::move(a));
    }
    return plan;
}

std::string save_plan(const Plan& plan, int indent) {
    json visits = json::array();
    for (const auto& v : plan.visits) {
        visits.push_back({{"id", v.poi_id}, {"start", v.t_s}, {"dur", v.dur}});
    }
    json moves = json::array();
    for (const auto& m : plan.moves) {
        moves.push_back({{"from", m.from_loc}, {"to", m.to_loc}, {"start", m.t_s}, {"dur", m.dur}});
    }
    json doc = {{"visits", visits}, {"moves", moves}};
    return doc.dump(indent) + "\n";
}

}  // namespace tourplan
