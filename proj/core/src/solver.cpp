#include "tourplan/solver.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <numeric>
#include <random>
#include <unordered_map>

#include "tourplan/validate.hpp"

namespace tourplan {

std::vector<int> duration_grid(const Recommendation& rec, int grid) {
    if (grid < 1) throw std::invalid_argument("duration grid must be >= 1");
    std::vector<int> out;
    for (int d = rec.dmin; d < rec.dmax; d += grid) out.push_back(d);
    out.push_back(rec.dmax);
    return out;
}

std::optional<Plan> schedule_sequence(const TouristProblem& p,
                                      const std::vector<std::string>& ordered_pois,
                                      const std::vector<int>& durations) {
    if (ordered_pois.size() != durations.size()) {
        throw std::invalid_argument("schedule_sequence: pois/durations size mismatch");
    }
    Plan plan;
    std::string cur = p.route.start_loc;
    int t = p.route.t_start;

    for (std::size_t i = 0; i < ordered_pois.size(); ++i) {
        const std::string& poi = ordered_pois[i];
        const int travel = p.travel.minutes(cur, poi);
        const int arrival = t + travel;
        int start = 0;
        int dur = 0;
        if (poi == kRestaurantId) {
            if (!p.has_lunch()) throw ValidationError("schedule: restaurant without lunch window");
            if (arrival > p.route.lunch->l_start) return std::nullopt;
            start = p.route.lunch->l_start;
            dur = p.route.lunch->length();
        } else {
            const PoiHours* h = p.find_hours(poi);
            if (!h) throw ValidationError("schedule: unknown POI '" + poi + "'");
            start = std::max(arrival, h->open);
            dur = durations[i];
            if (start + dur > h->close) return std::nullopt;
        }
        if (start + dur > p.route.t_end) return std::nullopt;
        plan.moves.push_back({cur, poi, t, travel});
        plan.visits.push_back({poi, start, dur});
        cur = poi;
        t = start + dur;
    }

    if (plan.visits.empty() && cur == p.route.final_loc) return plan;  // staying put
    const int travel = p.travel.minutes(cur, p.route.final_loc);
    if (t + travel > p.route.t_end) return std::nullopt;
    plan.moves.push_back({cur, p.route.final_loc, t, travel});
    return plan;
}

namespace {

constexpr int kRestaurantSeqId = -2;

struct Ctx {
    const TouristProblem* problem = nullptr;
    MetricKind kind = MetricKind::M1;
    OccupVariant variant = OccupVariant::Reciprocal;

    int n = 0;
    std::vector<std::string> loc_names;
    std::vector<std::vector<int>> tt;
    std::vector<int> min_into;  // cheapest incoming hop per location
    int max_tt = 0;
    int start_idx = 0, final_idx = 0, rest_idx = -1;

    std::vector<int> poi_loc, value, dmin, dmax, open, close;
    std::vector<std::vector<int>> grids;
    std::vector<int> branch_order;

    std::int64_t total_value = 0;
    int t_start = 0, t_end = 0, total = 0;
    bool lunch = false;
    int l_start = 0, l_end = 0, lunch_len = 0;
};

Ctx make_ctx(const TouristProblem& p, MetricKind kind, const SolveOptions& opts) {
    check_invariants(p);
    if (p.visits.size() > 25) {
        throw std::invalid_argument("solver handles at most 25 recommended POIs");
    }

    Ctx c;
    c.problem = &p;
    c.kind = kind;
    c.variant = variant_for(kind);
    c.n = static_cast<int>(p.visits.size());
    c.t_start = p.route.t_start;
    c.t_end = p.route.t_end;
    c.total = p.total_time();
    c.total_value = p.value_sum();
    c.lunch = p.has_lunch();
    if (c.lunch) {
        c.l_start = p.route.lunch->l_start;
        c.l_end = p.route.lunch->l_end;
        c.lunch_len = p.route.lunch->length();
    }

    c.loc_names = p.locations();
    std::unordered_map<std::string, int> loc_idx;
    for (int i = 0; i < static_cast<int>(c.loc_names.size()); ++i) loc_idx[c.loc_names[i]] = i;
    c.start_idx = loc_idx.at(p.route.start_loc);
    c.final_idx = loc_idx.at(p.route.final_loc);
    if (c.lunch) c.rest_idx = loc_idx.at(kRestaurantId);

    const int m = static_cast<int>(c.loc_names.size());
    c.tt.assign(m, std::vector<int>(m, 0));
    for (const auto& e : p.travel.entries) {
        auto fi = loc_idx.find(e.from);
        auto ti = loc_idx.find(e.to);
        if (fi == loc_idx.end() || ti == loc_idx.end()) continue;
        c.tt[fi->second][ti->second] = e.minutes;
        c.max_tt = std::max(c.max_tt, e.minutes);
    }
    c.min_into.assign(m, std::numeric_limits<int>::max());
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
            if (i != j) c.min_into[j] = std::min(c.min_into[j], c.tt[i][j]);
        }
    }
    for (int j = 0; j < m; ++j) {
        if (c.min_into[j] == std::numeric_limits<int>::max()) c.min_into[j] = 0;
    }

    for (int i = 0; i < c.n; ++i) {
        const auto& rec = p.visits[i];
        c.poi_loc.push_back(loc_idx.at(rec.poi_id));
        c.value.push_back(rec.value);
        c.dmin.push_back(rec.dmin);
        c.dmax.push_back(rec.dmax);
        const PoiHours* h = p.find_hours(rec.poi_id);
        c.open.push_back(h->open);
        c.close.push_back(h->close);
        c.grids.push_back(duration_grid(rec, opts.duration_grid));
    }

    c.branch_order.resize(c.n);
    std::iota(c.branch_order.begin(), c.branch_order.end(), 0);
    if (opts.branch_seed) {
        std::mt19937_64 rng(*opts.branch_seed);
        std::shuffle(c.branch_order.begin(), c.branch_order.end(), rng);
    } else {
        // High utility density first; ties by POI id for determinism.
        std::sort(c.branch_order.begin(), c.branch_order.end(), [&](int a, int b) {
            const std::int64_t lhs = static_cast<std::int64_t>(c.value[a]) * c.dmin[b];
            const std::int64_t rhs = static_cast<std::int64_t>(c.value[b]) * c.dmin[a];
            if (lhs != rhs) return lhs > rhs;
            return p.visits[a].poi_id < p.visits[b].poi_id;
        });
    }
    return c;
}

struct Node {
    std::uint32_t used = 0;
    int cur = 0;
    int time = 0;
    bool lunch_done = false;
    std::int64_t value = 0;
    std::int64_t value_minutes = 0;
    int visit_minutes = 0;
    int travel = 0;
    int k = 0;
};

Node root_node(const Ctx& c) {
    Node nd;
    nd.cur = c.start_idx;
    nd.time = c.t_start;
    nd.lunch_done = !c.lunch;
    return nd;
}

// Optimistic per-POI reachability: can q still be visited in some completion?
// Errs toward "yes"; used only to tighten the bound, never to cut branches.
bool may_still_fit(const Ctx& c, const Node& nd, int q) {
    const int ea = nd.time + c.min_into[c.poi_loc[q]];
    const int start = std::max(ea, c.open[q]);
    const int deadline = std::min(c.close[q], c.t_end - c.min_into[c.final_idx]);
    return start + c.dmin[q] <= deadline;
}

// Admissible lower bound on the metric over all completions of `nd`. With no
// remaining reachable POI the bound equals the metric of the forced closing
// plan exactly.
Rat admissible_bound(const Ctx& c, const Node& nd) {
    std::int64_t fit_value = 0;
    std::int64_t fit_value_dmax = 0;
    int fit_dmax_sum = 0;
    int fit_count = 0;
    int max_fit_value = 0;
    int cheapest_fit_hop = std::numeric_limits<int>::max();
    for (int q = 0; q < c.n; ++q) {
        if (nd.used & (1u << q)) continue;
        if (!may_still_fit(c, nd, q)) continue;
        fit_value += c.value[q];
        fit_value_dmax += static_cast<std::int64_t>(c.value[q]) * c.dmax[q];
        fit_dmax_sum += c.dmax[q];
        fit_count += 1;
        max_fit_value = std::max(max_fit_value, c.value[q]);
        cheapest_fit_hop = std::min(cheapest_fit_hop, c.tt[nd.cur][c.poi_loc[q]]);
    }

    // Remaining travel: at least one hop into the destination, plus the way
    // there (direct or through some POI / the pending restaurant).
    int rem_travel_lb = 0;
    int rem_busy_max = 0;  // upper bound on future busy minutes (travel + visits)
    if (fit_count == 0) {
        rem_travel_lb = nd.lunch_done
                            ? c.tt[nd.cur][c.final_idx]
                            : c.tt[nd.cur][c.rest_idx] + c.tt[c.rest_idx][c.final_idx];
        rem_busy_max = rem_travel_lb;
    } else if (nd.lunch_done) {
        rem_travel_lb = std::min(c.tt[nd.cur][c.final_idx],
                                 cheapest_fit_hop + c.min_into[c.final_idx]);
        rem_busy_max = fit_dmax_sum + (fit_count + 1) * c.max_tt;
    } else {
        rem_travel_lb = std::min(c.tt[nd.cur][c.rest_idx],
                                 cheapest_fit_hop + c.min_into[c.rest_idx]) +
                        c.min_into[c.final_idx];
        rem_busy_max = fit_dmax_sum + (fit_count + 2) * c.max_tt;
    }

    const int lunch_total = c.lunch ? c.lunch_len : 0;
    const int committed = nd.visit_minutes + nd.travel + lunch_total;
    const int free_max = std::max(0, c.total - committed - rem_travel_lb);
    const int free_min = std::max(0, c.total - committed - rem_busy_max);

    const Rat vmax(c.problem->vmax);
    Rat bound(0);

    // P_U1 / P_U2 / P_U3 best cases assume all still-fitting value collected.
    if (c.kind == MetricKind::M1 || c.kind == MetricKind::M1Prime) {
        if (c.total_value > 0) {
            bound += Rat(c.total_value - nd.value - fit_value, c.total_value);
        } else {
            bound += Rat(c.n == 0 ? 1 : 0);  // empty V: P_U1 is exactly 1
        }
    } else if (c.kind == MetricKind::M2) {
        const std::int64_t den = static_cast<std::int64_t>(c.problem->vmax) * c.total;
        const std::int64_t num = den - (nd.value_minutes + fit_value_dmax);
        bound += Rat(std::max<std::int64_t>(0, num), den);
    } else {  // M3
        Rat u3_cap(0);
        if (nd.k > 0) u3_cap = Rat(nd.value_minutes, nd.visit_minutes);
        if (fit_count > 0) u3_cap = std::max(u3_cap, Rat(max_fit_value));
        bound += (vmax - u3_cap) / vmax;
    }

    if (c.kind != MetricKind::M2) {
        bound += Rat(nd.travel + rem_travel_lb, c.total);
    }

    const std::int64_t n64 = c.n;
    switch (c.problem->route.pref_visits) {
        case VisitPref::Indif:
            break;
        case VisitPref::Few:
            if (n64 > 0) bound += Rat(nd.k, n64);
            break;
        case VisitPref::Many:
            if (n64 > 0) bound += Rat(std::max<std::int64_t>(0, n64 - nd.k - fit_count), n64);
            break;
    }

    switch (c.problem->route.pref_occup) {
        case OccupPref::Indif:
            break;
        case OccupPref::High:
            bound += Rat(free_min, c.total);
            break;
        case OccupPref::Low:
            if (c.variant == OccupVariant::Linear) {
                bound += Rat(c.total - free_max, c.total);
            } else {
                bound += free_max == 0 ? Rat(1)
                                       : Rat(1, static_cast<std::int64_t>(free_max) * c.total);
            }
            break;
    }
    return bound;
}

Rat leaf_objective(const Ctx& c, const Node& nd, int closing_travel) {
    PlanSums s;
    s.value = nd.value;
    s.value_minutes = nd.value_minutes;
    s.visit_minutes = nd.visit_minutes;
    s.lunch_minutes = c.lunch ? c.lunch_len : 0;
    s.travel_minutes = nd.travel + closing_travel;
    s.visit_count = nd.k;
    return metric_from_sums(*c.problem, s, c.kind);
}

struct Search {
    const Ctx& c;
    const SolveOptions& opts;
    std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

    std::int64_t nodes = 0;
    bool limit_hit = false;

    bool have_best = false;
    Rat best_obj;
    std::vector<std::pair<int, int>> best_seq;  // (poi index or kRestaurantSeqId, duration)
    std::vector<std::pair<int, int>> seq;

    bool over_limit() {
        if (opts.node_limit > 0 && nodes >= opts.node_limit) return true;
        if (opts.time_limit_s > 0 && (nodes & 1023) == 0) {
            const auto elapsed = std::chrono::steady_clock::now() - started;
            if (std::chrono::duration<double>(elapsed).count() >= opts.time_limit_s) return true;
        }
        return false;
    }

    void offer_leaf(const Node& nd, int closing_travel) {
        const Rat obj = leaf_objective(c, nd, closing_travel);
        if (!have_best || obj < best_obj) {
            have_best = true;
            best_obj = obj;
            best_seq = seq;
        }
    }

    void dfs(const Node& nd) {
        ++nodes;
        if (limit_hit || (limit_hit = over_limit())) return;

        // Close the route now (lunch must already be placed).
        if (nd.lunch_done && nd.time + c.tt[nd.cur][c.final_idx] <= c.t_end) {
            offer_leaf(nd, c.tt[nd.cur][c.final_idx]);
        }

        // Head to the restaurant.
        if (!nd.lunch_done) {
            const int hop = c.tt[nd.cur][c.rest_idx];
            if (nd.time + hop <= c.l_start) {
                Node child = nd;
                child.cur = c.rest_idx;
                child.time = c.l_end;
                child.lunch_done = true;
                child.travel += hop;
                if (!have_best || admissible_bound(c, child) < best_obj) {
                    seq.emplace_back(kRestaurantSeqId, c.lunch_len);
                    dfs(child);
                    seq.pop_back();
                }
            }
        }

        // Visit one more POI.
        for (int i : c.branch_order) {
            if (nd.used & (1u << i)) continue;
            const int hop = c.tt[nd.cur][c.poi_loc[i]];
            const int arrival = nd.time + hop;
            const int start = std::max(arrival, c.open[i]);
            for (int d : c.grids[i]) {
                const int finish = start + d;
                if (finish > c.close[i] || finish > c.t_end) break;
                if (!nd.lunch_done && finish + c.min_into[c.rest_idx] > c.l_start) break;
                if (finish + c.min_into[c.final_idx] > c.t_end) break;
                Node child = nd;
                child.used |= (1u << i);
                child.cur = c.poi_loc[i];
                child.time = finish;
                child.value += c.value[i];
                child.value_minutes += static_cast<std::int64_t>(c.value[i]) * d;
                child.visit_minutes += d;
                child.travel += hop;
                child.k += 1;
                if (have_best && admissible_bound(c, child) >= best_obj) continue;
                seq.emplace_back(i, d);
                dfs(child);
                seq.pop_back();
                if (limit_hit) return;
            }
            if (limit_hit) return;
        }
    }
};

Plan plan_from_seq(const Ctx& c, const std::vector<std::pair<int, int>>& seq) {
    std::vector<std::string> pois;
    std::vector<int> durs;
    for (const auto& [idx, dur] : seq) {
        pois.push_back(idx == kRestaurantSeqId ? kRestaurantId : c.problem->visits[idx].poi_id);
        durs.push_back(dur);
    }
    auto plan = schedule_sequence(*c.problem, pois, durs);
    if (!plan) throw std::logic_error("solver: best sequence failed to reschedule");
    return *plan;
}

}  // namespace

SolveResult solve(const TouristProblem& problem, MetricKind kind, const SolveOptions& opts) {
    const Ctx c = make_ctx(problem, kind, opts);
    Search search{c, opts};
    search.dfs(root_node(c));

    if (!search.have_best) {
        if (search.limit_hit) {
            throw InfeasibleError("no feasible plan found within the configured limits");
        }
        throw InfeasibleError("no feasible plan: the destination (and lunch, if any) cannot be "
                              "reached within the route horizon");
    }

    SolveResult result;
    result.plan = plan_from_seq(c, search.best_seq);
    result.breakdown = compute_breakdown(problem, result.plan, c.variant);
    result.objective = metric_value(result.breakdown, kind);
    if (result.objective != search.best_obj) {
        throw std::logic_error("solver: incremental objective disagrees with scoring");
    }
    result.nodes_explored = search.nodes;
    result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - search.started)
                            .count();
    result.proven_optimal = !search.limit_hit;
    return result;
}

Rat lower_bound(const TouristProblem& problem, MetricKind kind, const SearchPrefix& prefix,
                const SolveOptions& opts) {
    const Ctx c = make_ctx(problem, kind, opts);
    Node nd = root_node(c);
    for (std::size_t i = 0; i < prefix.pois.size(); ++i) {
        const std::string& poi = prefix.pois[i];
        if (poi == kRestaurantId) {
            if (!c.lunch) throw ValidationError("prefix: restaurant without lunch window");
            const int hop = c.tt[nd.cur][c.rest_idx];
            if (nd.time + hop > c.l_start) throw InfeasibleError("prefix: lunch unreachable");
            nd.travel += hop;
            nd.cur = c.rest_idx;
            nd.time = c.l_end;
            nd.lunch_done = true;
            continue;
        }
        int idx = -1;
        for (int q = 0; q < c.n; ++q) {
            if (problem.visits[q].poi_id == poi) idx = q;
        }
        if (idx < 0) throw ValidationError("prefix: unknown POI '" + poi + "'");
        const int hop = c.tt[nd.cur][c.poi_loc[idx]];
        const int start = std::max(nd.time + hop, c.open[idx]);
        const int d = prefix.durations.at(i);
        if (start + d > c.close[idx] || start + d > c.t_end) {
            throw InfeasibleError("prefix: visit '" + poi + "' cannot be scheduled");
        }
        nd.used |= (1u << idx);
        nd.cur = c.poi_loc[idx];
        nd.time = start + d;
        nd.value += c.value[idx];
        nd.value_minutes += static_cast<std::int64_t>(c.value[idx]) * d;
        nd.visit_minutes += d;
        nd.travel += hop;
        nd.k += 1;
    }
    return admissible_bound(c, nd);
}

}  // namespace tourplan
