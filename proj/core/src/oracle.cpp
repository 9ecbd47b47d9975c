#include "tourplan/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <unordered_map>

#include "tourplan/validate.hpp"

namespace tourplan {

namespace {

constexpr int kRestaurantMark = -2;

struct Enumeration {
    const TouristProblem* problem;
    MetricKind kind;
    int t_start, t_end, l_start = 0, l_end = 0, lunch_len = 0;
    bool lunch = false;

    std::vector<std::string> loc_names;
    std::vector<std::vector<int>> tt;
    int start_idx = 0, final_idx = 0, rest_idx = -1;
    std::vector<std::string> poi_ids;  // eligible POIs only (V')
    std::vector<int> poi_loc, open, close, value;
    std::vector<std::vector<int>> grids;

    std::vector<int> sequence;  // poi indices with kRestaurantMark for lunch
    std::vector<int> durations;

    std::uint64_t leaves = 0;
    bool have_best = false;
    Rat best_obj;
    Plan best_plan;

    // Walks one position of the fixed sequence, trying durations in
    // ascending order. Returns false when every completion overflowed a
    // deadline; scheduling times are monotone in earlier durations, so the
    // caller then stops enlarging its own duration.
    bool assign(std::size_t pos, int time, int loc, std::int64_t value_sum,
                std::int64_t value_minutes, int visit_minutes, int travel, int count) {
        if (pos == sequence.size()) {
            ++leaves;
            const int hop = loc == final_idx ? 0 : tt[loc][final_idx];
            if (!(sequence.empty() && loc == final_idx) && time + hop > t_end) return false;
            PlanSums sums;
            sums.value = value_sum;
            sums.value_minutes = value_minutes;
            sums.visit_minutes = visit_minutes;
            sums.lunch_minutes = lunch ? lunch_len : 0;
            sums.travel_minutes = travel + (sequence.empty() && loc == final_idx ? 0 : hop);
            sums.visit_count = count;
            const Rat obj = metric_from_sums(*problem, sums, kind);
            if (!have_best || obj < best_obj) accept(obj);
            return true;
        }
        const int next = sequence[pos];
        if (next == kRestaurantMark) {
            const int hop = tt[loc][rest_idx];
            if (time + hop > l_start) return false;
            return assign(pos + 1, l_end, rest_idx, value_sum, value_minutes, visit_minutes,
                          travel + hop, count);
        }
        const int hop = tt[loc][poi_loc[next]];
        const int start = std::max(time + hop, open[next]);
        bool first_duration_ok = false;
        for (int d : grids[next]) {
            if (start + d > close[next] || start + d > t_end) break;
            durations.push_back(d);
            const bool ok = assign(pos + 1, start + d, poi_loc[next], value_sum + value[next],
                                   value_minutes + static_cast<std::int64_t>(value[next]) * d,
                                   visit_minutes + d, travel + hop, count + 1);
            durations.pop_back();
            if (!ok) break;
            first_duration_ok = true;
        }
        return first_duration_ok;
    }

    void accept(const Rat& obj) {
        std::vector<std::string> pois;
        std::vector<int> durs;
        std::size_t di = 0;
        for (int s : sequence) {
            if (s == kRestaurantMark) {
                pois.push_back(kRestaurantId);
                durs.push_back(lunch_len);
            } else {
                pois.push_back(poi_ids[s]);
                durs.push_back(durations[di++]);
            }
        }
        auto plan = schedule_sequence(*problem, pois, durs);
        if (!plan) throw std::logic_error("oracle: enumerated candidate failed to schedule");
        if (!validate(*problem, *plan).empty()) {
            throw std::logic_error("oracle: enumerated candidate rejected by validate");
        }
        have_best = true;
        best_obj = obj;
        best_plan = std::move(*plan);
    }
};

}  // namespace

SolveResult oracle_solve(const TouristProblem& problem, MetricKind kind, int duration_grid_step,
                         int max_visits) {
    const auto started = std::chrono::steady_clock::now();
    check_invariants(problem);
    if (duration_grid_step < 1) throw std::invalid_argument("duration grid must be >= 1");
    if (static_cast<int>(problem.visits.size()) > max_visits) {
        throw OracleSizeError("oracle refuses |V| = " + std::to_string(problem.visits.size()) +
                              " (limit " + std::to_string(max_visits) +
                              "): enumeration would blow up");
    }

    Enumeration e;
    e.problem = &problem;
    e.kind = kind;
    e.t_start = problem.route.t_start;
    e.t_end = problem.route.t_end;
    e.lunch = problem.has_lunch();
    if (e.lunch) {
        e.l_start = problem.route.lunch->l_start;
        e.l_end = problem.route.lunch->l_end;
        e.lunch_len = problem.route.lunch->length();
    }

    e.loc_names = problem.locations();
    std::unordered_map<std::string, int> loc_idx;
    for (int i = 0; i < static_cast<int>(e.loc_names.size()); ++i) loc_idx[e.loc_names[i]] = i;
    e.start_idx = loc_idx.at(problem.route.start_loc);
    e.final_idx = loc_idx.at(problem.route.final_loc);
    if (e.lunch) e.rest_idx = loc_idx.at(kRestaurantId);
    const int m = static_cast<int>(e.loc_names.size());
    e.tt.assign(m, std::vector<int>(m, 0));
    for (const auto& entry : problem.travel.entries) {
        auto fi = loc_idx.find(entry.from);
        auto ti = loc_idx.find(entry.to);
        if (fi != loc_idx.end() && ti != loc_idx.end()) {
            e.tt[fi->second][ti->second] = entry.minutes;
        }
    }

    // V': POIs that could ever fit the horizon.
    for (const auto& rec : problem.visits) {
        if (rec.dmin > problem.total_time()) continue;
        e.poi_ids.push_back(rec.poi_id);
        e.poi_loc.push_back(loc_idx.at(rec.poi_id));
        const PoiHours* h = problem.find_hours(rec.poi_id);
        e.open.push_back(h->open);
        e.close.push_back(h->close);
        e.value.push_back(rec.value);
        e.grids.push_back(duration_grid(rec, duration_grid_step));
    }

    const int n = static_cast<int>(e.poi_ids.size());

    // Subset sizes ascending, combinations and permutations lexicographic,
    // lunch slots ascending: deterministic, and equal-cost optima resolve to
    // the fewest-visits plan first.
    std::vector<int> combo;
    for (int k = 0; k <= n; ++k) {
        combo.resize(k);
        std::iota(combo.begin(), combo.end(), 0);
        while (true) {
            std::vector<int> perm = combo;
            do {
                const int slots = e.lunch ? k + 1 : 1;
                for (int slot = 0; slot < slots; ++slot) {
                    e.sequence.clear();
                    for (int i = 0; i < k; ++i) {
                        if (e.lunch && i == slot) e.sequence.push_back(kRestaurantMark);
                        e.sequence.push_back(perm[i]);
                    }
                    if (e.lunch && slot == k) e.sequence.push_back(kRestaurantMark);
                    e.assign(0, e.t_start, e.start_idx, 0, 0, 0, 0, 0);
                }
            } while (std::next_permutation(perm.begin(), perm.end()));

            // next k-combination of {0..n-1}
            int i = k - 1;
            while (i >= 0 && combo[i] == n - k + i) --i;
            if (i < 0) break;
            ++combo[i];
            for (int j = i + 1; j < k; ++j) combo[j] = combo[j - 1] + 1;
        }
    }

    if (!e.have_best) {
        throw InfeasibleError("no feasible plan: the destination (and lunch, if any) cannot be "
                              "reached within the route horizon");
    }

    SolveResult result;
    result.plan = e.best_plan;
    result.breakdown = compute_breakdown(problem, result.plan, variant_for(kind));
    result.objective = metric_value(result.breakdown, kind);
    if (result.objective != e.best_obj) {
        throw std::logic_error("oracle: objective disagrees with scoring");
    }
    result.nodes_explored = static_cast<std::int64_t>(e.leaves);
    result.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - started)
                            .count();
    result.proven_optimal = true;
    return result;
}

std::uint64_t oracle_leaf_space(const TouristProblem& problem, int duration_grid_step) {
    std::vector<std::uint64_t> grid_sizes;
    for (const auto& rec : problem.visits) {
        if (rec.dmin > problem.total_time()) continue;
        grid_sizes.push_back(duration_grid(rec, duration_grid_step).size());
    }
    const std::size_t m = grid_sizes.size();
    // e[k] = elementary symmetric polynomial of the grid sizes.
    std::vector<std::uint64_t> esym(m + 1, 0);
    esym[0] = 1;
    for (std::uint64_t g : grid_sizes) {
        for (std::size_t k = m; k >= 1; --k) esym[k] += esym[k - 1] * g;
    }
    std::uint64_t total = 0;
    std::uint64_t factorial = 1;
    for (std::size_t k = 0; k <= m; ++k) {
        if (k > 0) factorial *= k;
        total += factorial * esym[k];
    }
    return total;
}

}  // namespace tourplan
