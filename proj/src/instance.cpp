#include "gcortop/instance.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <unordered_set>

namespace gcortop {

double travel_time(double d, const MotionModel& motion) {
    if (d < motion.v_max * motion.v_max / motion.a) {
        return 2.0 * std::sqrt(d / motion.a);
    }
    return d / motion.v_max + motion.v_max / motion.a;
}

Instance::Instance(std::vector<Point> targets, std::vector<double> priorities,
                   std::vector<VehicleSpec> vehicles, MotionModel motion,
                   double sensing_time, std::string name)
    : name_(std::move(name)), motion_(motion), sensing_time_(sensing_time) {
    if (targets.size() != priorities.size()) {
        throw std::invalid_argument("instance: one priority per target required");
    }
    if (motion.v_max <= 0.0 || motion.a <= 0.0) {
        throw std::invalid_argument("instance: motion model requires v_max > 0 and a > 0");
    }
    if (sensing_time < 0.0) {
        throw std::invalid_argument("instance: sensing time must be nonnegative");
    }

    priorities_ = std::move(priorities);
    for (double u : priorities_) {
        if (!(u >= 0.0) || !std::isfinite(u)) {
            throw std::invalid_argument("instance: priorities must be finite and nonnegative");
        }
        total_priority_ += u;
    }

    locations_.reserve(targets.size() + 2 * vehicles.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        if (!std::isfinite(targets[i].x) || !std::isfinite(targets[i].y)) {
            throw std::invalid_argument("instance: target coordinates must be finite");
        }
        locations_.push_back({static_cast<int>(i), targets[i].x, targets[i].y});
    }

    // Depots are deduplicated by exact coordinates so co-located start/end
    // points share an id.
    auto depot_id = [&](const Point& p) {
        for (int id = num_targets(); id < static_cast<int>(locations_.size()); ++id) {
            if (locations_[id].x == p.x && locations_[id].y == p.y) return id;
        }
        const int id = static_cast<int>(locations_.size());
        locations_.push_back({id, p.x, p.y});
        return id;
    };
    for (std::size_t m = 0; m < vehicles.size(); ++m) {
        const VehicleSpec& spec = vehicles[m];
        if (!(spec.t_max > 0.0)) {
            throw std::invalid_argument("instance: vehicle t_max must be positive");
        }
        vehicles_.push_back(
            {static_cast<int>(m), depot_id(spec.start), depot_id(spec.end), spec.t_max});
    }

    const std::size_t n = locations_.size();
    dist_.resize(n * n);
    travel_.resize(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double d = std::hypot(locations_[i].x - locations_[j].x,
                                        locations_[i].y - locations_[j].y);
            dist_[i * n + j] = d;
            travel_[i * n + j] = (i == j) ? 0.0 : travel_time(d, motion_);
        }
    }

    const int t = num_targets();
    double sum = 0.0;
    double min_spacing = std::numeric_limits<double>::infinity();
    for (int i = 0; i < t; ++i) {
        for (int j = 0; j < t; ++j) {
            sum += dist_[static_cast<std::size_t>(i) * n + j];
            if (i != j) min_spacing = std::fmin(min_spacing, dist_[static_cast<std::size_t>(i) * n + j]);
        }
    }
    mean_pairwise_distance_ = t > 0 ? sum / (static_cast<double>(t) * t) : 0.0;
    min_target_spacing_ = t > 1 ? min_spacing : 0.0;
}

double route_duration(const Route& r, const Instance& inst) {
    const Vehicle& v = inst.vehicle(r.vehicle);
    if (r.stops.empty()) {
        return v.start == v.end ? 0.0 : inst.arc_time(v.start, v.end);
    }
    double total = inst.arc_time(v.start, r.stops.front());
    for (std::size_t c = 0; c + 1 < r.stops.size(); ++c) {
        total += inst.arc_time(r.stops[c], r.stops[c + 1]);
    }
    total += inst.arc_time(r.stops.back(), v.end);
    return total;
}

bool route_feasible(const Route& r, const Instance& inst) {
    const Vehicle& v = inst.vehicle(r.vehicle);
    std::unordered_set<int> seen;
    for (int s : r.stops) {
        if (!inst.is_target(s)) return false;
        if (!seen.insert(s).second) return false;
    }
    const double fresh = route_duration(r, inst);
    if (std::fabs(fresh - r.duration) > kDurationTol) return false;
    return fresh <= v.t_max + kDurationTol;
}

std::vector<int> Solution::sampled() const {
    std::vector<int> all;
    for (const Route& r : routes) all.insert(all.end(), r.stops.begin(), r.stops.end());
    return all;
}

double Solution::total_duration() const {
    double total = 0.0;
    for (const Route& r : routes) total += r.duration;
    return total;
}

Solution empty_solution(const Instance& inst) {
    Solution s;
    s.routes.resize(inst.num_vehicles());
    for (int m = 0; m < inst.num_vehicles(); ++m) {
        s.routes[m].vehicle = m;
        s.routes[m].duration = route_duration(s.routes[m], inst);
    }
    return s;
}

bool solution_feasible(const Solution& s, const Instance& inst) {
    if (static_cast<int>(s.routes.size()) != inst.num_vehicles()) return false;
    std::unordered_set<int> seen;
    for (int m = 0; m < inst.num_vehicles(); ++m) {
        const Route& r = s.routes[m];
        if (r.vehicle != m) return false;
        if (!route_feasible(r, inst)) return false;
        for (int stop : r.stops) {
            if (!seen.insert(stop).second) return false;
        }
    }
    return true;
}

std::vector<int> reachable_targets(const Vehicle& v, const Instance& inst) {
    std::vector<int> out;
    for (int i = 0; i < inst.num_targets(); ++i) {
        if (inst.arc_time(v.start, i) + inst.arc_time(i, v.end) <= v.t_max + kDurationTol) {
            out.push_back(i);
        }
    }
    return out;
}

}  // namespace gcortop
