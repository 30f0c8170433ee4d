#pragma once

#include <string>
#include <vector>

#include "gcortop/geometry.hpp"

namespace gcortop {

// Feasibility comparisons tolerate this much accumulated floating-point error.
inline constexpr double kDurationTol = 1e-9;

struct MotionModel {
    double v_max = 7.0;  // maximum horizontal cruise speed, m/s
    double a = 2.0;      // constant horizontal acceleration, m/s^2
};

// Time to fly a straight leg of `d` meters from standstill to standstill.
// Short legs never reach cruise speed; long legs accelerate, cruise, decelerate.
double travel_time(double d, const MotionModel& motion);

struct Location {
    int id = 0;
    double x = 0.0;  // meters, planar
    double y = 0.0;
};

struct Vehicle {
    int id = 0;
    int start = 0;      // location id; depots may lie outside the target grid
    int end = 0;        // location id
    double t_max = 0.0;  // flight-time budget, seconds
};

// Start/end coordinates for one vehicle, used when assembling instances.
struct VehicleSpec {
    Point start;
    Point end;
    double t_max = 0.0;
};

// Immutable problem statement: target grid with priorities, fleet, travel-time
// model. Location ids 0..num_targets()-1 are targets; depot ids follow.
// Travel and distance matrices are precomputed, so instances are cheap to
// query and safe to share across threads.
class Instance {
public:
    Instance(std::vector<Point> targets, std::vector<double> priorities,
             std::vector<VehicleSpec> vehicles, MotionModel motion,
             double sensing_time, std::string name = "");

    const std::string& name() const { return name_; }
    int num_targets() const { return static_cast<int>(priorities_.size()); }
    int num_locations() const { return static_cast<int>(locations_.size()); }
    int num_vehicles() const { return static_cast<int>(vehicles_.size()); }
    bool is_target(int id) const { return id >= 0 && id < num_targets(); }

    const Location& location(int id) const { return locations_.at(id); }
    const std::vector<Location>& locations() const { return locations_; }
    double priority(int target) const { return priorities_.at(target); }
    const std::vector<double>& priorities() const { return priorities_; }
    double total_priority() const { return total_priority_; }

    const Vehicle& vehicle(int m) const { return vehicles_.at(m); }
    const std::vector<Vehicle>& vehicles() const { return vehicles_; }

    const MotionModel& motion() const { return motion_; }
    double sensing_time() const { return sensing_time_; }

    double distance(int i, int j) const { return dist_[idx(i, j)]; }
    double travel(int i, int j) const { return travel_[idx(i, j)]; }

    // Travel time plus the sensing time charged on arrival at target j.
    // Depots perform no sensing.
    double arc_time(int i, int j) const {
        return travel_[idx(i, j)] + (is_target(j) ? sensing_time_ : 0.0);
    }

    // Mean pairwise distance over targets, diagonal included.
    double mean_pairwise_distance() const { return mean_pairwise_distance_; }
    // Smallest distance between two distinct targets.
    double min_target_spacing() const { return min_target_spacing_; }

private:
    std::size_t idx(int i, int j) const {
        return static_cast<std::size_t>(i) * locations_.size() + static_cast<std::size_t>(j);
    }

    std::string name_;
    std::vector<Location> locations_;  // targets first, then depots
    std::vector<double> priorities_;
    std::vector<Vehicle> vehicles_;
    MotionModel motion_;
    double sensing_time_ = 0.0;
    double total_priority_ = 0.0;
    double mean_pairwise_distance_ = 0.0;
    double min_target_spacing_ = 0.0;
    std::vector<double> dist_;
    std::vector<double> travel_;
};

// One vehicle mission, excluding the fixed depot endpoints.
struct Route {
    int vehicle = 0;          // index into Instance::vehicles()
    std::vector<int> stops;   // distinct target ids, in visit order
    double duration = 0.0;    // cached total duration, seconds
};

// Total duration recomputed from scratch: start -> stops -> end.
// An empty route is the direct start-to-end flight (0 when they coincide).
double route_duration(const Route& r, const Instance& inst);

bool route_feasible(const Route& r, const Instance& inst);

// One feasible route per vehicle; every target appears in at most one route.
struct Solution {
    std::vector<Route> routes;  // index-aligned with Instance::vehicles()

    std::vector<int> sampled() const;
    double total_duration() const;
};

Solution empty_solution(const Instance& inst);
bool solution_feasible(const Solution& s, const Instance& inst);

// Targets a vehicle can visit and still return within its budget.
std::vector<int> reachable_targets(const Vehicle& v, const Instance& inst);

}  // namespace gcortop
