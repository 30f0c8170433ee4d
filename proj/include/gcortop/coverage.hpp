#pragma once

#include <utility>
#include <vector>

#include "gcortop/instance.hpp"

namespace gcortop {

// Neighbors of each target within a radius, sorted by ascending distance.
// Self-pairs are excluded.
struct NeighborIndex {
    double radius = 0.0;
    std::vector<std::vector<std::pair<int, double>>> lists;  // (target id, distance)
};

NeighborIndex build_neighbor_index(const Instance& inst, double radius);

enum class WeightScheme { kIdw, kUniform };

// Discretized spatial-correlation model: for every target i, the covering
// neighborhood C_i holds the targets j whose observation yields information
// about i, with weight w_ji = fraction of i's information obtained at j.
class CoverageWeights {
public:
    struct Entry {
        int other = 0;   // the neighborhood member j (or covered target i in the transpose)
        double w = 0.0;  // w_ji
    };

    WeightScheme scheme() const { return scheme_; }
    double radius() const { return radius_; }
    double w_bar() const { return w_bar_; }
    double d_min() const { return d_min_; }
    int num_targets() const { return static_cast<int>(neighborhoods_.size()); }

    // C_i as (j, w_ji) pairs.
    const std::vector<Entry>& neighborhood(int i) const { return neighborhoods_.at(i); }
    // Transpose: all (i, w_ji) pairs with j in C_i, indexed by j.
    const std::vector<Entry>& covered_by(int j) const { return transpose_.at(j); }

    // Largest sum over any C_i; > 1 means the uncapped objectives overestimate.
    double max_neighborhood_sum() const { return max_sum_; }

    friend CoverageWeights build_idw(const Instance&, double, double, double);
    friend CoverageWeights build_uniform(const Instance&, double);

private:
    WeightScheme scheme_ = WeightScheme::kUniform;
    double radius_ = 0.0;
    double w_bar_ = 0.0;
    double d_min_ = 0.0;
    double max_sum_ = 0.0;
    std::vector<std::vector<Entry>> neighborhoods_;
    std::vector<std::vector<Entry>> transpose_;
};

// Inverse-distance weights w_ji = w_bar * d_min / d_ji for d_ji <= radius,
// clamped to <= 1. Coincident distinct targets are rejected.
CoverageWeights build_idw(const Instance& inst, double w_bar, double d_min, double radius);

// Uniform weights w_ji = 1 / |C_i| over the radius neighborhood; the sum over
// every nonempty C_i is exactly 1.
CoverageWeights build_uniform(const Instance& inst, double radius);

// (j, w_ji) pairs for all j whose neighborhood contains i.
std::vector<CoverageWeights::Entry> coverers_of(int i, const CoverageWeights& w);

}  // namespace gcortop
