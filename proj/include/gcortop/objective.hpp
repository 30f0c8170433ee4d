#pragma once

#include <vector>

#include "gcortop/coverage.hpp"
#include "gcortop/instance.hpp"

namespace gcortop {

enum class ModelKind { kTop, kIppYu, kIppGen, kCorTop, kGCorTop };

const char* model_kind_name(ModelKind kind);

// Informativeness model. TOP ignores coverage entirely; the IPP variants score
// unit information per target; CorTOP/GCorTOP score priorities, the latter
// capping indirect credit at each target's priority.
struct ObjectiveModel {
    ModelKind kind = ModelKind::kGCorTop;
    const CoverageWeights* weights = nullptr;  // required unless kind == kTop
    double rho = 0.0;                          // route-length weight; 0 = pure model value

    bool uses_weights() const { return kind != ModelKind::kTop; }
    // Monotone models never lose value by adding an observation. TOP, IPP-GEN
    // and GCorTOP always qualify; IPP-YU and CorTOP only when no neighborhood
    // sums above 1.
    bool monotone() const;
};

// Heuristic route-length weight: 0.01 * sum(u) / (|V| * mean pairwise distance).
double default_rho(const Instance& inst);

// Model value of a sample set, computed from scratch.
double evaluate(const ObjectiveModel& model, const std::vector<int>& sampled,
                const Instance& inst);

// Incremental evaluation cache: tracks the sample set S, the raw accumulated
// neighborhood weight per target, and the current model value. The raw
// (uncapped) sums make apply/revert exact inverses without re-scanning
// neighborhoods.
class ObjectiveState {
public:
    ObjectiveState(const ObjectiveModel& model, const Instance& inst);

    const ObjectiveModel& model() const { return *model_; }
    const Instance& instance() const { return *inst_; }

    double value() const { return value_; }
    int sample_count() const { return sample_count_; }
    bool sampled(int target) const { return in_sample_[target] != 0; }
    std::vector<int> sample_set() const;

    // Raw accumulated weight sum over S ∩ C_i for an unvisited target.
    double covered_sum(int target) const { return covered_[target]; }

    // Objective change from adding target i (i must not be sampled).
    double add_delta(int i) const;
    // Objective change from removing target i (i must be sampled).
    double remove_delta(int i) const;

    void apply(int i);   // add i to S
    void revert(int i);  // remove i from S

private:
    double unit(int i) const;        // priority, or 1 for the IPP variants
    double indirect(int i, double cov) const;  // indirect credit of unvisited i

    const ObjectiveModel* model_;
    const Instance* inst_;
    std::vector<char> in_sample_;
    std::vector<double> covered_;
    double value_ = 0.0;
    int sample_count_ = 0;
};

// Uncovered share of target i's priority given the current samples:
// max{0, (1 - covered_sum(i)) * u_i}. Requires i unvisited.
double remaining_priority(int i, const ObjectiveState& state);

// Objective delta from inserting i, or 0 when i is not in the open set.
double marginal_benefit(int i, const ObjectiveState& state, const std::vector<char>& open);

// Search-time objective: evaluate(S) - rho * total route duration.
double weighted_value(const ObjectiveModel& model, const Solution& solution,
                      const Instance& inst);
double weighted_value(const ObjectiveModel& model, double model_value, double total_duration);

// Upper bound on the model value achievable when the targets flagged in
// `unvisited` can no longer be sampled: the total priority minus the share of
// each excluded target that its remaining neighbors cannot cover.
double upper_bound(const ObjectiveModel& model, const Instance& inst,
                   const std::vector<char>& unvisited);

}  // namespace gcortop
