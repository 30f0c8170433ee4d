#pragma once

#include <map>
#include <vector>

#include "gcortop/instance.hpp"
#include "gcortop/spatial_gp.hpp"

namespace gcortop {

// Practical quality of a mission against the simulated true field.
struct MetricReport {
    std::map<double, double> pcov;  // coverage distance (m) -> priority fraction
    double mae = 0.0;
    double me = 0.0;
    double wmae = 0.0;
};

// Fraction of total priority within distance d of some sampled target.
double pcov(const std::vector<int>& sampled, const Instance& inst, double d);

// (MAE, ME, WMAE) of a prediction against the true values.
struct PredictionErrors {
    double mae = 0.0;
    double me = 0.0;
    double wmae = 0.0;
};
PredictionErrors prediction_errors(const std::vector<double>& true_values,
                                   const std::vector<double>& predicted,
                                   const std::vector<double>& priorities);

// Default coverage distances reported for every mission.
inline const std::vector<double> kDefaultPcovDistances = {0.0, 100.0, 300.0};

// Reads the true field at the mission's samples, fits a kernel, predicts the
// field over all targets via the GP posterior mean, and scores the result.
// Fewer than three samples skip the kernel fit and predict the prior mean.
MetricReport evaluate_mission(const Instance& inst, const Solution& solution,
                              const FieldSample& true_field,
                              const std::vector<double>& pcov_distances = kDefaultPcovDistances);

}  // namespace gcortop
