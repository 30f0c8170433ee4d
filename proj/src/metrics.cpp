#include "gcortop/metrics.hpp"

#include <cmath>
#include <stdexcept>

namespace gcortop {

double pcov(const std::vector<int>& sampled, const Instance& inst, double d) {
    if (d < 0.0) throw std::invalid_argument("metrics: coverage distance must be nonnegative");
    const double total = inst.total_priority();
    if (total <= 0.0) throw std::invalid_argument("metrics: pcov undefined for zero total priority");
    double covered = 0.0;
    for (int i = 0; i < inst.num_targets(); ++i) {
        for (int j : sampled) {
            if (inst.distance(i, j) <= d) {
                covered += inst.priority(i);
                break;
            }
        }
    }
    return covered / total;
}

PredictionErrors prediction_errors(const std::vector<double>& true_values,
                                   const std::vector<double>& predicted,
                                   const std::vector<double>& priorities) {
    if (true_values.size() != predicted.size() || true_values.size() != priorities.size()) {
        throw std::invalid_argument("metrics: value vectors must have equal length");
    }
    if (true_values.empty()) throw std::invalid_argument("metrics: empty field");

    double total_priority = 0.0;
    for (double u : priorities) total_priority += u;
    if (total_priority <= 0.0) {
        throw std::invalid_argument("metrics: wmae undefined for zero total priority");
    }

    PredictionErrors errors;
    for (std::size_t i = 0; i < true_values.size(); ++i) {
        const double diff = predicted[i] - true_values[i];
        errors.mae += std::fabs(diff);
        errors.me += diff;
        errors.wmae += priorities[i] * std::fabs(diff);
    }
    const double n = static_cast<double>(true_values.size());
    errors.mae /= n;
    errors.me /= n;
    errors.wmae /= total_priority;
    return errors;
}

MetricReport evaluate_mission(const Instance& inst, const Solution& solution,
                              const FieldSample& true_field,
                              const std::vector<double>& pcov_distances) {
    if (static_cast<int>(true_field.values.size()) != inst.num_targets()) {
        throw std::invalid_argument("metrics: true field must cover every target");
    }

    const std::vector<int> sampled = solution.sampled();
    std::vector<Point> sample_points;
    std::vector<double> observed;
    for (int s : sampled) {
        sample_points.push_back({inst.location(s).x, inst.location(s).y});
        observed.push_back(true_field.values[s]);
    }

    std::vector<Point> all_points;
    for (int i = 0; i < inst.num_targets(); ++i) {
        all_points.push_back({inst.location(i).x, inst.location(i).y});
    }

    std::vector<double> predicted;
    if (sampled.size() >= 3) {
        const Kernel kernel = fit_kernel(sample_points, observed);
        double y_mean = 0.0;
        for (double v : observed) y_mean += v;
        y_mean /= static_cast<double>(observed.size());
        const GaussianField prior = make_field(all_points, kernel, y_mean);
        const GaussianField post = posterior(prior, sampled, observed);
        predicted.assign(post.mean.data(), post.mean.data() + post.mean.size());
    } else {
        // Too few samples to fit spatial structure; predict the prior mean.
        double y_mean = 50.0;
        if (!observed.empty()) {
            y_mean = 0.0;
            for (double v : observed) y_mean += v;
            y_mean /= static_cast<double>(observed.size());
        }
        predicted.assign(inst.num_targets(), y_mean);
    }

    MetricReport report;
    const PredictionErrors errors =
        prediction_errors(true_field.values, predicted, inst.priorities());
    report.mae = errors.mae;
    report.me = errors.me;
    report.wmae = errors.wmae;
    for (double d : pcov_distances) report.pcov[d] = pcov(sampled, inst, d);
    return report;
}

}  // namespace gcortop
