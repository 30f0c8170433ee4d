#pragma once

#include <Eigen/Dense>
#include <vector>

#include "gcortop/geometry.hpp"
#include "gcortop/rng.hpp"

namespace gcortop {

enum class KernelKind { kExponential, kMatern };

// Stationary covariance function; Matern smoothness is fixed at nu = 3/2.
struct Kernel {
    KernelKind kind = KernelKind::kExponential;
    double variance = 1.0;      // sigma^2
    double length_scale = 1.0;  // meters
};

double kernel_eval(const Kernel& k, double d);

// Multivariate-normal model of a scalar field over a fixed set of locations.
struct GaussianField {
    std::vector<Point> locations;
    Eigen::VectorXd mean;
    Eigen::MatrixXd cov;

    int size() const { return static_cast<int>(locations.size()); }
};

GaussianField make_field(const std::vector<Point>& locations, const Kernel& kernel,
                         double mean_value = 0.0);

// Field values normalized to [0, 100] with mean 50.
struct FieldSample {
    std::vector<double> values;
};

// Affine rescale: mean to 50, range into [0, 100].
FieldSample normalize_field_values(const std::vector<double>& raw);

// One raw draw from the prior (Cholesky of the covariance, jitter on failure).
std::vector<double> sample_prior_raw(const GaussianField& field, Rng& rng);

// Draw and normalize per the benchmark protocol.
FieldSample sample_prior(const GaussianField& field, Rng& rng);

// Noise-free GP regression: condition the field on observed values at the
// sampled locations (indices into field.locations).
GaussianField posterior(const GaussianField& field, const std::vector<int>& sampled,
                        const std::vector<double>& observed);

// Average reduction in variance achieved by sampling S.
double arv(const GaussianField& field, const std::vector<int>& sampled);

// Mutual information between the sampled locations and the rest of the field.
// Requires S to be a strict subset of the locations.
double mutual_information(const GaussianField& field, const std::vector<int>& sampled);

// Maximum-marginal-likelihood kernel over a fixed grid of (variance,
// length-scale) candidates and both kernel kinds. Deterministic; needs at
// least 3 samples.
Kernel fit_kernel(const std::vector<Point>& locations, const std::vector<double>& values);

}  // namespace gcortop
