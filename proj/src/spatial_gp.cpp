#include "gcortop/spatial_gp.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace gcortop {

double kernel_eval(const Kernel& k, double d) {
    switch (k.kind) {
        case KernelKind::kExponential:
            return k.variance * std::exp(-d / k.length_scale);
        case KernelKind::kMatern: {
            const double s = std::sqrt(3.0) * d / k.length_scale;
            return k.variance * (1.0 + s) * std::exp(-s);
        }
    }
    return 0.0;
}

GaussianField make_field(const std::vector<Point>& locations, const Kernel& kernel,
                         double mean_value) {
    if (kernel.variance <= 0.0 || kernel.length_scale <= 0.0) {
        throw std::invalid_argument("spatial_gp: kernel requires positive variance and length scale");
    }
    GaussianField field;
    field.locations = locations;
    const int n = field.size();
    field.mean = Eigen::VectorXd::Constant(n, mean_value);
    field.cov.resize(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j <= i; ++j) {
            const double v = kernel_eval(kernel, distance(locations[i], locations[j]));
            field.cov(i, j) = v;
            field.cov(j, i) = v;
        }
    }
    return field;
}

namespace {

// Cholesky with escalating diagonal jitter (relative to the matrix scale).
Eigen::LLT<Eigen::MatrixXd> factor_with_jitter(const Eigen::MatrixXd& m) {
    double scale = 1.0;
    for (int i = 0; i < m.rows(); ++i) scale = std::fmax(scale, m(i, i));
    Eigen::LLT<Eigen::MatrixXd> llt(m);
    double jitter = 1e-8 * scale;
    for (int attempt = 0; llt.info() != Eigen::Success && attempt < 4; ++attempt) {
        Eigen::MatrixXd jittered = m;
        jittered.diagonal().array() += jitter;
        llt.compute(jittered);
        jitter *= 100.0;
    }
    if (llt.info() != Eigen::Success) {
        throw std::runtime_error("spatial_gp: covariance factorization failed after jitter");
    }
    return llt;
}

double log_det(const Eigen::LLT<Eigen::MatrixXd>& llt) {
    return 2.0 * llt.matrixLLT().diagonal().array().log().sum();
}

}  // namespace

FieldSample normalize_field_values(const std::vector<double>& raw) {
    FieldSample out;
    out.values.resize(raw.size());
    if (raw.empty()) return out;
    double mean = 0.0;
    for (double v : raw) mean += v;
    mean /= static_cast<double>(raw.size());
    double hi = 0.0, lo = 0.0;
    for (double v : raw) {
        hi = std::fmax(hi, v - mean);
        lo = std::fmax(lo, mean - v);
    }
    const double spread = std::fmax(hi, lo);
    const double scale = spread > 0.0 ? 50.0 / spread : 0.0;
    for (std::size_t i = 0; i < raw.size(); ++i) {
        out.values[i] = 50.0 + (raw[i] - mean) * scale;
    }
    return out;
}

std::vector<double> sample_prior_raw(const GaussianField& field, Rng& rng) {
    const int n = field.size();
    const Eigen::LLT<Eigen::MatrixXd> llt = factor_with_jitter(field.cov);
    Eigen::VectorXd z(n);
    for (int i = 0; i < n; ++i) z(i) = rng.normal();
    const Eigen::VectorXd draw = field.mean + llt.matrixL() * z;
    return std::vector<double>(draw.data(), draw.data() + n);
}

FieldSample sample_prior(const GaussianField& field, Rng& rng) {
    return normalize_field_values(sample_prior_raw(field, rng));
}

GaussianField posterior(const GaussianField& field, const std::vector<int>& sampled,
                        const std::vector<double>& observed) {
    if (sampled.size() != observed.size()) {
        throw std::invalid_argument("spatial_gp: one observation per sampled location required");
    }
    if (sampled.empty()) return field;

    const int n = field.size();
    const int k = static_cast<int>(sampled.size());
    Eigen::MatrixXd cov_ss(k, k);
    Eigen::MatrixXd cov_vs(n, k);
    Eigen::VectorXd residual(k);
    for (int a = 0; a < k; ++a) {
        const int sa = sampled[a];
        residual(a) = observed[a] - field.mean(sa);
        for (int b = 0; b < k; ++b) cov_ss(a, b) = field.cov(sampled[a], sampled[b]);
        for (int i = 0; i < n; ++i) cov_vs(i, a) = field.cov(i, sa);
    }

    const Eigen::LLT<Eigen::MatrixXd> llt = factor_with_jitter(cov_ss);
    GaussianField post;
    post.locations = field.locations;
    post.mean = field.mean + cov_vs * llt.solve(residual);
    post.cov = field.cov - cov_vs * llt.solve(cov_vs.transpose());
    return post;
}

double arv(const GaussianField& field, const std::vector<int>& sampled) {
    if (field.size() == 0) return 0.0;
    if (sampled.empty()) return 0.0;
    const GaussianField post = posterior(field, sampled, std::vector<double>(sampled.size(), 0.0));
    return (field.cov.trace() - post.cov.trace()) / static_cast<double>(field.size());
}

double mutual_information(const GaussianField& field, const std::vector<int>& sampled) {
    const int n = field.size();
    std::vector<char> is_sampled(n, 0);
    for (int s : sampled) is_sampled.at(s) = 1;
    std::vector<int> rest;
    for (int i = 0; i < n; ++i) {
        if (!is_sampled[i]) rest.push_back(i);
    }
    if (rest.empty()) {
        throw std::invalid_argument("spatial_gp: mutual information needs interpolated locations");
    }
    if (sampled.empty()) return 0.0;

    const int a = static_cast<int>(rest.size());
    const int k = static_cast<int>(sampled.size());
    Eigen::MatrixXd cov_aa(a, a);
    for (int i = 0; i < a; ++i) {
        for (int j = 0; j < a; ++j) cov_aa(i, j) = field.cov(rest[i], rest[j]);
    }
    Eigen::MatrixXd cov_as(a, k);
    Eigen::MatrixXd cov_ss(k, k);
    for (int i = 0; i < a; ++i) {
        for (int b = 0; b < k; ++b) cov_as(i, b) = field.cov(rest[i], sampled[b]);
    }
    for (int b = 0; b < k; ++b) {
        for (int c = 0; c < k; ++c) cov_ss(b, c) = field.cov(sampled[b], sampled[c]);
    }

    const Eigen::LLT<Eigen::MatrixXd> llt_ss = factor_with_jitter(cov_ss);
    const Eigen::MatrixXd cov_post = cov_aa - cov_as * llt_ss.solve(cov_as.transpose());
    const double h_prior = log_det(factor_with_jitter(cov_aa));
    const double h_post = log_det(factor_with_jitter(cov_post));
    return 0.5 * (h_prior - h_post);
}

Kernel fit_kernel(const std::vector<Point>& locations, const std::vector<double>& values) {
    if (locations.size() != values.size() || locations.size() < 3) {
        throw std::invalid_argument("spatial_gp: kernel fit needs at least 3 samples");
    }

    const int n = static_cast<int>(values.size());
    double y_mean = 0.0;
    for (double v : values) y_mean += v;
    y_mean /= n;
    Eigen::VectorXd residual(n);
    for (int i = 0; i < n; ++i) residual(i) = values[i] - y_mean;

    Eigen::MatrixXd dist_m(n, n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) dist_m(i, j) = distance(locations[i], locations[j]);
    }

    // Log-spaced hyperparameter grid.
    std::vector<double> lengths, variances;
    const int n_len = 17, n_var = 13;
    for (int i = 0; i < n_len; ++i) {
        lengths.push_back(50.0 * std::pow(2000.0 / 50.0, static_cast<double>(i) / (n_len - 1)));
    }
    for (int i = 0; i < n_var; ++i) {
        variances.push_back(1.0 * std::pow(1e4, static_cast<double>(i) / (n_var - 1)));
    }

    Kernel best{KernelKind::kExponential, variances.front(), lengths.front()};
    double best_ll = -std::numeric_limits<double>::infinity();
    Eigen::MatrixXd k_m(n, n);
    for (KernelKind kind : {KernelKind::kExponential, KernelKind::kMatern}) {
        for (double len : lengths) {
            for (double var : variances) {
                const Kernel cand{kind, var, len};
                for (int i = 0; i < n; ++i) {
                    for (int j = 0; j <= i; ++j) {
                        const double v = kernel_eval(cand, dist_m(i, j));
                        k_m(i, j) = v;
                        k_m(j, i) = v;
                    }
                }
                Eigen::LLT<Eigen::MatrixXd> llt(k_m);
                if (llt.info() != Eigen::Success) {
                    Eigen::MatrixXd jittered = k_m;
                    jittered.diagonal().array() += 1e-8 * var;
                    llt.compute(jittered);
                    if (llt.info() != Eigen::Success) continue;
                }
                const double ll =
                    -0.5 * residual.dot(llt.solve(residual)) - 0.5 * log_det(llt);
                if (ll > best_ll) {
                    best_ll = ll;
                    best = cand;
                }
            }
        }
    }
    return best;
}

}  // namespace gcortop
