#include "gcortop/coverage.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace gcortop {

NeighborIndex build_neighbor_index(const Instance& inst, double radius) {
    NeighborIndex index;
    index.radius = radius;
    const int n = inst.num_targets();
    index.lists.resize(n);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (j == i) continue;
            const double d = inst.distance(i, j);
            if (d <= radius) index.lists[i].push_back({j, d});
        }
        std::sort(index.lists[i].begin(), index.lists[i].end(),
                  [](const auto& a, const auto& b) {
                      return a.second != b.second ? a.second < b.second : a.first < b.first;
                  });
    }
    return index;
}

namespace {

void finalize(CoverageWeights& w, std::vector<std::vector<CoverageWeights::Entry>> neighborhoods,
              std::vector<std::vector<CoverageWeights::Entry>> transpose) {
    w.max_sum_ = 0.0;
    for (const auto& nh : neighborhoods) {
        double sum = 0.0;
        for (const auto& e : nh) sum += e.w;
        w.max_sum_ = std::fmax(w.max_sum_, sum);
    }
    w.neighborhoods_ = std::move(neighborhoods);
    w.transpose_ = std::move(transpose);
}

}  // namespace

CoverageWeights build_idw(const Instance& inst, double w_bar, double d_min, double radius) {
    if (!(w_bar > 0.0 && w_bar < 1.0)) {
        throw std::invalid_argument("coverage: w_bar must lie in (0, 1)");
    }
    if (!(d_min > 0.0 && d_min <= radius)) {
        throw std::invalid_argument("coverage: requires 0 < d_min <= radius");
    }

    const int n = inst.num_targets();
    std::vector<std::vector<CoverageWeights::Entry>> neighborhoods(n);
    std::vector<std::vector<CoverageWeights::Entry>> transpose(n);
    const NeighborIndex index = build_neighbor_index(inst, radius);
    for (int i = 0; i < n; ++i) {
        for (const auto& [j, d] : index.lists[i]) {
            if (d <= 0.0) {
                throw std::invalid_argument("coverage: coincident distinct targets");
            }
            // The grids never place targets closer than d_min; the clamp is a
            // guard for imported data.
            const double w = std::fmin(1.0, w_bar * d_min / d);
            neighborhoods[i].push_back({j, w});
            transpose[j].push_back({i, w});
        }
    }

    CoverageWeights out;
    out.scheme_ = WeightScheme::kIdw;
    out.radius_ = radius;
    out.w_bar_ = w_bar;
    out.d_min_ = d_min;
    finalize(out, std::move(neighborhoods), std::move(transpose));
    return out;
}

CoverageWeights build_uniform(const Instance& inst, double radius) {
    if (!(radius > 0.0)) {
        throw std::invalid_argument("coverage: radius must be positive");
    }

    const int n = inst.num_targets();
    std::vector<std::vector<CoverageWeights::Entry>> neighborhoods(n);
    std::vector<std::vector<CoverageWeights::Entry>> transpose(n);
    const NeighborIndex index = build_neighbor_index(inst, radius);
    for (int i = 0; i < n; ++i) {
        const auto& list = index.lists[i];
        if (list.empty()) continue;
        const double w = 1.0 / static_cast<double>(list.size());
        for (const auto& [j, d] : list) {
            (void)d;
            neighborhoods[i].push_back({j, w});
            transpose[j].push_back({i, w});
        }
    }

    CoverageWeights out;
    out.scheme_ = WeightScheme::kUniform;
    out.radius_ = radius;
    finalize(out, std::move(neighborhoods), std::move(transpose));
    return out;
}

std::vector<CoverageWeights::Entry> coverers_of(int i, const CoverageWeights& w) {
    return w.covered_by(i);
}

}  // namespace gcortop
