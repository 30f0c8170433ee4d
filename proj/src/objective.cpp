#include "gcortop/objective.hpp"

#include <cmath>
#include <stdexcept>

namespace gcortop {

const char* model_kind_name(ModelKind kind) {
    switch (kind) {
        case ModelKind::kTop: return "top";
        case ModelKind::kIppYu: return "ipp-yu";
        case ModelKind::kIppGen: return "ipp-gen";
        case ModelKind::kCorTop: return "cortop";
        case ModelKind::kGCorTop: return "gcortop";
    }
    return "?";
}

bool ObjectiveModel::monotone() const {
    switch (kind) {
        case ModelKind::kTop:
        case ModelKind::kIppGen:
        case ModelKind::kGCorTop:
            return true;
        case ModelKind::kIppYu:
        case ModelKind::kCorTop:
            return weights != nullptr && weights->max_neighborhood_sum() <= 1.0 + 1e-9;
    }
    return false;
}

double default_rho(const Instance& inst) {
    const double d_bar = inst.mean_pairwise_distance();
    if (d_bar <= 0.0 || inst.num_targets() == 0) return 0.0;
    return 0.01 * inst.total_priority() / (inst.num_targets() * d_bar);
}

namespace {

void require_weights(const ObjectiveModel& model) {
    if (model.uses_weights() && model.weights == nullptr) {
        throw std::invalid_argument("objective: model kind requires coverage weights");
    }
}

}  // namespace

double evaluate(const ObjectiveModel& model, const std::vector<int>& sampled,
                const Instance& inst) {
    require_weights(model);
    std::vector<char> in_sample(inst.num_targets(), 0);
    for (int i : sampled) in_sample.at(i) = 1;

    const bool unit_info = model.kind == ModelKind::kIppYu || model.kind == ModelKind::kIppGen;
    double value = 0.0;
    for (int i = 0; i < inst.num_targets(); ++i) {
        const double u = unit_info ? 1.0 : inst.priority(i);
        if (in_sample[i]) {
            value += u;
            continue;
        }
        if (model.kind == ModelKind::kTop) continue;
        double cov = 0.0;
        for (const auto& e : model.weights->neighborhood(i)) {
            if (in_sample[e.other]) cov += e.w;
        }
        switch (model.kind) {
            case ModelKind::kIppYu:
            case ModelKind::kCorTop:
                value += cov * u;
                break;
            case ModelKind::kIppGen:
            case ModelKind::kGCorTop:
                value += std::fmin(u, cov * u);
                break;
            default:
                break;
        }
    }
    return value;
}

ObjectiveState::ObjectiveState(const ObjectiveModel& model, const Instance& inst)
    : model_(&model), inst_(&inst) {
    require_weights(model);
    in_sample_.assign(inst.num_targets(), 0);
    covered_.assign(inst.num_targets(), 0.0);
}

std::vector<int> ObjectiveState::sample_set() const {
    std::vector<int> out;
    for (int i = 0; i < static_cast<int>(in_sample_.size()); ++i) {
        if (in_sample_[i]) out.push_back(i);
    }
    return out;
}

double ObjectiveState::unit(int i) const {
    return (model_->kind == ModelKind::kIppYu || model_->kind == ModelKind::kIppGen)
               ? 1.0
               : inst_->priority(i);
}

double ObjectiveState::indirect(int i, double cov) const {
    switch (model_->kind) {
        case ModelKind::kTop:
            return 0.0;
        case ModelKind::kIppYu:
        case ModelKind::kCorTop:
            return cov * unit(i);
        case ModelKind::kIppGen:
        case ModelKind::kGCorTop: {
            const double u = unit(i);
            return std::fmin(u, cov * u);
        }
    }
    return 0.0;
}

double ObjectiveState::add_delta(int i) const {
    double delta = unit(i) - indirect(i, covered_[i]);
    if (model_->uses_weights()) {
        for (const auto& e : model_->weights->covered_by(i)) {
            if (in_sample_[e.other]) continue;
            delta += indirect(e.other, covered_[e.other] + e.w) -
                     indirect(e.other, covered_[e.other]);
        }
    }
    return delta;
}

double ObjectiveState::remove_delta(int i) const {
    double delta = unit(i) - indirect(i, covered_[i]);
    if (model_->uses_weights()) {
        for (const auto& e : model_->weights->covered_by(i)) {
            if (in_sample_[e.other]) continue;
            delta += indirect(e.other, covered_[e.other]) -
                     indirect(e.other, covered_[e.other] - e.w);
        }
    }
    return delta;
}

void ObjectiveState::apply(int i) {
    if (in_sample_.at(i)) throw std::invalid_argument("objective: target already sampled");
    value_ += add_delta(i);
    in_sample_[i] = 1;
    ++sample_count_;
    if (model_->uses_weights()) {
        for (const auto& e : model_->weights->covered_by(i)) covered_[e.other] += e.w;
    }
}

void ObjectiveState::revert(int i) {
    if (!in_sample_.at(i)) throw std::invalid_argument("objective: target not sampled");
    if (model_->uses_weights()) {
        for (const auto& e : model_->weights->covered_by(i)) covered_[e.other] -= e.w;
    }
    in_sample_[i] = 0;
    --sample_count_;
    value_ -= add_delta(i);
}

double remaining_priority(int i, const ObjectiveState& state) {
    const double u = state.instance().priority(i);
    return std::fmax(0.0, (1.0 - state.covered_sum(i)) * u);
}

double marginal_benefit(int i, const ObjectiveState& state, const std::vector<char>& open) {
    if (!open.at(i) || state.sampled(i)) return 0.0;
    return state.add_delta(i);
}

double weighted_value(const ObjectiveModel& model, double model_value, double total_duration) {
    return model_value - model.rho * total_duration;
}

double weighted_value(const ObjectiveModel& model, const Solution& solution,
                      const Instance& inst) {
    return weighted_value(model, evaluate(model, solution.sampled(), inst),
                          solution.total_duration());
}

double upper_bound(const ObjectiveModel& model, const Instance& inst,
                   const std::vector<char>& unvisited) {
    require_weights(model);
    const bool unit_info = model.kind == ModelKind::kIppYu || model.kind == ModelKind::kIppGen;
    double bound = 0.0;
    for (int i = 0; i < inst.num_targets(); ++i) {
        const double u = unit_info ? 1.0 : inst.priority(i);
        if (!unvisited.at(i)) {
            bound += u;
            continue;
        }
        if (model.kind == ModelKind::kTop) continue;
        double cov = 0.0;
        for (const auto& e : model.weights->neighborhood(i)) {
            if (!unvisited[e.other]) cov += e.w;
        }
        bound += std::fmin(u, cov * u);
    }
    return bound;
}

}  // namespace gcortop
