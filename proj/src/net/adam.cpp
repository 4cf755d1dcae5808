#include "affikd/net/adam.hpp"

#include <cmath>

#include "affikd/error.hpp"

namespace affikd::net {

AdamState AdamState::for_model(const MlpModel& model) {
    AdamState state;
    const std::size_t n = model.layers.size();
    state.m_weights.resize(n);
    state.v_weights.resize(n);
    state.m_bias.resize(n);
    state.v_bias.resize(n);
    for (std::size_t l = 0; l < n; ++l) {
        state.m_weights[l].assign(model.layers[l].weights.size(), 0.0);
        state.v_weights[l].assign(model.layers[l].weights.size(), 0.0);
        state.m_bias[l].assign(model.layers[l].bias.size(), 0.0);
        state.v_bias[l].assign(model.layers[l].bias.size(), 0.0);
    }
    return state;
}

void adam_update_array(std::span<double> params, std::span<const double> grads,
                       std::span<double> m, std::span<double> v, long t,
                       const AdamConfig& cfg) {
    if (params.size() != grads.size() || params.size() != m.size() ||
        params.size() != v.size())
        throw ValidationError("adam: parameter/gradient/state shape mismatch");
    const double bc1 = 1.0 - std::pow(cfg.beta1, static_cast<double>(t));
    const double bc2 = 1.0 - std::pow(cfg.beta2, static_cast<double>(t));
    for (std::size_t i = 0; i < params.size(); ++i) {
        double g = grads[i] + cfg.weight_decay * params[i];
        m[i] = cfg.beta1 * m[i] + (1.0 - cfg.beta1) * g;
        v[i] = cfg.beta2 * v[i] + (1.0 - cfg.beta2) * g * g;
        double m_hat = m[i] / bc1;
        double v_hat = v[i] / bc2;
        params[i] -= cfg.lr * m_hat / (std::sqrt(v_hat) + cfg.epsilon);
    }
}

void adam_step(MlpModel& model, const Gradients& grads, AdamState& state,
               const AdamConfig& cfg) {
    if (grads.weights.size() != model.layers.size() ||
        state.m_weights.size() != model.layers.size())
        throw ValidationError("adam: gradient/state does not match model depth");
    ++state.step_count;
    for (std::size_t l = 0; l < model.layers.size(); ++l) {
        adam_update_array(model.layers[l].weights, grads.weights[l],
                          state.m_weights[l], state.v_weights[l], state.step_count, cfg);
        adam_update_array(model.layers[l].bias, grads.bias[l], state.m_bias[l],
                          state.v_bias[l], state.step_count, cfg);
    }
}

}  // namespace affikd::net
