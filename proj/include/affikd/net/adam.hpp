#ifndef AFFIKD_NET_ADAM_HPP
#define AFFIKD_NET_ADAM_HPP

#include <span>
#include <vector>

#include "affikd/net/mlp.hpp"

namespace affikd::net {

struct AdamConfig {
    double lr = 1e-3;
    double weight_decay = 1e-4;  // L2-coupled into the gradient
    double beta1 = 0.9;
    double beta2 = 0.999;
    double epsilon = 1e-8;
};

struct AdamState {
    long step_count = 0;
    std::vector<std::vector<double>> m_weights, v_weights;
    std::vector<std::vector<double>> m_bias, v_bias;

    static AdamState for_model(const MlpModel& model);
};

// One array update at step t (t >= 1): g <- grad + weight_decay * param,
// moment updates with beta1/beta2, bias-corrected m-hat/v-hat,
// param <- param - lr * m-hat / (sqrt(v-hat) + eps).
void adam_update_array(std::span<double> params, std::span<const double> grads,
                       std::span<double> m, std::span<double> v, long t,
                       const AdamConfig& cfg);

// Whole-model step; increments state.step_count once.
void adam_step(MlpModel& model, const Gradients& grads, AdamState& state,
               const AdamConfig& cfg);

}  // namespace affikd::net

#endif
