#ifndef AFFIKD_NET_MLP_HPP
#define AFFIKD_NET_MLP_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "affikd/rng.hpp"

namespace affikd::net {

enum class Activation { Relu, Linear };

struct LayerSpec {
    int in_dim = 0;
    int out_dim = 0;
    Activation activation = Activation::Relu;
    double dropout_rate = 0.0;
};

// Latent width of the layer whose post-activation output is aligned between
// teacher and student.
inline constexpr int kDistillWidth = 16;

// Capacity scales with the descriptor:
//   h1 = int(min(512, max(64, input_dim / 8)))
//   h2 = int(min(128, h1 / 2))
// giving [input, h1, h2, 16, 1] with ReLU everywhere except the linear head,
// and dropout 0.3 after h1, 0.2 after h2, none on the 16-unit layer.
std::vector<LayerSpec> derive_architecture(int input_dim);

struct Layer {
    LayerSpec spec;
    std::vector<double> weights;  // out_dim x in_dim, row-major
    std::vector<double> bias;     // out_dim
};

struct MlpModel {
    std::vector<Layer> layers;
    int distill_layer_index = -1;

    int input_dim() const { return layers.empty() ? 0 : layers.front().spec.in_dim; }
    int latent_dim() const { return layers[distill_layer_index].spec.out_dim; }

    // Zero-initialized model; the distillation layer is the second-to-last.
    // Validates that dims chain and the head is Linear(_, 1) without dropout.
    static MlpModel from_specs(const std::vector<LayerSpec>& specs);
};

// Weights i.i.d. uniform on [-b, b] with b = sqrt(6 / (fan_in * (1 + a^2))),
// a = sqrt(5) (the leaky-relu gain convention of the framework default);
// biases uniform on [-1/sqrt(fan_in), 1/sqrt(fan_in)]. Reproducible from seed.
void init_kaiming_uniform(MlpModel& model, std::uint64_t seed);

enum class Mode { Train, Eval };

struct ForwardTrace {
    bool training = false;
    std::vector<double> input;
    std::vector<std::vector<double>> pre;         // z = W a + b per layer
    std::vector<std::vector<double>> post;        // activation (after dropout)
    std::vector<std::vector<double>> drop_scale;  // mask/(1-p) per unit; empty when unused
    double prediction = 0;
    std::vector<double> latent;  // post-activation of the distillation layer
};

// Inverted dropout in Train mode (post-ReLU units multiplied by
// mask/(1-p), mask ~ Bernoulli(1-p)); Eval applies no mask, no scaling, and
// consumes no RNG. rng may be null when no dropout can fire.
ForwardTrace forward(const MlpModel& model, std::span<const double> x, Mode mode,
                     Rng* rng = nullptr);

struct Gradients {
    std::vector<std::vector<double>> weights;  // shaped like model layers
    std::vector<std::vector<double>> bias;

    static Gradients zeros_like(const MlpModel& model);
};

// Reverse-mode pass reusing the trace's dropout masks. d_loss_d_latent (may
// be empty = zero) injects at the distillation layer's post-activation,
// supporting feature-level objectives.
Gradients backward(const MlpModel& model, const ForwardTrace& trace,
                   double d_loss_d_pred, std::span<const double> d_loss_d_latent = {});

double mse(std::span<const double> pred, std::span<const double> target);

}  // namespace affikd::net

#endif
