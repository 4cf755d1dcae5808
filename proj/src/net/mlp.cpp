#include "affikd/net/mlp.hpp"

#include <algorithm>
#include <cmath>

#include "affikd/error.hpp"

namespace affikd::net {

std::vector<LayerSpec> derive_architecture(int input_dim) {
    if (input_dim < 1)
        throw ValidationError("derive architecture: input_dim must be >= 1, got " +
                              std::to_string(input_dim));
    // int(...) truncates toward zero after the min/max over real division.
    int h1 = static_cast<int>(std::min(512.0, std::max(64.0, input_dim / 8.0)));
    int h2 = static_cast<int>(std::min(128.0, h1 / 2.0));
    return {
        {input_dim, h1, Activation::Relu, 0.3},
        {h1, h2, Activation::Relu, 0.2},
        {h2, kDistillWidth, Activation::Relu, 0.0},
        {kDistillWidth, 1, Activation::Linear, 0.0},
    };
}

MlpModel MlpModel::from_specs(const std::vector<LayerSpec>& specs) {
    if (specs.size() < 2)
        throw ValidationError("mlp: need at least a hidden layer and a head");
    for (std::size_t i = 0; i < specs.size(); ++i) {
        const auto& s = specs[i];
        if (s.in_dim < 1 || s.out_dim < 1)
            throw ValidationError("mlp: layer dims must be >= 1");
        if (s.dropout_rate < 0.0 || s.dropout_rate >= 1.0)
            throw ValidationError("mlp: dropout rate must be in [0, 1)");
        if (i > 0 && s.in_dim != specs[i - 1].out_dim)
            throw ValidationError("mlp: layer dims do not chain at layer " + std::to_string(i));
    }
    const auto& head = specs.back();
    if (head.out_dim != 1 || head.activation != Activation::Linear ||
        head.dropout_rate != 0.0)
        throw ValidationError("mlp: output layer must be Linear(_, 1) without dropout");

    MlpModel model;
    model.layers.reserve(specs.size());
    for (const auto& s : specs) {
        Layer layer;
        layer.spec = s;
        layer.weights.assign(static_cast<std::size_t>(s.out_dim) * s.in_dim, 0.0);
        layer.bias.assign(s.out_dim, 0.0);
        model.layers.push_back(std::move(layer));
    }
    model.distill_layer_index = static_cast<int>(specs.size()) - 2;
    return model;
}

void init_kaiming_uniform(MlpModel& model, std::uint64_t seed) {
    Rng rng(seed);
    const double a = std::sqrt(5.0);
    for (auto& layer : model.layers) {
        double fan_in = layer.spec.in_dim;
        double bound = std::sqrt(6.0 / (fan_in * (1.0 + a * a)));
        for (double& w : layer.weights) w = rng.uniform(-bound, bound);
        double bias_bound = 1.0 / std::sqrt(fan_in);
        for (double& b : layer.bias) b = rng.uniform(-bias_bound, bias_bound);
    }
}

ForwardTrace forward(const MlpModel& model, std::span<const double> x, Mode mode,
                     Rng* rng) {
    if (static_cast<int>(x.size()) != model.input_dim())
        throw ValidationError("forward: input dim " + std::to_string(x.size()) +
                              " != model input dim " + std::to_string(model.input_dim()));

    ForwardTrace trace;
    trace.training = mode == Mode::Train;
    trace.input.assign(x.begin(), x.end());
    trace.pre.resize(model.layers.size());
    trace.post.resize(model.layers.size());
    trace.drop_scale.resize(model.layers.size());

    const std::vector<double>* prev = &trace.input;
    for (std::size_t l = 0; l < model.layers.size(); ++l) {
        const Layer& layer = model.layers[l];
        const int in = layer.spec.in_dim, out = layer.spec.out_dim;
        auto& z = trace.pre[l];
        z.assign(out, 0.0);
        for (int i = 0; i < out; ++i) {
            double acc = layer.bias[i];
            const double* wrow = layer.weights.data() + static_cast<std::size_t>(i) * in;
            for (int j = 0; j < in; ++j) acc += wrow[j] * (*prev)[j];
            z[i] = acc;
        }
        auto& a = trace.post[l];
        a = z;
        if (layer.spec.activation == Activation::Relu)
            for (double& v : a) v = std::max(0.0, v);
        if (trace.training && layer.spec.dropout_rate > 0.0) {
            if (rng == nullptr)
                throw ValidationError("forward: Train mode with dropout needs an RNG");
            const double keep = 1.0 - layer.spec.dropout_rate;
            auto& scale = trace.drop_scale[l];
            scale.assign(out, 0.0);
            for (int i = 0; i < out; ++i) {
                scale[i] = rng->bernoulli(keep) ? 1.0 / keep : 0.0;
                a[i] *= scale[i];
            }
        }
        prev = &a;
    }
    trace.prediction = trace.post.back()[0];
    trace.latent = trace.post[model.distill_layer_index];
    return trace;
}

Gradients Gradients::zeros_like(const MlpModel& model) {
    Gradients g;
    g.weights.resize(model.layers.size());
    g.bias.resize(model.layers.size());
    for (std::size_t l = 0; l < model.layers.size(); ++l) {
        g.weights[l].assign(model.layers[l].weights.size(), 0.0);
        g.bias[l].assign(model.layers[l].bias.size(), 0.0);
    }
    return g;
}

Gradients backward(const MlpModel& model, const ForwardTrace& trace,
                   double d_loss_d_pred, std::span<const double> d_loss_d_latent) {
    if (trace.pre.size() != model.layers.size())
        throw ValidationError("backward: trace does not match model depth");
    for (std::size_t l = 0; l < model.layers.size(); ++l)
        if (static_cast<int>(trace.pre[l].size()) != model.layers[l].spec.out_dim)
            throw ValidationError("backward: trace does not match model shapes");
    if (!d_loss_d_latent.empty() &&
        static_cast<int>(d_loss_d_latent.size()) != model.latent_dim())
        throw ValidationError("backward: latent gradient dim mismatch");

    Gradients grads = Gradients::zeros_like(model);
    const int last = static_cast<int>(model.layers.size()) - 1;
    std::vector<double> d_post = {d_loss_d_pred};  // d L / d post-activation

    for (int l = last; l >= 0; --l) {
        const Layer& layer = model.layers[l];
        const int in = layer.spec.in_dim, out = layer.spec.out_dim;

        if (l == model.distill_layer_index && !d_loss_d_latent.empty())
            for (int i = 0; i < out; ++i) d_post[i] += d_loss_d_latent[i];

        // Through dropout (mask fixed by the trace), then the activation.
        std::vector<double> d_z(out);
        const auto& scale = trace.drop_scale[l];
        for (int i = 0; i < out; ++i) {
            double g = d_post[i];
            if (!scale.empty()) g *= scale[i];
            if (layer.spec.activation == Activation::Relu && trace.pre[l][i] <= 0.0)
                g = 0.0;
            d_z[i] = g;
        }

        const std::vector<double>& prev =
            l == 0 ? trace.input : trace.post[static_cast<std::size_t>(l) - 1];
        auto& dw = grads.weights[l];
        for (int i = 0; i < out; ++i) {
            const std::size_t row = static_cast<std::size_t>(i) * in;
            for (int j = 0; j < in; ++j) dw[row + j] = d_z[i] * prev[j];
            grads.bias[l][i] = d_z[i];
        }

        if (l > 0) {
            std::vector<double> d_prev(in, 0.0);
            for (int i = 0; i < out; ++i) {
                const double* wrow = layer.weights.data() + static_cast<std::size_t>(i) * in;
                for (int j = 0; j < in; ++j) d_prev[j] += wrow[j] * d_z[i];
            }
            d_post = std::move(d_prev);
        }
    }
    return grads;
}

double mse(std::span<const double> pred, std::span<const double> target) {
    if (pred.size() != target.size() || pred.empty())
        throw ValidationError("mse: vectors must be non-empty and of equal length");
    double acc = 0;
    for (std::size_t i = 0; i < pred.size(); ++i) {
        double d = pred[i] - target[i];
        acc += d * d;
    }
    return acc / static_cast<double>(pred.size());
}

}  // namespace affikd::net
