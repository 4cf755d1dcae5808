#include "affikd/net/model_io.hpp"

#include <json.hpp>

#include "affikd/error.hpp"
#include "affikd/fsio.hpp"

namespace affikd::net {

using nlohmann::json;

namespace {

std::string activation_name(Activation a) {
    return a == Activation::Relu ? "relu" : "linear";
}

Activation activation_from(const std::string& name) {
    if (name == "relu") return Activation::Relu;
    if (name == "linear") return Activation::Linear;
    throw ValidationError("model json: unknown activation '" + name + "'");
}

}  // namespace

std::string model_to_json(const TrainedModel& model) {
    json j;
    j["format_version"] = kModelFormatVersion;
    j["descriptor"] = model.descriptor;
    j["layers"] = json::array();
    for (const auto& layer : model.net.layers) {
        json lj;
        lj["in"] = layer.spec.in_dim;
        lj["out"] = layer.spec.out_dim;
        lj["activation"] = activation_name(layer.spec.activation);
        lj["dropout"] = layer.spec.dropout_rate;
        lj["w"] = layer.weights;
        lj["b"] = layer.bias;
        j["layers"].push_back(std::move(lj));
    }
    j["distill_layer_index"] = model.net.distill_layer_index;
    j["scaler"] = {{"mean", model.scaler.mean}, {"std", model.scaler.std_dev}};
    return j.dump();
}

TrainedModel model_from_json(const std::string& json_text) {
    json j;
    try {
        j = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("model json: ") + e.what());
    }
    if (!j.contains("format_version") || !j["format_version"].is_number_integer())
        throw ValidationError("model json: missing format_version");
    if (j["format_version"].get<int>() != kModelFormatVersion)
        throw ValidationError("model json: unsupported format_version " +
                              j["format_version"].dump());

    TrainedModel model;
    model.descriptor = j.value("descriptor", std::string{});
    std::vector<LayerSpec> specs;
    for (const auto& lj : j.at("layers")) {
        LayerSpec s;
        s.in_dim = lj.at("in").get<int>();
        s.out_dim = lj.at("out").get<int>();
        s.activation = activation_from(lj.at("activation").get<std::string>());
        s.dropout_rate = lj.at("dropout").get<double>();
        specs.push_back(s);
    }
    model.net = MlpModel::from_specs(specs);
    model.net.distill_layer_index = j.at("distill_layer_index").get<int>();
    if (model.net.distill_layer_index < 0 ||
        model.net.distill_layer_index >= static_cast<int>(specs.size()))
        throw ValidationError("model json: distill_layer_index out of range");
    for (std::size_t l = 0; l < specs.size(); ++l) {
        const auto& lj = j["layers"][l];
        auto w = lj.at("w").get<std::vector<double>>();
        auto b = lj.at("b").get<std::vector<double>>();
        if (w.size() != model.net.layers[l].weights.size() ||
            b.size() != model.net.layers[l].bias.size())
            throw ValidationError("model json: layer " + std::to_string(l) +
                                  " weight/bias size does not match dims");
        model.net.layers[l].weights = std::move(w);
        model.net.layers[l].bias = std::move(b);
    }
    model.scaler.mean = j.at("scaler").at("mean").get<std::vector<double>>();
    model.scaler.std_dev = j.at("scaler").at("std").get<std::vector<double>>();
    if (model.scaler.mean.size() != model.scaler.std_dev.size() ||
        static_cast<int>(model.scaler.mean.size()) != model.net.input_dim())
        throw ValidationError("model json: scaler width does not match input dim");
    return model;
}

void save_model(const TrainedModel& model, const std::string& path) {
    write_file_atomic(path, model_to_json(model));
}

TrainedModel load_model(const std::string& path) {
    return model_from_json(read_file(path));
}

}  // namespace affikd::net
